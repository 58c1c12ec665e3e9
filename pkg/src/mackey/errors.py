"""Shared exception types."""


class OrderBoundExceeded(RuntimeError):
    """Group closure grew past the configured element bound."""


class DegreeBoundExceeded(RuntimeError):
    """A construction wanted more points than allowed."""


class SizeBoundExceeded(RuntimeError):
    """A groupoid or set construction grew past its bound."""


class NotASubgroup(ValueError):
    pass


class NotAnElement(ValueError):
    pass


class NotAnAction(ValueError):
    """Generator tables fail to extend to a group action."""


class NotCommuting(ValueError):
    pass


class TransferUnavailable(RuntimeError):
    """Pushforward requested along a map that has none."""


class PairingUnavailable(RuntimeError):
    """Inner product asked of a functor without a pairing."""


class GaloisInvarianceFailure(ValueError):
    """A class function broke the Galois symmetry characters satisfy."""


class NonIntegralTransfer(ArithmeticError):
    """Integer-valued transfer produced a non-integer; the map was not
    faithful enough for this value ring."""


class InstanceLacksTransfers(RuntimeError):
    """Series operation needs pushforwards the instance cannot supply."""


class NonInvertibleSeries(ValueError):
    """Cross-product inversion of a series whose constant term is not 1."""


class NotUnimodular(ValueError):
    """Matrix is not in GL_n(Z)."""


class NotInvariant(ValueError):
    """Tuple function is not GL-invariant, so the operation is undefined."""
