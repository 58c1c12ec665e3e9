"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored over the power basis 1, z, ..., z^(phi(N)-1) of
Q(zeta_N), reduced modulo the N-th cyclotomic polynomial, and always at
the minimal possible conductor.  This makes equality a plain structural
comparison and keeps character values of small groups tiny.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


class NonUnitExponent(ValueError):
    """Galois exponent not coprime to the conductor."""


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _phi(n):
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def _poly_divmod_exact(num, den):
    # Exact division of integer polynomials, den monic.  Coefficient
    # lists are little-endian.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q = num[i]
        out[i - dn] = q
        if q:
            for j, c in enumerate(den):
                num[i - dn + j] -= q * c
    assert all(c == 0 for c in num[:dn]), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, little-endian, as a tuple of ints."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_mod_phi(n, coeffs):
    """Reduce a little-endian Fraction polynomial mod Phi_n."""
    phi = _phi(n)
    c = list(coeffs)
    pol = cyclotomic_polynomial(n)
    for i in range(len(c) - 1, phi - 1, -1):
        q = c[i]
        if q:
            for j, pc in enumerate(pol):
                c[i - len(pol) + 1 + j] -= q * pc
    c = c[:phi]
    while len(c) < phi:
        c.append(Fraction(0))
    return tuple(c)


@lru_cache(maxsize=None)
def _subfield_basis(n, d):
    # Images of 1, zeta_d, ..., zeta_d^(phi(d)-1) inside Q(zeta_n).
    step = n // d
    out = []
    for j in range(_phi(d)):
        poly = [Fraction(0)] * (j * step + 1)
        poly[j * step] = Fraction(1)
        out.append(_reduce_mod_phi(n, poly))
    return tuple(out)


def _solve_exact(columns, rhs):
    """Solve sum_j x_j * columns[j] = rhs over Q, or None if inconsistent."""
    m = len(rhs)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [rhs[i]] for i in range(m)]
    row = 0
    pivots = []
    for col in range(k):
        piv = None
        for i in range(row, m):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [a * inv for a in aug[row]]
        for i in range(m):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    x = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        x[col] = aug[r][k]
    for i in range(row, m):
        if aug[i][k]:
            return None
    # paranoia for the non-pivot-column case
    for i in range(m):
        if sum(columns[j][i] * x[j] for j in range(k)) != rhs[i]:
            return None
    return x


class Cyc:
    """An exact element of some Q(zeta_N), stored at minimal conductor."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs, reduce=True):
        if reduce:
            coeffs = _reduce_mod_phi(n, [Fraction(x) for x in coeffs])
            n, coeffs = _minimal_form(n, coeffs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(q):
        return Cyc(1, (Fraction(q),), reduce=False)

    @staticmethod
    def zeta(n, k=1):
        """The root of unity e^(2*pi*i*k/n)."""
        k %= n
        g = gcd(k, n)
        n, k = n // g, k // g
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return Cyc(n, poly)

    # -- predicates and conversions ----------------------------------

    @property
    def is_rational(self):
        return self.n == 1

    @property
    def is_integer(self):
        return self.n == 1 and self.c[0].denominator == 1

    def as_fraction(self):
        if self.n != 1:
            raise ValueError("not a rational value: %r" % (self,))
        return self.c[0]

    def as_int(self):
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError("not an integer: %r" % (self,))
        return f.numerator

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(a) * z**i for i, a in enumerate(self.c))

    def __bool__(self):
        return any(self.c)

    # -- ring operations ---------------------------------------------

    def _lift(self, m):
        # coefficients of self over Q(zeta_m), little-endian, length <= m
        step = m // self.n
        poly = [Fraction(0)] * ((len(self.c) - 1) * step + 1)
        for i, a in enumerate(self.c):
            poly[i * step] = a
        return poly

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Cyc.rational(self.c[0] + other.c[0])
        m = _lcm_conductor(self.n, other.n)
        a = self._lift(m)
        b = other._lift(m)
        if len(a) < len(b):
            a, b = b, a
        for i, x in enumerate(b):
            a[i] += x
        return Cyc(m, a)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-a for a in self.c), reduce=False)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            q = other.c[0]
            if self.n == 1:
                return Cyc.rational(self.c[0] * q)
            if q == 0:
                return ZERO
            return Cyc(self.n, tuple(a * q for a in self.c), reduce=False)
        if self.n == 1:
            return other * self
        m = _lcm_conductor(self.n, other.n)
        a = self._lift(m)
        b = other._lift(m)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc(m, prod)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.n == 1:
            return Cyc.rational(1 / self.c[0])
        phi = _phi(self.n)
        # columns of the multiplication-by-self matrix
        cols = []
        for j in range(phi):
            poly = [Fraction(0)] * (j + 1)
            poly[j] = Fraction(1)
            basis_el = Cyc(self.n, poly, reduce=False)
            prod = self * basis_el
            cols.append(prod._lift_exact(self.n))
        rhs = tuple(
            Fraction(1) if i == 0 else Fraction(0) for i in range(phi)
        )
        x = _solve_exact(cols, rhs)
        assert x is not None, "unit has no inverse representation"
        return Cyc(self.n, x)

    def _lift_exact(self, m):
        # self's coefficients over Q(zeta_m) basis; conductor of self divides m
        if self.n == m:
            return self.c
        return _reduce_mod_phi(m, self._lift(m))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            return self * Cyc.rational(1 / other.c[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- Galois action -----------------------------------------------

    def galois(self, k):
        """Apply zeta_N -> zeta_N^k; k must be coprime to the conductor."""
        if self.n == 1:
            return self
        k %= self.n
        if gcd(k, self.n) != 1:
            raise NonUnitExponent(
                "exponent %d not coprime to conductor %d" % (k, self.n)
            )
        poly = [Fraction(0)] * self.n
        for i, a in enumerate(self.c):
            poly[(i * k) % self.n] += a
        return Cyc(self.n, poly)

    def conjugate(self):
        """Complex conjugation, the Galois map zeta -> zeta^(-1)."""
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- structural --------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        if self.n == 1:
            return hash(self.c[0])
        return hash((self.n, self.c))

    def __repr__(self):
        if self.n == 1:
            return "Cyc(%s)" % self.c[0]
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append("%s*z%d^%d" % (a, self.n, i))
        return "Cyc(" + " + ".join(terms) + ")"

    # -- serialization -----------------------------------------------

    def to_json(self):
        return {
            "N": self.n,
            "coeffs": [[a.numerator, a.denominator] for a in self.c],
        }

    @staticmethod
    def from_json(obj):
        coeffs = [Fraction(num, den) for num, den in obj["coeffs"]]
        return Cyc(obj["N"], coeffs)


def _coerce(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    return NotImplemented


def _lcm_conductor(a, b):
    m = a * b // gcd(a, b)
    # conductors 2 mod 4 never arise from stored values
    return m


def _minimal_form(n, coeffs):
    """Rewrite (n, coeffs) at the smallest conductor d | n."""
    if n == 1:
        return n, coeffs
    if all(a == 0 for a in coeffs[1:]):
        return 1, (coeffs[0],)
    for d in _divisors(n):
        if d == n or d % 4 == 2:
            continue
        if d == 1:
            continue  # handled by the all-zero test above
        basis = _subfield_basis(n, d)
        x = _solve_exact(basis, coeffs)
        if x is not None:
            return d, tuple(x)
    if n % 4 == 2:
        # Q(zeta_n) = Q(zeta_(n/2)) for odd n/2; the rewrite always exists
        d = n // 2
        basis = _subfield_basis(n, d)
        x = _solve_exact(basis, coeffs)
        assert x is not None
        return _minimal_form(d, tuple(x))
    return n, coeffs


ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


def galois_apply(k, x):
    """Module-level spelling of Cyc.galois, accepting rationals too."""
    return _coerce(x).galois(k)
