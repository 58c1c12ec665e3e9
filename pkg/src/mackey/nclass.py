"""Functions on simultaneous-conjugacy classes of commuting tuples.

Classes of commuting n-tuples are enumerated recursively: fix the class
of the first coordinate, then classify the remaining (n-1)-tuple inside
its centralizer.  Lookup walks the same tree using conjugating
witnesses, so values can be read off for arbitrary commuting tuples.
Power operations use the monodromy of the orbit decomposition: orbit
stabilizer lattices in Z^n, their Hermite bases, and the component of
the corresponding power at the orbit basepoint.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import Cyc
from .errors import (
    NonIntegralTransfer,
    NotCommuting,
    NotInvariant,
    NotUnimodular,
    SizeBoundExceeded,
)
from .perm import PermGroup, perm_order, pid, pinv, pmul, ppow
from .wreath import WreathGroup
from .zlattice import (
    IntegerLattice,
    gl_generators,
    hnf,
    hnf_kernel,
    int_det,
    sl_generators,
    smith_normal_form,
    sublattices_of_index,
)

DEFAULT_ORDER_BOUND = 200_000


class TupleClass:
    """One simultaneous-conjugacy class of commuting n-tuples."""

    __slots__ = ("rep", "size", "centralizer_order", "centralizer")

    def __init__(self, rep, size, centralizer_order, centralizer=None):
        self.rep = tuple(tuple(g) for g in rep)
        self.size = size
        self.centralizer_order = centralizer_order
        self.centralizer = centralizer

    def __repr__(self):
        return "TupleClass(size=%d, aut=%d)" % (self.size, self.centralizer_order)


class TupleClassifier:
    """Class list plus the recursion tree used for membership lookup."""

    def __init__(self, G, n, bound=DEFAULT_ORDER_BOUND, p_restrict=None):
        if isinstance(G, WreathGroup):
            raise SizeBoundExceeded(
                "commuting tuples need an enumerated group; "
                "wreath class labels only cover n=1"
            )
        if G.order > bound:
            raise SizeBoundExceeded(
                "tuple enumeration over order %d exceeds bound %d"
                % (G.order, bound)
            )
        self.group = G
        self.n = n
        self.p_restrict = p_restrict
        self.classes = []
        self._children = {}
        if n == 0:
            self.classes.append(TupleClass((), 1, G.order, G))
            return
        for ci, cl in enumerate(G.conjugacy_classes()):
            if p_restrict is not None and not _is_p_power_order(
                cl.rep, p_restrict
            ):
                continue
            cent = G.centralizer(cl.rep)
            if n == 1:
                self._children[ci] = (cent, None, len(self.classes))
                self.classes.append(
                    TupleClass((cl.rep,), cl.size, cent.order, cent)
                )
                continue
            sub = TupleClassifier(cent, n - 1, bound, p_restrict)
            self._children[ci] = (cent, sub, len(self.classes))
            for scls in sub.classes:
                rep = (cl.rep,) + scls.rep
                joint = scls.centralizer_order
                self.classes.append(
                    TupleClass(
                        rep, G.order // joint, joint, scls.centralizer
                    )
                )

    def index_of(self, tup):
        tup = tuple(tuple(g) for g in tup)
        if len(tup) != self.n:
            raise ValueError("expected a %d-tuple" % self.n)
        for a in tup:
            for b in tup:
                if pmul(a, b) != pmul(b, a):
                    raise NotCommuting("tuple entries do not commute")
        return self._walk(tup)

    def _walk(self, tup):
        if self.n == 0:
            return 0
        G = self.group
        ci = G.class_of(tup[0])
        if ci not in self._children:
            raise ValueError("tuple leaves the restricted domain")
        cent, sub, offset = self._children[ci]
        if self.n == 1:
            return offset
        x = G.transporter_to_rep(tup[0])
        xinv = pinv(x)
        rest = tuple(pmul(pmul(x, t), xinv) for t in tup[1:])
        return offset + sub._walk(rest)


def _is_p_power_order(g, p):
    o = perm_order(g)
    while o % p == 0:
        o //= p
    return o == 1


def commuting_tuple_classes(G, n, bound=DEFAULT_ORDER_BOUND, p_restrict=None):
    """Representatives of Hom(Z^n, G) up to simultaneous conjugation.

    For a parametrized wreath group only n=1 is available (its class
    labels); enumerated groups support any arity via the recursion.
    """
    if isinstance(G, WreathGroup):
        if n != 1:
            raise SizeBoundExceeded(
                "parametrized wreath groups only enumerate 1-tuples"
            )
        return [
            TupleClass((cl.rep,), cl.size, cl.centralizer_order, None)
            for cl in G.conjugacy_classes()
        ]
    return _classifier(G, n, bound, p_restrict).classes


def _classifier(G, n, bound=DEFAULT_ORDER_BOUND, p_restrict=None):
    cache = getattr(G, "_tuple_classifiers", None)
    if cache is None:
        cache = {}
        G._tuple_classifiers = cache
    key = (n, p_restrict)
    if key not in cache:
        cache[key] = TupleClassifier(G, n, bound, p_restrict)
    return cache[key]


# ---------------------------------------------------------------------------
# the functions themselves


class NClassFunction:
    """A value per commuting n-tuple class; exact rational or cyclotomic."""

    __slots__ = ("group", "n", "values")

    def __init__(self, group, n, values):
        self.group = group
        self.n = n
        k = len(_class_list(group, n))
        if len(values) != k:
            raise ValueError("expected %d values, got %d" % (k, len(values)))
        self.values = tuple(_normal(v) for v in values)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def constant(G, n, c):
        return NClassFunction(G, n, [c] * len(_class_list(G, n)))

    @staticmethod
    def from_function(G, n, f):
        return NClassFunction(
            G, n, [f(*cls.rep) for cls in _class_list(G, n)]
        )

    @staticmethod
    def from_character(x):
        """Reinterpret a 1-class function from its character values."""
        return NClassFunction(x.group, 1, list(x.values))

    # -- evaluation --------------------------------------------------------

    def at(self, *tup):
        if len(tup) == 1 and isinstance(tup[0], (list, tuple)) and tup[0] and \
                isinstance(tup[0][0], (list, tuple)):
            tup = tuple(tup[0])
        G = self.group
        if isinstance(G, WreathGroup):
            assert self.n == 1
            return self.values[G.class_of(tup[0])]
        return self.values[_classifier(G, self.n).index_of(tup)]

    def ring(self):
        """'Z', 'Q', or 'cyc', by inspecting the stored values."""
        worst = "Z"
        for v in self.values:
            if isinstance(v, Cyc):
                return "cyc"
            if isinstance(v, Fraction) and v.denominator != 1:
                worst = "Q"
        return worst

    # -- arithmetic -----------------------------------------------------------

    def _same(self, other):
        if self.group is not other.group or self.n != other.n:
            raise ValueError("mismatched n-class functions")

    def __add__(self, other):
        self._same(other)
        return NClassFunction(
            self.group, self.n, [a + b for a, b in zip(self.values, other.values)]
        )

    def __sub__(self, other):
        self._same(other)
        return NClassFunction(
            self.group, self.n, [a - b for a, b in zip(self.values, other.values)]
        )

    def __mul__(self, other):
        if isinstance(other, NClassFunction):
            self._same(other)
            return NClassFunction(
                self.group,
                self.n,
                [a * b for a, b in zip(self.values, other.values)],
            )
        return NClassFunction(self.group, self.n, [v * other for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, NClassFunction)
            and self.group is other.group
            and self.n == other.n
            and all(a == b for a, b in zip(self.values, other.values))
        )

    def __hash__(self):
        return hash((id(self.group), self.n, self.values))

    def __repr__(self):
        return "NClassFunction(n=%d, %r)" % (self.n, list(self.values))


def _normal(v):
    if isinstance(v, Cyc):
        if v.is_rational:
            f = v.as_fraction()
            return int(f) if f.denominator == 1 else f
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _class_list(G, n):
    if isinstance(G, WreathGroup):
        if n != 1:
            raise SizeBoundExceeded("wreath labels only cover n=1")
        return commuting_tuple_classes(G, 1)
    return _classifier(G, n).classes


# ---------------------------------------------------------------------------
# transfer


def transfer(phi, f):
    """Pushforward along phi: G -> H, weighted by simultaneous centralizers.

    (phi_* f)([y]) = |aut(y)| * sum of f([x]) / |aut(x)| over classes [x]
    whose image is conjugate to y.  Along a non-faithful map the masses
    can fail to clear, so integer-valued inputs raise as soon as an
    output value leaves Z.
    """
    G, H = phi.source, phi.target
    if f.group is not G:
        raise ValueError("function not defined on the source")
    ring = f.ring()
    n = f.n
    src = _class_list(G, n)
    dst_cls = _classifier(H, n)
    sums = [Fraction(0) if ring != "cyc" else Cyc.rational(0)] * len(
        dst_cls.classes
    )
    sums = list(sums)
    for cls, val in zip(src, f.values):
        img = tuple(phi(g) for g in cls.rep)
        j = dst_cls.index_of(img)
        if ring == "cyc":
            sums[j] = sums[j] + Cyc.rational(1) * val * Fraction(1, cls.centralizer_order)
        else:
            sums[j] = sums[j] + Fraction(val) / cls.centralizer_order
    out = []
    for cls, s in zip(dst_cls.classes, sums):
        out.append(s * cls.centralizer_order)
    if ring == "Z":
        for v in out:
            if Fraction(v).denominator != 1:
                raise NonIntegralTransfer(
                    "integer-valued transfer along a non-faithful map"
                )
    return NClassFunction(H, n, out)


# ---------------------------------------------------------------------------
# GL_n(Z) action


def gl_action(A, f):
    """(A.f)(g_1..g_n) = f at the tuple with exponents transformed by A.

    Column j of the new tuple is prod_i g_i^(A_ij).
    """
    n = f.n
    if len(A) != n or any(len(r) != n for r in A):
        raise ValueError("matrix shape does not match the arity")
    if int_det(A) not in (1, -1):
        raise NotUnimodular("determinant is not a unit")
    G = f.group
    vals = []
    for cls in _class_list(G, n):
        vals.append(f.at(_transform_tuple(cls.rep, A, G)))
    return NClassFunction(G, n, vals)


def _transform_tuple(tup, A, G):
    d = G.degree
    out = []
    for j in range(len(tup)):
        g = pid(d)
        for i, t in enumerate(tup):
            g = pmul(g, ppow(t, A[i][j]))
        out.append(g)
    return tuple(out)


def is_gl_invariant(f):
    n = f.n
    if n == 1:
        gens = [[[-1]]]
    else:
        gens = gl_generators(n)
    return all(gl_action(A, f) == f for A in gens)


def is_sl_invariant(f):
    if f.n == 1:
        return True
    return all(gl_action(A, f) == f for A in sl_generators(f.n))


# ---------------------------------------------------------------------------
# abelian quotient labels and elementary tau


class AbelianQuotientLabel:
    """A surjection Z^n ->> A, canonicalized through its kernel lattice."""

    __slots__ = ("n", "matrix", "moduli", "kernel", "invariants")

    def __init__(self, n, matrix, moduli):
        self.n = n
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.moduli = tuple(int(m) for m in moduli)
        self.kernel = hnf_kernel(self.matrix, self.moduli)
        if self.kernel.index is None:
            raise ValueError("quotient is infinite")
        diag, _u, _v = smith_normal_form([list(r) for r in self.kernel.basis])
        self.invariants = tuple(d for d in diag if d != 1)

    @staticmethod
    def from_kernel(lattice):
        from .zlattice import quotient_label

        matrix, moduli = quotient_label(lattice)
        return AbelianQuotientLabel(lattice.ambient, matrix, moduli)

    @staticmethod
    def cyclic_sum(n, k):
        """Z^n ->> Z/k by the coordinate sum."""
        return AbelianQuotientLabel(n, [[1]] * n, [k])

    @property
    def order(self):
        return self.kernel.index

    def __eq__(self, other):
        return (
            isinstance(other, AbelianQuotientLabel)
            and self.n == other.n
            and self.kernel == other.kernel
        )

    def __hash__(self):
        return hash((self.n, self.kernel))

    def __repr__(self):
        return "AbelianQuotientLabel(n=%d, invariants=%r, index=%d)" % (
            self.n,
            self.invariants,
            self.order,
        )


def elementary_tau(alpha, f, sl_mode=False, _skip_check=False):
    """tau along a quotient label: evaluate f on the kernel basis tuple.

    (tau f)(beta) = f(beta^(w_1), ..., beta^(w_n)) for the Hermite basis
    rows w_j of ker(alpha).  Requires GL-invariance of f (SL-invariance
    in sl_mode, where the oriented basis det > 0 is kept as is).
    """
    if alpha.n != f.n:
        raise ValueError("label arity differs from the function arity")
    if not _skip_check:
        ok = is_sl_invariant(f) if sl_mode else is_gl_invariant(f)
        if not ok:
            raise NotInvariant(
                "function is not %s-invariant"
                % ("SL" if sl_mode else "GL")
            )
    basis = alpha.kernel.basis
    G = f.group
    vals = []
    for cls in _class_list(G, f.n):
        m = _transform_tuple(cls.rep, _rows_as_columns(basis), G)
        vals.append(f.at(m))
    return NClassFunction(G, f.n, vals)


def _rows_as_columns(rows):
    # beta^(w_j) uses row j as the exponent vector; _transform_tuple reads
    # column j, so feed the transpose
    n = len(rows)
    return [[rows[j][i] for j in range(n)] for i in range(n)]


def adams_nclass(k, f, concrete=False, sl_mode=False):
    """psi^k = sum of elementary tau over abelian quotients of order k.

    By default one summand per isomorphism class of quotient (labels up
    to Aut(Z^n)); with concrete=True one summand per index-k sublattice.
    """
    n = f.n
    if k == 1 or n == 0:
        return f
    if concrete:
        # every sublattice contributes through its canonical basis, so no
        # representative is ever chosen and invariance is not needed
        lattices = sublattices_of_index(n, k)
    else:
        by_inv = {}
        for lat in sublattices_of_index(n, k):
            by_inv.setdefault(_invariants_of(lat), []).append(lat)
        lattices = [lats[0] for lats in by_inv.values()]
        if any(len(lats) > 1 for lats in by_inv.values()):
            # a representative kernel is being chosen per label; that only
            # washes out for invariant functions
            ok = is_sl_invariant(f) if sl_mode else is_gl_invariant(f)
            if not ok:
                raise NotInvariant(
                    "label-mode adams over a non-invariant function"
                )
    total = None
    for lat in lattices:
        alpha = AbelianQuotientLabel.from_kernel(lat)
        term = elementary_tau(alpha, f, sl_mode=sl_mode, _skip_check=True)
        total = term if total is None else total + term
    return total


def _invariants_of(lat):
    diag, _u, _v = smith_normal_form([list(r) for r in lat.basis])
    return tuple(d for d in diag if d != 1)


# ---------------------------------------------------------------------------
# power operations via monodromy


def power_operation(k, f, target=None, order_bound=DEFAULT_ORDER_BOUND,
                    check_basepoints=False):
    """P_k: n-class functions on G to n-class functions on the k-wreath.

    Value at a commuting tuple T: decompose the k points under the
    projected tuple of top permutations, and multiply f at the monodromy
    tuple of each orbit (components of powers of T along the orbit
    stabilizer lattice).
    """
    G = f.group
    n = f.n
    if target is None:
        target = WreathGroup(k, G)
    wg = _wreath_of(target)
    if wg.base is not G:
        raise ValueError("wreath base differs from the function's group")
    if n == 1:
        vals = []
        for cls in _class_list(target, 1):
            label = wg.cycle_product_label(cls.rep[0])
            term = 1
            for _len, ci in label:
                term = term * f.values[ci]
            vals.append(term)
        return NClassFunction(target, 1, vals)
    if isinstance(target, WreathGroup):
        raise SizeBoundExceeded(
            "n >= 2 needs the wreath enumerated as a permutation group"
        )
    vals = []
    for cls in _class_list(target, n):
        vals.append(
            _monodromy_value(wg, cls.rep, f, check_basepoints)
        )
    return NClassFunction(target, n, vals)


def monodromy_value(wg, T, f, check_basepoints=False):
    """P_k(f) at a single commuting tuple, without classifying the wreath."""
    return _monodromy_value(wg, T, f, check_basepoints)


def _wreath_of(target):
    if isinstance(target, WreathGroup):
        return target
    if isinstance(target, PermGroup) and target.wreath_info is not None:
        return target.wreath_info
    raise ValueError("target is not a wreath product")


def _monodromy_value(wg, T, f, check_basepoints=False):
    k = wg.n
    n = len(T)
    tops = []
    for t in T:
        sigma, _parts = wg.split(t)
        tops.append(sigma)
    orbits = _joint_orbits(tops, k)
    total = 1
    for orbit in orbits:
        b = min(orbit)
        m = _orbit_monodromy(wg, T, tops, orbit, b)
        val = f.at(m)
        if check_basepoints and len(orbit) > 1:
            alt = max(orbit)
            val2 = f.at(_orbit_monodromy(wg, T, tops, orbit, alt))
            assert val2 == val, "basepoint changed the monodromy value"
        total = total * val
    return total


def _joint_orbits(tops, k):
    seen = [False] * k
    orbits = []
    for start in range(k):
        if seen[start]:
            continue
        orb = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            nxt = []
            for y in frontier:
                for s in tops:
                    z = s[y]
                    if not seen[z]:
                        seen[z] = True
                        orb.append(z)
                        nxt.append(z)
            frontier = nxt
        orbits.append(sorted(orb))
    return orbits


def _orbit_monodromy(wg, T, tops, orbit, b):
    """The commuting n-tuple read at basepoint b of one orbit."""
    n = len(T)
    # Schreier vectors u_y with sigma-vec^(u_y) b = y
    u = {b: [0] * n}
    frontier = [b]
    while frontier:
        nxt = []
        for y in frontier:
            for j, s in enumerate(tops):
                z = s[y]
                if z not in u:
                    vec = list(u[y])
                    vec[j] += 1
                    u[z] = vec
                    nxt.append(z)
        frontier = nxt
    rows = []
    for y in orbit:
        for j, s in enumerate(tops):
            z = s[y]
            vec = [a - c for a, c in zip(u[y], u[z])]
            vec[j] += 1
            rows.append(vec)
    basis = hnf(rows)
    assert len(basis) == n, "stabilizer lattice is not full rank"
    det = 1
    for i, row in enumerate(basis):
        det *= row[_pivot_col(row)]
    assert det == len(orbit), "lattice index disagrees with the orbit size"
    m = []
    for w in basis:
        elt = pid(wg.degree)
        for j, t in enumerate(T):
            elt = pmul(elt, ppow(t, w[j]))
        sigma, parts = wg.split(elt)
        assert sigma[b] == b, "basis vector does not stabilize the basepoint"
        m.append(parts[b])
    for a in m:
        for c in m:
            assert pmul(a, c) == pmul(c, a), "monodromy tuple not commuting"
    return tuple(m)


def _pivot_col(row):
    for j, x in enumerate(row):
        if x:
            return j
    raise ValueError("zero row")


# ---------------------------------------------------------------------------
# bridges


def chromatic_character(X, n):
    """|X^(g_1..g_n)| as an n-class function on the acting group."""
    G = X.G
    vals = []
    for cls in _class_list(G, n):
        fixed = set(range(X.size))
        for g in cls.rep:
            table = X.act_element(g)
            fixed = {x for x in fixed if table[x] == x}
        vals.append(len(fixed))
    return NClassFunction(G, n, vals)
