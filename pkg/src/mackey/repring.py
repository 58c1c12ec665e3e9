"""Virtual characters and their transfer maps.

A VirtualCharacter stores one exact cyclotomic value per conjugacy
class; the group may be an enumerated PermGroup or a parametrized
WreathGroup (whose classes are never listed element by element).  The
bilinear form here is <a,b> = (1/|G|) sum a(g) b(g) with no complex
conjugation, so multiplicities of chi in x are read off against the
dual character.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .chartab import character_table
from .cyclo import Cyc, galois_apply
from .errors import GaloisInvarianceFailure
from .perm import GroupHom, PermGroup, perm_order, pinv, pmul, ppow
from .symfunc import _e_in_p, _h_in_p
from .wreath import WreathGroup


class VirtualCharacter:
    """A class function with exact cyclotomic values."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        classes = group.conjugacy_classes()
        if len(values) != len(classes):
            raise ValueError(
                "expected %d class values, got %d" % (len(classes), len(values))
            )
        self.group = group
        self.values = tuple(_cyc(v) for v in values)

    # -- constructors --------------------------------------------------

    @staticmethod
    def trivial(G):
        return VirtualCharacter(G, [1] * len(G.conjugacy_classes()))

    @staticmethod
    def regular(G):
        vals = [
            G.order if _rep_order(cl) == 1 else 0 for cl in G.conjugacy_classes()
        ]
        return VirtualCharacter(G, vals)

    @staticmethod
    def from_function(G, f):
        return VirtualCharacter(G, [f(cl.rep) for cl in G.conjugacy_classes()])

    # -- evaluation ----------------------------------------------------

    def at(self, g):
        return self.values[self.group.class_of(g)]

    def degree(self):
        for cl, v in zip(self.group.conjugacy_classes(), self.values):
            if _rep_order(cl) == 1:
                return v
        raise AssertionError("no identity class")

    # -- ring structure --------------------------------------------------

    def _same(self, other):
        if self.group is not other.group:
            raise ValueError("characters live on different groups")

    def __add__(self, other):
        self._same(other)
        return VirtualCharacter(
            self.group, [a + b for a, b in zip(self.values, other.values)]
        )

    def __sub__(self, other):
        self._same(other)
        return VirtualCharacter(
            self.group, [a - b for a, b in zip(self.values, other.values)]
        )

    def __mul__(self, other):
        if isinstance(other, VirtualCharacter):
            self._same(other)
            return VirtualCharacter(
                self.group, [a * b for a, b in zip(self.values, other.values)]
            )
        return VirtualCharacter(self.group, [v * other for v in self.values])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return (
            isinstance(other, VirtualCharacter)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        return "VirtualCharacter(%r)" % (list(self.values),)

    # -- duality and pairing ------------------------------------------------

    def dual(self):
        G = self.group
        vals = [
            self.values[G.class_of(pinv(cl.rep))] for cl in G.conjugacy_classes()
        ]
        return VirtualCharacter(G, vals)

    def inner(self, other):
        """(1/|G|) sum_g self(g) other(g); no conjugation."""
        self._same(other)
        total = Cyc.rational(0)
        for cl, a, b in zip(
            self.group.conjugacy_classes(), self.values, other.values
        ):
            total = total + a * b * cl.size
        return total / self.group.order


def _cyc(v):
    return v if isinstance(v, Cyc) else Cyc.rational(v)


def _rep_order(cl):
    return perm_order(cl.rep)


def irreducible_characters(G, bound=2000):
    tab = character_table(G, bound)
    return [VirtualCharacter(G, row) for row in tab.rows]


def decompose(x, bound=2000):
    """Multiplicities of x against the irreducible characters."""
    irr = irreducible_characters(x.group, bound)
    return [chi.dual().inner(x) for chi in irr]


def is_virtual_character(x, bound=2000):
    return all(m.is_integer for m in decompose(x, bound))


# ---------------------------------------------------------------------------
# restriction and induction


def res(phi, x):
    """Pull back along a homomorphism: (res x)(h) = x(phi(h))."""
    if x.group is not phi.target:
        raise ValueError("character not defined on the target")
    H = phi.source
    return VirtualCharacter(H, [x.at(phi(cl.rep)) for cl in H.conjugacy_classes()])


def ind(phi, x):
    """Push forward along phi; injective and surjective parts composed."""
    if x.group is not phi.source:
        raise ValueError("character not defined on the source")
    if phi.injective and phi.surjective:
        G = phi.target
        vals = [x.at(phi.fiber(cl.rep)[0]) for cl in G.conjugacy_classes()]
        return VirtualCharacter(G, vals)
    if phi.injective:
        return _ind_injective(phi, x)
    if phi.surjective:
        return _ind_surjective(phi, x)
    I = phi.image()
    mid = GroupHom(phi.source, I, [phi(g) for g in phi.source.gens], check=False)
    incl = I.inclusion_into(phi.target)
    return _ind_injective(incl, _ind_surjective(mid, x))


def _ind_injective(phi, x):
    G = phi.target
    I = phi.image()
    reps = [G.element(i) for i in G.left_coset_reps(I)]
    vals = []
    for cl in G.conjugacy_classes():
        g = cl.rep
        total = Cyc.rational(0)
        for r in reps:
            y = pmul(pmul(pinv(r), g), r)
            if y in I:
                total = total + x.at(phi.fiber(y)[0])
        vals.append(total)
    return VirtualCharacter(G, vals)


def _ind_surjective(phi, x):
    """Fixed vectors of the kernel: averages x over each fiber."""
    G = phi.target
    ker = phi.kernel().order
    vals = []
    for cl in G.conjugacy_classes():
        total = Cyc.rational(0)
        for h in phi.fiber(cl.rep):
            total = total + x.at(h)
        vals.append(total / ker)
    return VirtualCharacter(G, vals)


# ---------------------------------------------------------------------------
# operations


def adams(k, x):
    """(psi^k x)(g) = x(g^k)."""
    G = x.group
    vals = [x.values[G.class_of(ppow(cl.rep, k))] for cl in G.conjugacy_classes()]
    return VirtualCharacter(G, vals)


def char_map(k, x):
    """The Galois twist on values; fails loudly off the character lattice.

    For gcd(k, exponent) = 1 a genuine virtual character satisfies
    galois_k(x(g)) = x(g^k); a class function that breaks this is not in
    the image of the representation ring, which is exactly the check.
    """
    G = x.group
    e = G.exponent()
    if gcd(k, e) != 1:
        raise ValueError("char_map needs gcd(k, exponent) = 1; got k=%d e=%d" % (k, e))
    twisted = []
    for cl, v in zip(G.conjugacy_classes(), x.values):
        tv = galois_apply(k, v)
        if tv != x.values[G.class_of(ppow(cl.rep, k))]:
            raise GaloisInvarianceFailure(
                "value at a class violates the Galois symmetry"
            )
        twisted.append(tv)
    return VirtualCharacter(G, twisted)


def exterior_power(n, x):
    """lambda^n via the Newton expansion of e_n in power sums."""
    return _newton_op(_e_in_p(n), x)


def symmetric_power(n, x):
    return _newton_op(_h_in_p(n), x)


def _newton_op(expansion, x):
    G = x.group
    vals = []
    for cl in G.conjugacy_classes():
        g = cl.rep
        total = Cyc.rational(0)
        for lam, c in expansion:
            term = Cyc.rational(c)
            for part in lam:
                term = term * x.values[G.class_of(ppow(g, part))]
            total = total + term
        vals.append(total)
    return VirtualCharacter(G, vals)


def power_operation(n, x, target=None):
    """P_n(x) on the n-fold wreath of x.group, by cycle products.

    The value at (sigma; g_1..g_n) is the product over cycles of sigma
    of x at the cycle product, so only the class label matters.
    """
    G = x.group
    if target is None:
        target = WreathGroup(n, G)
    wg = _wreath_form(target)
    if wg.base is not G:
        raise ValueError("target wreath has a different base group")
    vals = []
    for cl in target.conjugacy_classes():
        label = wg.cycle_product_label(cl.rep)
        term = Cyc.rational(1)
        for _k, ci in label:
            term = term * x.values[ci]
        vals.append(term)
    return VirtualCharacter(target, vals)


def _wreath_form(target):
    if isinstance(target, WreathGroup):
        return target
    if isinstance(target, PermGroup) and target.wreath_info is not None:
        return target.wreath_info
    raise ValueError("target is not a wreath product")


# ---------------------------------------------------------------------------
# block cross products inside a wreath tower


def split_blocks(wg_j, wg_m, wg_n, w):
    """Inverse of merge_blocks for elements preserving the first j blocks."""
    j, m = wg_j.n, wg_m.n
    assert wg_n.n == j + m
    sigma, parts = wg_n.split(w)
    assert all(sigma[i] < j for i in range(j)), "does not preserve the blocks"
    s1 = tuple(sigma[:j])
    s2 = tuple(x - j for x in sigma[j:])
    w1 = wg_j.make(s1, parts[:j])
    w2 = wg_m.make(s2, parts[j:])
    return w1, w2


def block_cross(a, b, target=None):
    """Induction of a x b from the block subgroup W_j x W_m up to W_n.

    Evaluated by the subset sum: conjugate the argument so a chosen
    j-subset of blocks becomes the leading ones, keep the terms where
    the top permutation preserves the subset.
    """
    wa = _wreath_form(a.group)
    wb = _wreath_form(b.group)
    if wa.base is not wb.base:
        raise ValueError("factors have different base groups")
    j, m = wa.n, wb.n
    n = j + m
    if target is None:
        target = WreathGroup(n, wa.base)
    wn = _wreath_form(target)
    assert wn.n == n and wn.base is wa.base
    vals = []
    for cl in target.conjugacy_classes():
        w = cl.rep
        sigma, _parts = wn.split(w)
        total = Cyc.rational(0)
        for S in combinations(range(n), j):
            if any(sigma[i] not in S for i in S):
                continue
            # u moves S to the leading block positions
            order = list(S) + [i for i in range(n) if i not in S]
            u_top = [0] * n
            for new, old in enumerate(order):
                u_top[old] = new
            u = wn.top(tuple(u_top))
            wprime = pmul(pmul(u, w), pinv(u))
            w1, w2 = split_blocks(wa, wb, wn, wprime)
            total = total + a.at(w1) * b.at(w2)
        vals.append(total)
    return VirtualCharacter(target, vals)
