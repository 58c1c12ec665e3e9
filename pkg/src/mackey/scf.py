"""Class functions on conjugacy classes of subgroups.

Values are indexed by perm.subgroup_classes(G), so the fixed point
counts of a G-set (Burnside's marks) live here.  Composing with the
generated-subgroup map turns one of these into an n-class function for
every n at once.  Transfers use the same mass formula as tuple
classes, with centralizers replaced by normalizers.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegralTransfer, OrderBoundExceeded
from .nclass import NClassFunction, commuting_tuple_classes
from .wreath import WreathGroup


def _norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def generated_subgroup(G, elems):
    """The subgroup of G generated by the given elements."""
    gens = [g for g in elems if g != G.identity()]
    if not gens:
        gens = [G.identity()]
    return G.subgroup(gens)


class SubgroupClassFunction:
    """One exact rational value per subgroup class of an enumerated group."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        sc = group.subgroup_classes()
        if len(values) != len(sc):
            raise ValueError(
                "expected %d subgroup class values, got %d"
                % (len(sc), len(values))
            )
        self.group = group
        self.values = tuple(_norm(v) for v in values)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(G, c):
        return SubgroupClassFunction(G, [c] * len(G.subgroup_classes()))

    @staticmethod
    def from_function(G, f):
        """f receives one representative subgroup per class."""
        return SubgroupClassFunction(G, [f(H) for H in G.subgroup_classes()])

    # -- evaluation ----------------------------------------------------------

    def at(self, H):
        """Value at the class of the subgroup H (any conjugate)."""
        return self.values[self.group.subgroup_classes().class_index(H)]

    def ring(self):
        for v in self.values:
            if isinstance(v, Fraction) and v.denominator != 1:
                return "Q"
        return "Z"

    # -- arithmetic --------------------------------------------------------

    def _same(self, other):
        if self.group is not other.group:
            raise ValueError("subgroup class functions over different groups")

    def __add__(self, other):
        self._same(other)
        return SubgroupClassFunction(
            self.group, [a + b for a, b in zip(self.values, other.values)]
        )

    def __sub__(self, other):
        self._same(other)
        return SubgroupClassFunction(
            self.group, [a - b for a, b in zip(self.values, other.values)]
        )

    def __mul__(self, other):
        if isinstance(other, SubgroupClassFunction):
            self._same(other)
            return SubgroupClassFunction(
                self.group, [a * b for a, b in zip(self.values, other.values)]
            )
        return SubgroupClassFunction(self.group, [v * other for v in self.values])

    __rmul__ = __mul__

    def __neg__(self):
        return SubgroupClassFunction(self.group, [-v for v in self.values])

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupClassFunction)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        return "SubgroupClassFunction(%r)" % (self.values,)


def subgroup_character(X):
    """Marks of a G-set: [H] -> |X^H|, one row of the table of marks."""
    return SubgroupClassFunction(
        X.G, [X.mark(H) for H in X.G.subgroup_classes()]
    )


def scf_to_nclass(chi, n):
    """Pull back along the generated-subgroup map on commuting tuples."""
    G = chi.group
    return NClassFunction(
        G,
        n,
        [chi.at(generated_subgroup(G, cls.rep))
         for cls in commuting_tuple_classes(G, n)],
    )


# ---------------------------------------------------------------------------
# transfers


def restrict(phi, chi):
    """Along phi: H -> G, by pushing subgroups forward through phi."""
    H = phi.source
    vals = []
    for K in H.subgroup_classes():
        image = phi.target.subgroup([phi(g) for g in K.gens] or
                                    [phi.target.identity()])
        vals.append(chi.at(image))
    return SubgroupClassFunction(H, vals)


def transfer(phi, chi):
    """Pushforward along phi: H -> G by the normalizer mass formula.

    (phi_* f)([L]) / |N_G(L)| = sum of f([K]) / |N_H(K)| over the
    classes [K] of H whose image subgroup is conjugate to L.  Along an
    injective map the normalizer of K embeds in that of L, so integer
    values stay integers; otherwise a fractional output raises.
    """
    if chi.group is not phi.source:
        raise ValueError("function lives on the wrong group")
    H, G = phi.source, phi.target
    src = H.subgroup_classes()
    dst = G.subgroup_classes()
    acc = [Fraction(0)] * len(dst)
    for ki, K in enumerate(src):
        image = G.subgroup([phi(g) for g in K.gens] or [G.identity()])
        li = dst.class_index(image)
        acc[li] += Fraction(chi.values[ki], src.normalizer_order(ki))
    out = []
    ring = chi.ring()
    for li in range(len(dst)):
        v = acc[li] * dst.normalizer_order(li)
        if v.denominator != 1 and ring == "Z":
            # unreachable for injective phi: N_H(K) embeds in N_G(L)
            raise NonIntegralTransfer(
                "integer-valued transfer left the integers (non-faithful map)"
            )
        out.append(v)
    return SubgroupClassFunction(G, out)


# ---------------------------------------------------------------------------
# power operations


def scf_power_value(chi, wg, H):
    """P_k(chi) evaluated at one subgroup H of the wreath product.

    Decompose the block indices under the top image of H; each orbit
    contributes chi at the class of the basepoint-coordinate image of
    the basepoint stabilizer.  Needs only H itself, never the subgroup
    classification of the wreath product.
    """
    G = chi.group
    elems = list(H.iter_elements())
    splits = [wg.split(w) for w in elems]
    k = wg.n
    # orbits of the projected top action
    seen = [False] * k
    total = 1
    for start in range(k):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            p = frontier.pop()
            for sigma, _parts in splits:
                q = sigma[p]
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)
        for p in orbit:
            seen[p] = True
        b = min(orbit)
        coords = {parts[b] for sigma, parts in splits if sigma[b] == b}
        total = total * chi.at(generated_subgroup(G, coords))
    return total


def scf_power_operation(k, chi, bound=200_000):
    """P_k into the subgroup class functions of S_k wr G.

    Classifies the subgroups of the wreath product, so this form is
    for small k and G only; scf_power_value serves the large cases
    one subgroup at a time.
    """
    W = WreathGroup(k, chi.group)
    if W.order > bound:
        raise OrderBoundExceeded(
            "wreath order %d exceeds subgroup classification bound %d"
            % (W.order, bound)
        )
    P = W.to_permgroup()
    vals = [scf_power_value(chi, W, H) for H in P.subgroup_classes()]
    return SubgroupClassFunction(P, vals)
