"""The Burnside ring of a finite group.

Elements are integer vectors over the transitive basis [G/H], ordered
by perm.subgroup_classes.  Multiplication goes through the table of
marks, whose triangularity makes the mark homomorphism invertible over
Q (and the solutions here are always integral).  Transfers follow the
left Kan extension [H/K] -> [G/phi(K)], and the power operation sends
a set to its k-th power under the full wreath action.
"""

from __future__ import annotations

from .errors import OrderBoundExceeded
from .gset import GSet, coset_gset, power_gset, power_table
from .wreath import WreathGroup
from .zlattice import solve_unitriangular


class MarksTable:
    """Fixed point counts |(G/H)^K| over the subgroup class basis."""

    def __init__(self, group, matrix):
        self.group = group
        self.matrix = matrix

    def mark_vector(self, coords):
        n = len(self.matrix)
        return tuple(
            sum(coords[i] * self.matrix[i][j] for i in range(n))
            for j in range(n)
        )

    def solve(self, marks):
        """Coordinates with the given marks; must come out integral."""
        n = len(self.matrix)
        # c . M = marks, M lower triangular: reverse both index orders
        rev = [
            [self.matrix[n - 1 - j][n - 1 - i] for j in range(n)]
            for i in range(n)
        ]
        y = solve_unitriangular(rev, list(reversed(marks)))
        out = []
        for v in reversed(y):
            if v.denominator != 1:
                raise ValueError("mark vector is not in the image lattice")
            out.append(int(v))
        return tuple(out)

    def labels(self):
        return ["order %d" % H.order for H in self.group.subgroup_classes()]


def table_of_marks(G):
    """Rows are the subgroup characters of the transitive G-sets."""
    cached = getattr(G, "_marks_table", None)
    if cached is not None:
        return cached
    classes = G.subgroup_classes()
    rows = []
    for H in classes:
        X = coset_gset(G, H)
        rows.append(tuple(X.mark(K) for K in classes))
    table = MarksTable(G, tuple(rows))
    G._marks_table = table
    return table


class BurnsideElement:
    """Integer coordinates over the transitive basis of one group."""

    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        classes = group.subgroup_classes()
        if len(coords) != len(classes):
            raise ValueError(
                "expected %d coordinates, got %d" % (len(classes), len(coords))
            )
        self.group = group
        self.coords = tuple(int(c) for c in coords)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def basis(G, i):
        coords = [0] * len(G.subgroup_classes())
        coords[i] = 1
        return BurnsideElement(G, coords)

    @staticmethod
    def basis_of(G, H):
        """[G/H] for a subgroup H given by any conjugate."""
        return BurnsideElement.basis(G, G.subgroup_classes().class_index(H))

    @staticmethod
    def unit(G):
        return BurnsideElement.basis(G, len(G.subgroup_classes()) - 1)

    @staticmethod
    def zero(G):
        return BurnsideElement(G, [0] * len(G.subgroup_classes()))

    @staticmethod
    def from_gset(X):
        """Orbit-by-orbit stabilizer classes of a finite G-set."""
        G = X.G
        sc = G.subgroup_classes()
        coords = [0] * len(sc)
        for orbit in X.orbits():
            coords[sc.class_index(X.stabilizer(orbit[0]))] += 1
        return BurnsideElement(G, coords)

    # -- structure ---------------------------------------------------------

    def marks(self):
        return table_of_marks(self.group).mark_vector(self.coords)

    def is_effective(self):
        return all(c >= 0 for c in self.coords)

    def to_gset(self):
        """A concrete G-set in the class; effective elements only."""
        if not self.is_effective():
            raise ValueError("virtual element has no underlying set")
        G = self.group
        X = GSet.trivial(G, 0)
        for ci, c in enumerate(self.coords):
            for _ in range(c):
                X = X.disjoint_union(coset_gset(G, G.subgroup_classes().reps[ci]))
        return X

    # -- ring operations ---------------------------------------------------

    def _same(self, other):
        if self.group is not other.group:
            raise ValueError("Burnside elements over different groups")

    def __add__(self, other):
        self._same(other)
        return BurnsideElement(
            self.group, [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other):
        self._same(other)
        return BurnsideElement(
            self.group, [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self):
        return BurnsideElement(self.group, [-c for c in self.coords])

    def __mul__(self, other):
        if isinstance(other, BurnsideElement):
            self._same(other)
            table = table_of_marks(self.group)
            w = [
                a * b
                for a, b in zip(table.mark_vector(self.coords),
                                table.mark_vector(other.coords))
            ]
            return BurnsideElement(self.group, table.solve(w))
        return BurnsideElement(self.group, [c * other for c in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, BurnsideElement)
            and self.group is other.group
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.group), self.coords))

    def __repr__(self):
        return "BurnsideElement(%r)" % (self.coords,)


# ---------------------------------------------------------------------------
# transfers


def induce(phi, x):
    """Left Kan extension along phi: H -> G, [H/K] -> [G/phi(K)].

    For an injection this is the usual induced set, for a surjection
    the kernel-orbit quotient, and the general case is their composite.
    """
    if x.group is not phi.source:
        raise ValueError("element lives on the wrong group")
    G = phi.target
    dst = G.subgroup_classes()
    coords = [0] * len(dst)
    for ki, K in enumerate(phi.source.subgroup_classes()):
        if x.coords[ki] == 0:
            continue
        image = G.subgroup([phi(g) for g in K.gens] or [G.identity()])
        coords[dst.class_index(image)] += x.coords[ki]
    return BurnsideElement(G, coords)


def restrict(phi, x):
    """Precompose the action along phi: H -> G and re-decompose."""
    if x.group is not phi.target:
        raise ValueError("element lives on the wrong group")
    H = phi.source
    out = BurnsideElement.zero(H)
    for ci, c in enumerate(x.coords):
        if c == 0:
            continue
        X = coset_gset(x.group, x.group.subgroup_classes().reps[ci])
        out = out + c * BurnsideElement.from_gset(X.restrict(phi))
    return out


# ---------------------------------------------------------------------------
# power operations


def power_operation(k, x, bound=200_000, wg=None):
    """[X] -> [X^k] over S_k wr G, decomposed in the transitive basis.

    Only effective classes; the Cartan formula extends to virtual ones
    at the tower level, never here.  Pass wg to reuse a wreath group
    (callers that combine several powers need identical carriers).
    """
    if not x.is_effective():
        raise ValueError("power of a virtual class wants the Cartan formula")
    G = x.group
    W = wg if wg is not None else WreathGroup(k, G)
    if W.order > bound:
        raise OrderBoundExceeded(
            "wreath order %d exceeds decomposition bound %d" % (W.order, bound)
        )
    P = W.to_permgroup()
    Xk = power_gset(x.to_gset(), k, P)
    return BurnsideElement.from_gset(Xk)


def psi_subgroup(H, x):
    """Fixed points of H <= S_k on the k-th power, as a G-set class.

    Restricts P_k(x) along H x G inside the wreath product and takes
    H-fixed points, following the selector reading of the internal
    operations.  The wreath group itself is never enumerated; tables
    come straight from the mixed-radix power action.
    """
    if not x.is_effective():
        raise ValueError("selector operations act on genuine sets")
    k = H.degree
    G = x.group
    W = WreathGroup(k, G)
    X = x.to_gset()
    top_tables = [power_table(X, k, W.top(sigma), W) for sigma in H.gens]
    fixed = [
        p for p in range(X.size**k) if all(t[p] == p for t in top_tables)
    ]
    pos = {p: i for i, p in enumerate(fixed)}
    tables = []
    for g in G.gens:
        t = power_table(X, k, W.diag(tuple(range(k)), g), W)
        tables.append(tuple(pos[t[p]] for p in fixed))
    F = GSet(G, tables, len(fixed), check=False)
    return BurnsideElement.from_gset(F)
