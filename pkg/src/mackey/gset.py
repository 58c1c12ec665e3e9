"""Finite G-sets with explicit generator tables.

A GSet stores one permutation table per group generator; the action of
an arbitrary element is extended on demand by walking the Cayley graph
(and validates the tables define an action along the way).  Orbits,
stabilizers, marks, products, powers under the wreath action, and
induction/quotient along homomorphisms all live here.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import NotAnAction, NotASubgroup
from .perm import PermGroup, pinv, pmul


def extend_action(G, gen_tables, size):
    """Tables for every element of G, as a dict index -> tuple.

    Raises NotAnAction when the generator tables are inconsistent with
    some relation of G (checked on every Cayley edge, which suffices).
    """
    ident = tuple(range(size))
    for t in gen_tables:
        if sorted(t) != list(range(size)):
            raise NotAnAction("generator table is not a permutation")
    act = {0: ident}
    order = [0]
    qi = 0
    while qi < len(order):
        e = order[qi]
        qi += 1
        p = G.element(e)
        for gj, g in enumerate(G.gens):
            ne = G.index_of(pmul(g, p))
            tab = tuple(gen_tables[gj][x] for x in act[e])
            if ne in act:
                if act[ne] != tab:
                    raise NotAnAction("tables violate a group relation")
            else:
                act[ne] = tab
                order.append(ne)
    if len(act) != G.order:
        raise NotAnAction("generators failed to reach every element")
    return act


class GSet:
    def __init__(self, G, tables, size, points=None, check=True):
        self.G = G
        self.size = size
        self.tables = [tuple(t) for t in tables]
        self.points = points
        if check:
            if len(self.tables) != len(G.gens):
                raise ValueError("one table per generator, please")
            for t in self.tables:
                if len(t) != size or sorted(t) != list(range(size)):
                    raise NotAnAction("table is not a permutation of the set")
        self._full = None
        self._orbit_labels = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def trivial(G, n=1):
        ident = tuple(range(n))
        return GSet(G, [ident for _ in G.gens], n, check=False)

    @staticmethod
    def from_points(G, n):
        """Natural action on the n points the permutations move."""
        assert n == G.degree
        return GSet(G, [g for g in G.gens], n, check=False)

    @staticmethod
    def regular(G):
        tables = []
        for g in G.gens:
            tables.append(
                tuple(G.index_of(pmul(g, G.element(x))) for x in range(G.order))
            )
        X = GSet(G, tables, G.order, check=False)
        X.base_point = 0
        return X

    # -- the action ----------------------------------------------------------

    def full_action(self):
        if self._full is None:
            self._full = extend_action(self.G, self.tables, self.size)
        return self._full

    def act_element(self, g):
        """Table of an arbitrary element (a permutation tuple of G)."""
        return self.full_action()[self.G.index_of(g)]

    def validate(self):
        self.full_action()
        return True

    # -- orbits ---------------------------------------------------------------

    def orbit_labels(self):
        if self._orbit_labels is None:
            if self.size == 0:
                self._orbit_labels = np.zeros(0, dtype=np.int64)
            elif not self.tables:
                self._orbit_labels = np.arange(self.size, dtype=np.int64)
            else:
                arrs = [np.array(t, dtype=np.int64) for t in self.tables]
                self._orbit_labels = kernels.orbit_labels(arrs)
        return self._orbit_labels

    def orbits(self):
        labels = self.orbit_labels()
        out = {}
        for x in range(self.size):
            out.setdefault(int(labels[x]), []).append(x)
        return [out[r] for r in sorted(out)]

    def orbit_of(self, x):
        labels = self.orbit_labels()
        root = labels[x]
        return [y for y in range(self.size) if labels[y] == root]

    def transversal(self, x):
        """Element indices u_y with u_y . x = y, over the orbit of x."""
        out = {x: 0}
        frontier = [x]
        G = self.G
        while frontier:
            nxt = []
            for y in frontier:
                uy = G.element(out[y])
                for gj, t in enumerate(self.tables):
                    z = t[y]
                    if z not in out:
                        out[z] = G.index_of(pmul(G.gens[gj], uy))
                        nxt.append(z)
            frontier = nxt
        return out

    def stabilizer(self, x):
        """Point stabilizer via Schreier generators."""
        G = self.G
        trans = self.transversal(x)
        gens = []
        for y, uy in trans.items():
            u = G.element(uy)
            for gj, t in enumerate(self.tables):
                z = t[y]
                w = pmul(pinv(G.element(trans[z])), pmul(G.gens[gj], u))
                gens.append(w)
        H = G.subgroup(gens)
        assert H.order * len(trans) == G.order
        return H

    # -- marks ----------------------------------------------------------------

    def fixed_of_elements(self, elems):
        act = self.full_action()
        G = self.G
        tabs = [act[G.index_of(g)] for g in elems]
        return [x for x in range(self.size) if all(t[x] == x for t in tabs)]

    def mark(self, H):
        """|X^H| for a subgroup H of G (generators suffice)."""
        if not H.gens:
            return self.size
        return len(self.fixed_of_elements(H.gens))

    # -- constructions ----------------------------------------------------------

    def disjoint_union(self, other):
        assert self.G is other.G
        n = self.size
        tables = [
            tuple(list(t1) + [x + n for x in t2])
            for t1, t2 in zip(self.tables, other.tables)
        ]
        X = GSet(self.G, tables, n + other.size, check=False)
        X.union_of = (self, other)
        return X

    def product(self, other):
        """Diagonal action on pairs; index = x * |Y| + y."""
        assert self.G is other.G
        m = other.size
        tables = []
        for t1, t2 in zip(self.tables, other.tables):
            a1 = np.array(t1, dtype=np.int64)
            a2 = np.array(t2, dtype=np.int64)
            grid = a1[:, None] * m + a2[None, :]
            tables.append(tuple(int(v) for v in grid.reshape(-1)))
        X = GSet(self.G, tables, self.size * m, check=False)
        X.product_of = (self, other)
        return X

    def restrict(self, phi):
        """Along phi: K -> G; tables are the actions of phi(gens of K)."""
        assert phi.target is self.G
        act = self.full_action()
        tables = [act[self.G.index_of(phi(g))] for g in phi.source.gens]
        return GSet(phi.source, tables, self.size, points=self.points,
                    check=False)

    def quotient(self, phi):
        """Pushforward along a surjection phi: G ->> Q (orbits of ker)."""
        assert phi.source is self.G and phi.surjective
        ker = phi.kernel()
        act = self.full_action()
        if ker.gens:
            arrs = [np.array(act[self.G.index_of(g)], dtype=np.int64)
                    for g in ker.gens]
            labels = kernels.orbit_labels(arrs) if self.size else np.zeros(0, int)
        else:
            labels = np.arange(self.size, dtype=np.int64)
        roots = sorted({int(r) for r in labels})
        pos = {r: i for i, r in enumerate(roots)}
        tables = []
        for q in phi.target.gens:
            g = phi.fiber(q)[0]
            t = act[self.G.index_of(g)]
            tables.append(tuple(pos[int(labels[t[r]])] for r in roots))
        Q = GSet(phi.target, tables, len(roots), check=False)
        Q.quotient_labels = labels
        Q.quotient_roots = roots
        return Q

    def induce(self, phi):
        """Along an injective phi: H -> G; points are pairs (coset, point)."""
        if not phi.injective:
            raise NotASubgroup("induction here wants an injective map")
        H, G = phi.source, phi.target
        img = [phi(h) for h in H.iter_elements()]
        img_index = {p: i for i, p in enumerate(img)}
        reps = _coset_reps(G, img_index)
        rep_of = {}
        for ri, r in enumerate(reps):
            for p in img:
                rep_of[G.index_of(pmul(r, p))] = ri
        n_cosets = len(reps)
        size = n_cosets * self.size
        tables = []
        for g in G.gens:
            t = [0] * size
            for ri, r in enumerate(reps):
                gr = pmul(g, r)
                rj = rep_of[G.index_of(gr)]
                h = pmul(pinv(reps[rj]), gr)
                tab = self.act_element(_preimage(phi, h))
                for x in range(self.size):
                    t[ri * self.size + x] = rj * self.size + tab[x]
            tables.append(tuple(t))
        X = GSet(G, tables, size, check=False)
        X.induced_from = (self, phi, reps)
        return X


def _coset_reps(G, img_index):
    seen = set()
    reps = []
    for i in range(G.order):
        p = G.element(i)
        if i in seen:
            continue
        reps.append(p)
        for q in img_index:
            seen.add(G.index_of(pmul(p, q)))
    return reps


def _preimage(phi, h):
    for s in phi.source.iter_elements():
        if phi(s) == h:
            return s
    raise NotASubgroup("element not in the image")


def coset_gset(G, H):
    """Left cosets gH with left translation; base_point is the coset H."""
    if not G.is_subgroup(H):
        raise NotASubgroup("coset space wants a subgroup")
    h_idx = frozenset(G.index_of(h) for h in H.iter_elements())
    cosets = []
    label_of = {}
    for i in range(G.order):
        if i in label_of:
            continue
        p = G.element(i)
        members = frozenset(G.index_of(pmul(p, G.element(j))) for j in h_idx)
        li = len(cosets)
        cosets.append(min(members))
        for m in members:
            label_of[m] = li
    tables = []
    for g in G.gens:
        tables.append(
            tuple(label_of[G.index_of(pmul(g, G.element(cosets[c])))]
                  for c in range(len(cosets)))
        )
    X = GSet(G, tables, len(cosets), check=False)
    X.base_point = label_of[0]
    X.coset_reps = [G.element(c) for c in cosets]
    X.subgroup = H
    return X


# ---------------------------------------------------------------------------
# powers under the wreath action


def power_gset(X, k, W=None):
    """X^k as a set with S_k | G acting; W an enumerated wreath PermGroup."""
    from .wreath import WreathGroup

    wg = None
    if W is None:
        wg = WreathGroup(k, X.G)
        W = wg.to_permgroup()
    else:
        wg = W.wreath_info
    tables = [power_table(X, k, w, wg) for w in W.gens]
    P = GSet(W, tables, X.size**k, check=False)
    P.power_of = (X, k)
    return P


def power_table(X, k, w, wg):
    """Table of one wreath element on X^k (digit i = coordinate i)."""
    sigma, parts = wg.split(w)
    n = X.size**k
    idx = np.arange(n, dtype=np.int64)
    digits = []
    rest = idx
    for _ in range(k):
        digits.append(rest % X.size)
        rest = rest // X.size
    out = np.zeros(n, dtype=np.int64)
    for i in range(k):
        tab = np.array(X.act_element(parts[i]), dtype=np.int64)
        out += tab[digits[i]] * (X.size ** sigma[i])
    return tuple(int(v) for v in out)


# ---------------------------------------------------------------------------
# equivariant maps


class GSetMap:
    def __init__(self, src, dst, mapping, check=True):
        self.src = src
        self.dst = dst
        self.mapping = tuple(mapping)
        if check:
            assert len(self.mapping) == src.size
            for t1, t2 in zip(src.tables, dst.tables):
                for x in range(src.size):
                    if self.mapping[t1[x]] != t2[self.mapping[x]]:
                        raise ValueError("map is not equivariant")

    def __call__(self, x):
        return self.mapping[x]

    def is_bijection(self):
        return sorted(self.mapping) == list(range(self.dst.size))


def gset_pullback(f, h):
    """Strict fibered product {(x,y) : f(x) = h(y)} of G-sets."""
    X, Y, Z = f.src, h.src, f.dst
    assert h.dst is Z and X.G is Y.G
    pts = [(x, y) for x in range(X.size) for y in range(Y.size)
           if f(x) == h(y)]
    pos = {p: i for i, p in enumerate(pts)}
    tables = []
    for t1, t2 in zip(X.tables, Y.tables):
        tables.append(tuple(pos[(t1[x], t2[y])] for x, y in pts))
    P = GSet(X.G, tables, len(pts), points=pts, check=False)
    to_x = GSetMap(P, X, [p[0] for p in pts], check=False)
    to_y = GSetMap(P, Y, [p[1] for p in pts], check=False)
    return P, to_x, to_y


# ---------------------------------------------------------------------------
# isomorphism of G-sets


def orbits_isomorphic(X, x, Y, y):
    """Transitive G-sets orbit(x) and orbit(y) isomorphic?

    Works by testing whether some point of orbit(y) is fixed by the
    Schreier generators of Stab(x), plus the size check; that exhibits
    Stab(x) inside a point stabilizer of equal order.
    """
    ox = X.orbit_of(x)
    oy = Y.orbit_of(y)
    if len(ox) != len(oy):
        return False
    S = X.stabilizer(x)
    act = Y.full_action()
    G = X.G
    tabs = [act[G.index_of(g)] for g in S.gens]
    for z in oy:
        if all(t[z] == z for t in tabs):
            return True
    return False


def gsets_isomorphic(X, Y):
    if X.size != Y.size:
        return False
    ox = X.orbits()
    oy = Y.orbits()
    if sorted(len(o) for o in ox) != sorted(len(o) for o in oy):
        return False
    unused = list(range(len(oy)))
    for o in ox:
        found = None
        for j in unused:
            if orbits_isomorphic(X, o[0], Y, oy[j][0]):
                found = j
                break
        if found is None:
            return False
        unused.remove(found)
    return True
