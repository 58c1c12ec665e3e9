"""Finite permutation groups with explicit element enumeration.

Groups act on points 0..d-1; a permutation is a tuple p with p[i] the
image of i, and composition is (a*b)(i) = a[b[i]], i.e. b acts first.
Everything is enumerated explicitly (no stabilizer chains): the order
bound of 200000 covers every group this engine needs, and exactness
plus reproducibility beat asymptotics at that scale.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from . import kernels
from .errors import NotAnElement, NotASubgroup, OrderBoundExceeded

DEFAULT_ORDER_BOUND = 200_000
DEFAULT_SUBGROUP_BOUND = 3000


# ---------------------------------------------------------------------------
# permutations as tuples


def pmul(a, b):
    """Compose permutations, b first."""
    return tuple(a[i] for i in b)


def pinv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def pid(d):
    return tuple(range(d))


def pconj(g, x):
    """g x g^-1."""
    return pmul(pmul(g, x), pinv(g))


def ppow(p, k):
    d = len(p)
    if k < 0:
        return ppow(pinv(p), -k)
    out = pid(d)
    base = p
    while k:
        if k & 1:
            out = pmul(out, base)
        base = pmul(base, base)
        k >>= 1
    return out


def cycles_of(p, drop_fixed=True):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        if len(cyc) > 1 or not drop_fixed:
            out.append(tuple(cyc))
    return out


def perm_order(p):
    out = 1
    for cyc in cycles_of(p):
        out = out * len(cyc) // gcd(out, len(cyc))
    return out


def from_cycles(d, cycles):
    out = list(range(d))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            out[x] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def cycle_type(p):
    """Partition of d given by cycle lengths, decreasing."""
    lens = sorted((len(c) for c in cycles_of(p, drop_fixed=False)), reverse=True)
    return tuple(lens)


# ---------------------------------------------------------------------------


class ConjClass:
    """One conjugacy class: representative, size, centralizer order."""

    __slots__ = ("rep", "size", "centralizer_order", "indices")

    def __init__(self, rep, size, centralizer_order, indices=None):
        self.rep = rep
        self.size = size
        self.centralizer_order = centralizer_order
        self.indices = indices

    def __repr__(self):
        return "ConjClass(%r, size=%d)" % (self.rep, self.size)


class PermGroup:
    def __init__(self, gens, degree=None, bound=DEFAULT_ORDER_BOUND, _elements=None):
        gens = [tuple(g) for g in gens]
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = len(gens[0])
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError("not a permutation of 0..%d: %r" % (degree - 1, g))
        self.degree = degree
        self.gens = tuple(g for g in gens if g != pid(degree))
        if _elements is not None:
            rows = np.ascontiguousarray(_elements, dtype=np.int32)
            ident = np.arange(degree, dtype=np.int32)
            where = np.nonzero((rows == ident).all(axis=1))[0]
            if len(where) != 1:
                raise ValueError("element table must contain the identity once")
            k = int(where[0])
            if k != 0:
                rows[[0, k]] = rows[[k, 0]]
            self._elements = rows
        else:
            gen_arr = (
                np.array(self.gens, dtype=np.int32)
                if self.gens
                else np.empty((0, degree), dtype=np.int32)
            )
            try:
                self._elements = kernels.closure(gen_arr, bound)
            except ValueError as e:
                raise OrderBoundExceeded(str(e)) from None
        self._index = {
            row.tobytes(): i for i, row in enumerate(self._elements)
        }
        self.order = len(self._elements)
        self._classes = None
        self._class_index = None
        self._subgroup_classes = {}
        self._conj_maps = None
        self._inv_table = None
        self._transporters = None
        self.wreath_info = None  # set by mackey.wreath
        self._product_info = None  # set by direct_product
        self.natural_symmetric = None  # set by symmetric()
        self._char_table = None

    # -- construction helpers -----------------------------------------

    @staticmethod
    def trivial(degree=1):
        return PermGroup([], degree=degree)

    @staticmethod
    def symmetric(n, degree=None):
        d = degree if degree is not None else max(n, 1)
        if n <= 1:
            G = PermGroup.trivial(max(d, 1))
            G.natural_symmetric = n
            return G
        gens = [from_cycles(d, [tuple(range(n))]), from_cycles(d, [(0, 1)])]
        G = PermGroup(gens, degree=d)
        if d == n:
            G.natural_symmetric = n
        return G

    @staticmethod
    def alternating(n):
        d = max(n, 1)
        if n <= 2:
            return PermGroup.trivial(d)
        gens = []
        for i in range(n - 2):
            gens.append(from_cycles(d, [(i, i + 1, i + 2)]))
        return PermGroup(gens, degree=d)

    @staticmethod
    def cyclic(n):
        if n == 1:
            return PermGroup.trivial(1)
        return PermGroup([from_cycles(n, [tuple(range(n))])], degree=n)

    @staticmethod
    def dihedral(n):
        """Symmetries of the n-gon on n points, order 2n (n >= 3)."""
        rot = from_cycles(n, [tuple(range(n))])
        refl = tuple((n - i) % n for i in range(n))
        return PermGroup([rot, refl], degree=n)

    @staticmethod
    def quaternion():
        """Q8 in its regular representation on 8 points."""
        # points: 1, i, j, k, -1, -i, -j, -k
        i = (1, 4, 3, 6, 5, 0, 7, 2)
        j = (2, 7, 4, 1, 6, 3, 0, 5)
        return PermGroup([i, j], degree=8)

    @staticmethod
    def klein_four():
        return PermGroup(
            [from_cycles(4, [(0, 1)]), from_cycles(4, [(2, 3)])], degree=4
        )

    # -- basic queries --------------------------------------------------

    def elements(self):
        """All elements as an (order, degree) int32 array."""
        return self._elements

    def element(self, i):
        return tuple(int(x) for x in self._elements[i])

    def iter_elements(self):
        for row in self._elements:
            yield tuple(int(x) for x in row)

    def index_of(self, p):
        key = np.asarray(p, dtype=np.int32).tobytes()
        idx = self._index.get(key)
        if idx is None:
            raise NotAnElement("%r is not in this group" % (p,))
        return idx

    def __contains__(self, p):
        if len(p) != self.degree:
            return False
        return np.asarray(p, dtype=np.int32).tobytes() in self._index

    def identity(self):
        return pid(self.degree)

    def exponent(self):
        out = 1
        for cl in self.conjugacy_classes():
            o = perm_order(cl.rep)
            out = out * o // gcd(out, o)
        return out

    def is_abelian(self):
        return all(
            pmul(a, b) == pmul(b, a) for a in self.gens for b in self.gens
        )

    def random_element(self, rng):
        return self.element(rng.randrange(self.order))

    def __repr__(self):
        return "PermGroup(order=%d, degree=%d)" % (self.order, self.degree)

    # -- tables ----------------------------------------------------------

    def inverse_table(self):
        if self._inv_table is None:
            tab = np.empty(self.order, dtype=np.int32)
            for i in range(self.order):
                tab[i] = self._index[
                    np.array(pinv(self.element(i)), dtype=np.int32).tobytes()
                ]
            self._inv_table = tab
        return self._inv_table

    def compose_rows(self, rows, p):
        """Row-wise composition rows * p (p acts first)."""
        return rows[:, list(p)]

    def lookup_rows(self, rows):
        """Indices of the given permutation rows; None where missing."""
        idx = self._index
        rows = np.ascontiguousarray(rows, dtype=np.int32)
        return [idx.get(r.tobytes()) for r in rows]

    # -- conjugacy classes ------------------------------------------------

    def conjugacy_classes(self):
        """Classes ordered by (element order, class size, min index)."""
        if self._classes is not None:
            return self._classes
        E = self._elements
        n = self.order
        visited = np.zeros(n, dtype=bool)
        raw = []
        conj_pairs = [(list(g), list(pinv(g))) for g in self.gens]
        for start in range(n):
            if visited[start]:
                continue
            members = [start]
            visited[start] = True
            frontier = [start]
            while frontier:
                rows = E[frontier]
                nxt = []
                for g, ginv in conj_pairs:
                    imgs = np.asarray(g, dtype=np.int32)[rows[:, ginv]]
                    for row in imgs:
                        k = self._index[row.tobytes()]
                        if not visited[k]:
                            visited[k] = True
                            members.append(k)
                            nxt.append(k)
                frontier = nxt
            members.sort()
            raw.append(members)
        classes = []
        for members in raw:
            rep = self.element(members[0])
            size = len(members)
            classes.append(
                ConjClass(rep, size, self.order // size, np.array(members))
            )
        classes.sort(key=lambda c: (perm_order(c.rep), c.size, self.index_of(c.rep)))
        cindex = np.empty(n, dtype=np.int32)
        for ci, cl in enumerate(classes):
            cindex[cl.indices] = ci
        self._classes = classes
        self._class_index = cindex
        return classes

    def class_of(self, p):
        self.conjugacy_classes()
        return int(self._class_index[self.index_of(p)])

    def transporter_to_rep(self, p):
        """Some x with x p x^-1 equal to the class representative."""
        if self._transporters is None:
            self.conjugacy_classes()
            maps = self._conjugation_maps()
            wit = np.full(self.order, -1, dtype=np.int32)
            ident_idx = self.index_of(pid(self.degree))
            gen_invs = [pinv(g) for g in self.gens]
            for cl in self._classes:
                r = self.index_of(cl.rep)
                wit[r] = ident_idx
                frontier = [r]
                while frontier:
                    nxt = []
                    for x in frontier:
                        for mi, m in enumerate(maps):
                            y = int(m[x])
                            if wit[y] < 0:
                                # y = s x s^-1 and w x w^-1 = rep, so the
                                # witness for y is w s^-1
                                wy = pmul(self.element(int(wit[x])), gen_invs[mi])
                                wit[y] = self.index_of(wy)
                                nxt.append(y)
                    frontier = nxt
            self._transporters = wit
        return self.element(int(self._transporters[self.index_of(p)]))

    def centralizer(self, g):
        g = tuple(g)
        if g not in self:
            raise NotAnElement("centralizer of a non-element")
        if g == pid(self.degree):
            return self
        E = self._elements
        left = E[:, list(g)]  # rows x * g
        right = np.asarray(g, dtype=np.int32)[E]  # rows g * x
        mask = (left == right).all(axis=1)
        return self.subgroup_from_elements(E[mask])

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, gens):
        """Subgroup generated inside self (degree preserved)."""
        H = PermGroup(gens, degree=self.degree, bound=self.order + 1)
        for g in H.gens:
            if g not in self:
                raise NotASubgroup("generator outside the group")
        return H

    def subgroup_from_elements(self, rows):
        H = PermGroup.__new__(PermGroup)
        elements = np.ascontiguousarray(rows, dtype=np.int32)
        PermGroup.__init__(
            H,
            [tuple(int(x) for x in r) for r in elements],
            degree=self.degree,
            _elements=elements,
        )
        return H

    def is_subgroup(self, H):
        if H.degree != self.degree:
            return False
        return all(r.tobytes() in self._index for r in H._elements)

    def conjugate_subgroup(self, g, H):
        g = tuple(g)
        ginv = pinv(g)
        rows = np.asarray(g, dtype=np.int32)[H._elements[:, list(ginv)]]
        return self.subgroup_from_elements(rows)

    def _conjugation_maps(self):
        # index permutation of self induced by conjugation with each generator
        if self._conj_maps is None:
            maps = []
            E = self._elements
            for g in self.gens:
                ginv = list(pinv(g))
                imgs = np.asarray(g, dtype=np.int32)[E[:, ginv]]
                maps.append(
                    np.array(
                        [self._index[r.tobytes()] for r in imgs], dtype=np.int32
                    )
                )
            self._conj_maps = maps
        return self._conj_maps

    def _indices_of_subgroup(self, H):
        try:
            return frozenset(self.index_of(p) for p in H.iter_elements())
        except NotAnElement:
            raise NotASubgroup("not a subgroup by element membership")

    def subgroup_conjugacy_orbit(self, H):
        """All conjugates of H, each as a frozenset of element indices."""
        start = self._indices_of_subgroup(H)
        maps = self._conjugation_maps()
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for s in frontier:
                for m in maps:
                    img = frozenset(int(m[i]) for i in s)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    def are_conjugate_subgroups(self, H, K):
        if H.order != K.order:
            return False
        kset = self._indices_of_subgroup(K)
        return kset in self.subgroup_conjugacy_orbit(H)

    def normalizer(self, H):
        hset = self._indices_of_subgroup(H)
        hrows = H._elements
        keep = []
        for i in range(self.order):
            g = self.element(i)
            ginv = list(pinv(g))
            imgs = np.asarray(g, dtype=np.int32)[hrows[:, ginv]]
            if all(self._index[r.tobytes()] in hset for r in imgs):
                keep.append(i)
        return self.subgroup_from_elements(self._elements[keep])

    def subgroup_classes(self, bound=DEFAULT_SUBGROUP_BOUND):
        """Representatives of subgroups up to conjugacy (see SubgroupClassList)."""
        if bound in self._subgroup_classes:
            return self._subgroup_classes[bound]
        if self.order > bound:
            raise OrderBoundExceeded(
                "subgroup enumeration bound %d < order %d" % (bound, self.order)
            )
        result = _enumerate_subgroup_classes(self)
        self._subgroup_classes[bound] = result
        return result

    # -- cosets and double cosets ------------------------------------------

    def left_coset_reps(self, H):
        """One index per left coset gH, smallest-index representative."""
        hidx = sorted(self._indices_of_subgroup(H))
        hrows = self._elements[hidx]
        seen = np.zeros(self.order, dtype=bool)
        reps = []
        for i in range(self.order):
            if seen[i]:
                continue
            reps.append(i)
            g = self._elements[i]
            coset = g[hrows]  # rows g * h
            for r in coset:
                seen[self._index[r.tobytes()]] = True
        return reps

    def double_cosets(self, H, K):
        """(representative, |HgK|, |H meet gKg^-1|) partitioning the group."""
        hidx = sorted(self._indices_of_subgroup(H))
        kidx = sorted(self._indices_of_subgroup(K))
        hrows = self._elements[hidx]
        krows = self._elements[kidx]
        seen = np.zeros(self.order, dtype=bool)
        out = []
        for i in range(self.order):
            if seen[i]:
                continue
            g = self._elements[i]
            members = set()
            hg = hrows[:, g]  # rows h * g
            for row in hg:
                batch = row[krows]  # rows (h*g) * k
                for r in batch:
                    members.add(self._index[r.tobytes()])
            for j in members:
                seen[j] = True
            size = len(members)
            inter = (len(hidx) * len(kidx)) // size
            assert inter * size == len(hidx) * len(kidx)
            out.append((self.element(i), size, inter))
        return out

    # -- homs ---------------------------------------------------------------

    def hom(self, target, gen_images):
        return GroupHom(self, target, gen_images)

    def inclusion_into(self, G):
        if G.degree < self.degree:
            raise NotASubgroup("inclusion target has smaller degree")
        images = [_pad(g, G.degree) for g in self.gens]
        for img in images:
            if img not in G:
                raise NotASubgroup("generator not contained in the target")
        return GroupHom(self, G, images, check=False)


def _pad(p, degree):
    if len(p) == degree:
        return tuple(p)
    if len(p) > degree:
        raise ValueError("cannot pad down")
    return tuple(p) + tuple(range(len(p), degree))


class SubgroupClassList:
    """Subgroup conjugacy classes in the fixed documented order.

    Sorted by subgroup order, ties broken lexicographically on the
    sorted tuple of element permutations of the canonical
    representative.  The marks matrix over this order is lower
    triangular (subconjugacy only reaches smaller-or-equal order).
    """

    def __init__(self, group, reps, orbits):
        self.group = group
        self.reps = reps  # list of PermGroup
        self._orbits = orbits  # list of sets of frozensets of element indices
        self._lookup = {}
        for ci, orbit in enumerate(orbits):
            for s in orbit:
                self._lookup[s] = ci
        self.total_subgroups = sum(len(o) for o in orbits)

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def class_index(self, H):
        s = self.group._indices_of_subgroup(H)
        ci = self._lookup.get(s)
        if ci is None:
            raise NotASubgroup("subgroup missing from the class list")
        return ci

    def normalizer_order(self, ci):
        # orbit-stabilizer for the conjugation action on subgroups
        return self.group.order // len(self._orbits[ci])


def _enumerate_subgroup_classes(G):
    """Cyclic-extension enumeration of all subgroup classes."""
    n = G.order
    E = G._elements
    index = G._index
    maps = G._conjugation_maps()

    # small multiplication helper on indices
    mul_cache = {}

    def mul_idx(a, b):
        key = (a, b)
        r = mul_cache.get(key)
        if r is None:
            r = index[E[a][E[b]].tobytes()]
            mul_cache[key] = r
        return r

    def closure_idx(gen_idx):
        els = {0}
        frontier = [0]
        gens = [g for g in gen_idx if g != 0]
        # words in the generators; a finite sub-semigroup is a subgroup
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = mul_idx(a, g)
                    if c not in els:
                        els.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(els)

    def orbit_of(s):
        seen = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for cur in frontier:
                for m in maps:
                    img = frozenset(int(m[i]) for i in cur)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    trivial = frozenset([0])
    class_sets = [trivial]  # canonical representative index-sets
    class_gens = {trivial: []}
    lookup = {trivial: 0}
    orbits = [{trivial}]
    work = [trivial]
    while work:
        layer = []
        for hset in work:
            gens = class_gens[hset]
            for e in range(1, n):
                if e in hset:
                    continue
                kset = closure_idx(gens + [e])
                if kset in lookup:
                    continue
                korbit = orbit_of(kset)
                canon = min(korbit, key=lambda s: tuple(sorted(s)))
                ci = len(class_sets)
                for s in korbit:
                    lookup[s] = ci
                class_sets.append(canon)
                class_gens[canon] = gens + [e] if canon == kset else None
                if class_gens[canon] is None:
                    # regenerate generators for the canonical representative
                    class_gens[canon] = _regenerate(canon, mul_idx)
                orbits.append(korbit)
                layer.append(canon)
        work = layer

    reps = [
        G.subgroup_from_elements(E[sorted(s)]) for s in class_sets
    ]
    order = sorted(
        range(len(reps)),
        key=lambda i: (
            reps[i].order,
            tuple(sorted(tuple(int(x) for x in r) for r in reps[i]._elements)),
        ),
    )
    reps = [reps[i] for i in order]
    orbits = [orbits[i] for i in order]
    return SubgroupClassList(G, reps, orbits)


def _regenerate(idx_set, mul_idx):
    """A small generating sequence for the subgroup given by indices."""
    gens = []
    have = {0}
    for e in sorted(idx_set):
        if e in have:
            continue
        gens.append(e)
        # close under the enlarged generator set
        els = {0}
        front = [0]
        while front:
            nxt = []
            for a in front:
                for g in gens:
                    c = mul_idx(a, g)
                    if c not in els:
                        els.add(c)
                        nxt.append(c)
            front = nxt
        have = els
        if len(have) == len(idx_set):
            break
    return gens


class GroupHom:
    """Homomorphism between PermGroups, stored on generators.

    Well-definedness is verified by extending the map over the whole
    source via breadth-first products; any inconsistency means the
    generator images do not define a homomorphism.
    """

    def __init__(self, source, target, gen_images, check=True):
        self.source = source
        self.target = target
        self.gen_images = tuple(tuple(g) for g in gen_images)
        if len(self.gen_images) != len(source.gens):
            raise ValueError("need one image per generator")
        for img in self.gen_images:
            if img not in target:
                raise NotAnElement("generator image outside the target")
        self._map = self._extend(check)
        img = set(self._map)
        self._image_indices = sorted(img)
        self.injective = len(img) == source.order
        self.surjective = len(img) == target.order

    def _extend(self, check):
        src, tgt = self.source, self.target
        out = np.full(src.order, -1, dtype=np.int64)
        out[0] = 0  # identity to identity
        gidx = [src.index_of(g) for g in src.gens]
        timg = [tgt.index_of(g) for g in self.gen_images]
        frontier = [0]
        E, F = src._elements, tgt._elements
        while frontier:
            nxt = []
            for a in frontier:
                arow = E[a]
                aimg = F[out[a]]
                for g, tg in zip(gidx, timg):
                    c = src._index[arow[E[g]].tobytes()]
                    cimg = tgt._index[aimg[F[tg]].tobytes()]
                    if out[c] == -1:
                        out[c] = cimg
                        nxt.append(c)
                    elif check and out[c] != cimg:
                        raise ValueError(
                            "generator images do not define a homomorphism"
                        )
            frontier = nxt
        assert (out >= 0).all()
        return out

    def apply(self, p):
        return self.target.element(int(self._map[self.source.index_of(p)]))

    def __call__(self, p):
        return self.apply(p)

    def image(self):
        return self.target.subgroup_from_elements(
            self.target._elements[self._image_indices]
        )

    def kernel(self):
        keep = [i for i in range(self.source.order) if self._map[i] == 0]
        return self.source.subgroup_from_elements(self.source._elements[keep])

    def fiber(self, q):
        """All source elements mapping to q."""
        qi = self.target.index_of(q)
        keep = [i for i in range(self.source.order) if self._map[i] == qi]
        return [self.source.element(i) for i in keep]

    def compose(self, other):
        """self after other (other: A -> source)."""
        if other.target is not self.source:
            if other.target.order != self.source.order or any(
                g not in self.source for g in other.target.gens
            ):
                raise ValueError("composition mismatch")
        images = [self.apply(other.apply(g)) for g in other.source.gens]
        return GroupHom(other.source, self.target, images, check=False)

    @staticmethod
    def identity(G):
        return GroupHom(G, G, G.gens, check=False)

    def __repr__(self):
        flags = []
        if self.injective:
            flags.append("inj")
        if self.surjective:
            flags.append("surj")
        return "GroupHom(%r -> %r%s)" % (
            self.source,
            self.target,
            ", " + "+".join(flags) if flags else "",
        )


# ---------------------------------------------------------------------------
# direct products


def quotient_hom(G, N):
    """The projection G ->> G/N for a normal subgroup N.

    The quotient is realized by the translation action on the cosets
    of N; raises NotASubgroup when N is not normal.
    """
    if G.normalizer(N).order != G.order:
        raise NotASubgroup("quotient wants a normal subgroup")
    nidx = sorted(G._indices_of_subgroup(N))
    nrows = G._elements[nidx]
    coset_rep = {}
    reps = []
    for i in range(G.order):
        g = G._elements[i]
        if i in coset_rep:
            continue
        ri = len(reps)
        reps.append(i)
        for r in g[nrows]:  # rows g * n
            coset_rep[G._index[r.tobytes()]] = ri
    images = []
    for g in G.gens:
        images.append(tuple(
            coset_rep[G.index_of(pmul(g, G.element(reps[c])))]
            for c in range(len(reps))
        ))
    Q = PermGroup(images, degree=len(reps), bound=G.order + 1)
    return GroupHom(G, Q, images, check=False)


def direct_product(G, H):
    """G x H on the disjoint union of the point sets.

    Returns (P, embed_g, embed_h, proj_g, proj_h) where the embeddings
    and projections are GroupHoms.
    """
    dG, dH = G.degree, H.degree
    d = dG + dH
    gens = []
    for g in G.gens:
        gens.append(tuple(g) + tuple(range(dG, d)))
    for h in H.gens:
        gens.append(tuple(range(dG)) + tuple(x + dG for x in h))
    P = PermGroup(gens, degree=d, bound=G.order * H.order + 1)
    P._product_info = (G, H)
    embed_g = GroupHom(G, P, gens[: len(G.gens)], check=False)
    embed_h = GroupHom(H, P, gens[len(G.gens):], check=False)
    proj_g = GroupHom(P, G, [_proj_left(p, dG) for p in P.gens], check=False)
    proj_h = GroupHom(P, H, [_proj_right(p, dG) for p in P.gens], check=False)
    return P, embed_g, embed_h, proj_g, proj_h


def pair_element(g, h):
    return tuple(g) + tuple(x + len(g) for x in h)


def _proj_left(p, dG):
    return tuple(p[:dG])


def _proj_right(p, dG):
    return tuple(x - dG for x in p[dG:])


def split_element(p, dG):
    return _proj_left(p, dG), _proj_right(p, dG)
