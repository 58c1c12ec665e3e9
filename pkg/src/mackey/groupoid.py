"""Finite groupoids, stored extensionally, and their calculus.

A groupoid here is a finite set of objects 0..n-1 and a finite list of
arrows.  Each arrow carries an opaque hashable payload; composition,
inversion and identities are supplied as payload-level callables by
whichever construction built the groupoid.  Constructions are correct
by construction; validate() re-checks the axioms extensionally and is
meant for tests.

Everything downstream works skeleton-first: a Skeleton records one
chosen object per connected component, its automorphism group as a
PermGroup (regular action on the loop set), and witness arrows from the
chosen object to every object of the component.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .errors import NotAnAction, SizeBoundExceeded
from .perm import PermGroup, pid, pinv, pmul

DEFAULT_SIZE_BOUND = 200_000


class FiniteGroupoid:
    def __init__(self, n_objects, payloads, src, tgt, compose, inv, ident,
                 object_payloads=None):
        self.n_objects = n_objects
        self.payloads = list(payloads)
        self.src = list(src)
        self.tgt = list(tgt)
        self._compose = compose
        self._inv = inv
        self._ident = ident
        self.object_payloads = object_payloads
        self._index = {}
        for i, d in enumerate(self.payloads):
            if d in self._index:
                raise ValueError("duplicate arrow payload %r" % (d,))
            self._index[d] = i
        self._from = None
        self._between = None
        self._labels = None
        self._skeleton = None

    # -- basic queries -----------------------------------------------------

    @property
    def n_arrows(self):
        return len(self.payloads)

    def is_empty(self):
        return self.n_objects == 0

    def arrow_index(self, payload):
        return self._index[payload]

    def compose_idx(self, i2, i1):
        """Composite of arrow i1 followed by arrow i2."""
        if self.src[i2] != self.tgt[i1]:
            raise ValueError("arrows not composable")
        return self._index[self._compose(self.payloads[i2], self.payloads[i1])]

    def inv_idx(self, i):
        return self._index[self._inv(self.payloads[i])]

    def ident_idx(self, x):
        return self._index[self._ident(x)]

    def arrows_from(self, x):
        if self._from is None:
            out = [[] for _ in range(self.n_objects)]
            for i, s in enumerate(self.src):
                out[s].append(i)
            self._from = out
        return self._from[x]

    def arrows_between(self, x, y):
        if self._between is None:
            table = defaultdict(list)
            for i in range(self.n_arrows):
                table[(self.src[i], self.tgt[i])].append(i)
            self._between = table
        return self._between.get((x, y), [])

    def loops(self, x):
        return self.arrows_between(x, x)

    # -- components and skeleton --------------------------------------------

    def component_labels(self):
        if self._labels is None:
            parent = list(range(self.n_objects))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for i in range(self.n_arrows):
                ra, rb = find(self.src[i]), find(self.tgt[i])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            self._labels = tuple(find(x) for x in range(self.n_objects))
        return self._labels

    def skeleton(self):
        if self._skeleton is None:
            self._skeleton = Skeleton(self)
        return self._skeleton

    # -- axioms, for tests ---------------------------------------------------

    def validate(self, associativity=True):
        for x in range(self.n_objects):
            e = self.ident_idx(x)
            assert self.src[e] == x and self.tgt[e] == x
        for i in range(self.n_arrows):
            s, t = self.src[i], self.tgt[i]
            assert self.compose_idx(i, self.ident_idx(s)) == i
            assert self.compose_idx(self.ident_idx(t), i) == i
            j = self.inv_idx(i)
            assert self.src[j] == t and self.tgt[j] == s
            assert self.compose_idx(j, i) == self.ident_idx(s)
            assert self.compose_idx(i, j) == self.ident_idx(t)
        if associativity:
            into = [[] for _ in range(self.n_objects)]
            for i in range(self.n_arrows):
                into[self.tgt[i]].append(i)
            for b in range(self.n_arrows):
                for a in self.arrows_from(self.tgt[b]):
                    ab = self.compose_idx(a, b)
                    for c in into[self.src[b]]:
                        assert self.compose_idx(ab, c) == self.compose_idx(
                            a, self.compose_idx(b, c)
                        )
        return True


class SkelComponent:
    def __init__(self, gpd, objects, chosen):
        self.objects = objects
        self.chosen = chosen
        self._gpd = gpd
        # breadth-first witnesses chosen -> y; every inverse arrow is
        # present in the arrow set, so forward search reaches everything
        wit = {chosen: gpd.ident_idx(chosen)}
        frontier = [chosen]
        while frontier:
            nxt = []
            for u in frontier:
                for a in gpd.arrows_from(u):
                    v = gpd.tgt[a]
                    if v not in wit:
                        wit[v] = gpd.compose_idx(a, wit[u])
                        nxt.append(v)
            frontier = nxt
        self.witness_to = wit
        loops = sorted(gpd.loops(chosen), key=lambda i: _sort_key(gpd.payloads[i]))
        self.loop_arrows = loops
        self._loop_pos = {a: i for i, a in enumerate(loops)}
        self._aut = None

    @property
    def order(self):
        return len(self.loop_arrows)

    @property
    def aut(self):
        """Automorphism group at the chosen object, via the regular action
        on the loop set.  Built on demand: it is quadratic in loop count."""
        if self._aut is None:
            rows = [self.regular_perm(a) for a in self.loop_arrows]
            self._aut = PermGroup(rows, degree=len(rows), _elements=rows)
        return self._aut

    def regular_perm(self, loop_arrow):
        """Left-regular permutation of the loop set at the chosen object."""
        g = self._gpd
        return tuple(
            self._loop_pos[g.compose_idx(loop_arrow, m)] for m in self.loop_arrows
        )

    def transport_loop(self, arrow, obj):
        """Conjugate a loop at obj back to a loop at the chosen object."""
        g = self._gpd
        w = self.witness_to[obj]
        return g.compose_idx(g.compose_idx(g.inv_idx(w), arrow), w)


def _sort_key(payload):
    return repr(payload)


class Skeleton:
    def __init__(self, gpd):
        self.groupoid = gpd
        labels = gpd.component_labels()
        comps = defaultdict(list)
        for x, r in enumerate(labels):
            comps[r].append(x)
        self.components = [
            SkelComponent(gpd, objs, min(objs)) for _, objs in sorted(comps.items())
        ]
        self._comp_of = {}
        for ci, c in enumerate(self.components):
            for x in c.objects:
                self._comp_of[x] = ci

    def __len__(self):
        return len(self.components)

    def component_of(self, obj):
        return self._comp_of[obj]

    def stabilizer_orders(self):
        return tuple(c.order for c in self.components)

    def signature(self):
        """Equivalence invariant: per component, automorphism group order
        together with the multiset of element orders."""
        sigs = []
        for c in self.components:
            from .perm import perm_order

            orders = tuple(sorted(perm_order(p) for p in c.aut.elements()))
            sigs.append((c.order, orders))
        return tuple(sorted(sigs))


def skeletons_equivalent(a, b):
    return a.signature() == b.signature()


# ---------------------------------------------------------------------------
# constructions


def one_object_groupoid(G):
    """The group G viewed as a groupoid with a single object."""
    elems = list(G.iter_elements())
    gpd = FiniteGroupoid(
        1,
        elems,
        [0] * len(elems),
        [0] * len(elems),
        pmul,
        pinv,
        lambda x: pid(G.degree),
    )
    gpd.group = G
    return gpd


def empty_groupoid():
    return FiniteGroupoid(0, [], [], [], None, None, None)


def disjoint_union(A, B):
    off = A.n_objects
    payloads = [(0, d) for d in A.payloads] + [(1, d) for d in B.payloads]
    src = list(A.src) + [s + off for s in B.src]
    tgt = list(A.tgt) + [t + off for t in B.tgt]

    def compose(d2, d1):
        side, a = d2
        assert d1[0] == side
        return (side, (A if side == 0 else B)._compose(a, d1[1]))

    def inv(d):
        side, a = d
        return (side, (A if side == 0 else B)._inv(a))

    def ident(x):
        if x < off:
            return (0, A._ident(x))
        return (1, B._ident(x - off))

    return FiniteGroupoid(A.n_objects + B.n_objects, payloads, src, tgt,
                          compose, inv, ident)


def groupoid_product(A, B):
    """Cartesian product; arrows are pairs, componentwise structure."""
    nb = B.n_objects
    payloads = []
    src = []
    tgt = []
    for i in range(A.n_arrows):
        for j in range(B.n_arrows):
            payloads.append((i, j))
            src.append(A.src[i] * nb + B.src[j])
            tgt.append(A.tgt[i] * nb + B.tgt[j])

    def compose(d2, d1):
        return (A.compose_idx(d2[0], d1[0]), B.compose_idx(d2[1], d1[1]))

    def inv(d):
        return (A.inv_idx(d[0]), B.inv_idx(d[1]))

    def ident(x):
        return (A.ident_idx(x // nb), B.ident_idx(x % nb))

    return FiniteGroupoid(A.n_objects * nb, payloads, src, tgt,
                          compose, inv, ident)


def translation_groupoid(G, X):
    """Action groupoid of a PermGroup on a finite set.

    X is either a GSet-like object (attributes size, tables) or a bare
    list of generator tables.  Objects are the points; there is one
    arrow (g, x): x -> g.x for every group element and point.
    """
    from .gset import extend_action

    if hasattr(X, "tables"):
        tables, size = list(X.tables), X.size
    else:
        tables = [tuple(t) for t in X]
        size = len(tables[0]) if tables else 0
        if not tables:
            raise NotAnAction("no generator tables given")
    act = extend_action(G, tables, size)
    payloads = []
    src = []
    tgt = []
    for e in range(G.order):
        tab = act[e]
        for x in range(size):
            payloads.append((e, x))
            src.append(x)
            tgt.append(tab[x])

    def compose(d2, d1):
        e2, _ = d2
        e1, x1 = d1
        prod = G.index_of(pmul(G.element(e2), G.element(e1)))
        return (prod, x1)

    def inv(d):
        e, x = d
        ei = G.index_of(pinv(G.element(e)))
        return (ei, act[e][x])

    def ident(x):
        return (0, x)

    gpd = FiniteGroupoid(size, payloads, src, tgt, compose, inv, ident)
    gpd.action_tables = act
    gpd.group = G
    return gpd


# ---------------------------------------------------------------------------
# maps


class GroupoidMap:
    def __init__(self, source, target, obj_map, arrow_map, check=True):
        self.source = source
        self.target = target
        self.obj_map = list(obj_map)
        self.arrow_map = list(arrow_map)
        if check:
            self._check()

    def _check(self):
        S, T = self.source, self.target
        assert len(self.obj_map) == S.n_objects
        assert len(self.arrow_map) == S.n_arrows
        for i in range(S.n_arrows):
            j = self.arrow_map[i]
            assert T.src[j] == self.obj_map[S.src[i]], "source not preserved"
            assert T.tgt[j] == self.obj_map[S.tgt[i]], "target not preserved"
        for x in range(S.n_objects):
            assert self.arrow_map[S.ident_idx(x)] == T.ident_idx(self.obj_map[x])
        for b in range(S.n_arrows):
            for a in S.arrows_from(S.tgt[b]):
                lhs = self.arrow_map[S.compose_idx(a, b)]
                rhs = T.compose_idx(self.arrow_map[a], self.arrow_map[b])
                assert lhs == rhs, "composition not preserved"

    def apply_obj(self, x):
        return self.obj_map[x]

    def apply_arrow(self, i):
        return self.arrow_map[i]

    def compose_with(self, other):
        """self after other."""
        assert other.target is self.source
        return GroupoidMap(
            other.source,
            self.target,
            [self.obj_map[x] for x in other.obj_map],
            [self.arrow_map[i] for i in other.arrow_map],
            check=False,
        )

    def is_faithful(self):
        S = self.source
        for c in S.skeleton().components:
            images = {self.arrow_map[a] for a in c.loop_arrows}
            if len(images) != c.order:
                return False
        return True

    def is_equivalence(self):
        S, T = self.source, self.target
        sk_s, sk_t = S.skeleton(), T.skeleton()
        hit = {}
        for c in sk_s.components:
            tc = sk_t.component_of(self.obj_map[c.chosen])
            if tc in hit.values():
                return False
            hit[c.chosen] = tc
            fx = self.obj_map[c.chosen]
            if len(T.loops(fx)) != c.order:
                return False
            images = {self.arrow_map[a] for a in c.loop_arrows}
            if len(images) != c.order:
                return False
        return len(hit) == len(sk_t.components)


def map_predicates(phi):
    return {"is_equivalence": phi.is_equivalence(),
            "is_faithful": phi.is_faithful()}


def map_from_hom(hom, src_gpd=None, dst_gpd=None):
    """GroupoidMap between one-object groupoids induced by a GroupHom."""
    A = src_gpd if src_gpd is not None else one_object_groupoid(hom.source)
    B = dst_gpd if dst_gpd is not None else one_object_groupoid(hom.target)
    arrow_map = [B.arrow_index(hom(p)) for p in A.payloads]
    return GroupoidMap(A, B, [0], arrow_map, check=False)


def coset_inclusion_map(G, H):
    """H (one object) into the translation groupoid of G/H.

    The image object is the identity coset; each h in H is sent to the
    loop (h, eH).  Canonically an equivalence.
    """
    from .gset import coset_gset

    X = coset_gset(G, H)
    T = translation_groupoid(G, X)
    A = one_object_groupoid(H)
    e = X.base_point
    arrow_map = []
    for p in A.payloads:
        g = p if len(p) == G.degree else tuple(list(p) + list(range(len(p), G.degree)))
        arrow_map.append(T.arrow_index((G.index_of(g), e)))
    return GroupoidMap(A, T, [e], arrow_map, check=False)


# ---------------------------------------------------------------------------
# homotopy pullback


class PullbackSquare:
    """Result bundle: the fibered product with both projections and the
    natural-transformation witness (an arrow of the base per object)."""

    def __init__(self, groupoid, to_h, to_k, witness):
        self.groupoid = groupoid
        self.to_h = to_h
        self.to_k = to_k
        self.witness = witness


def homotopy_pullback(delta, gamma, size_bound=DEFAULT_SIZE_BOUND):
    """Fibered product of delta: K -> G <- H : gamma.

    Objects are triples (y, g, z) with y in K, z in H and g: delta(y) ->
    gamma(z) in G.  An arrow (k, h) changes g by g' = gamma(h) g
    delta(k)^{-1}.
    """
    K, H = delta.source, gamma.source
    G = delta.target
    assert gamma.target is G, "pullback legs must share a target"

    objects = []
    obj_index = {}
    for y in range(K.n_objects):
        dy = delta.obj_map[y]
        for z in range(H.n_objects):
            gz = gamma.obj_map[z]
            for g in G.arrows_between(dy, gz):
                obj_index[(y, g, z)] = len(objects)
                objects.append((y, g, z))

    payloads = []
    src = []
    tgt = []
    count = 0
    for oi, (y, g, z) in enumerate(objects):
        for k in K.arrows_from(y):
            gk = G.inv_idx(delta.arrow_map[k])
            for h in H.arrows_from(z):
                g2 = G.compose_idx(G.compose_idx(gamma.arrow_map[h], g), gk)
                count += 1
                if count > size_bound:
                    raise SizeBoundExceeded("pullback arrow bound hit")
                payloads.append((k, h, g))
                src.append(oi)
                tgt.append(obj_index[(K.tgt[k], g2, H.tgt[h])])

    def transported(k, h, g):
        return G.compose_idx(
            G.compose_idx(gamma.arrow_map[h], g),
            G.inv_idx(delta.arrow_map[k]),
        )

    def compose(d2, d1):
        k2, h2, _ = d2
        k1, h1, g1 = d1
        return (K.compose_idx(k2, k1), H.compose_idx(h2, h1), g1)

    def inv(d):
        k, h, g = d
        return (K.inv_idx(k), H.inv_idx(h), transported(k, h, g))

    def ident(oi):
        y, g, z = objects[oi]
        return (K.ident_idx(y), H.ident_idx(z), g)

    F = FiniteGroupoid(len(objects), payloads, src, tgt, compose, inv, ident,
                       object_payloads=objects)
    alpha = GroupoidMap(F, H, [o[2] for o in objects],
                        [d[1] for d in payloads], check=False)
    beta = GroupoidMap(F, K, [o[0] for o in objects],
                       [d[0] for d in payloads], check=False)
    witness = [o[1] for o in objects]
    return PullbackSquare(F, alpha, beta, witness)


# ---------------------------------------------------------------------------
# inertia and symmetric powers


def inertia(G, n=1, size_bound=DEFAULT_SIZE_BOUND, allow_skeletal=True):
    """Commuting n-tuples of loops, conjugated by connecting arrows.

    When the extensional construction would exceed the size bound, an
    equivalent skeletal model is returned instead (one object per class
    of commuting tuples, loops the joint centralizer); inertia commutes
    with equivalences, so downstream skeleton-level consumers cannot
    tell the difference.
    """
    if n < 1:
        raise ValueError("inertia wants n >= 1")
    est = sum(
        len(G.arrows_from(x)) * len(G.loops(x)) ** n for x in range(G.n_objects)
    )
    if est > size_bound:
        if not allow_skeletal:
            raise SizeBoundExceeded("inertia arrow bound hit")
        return skeletal_inertia(G, n)
    objects = []
    obj_index = {}
    for x in range(G.n_objects):
        loops = G.loops(x)
        for tup in itertools.product(loops, repeat=n):
            ok = True
            for a, b in itertools.combinations(tup, 2):
                if G.compose_idx(a, b) != G.compose_idx(b, a):
                    ok = False
                    break
            if ok:
                obj_index[(x, tup)] = len(objects)
                objects.append((x, tup))
                if len(objects) > size_bound:
                    raise SizeBoundExceeded("inertia object bound hit")

    payloads = []
    src = []
    tgt = []
    for oi, (x, tup) in enumerate(objects):
        for f in G.arrows_from(x):
            fi = G.inv_idx(f)
            conj = tuple(G.compose_idx(G.compose_idx(f, a), fi) for a in tup)
            payloads.append((f, x, tup))
            src.append(oi)
            tgt.append(obj_index[(G.tgt[f], conj)])
            if len(payloads) > size_bound:
                raise SizeBoundExceeded("inertia arrow bound hit")

    def compose(d2, d1):
        f2 = d2[0]
        f1, x1, t1 = d1
        return (G.compose_idx(f2, f1), x1, t1)

    def inv(d):
        f, x, tup = d
        fi = G.inv_idx(f)
        conj = tuple(G.compose_idx(G.compose_idx(f, a), fi) for a in tup)
        return (fi, G.tgt[f], conj)

    def ident(oi):
        x, tup = objects[oi]
        return (G.ident_idx(x), x, tup)

    return FiniteGroupoid(len(objects), payloads, src, tgt, compose, inv,
                          ident, object_payloads=objects)


def _component_group(gpd, comp):
    """A small PermGroup model of the automorphisms at comp.chosen."""
    G = getattr(gpd, "group", None)
    if G is not None and gpd.n_objects == 1:
        return G
    if G is not None and hasattr(gpd, "action_tables"):
        x = comp.chosen
        rows = [G.element(e) for e in range(G.order)
                if gpd.action_tables[e][x] == x]
        return G.subgroup_from_elements(rows)
    return comp.aut


def skeletal_inertia(G, n):
    """Disjoint union, over classes of commuting n-tuples in each
    component's automorphism group, of the one-object groupoids on the
    joint centralizers."""
    from .nclass import commuting_tuple_classes

    blocks = []
    for comp in G.skeleton().components:
        A = _component_group(G, comp)
        for cls in commuting_tuple_classes(A, n):
            blocks.append(cls.centralizer)

    payloads = []
    src = []
    tgt = []
    for bi, C in enumerate(blocks):
        for p in C.iter_elements():
            payloads.append((bi, p))
            src.append(bi)
            tgt.append(bi)

    def compose(d2, d1):
        assert d2[0] == d1[0]
        return (d2[0], pmul(d2[1], d1[1]))

    def inv(d):
        return (d[0], pinv(d[1]))

    def ident(x):
        return (x, pid(blocks[x].degree))

    out = FiniteGroupoid(len(blocks), payloads, src, tgt, compose, inv, ident)
    out.skeletal_model = True
    return out


def symmetric_power_groupoid(n, G, size_bound=DEFAULT_SIZE_BOUND):
    """Objects are n-tuples of objects; an arrow is a permutation sigma
    with arrows f_i: x_i -> y_{sigma(i)}, composed wreath-style."""
    if n < 1:
        raise ValueError("symmetric power wants n >= 1")
    import math

    if math.factorial(n) * (G.n_arrows**n) > size_bound:
        raise SizeBoundExceeded("symmetric power arrow bound hit")

    objects = list(itertools.product(range(G.n_objects), repeat=n))
    obj_index = {o: i for i, o in enumerate(objects)}

    payloads = []
    src = []
    tgt = []
    for sigma in itertools.permutations(range(n)):
        for fs in itertools.product(range(G.n_arrows), repeat=n):
            s = tuple(G.src[f] for f in fs)
            t = [0] * n
            for i, f in enumerate(fs):
                t[sigma[i]] = G.tgt[f]
            payloads.append((sigma, fs))
            src.append(obj_index[s])
            tgt.append(obj_index[tuple(t)])

    def compose(d2, d1):
        tau, gs = d2
        sig, fs = d1
        comp = tuple(tau[sig[i]] for i in range(n))
        arrs = tuple(G.compose_idx(gs[sig[i]], fs[i]) for i in range(n))
        return (comp, arrs)

    def inv(d):
        sig, fs = d
        isig = tuple(sig.index(j) for j in range(n))
        arrs = tuple(G.inv_idx(fs[sig.index(j)]) for j in range(n))
        return (isig, arrs)

    def ident(oi):
        o = objects[oi]
        return (tuple(range(n)), tuple(G.ident_idx(x) for x in o))

    return FiniteGroupoid(len(objects), payloads, src, tgt, compose, inv,
                          ident, object_payloads=objects)
