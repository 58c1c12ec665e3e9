"""Wreath products S_n | G on n blocks of G-points.

An element is written (sigma; g_0..g_{n-1}) with sigma moving blocks
and g_i acting inside block i before the move: as a permutation of
n*d points it sends (i, p) to (sigma(i), g_i(p)).  Multiplication is
then (sigma; g) (tau; h) = (sigma tau; (g_{tau(i)} h_i)_i), and the
exchange rule sigma g sigma^-1 = (g_{sigma^-1(i)})_i holds.

Conjugacy classes are handled in two ways that agree where both apply:
small wreath groups are enumerated like any PermGroup, while the
WreathGroup wrapper classifies classes by cycle-product data (for each
cycle of the top permutation, the base class of the product of its
g-entries), which needs no enumeration and so scales to groups such as
S_6 | S_3 whose order is far past any element bound.
"""

from __future__ import annotations

from math import factorial

from .errors import DegreeBoundExceeded, NotAnElement
from .perm import (
    ConjClass,
    GroupHom,
    PermGroup,
    pid,
    pinv,
    pmul,
)

DEFAULT_DEGREE_BOUND = 4096


class WreathGroup:
    """Structural model of S_n | base, no element enumeration.

    base may be a PermGroup or another WreathGroup (iterated wreaths).
    Provides the group-like interface used by the character layers:
    order, degree, identity, contains, conjugacy_classes, class_of.
    """

    def __init__(self, n, base):
        if n < 1:
            raise ValueError("wreath top size must be >= 1")
        self.n = n
        self.base = base
        self.block = base.degree
        self.degree = n * base.degree
        self.order = factorial(n) * base.order**n
        self._classes = None
        self._label_index = None
        self._perm_group = None

    # -- element structure ------------------------------------------------

    def make(self, sigma, parts):
        d = self.block
        out = [0] * self.degree
        for i in range(self.n):
            base_i = sigma[i] * d
            part = parts[i]
            for p in range(d):
                out[i * d + p] = base_i + part[p]
        return tuple(out)

    def split(self, w):
        """Recover (sigma, parts); raises NotAnElement on non-members."""
        d = self.block
        sigma = []
        parts = []
        for i in range(self.n):
            img = w[i * d] // d
            part = []
            for p in range(d):
                v = w[i * d + p] - img * d
                if v < 0 or v >= d:
                    raise NotAnElement("blocks of size %d not preserved" % d)
                part.append(v)
            sigma.append(img)
            parts.append(tuple(part))
        if sorted(sigma) != list(range(self.n)):
            raise NotAnElement("top image is not a permutation")
        return tuple(sigma), tuple(parts)

    def contains(self, w):
        if len(w) != self.degree:
            return False
        try:
            _, parts = self.split(w)
        except NotAnElement:
            return False
        return all(self._base_contains(p) for p in parts)

    def __contains__(self, w):
        return self.contains(w)

    def _base_contains(self, p):
        return p in self.base

    def identity(self):
        return pid(self.degree)

    def top(self, sigma):
        return self.make(sigma, [pid(self.block)] * self.n)

    def base_slot(self, i, g):
        parts = [pid(self.block)] * self.n
        parts[i] = tuple(g)
        return self.make(pid(self.n), parts)

    def diag(self, sigma, g):
        return self.make(sigma, [tuple(g)] * self.n)

    def generators(self):
        gens = []
        if self.n >= 2:
            gens.append(self.top(tuple(list(range(1, self.n)) + [0])))
            if self.n >= 3:
                gens.append(
                    self.top(tuple([1, 0] + list(range(2, self.n))))
                )
        for g in _base_generators(self.base):
            gens.append(self.base_slot(0, g))
        return gens

    def to_permgroup(self, bound=None):
        """Enumerated PermGroup form (small wreaths only)."""
        if self._perm_group is None:
            from .perm import DEFAULT_ORDER_BOUND

            limit = bound if bound is not None else DEFAULT_ORDER_BOUND
            G = PermGroup(self.generators(), degree=max(self.degree, 1), bound=limit)
            assert G.order == self.order
            G.wreath_info = self
            self._perm_group = G
        return self._perm_group

    def exponent(self):
        from math import gcd

        from .perm import perm_order

        out = 1
        for cl in self.base.conjugacy_classes():
            o = perm_order(cl.rep)
            for k in range(1, self.n + 1):
                v = k * o
                out = out * v // gcd(out, v)
        return out

    def __repr__(self):
        return "WreathGroup(S_%d | %r)" % (self.n, self.base)

    # -- conjugacy by cycle products ---------------------------------------

    def cycle_product_label(self, w):
        """Multiset of (cycle length, base class index) over top cycles."""
        sigma, parts = self.split(w)
        label = []
        seen = [False] * self.n
        for b in range(self.n):
            if seen[b]:
                continue
            cyc = [b]
            seen[b] = True
            j = sigma[b]
            while j != b:
                seen[j] = True
                cyc.append(j)
                j = sigma[j]
            # product g_{last} ... g_{sigma(b)} g_b, read along the cycle
            prod = pid(self.block)
            for point in cyc:
                prod = pmul(parts[point], prod)
            label.append((len(cyc), self.base.class_of(prod)))
        label.sort()
        return tuple(label)

    def conjugacy_classes(self):
        if self._classes is None:
            base_classes = self.base.conjugacy_classes()
            labels = _class_labels(self.n, len(base_classes))
            classes = []
            index = {}
            for label in labels:
                rep = self._rep_for_label(label, base_classes)
                cent = _centralizer_order(label, base_classes)
                size = self.order // cent
                index[label] = len(classes)
                classes.append(ConjClass(rep, size, cent))
            self._classes = classes
            self._label_index = index
        return self._classes

    def class_of(self, w):
        self.conjugacy_classes()
        label = self.cycle_product_label(w)
        return self._label_index[label]

    def _rep_for_label(self, label, base_classes):
        sigma = list(range(self.n))
        parts = [pid(self.block)] * self.n
        pos = 0
        for k, ci in label:
            pts = list(range(pos, pos + k))
            for a, b in zip(pts, pts[1:]):
                sigma[a] = b
            sigma[pts[-1]] = pts[0]
            parts[pts[-1]] = tuple(base_classes[ci].rep)
            pos += k
        return self.make(tuple(sigma), parts)


def _base_generators(base):
    if isinstance(base, WreathGroup):
        return base.generators()
    return list(base.gens)


def _class_labels(n, num_classes):
    """All multisets of (cycle length, class idx) with lengths summing to n."""
    pairs = [(k, c) for k in range(1, n + 1) for c in range(num_classes)]

    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(pairs)):
            k, c = pairs[idx]
            if k > remaining:
                continue
            acc.append((k, c))
            rec(idx, remaining - k, acc)
            acc.pop()

    rec(0, n, [])
    return [tuple(sorted(lbl)) for lbl in out]


def _centralizer_order(label, base_classes):
    from collections import Counter

    counts = Counter(label)
    out = 1
    for (k, ci), m in counts.items():
        cent = base_classes[ci].centralizer_order
        out *= factorial(m) * (k * cent) ** m
    return out


# ---------------------------------------------------------------------------
# spec-level construction with explicit structure maps


class WreathMaps:
    """GroupHom-level structure maps for an enumerated wreath product."""

    def __init__(self, wg, group, top_group, pi):
        self.wreath = wg
        self.group = group
        self.top_group = top_group
        self.pi = pi

    def base_injection(self):
        """G^n -> S_n | G as a GroupHom (builds the product group)."""
        wg = self.wreath
        from .perm import direct_product

        base = _as_permgroup(wg.base)
        P = base
        for _ in range(wg.n - 1):
            P = direct_product(P, base)[0]
        images = []
        for g in P.gens:
            parts = [
                tuple(
                    g[i * base.degree + p] - i * base.degree
                    for p in range(base.degree)
                )
                for i in range(wg.n)
            ]
            images.append(wg.make(pid(wg.n), parts))
        return GroupHom(P, self.group, images, check=False)

    def diagonal(self):
        """S_n x G -> S_n | G."""
        wg = self.wreath
        from .perm import direct_product, split_element

        base = _as_permgroup(wg.base)
        P, _, _, _, _ = direct_product(self.top_group, base)
        images = []
        for g in P.gens:
            s, b = split_element(g, self.top_group.degree)
            images.append(wg.diag(s, b))
        return GroupHom(P, self.group, images, check=False)


def _as_permgroup(G):
    if isinstance(G, WreathGroup):
        return G.to_permgroup()
    return G


def wreath(n, G, degree_bound=DEFAULT_DEGREE_BOUND, order_bound=None):
    """Enumerated S_n | G plus its structure maps.

    Returns (PermGroup, WreathMaps).  The permutation degree is n times
    the degree of G; DegreeBoundExceeded guards silly requests.
    """
    base = G
    wg = WreathGroup(n, base)
    if wg.degree > degree_bound:
        raise DegreeBoundExceeded(
            "wreath degree %d exceeds %d" % (wg.degree, degree_bound)
        )
    W = wg.to_permgroup(order_bound)
    if n == 1:
        top = PermGroup.trivial(1)
        pi = GroupHom(W, top, [pid(1) for _ in W.gens], check=False)
    else:
        top = PermGroup.symmetric(n)
        images = []
        for g in W.gens:
            sigma, _ = wg.split(g)
            images.append(sigma)
        pi = GroupHom(W, top, images, check=False)
    return W, WreathMaps(wg, W, top, pi)


def block_injection(wg_j, wg_k, wg_n):
    """iota_{j,k}: (S_j|G) x (S_k|G) -> S_{j+k}|G as a GroupHom."""
    assert wg_j.base is wg_k.base or wg_j.block == wg_k.block
    from .perm import direct_product

    Wj = wg_j.to_permgroup()
    Wk = wg_k.to_permgroup()
    P, _, _, _, _ = direct_product(Wj, Wk)
    Wn = wg_n.to_permgroup()
    images = []
    for g in P.gens:
        w1 = tuple(g[: wg_j.degree])
        w2 = tuple(x - wg_j.degree for x in g[wg_j.degree:])
        images.append(merge_blocks(wg_j, wg_k, wg_n, w1, w2))
    return GroupHom(P, Wn, images, check=False)


def merge_blocks(wg_j, wg_k, wg_n, w1, w2):
    """Juxtapose elements of S_j|G and S_k|G inside S_{j+k}|G."""
    s1, p1 = wg_j.split(w1)
    s2, p2 = wg_k.split(w2)
    sigma = tuple(list(s1) + [x + wg_j.n for x in s2])
    return wg_n.make(sigma, list(p1) + list(p2))


def nabla_hom(j, k, G):
    """S_j|(S_k|G) -> S_{jk}|G; the identity on underlying permutations."""
    inner = WreathGroup(k, G)
    outer = WreathGroup(j, inner)
    flat = WreathGroup(j * k, G)
    src = outer.to_permgroup()
    dst = flat.to_permgroup()
    return GroupHom(src, dst, list(src.gens), check=False), outer, flat
