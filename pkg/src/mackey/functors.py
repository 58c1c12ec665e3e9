"""One interface over the Burnside, character, n-class and subgroup
class function rings, with executable forms of the axioms they share.

A FunctorInstance is a read-only record of callables: pullback,
pushforward, basis, products, powers, and the two capability flags
that distinguish the examples (Kunneth isomorphism, surjections
axiom).  The checks below return small JSON-ready reports instead of
raising, so declared failures can be demonstrated rather than hidden.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import burnside as bur
from . import nclass as ncl
from . import repring as rep
from . import scf as scfm
from .cyclo import Cyc
from .errors import NonIntegralTransfer, TransferUnavailable
from .groupoid import homotopy_pullback, map_from_hom, one_object_groupoid
from .gset import GSet
from .nclass import NClassFunction
from .perm import GroupHom, PermGroup, direct_product, pair_element
from .repring import VirtualCharacter
from .scf import SubgroupClassFunction
from .wreath import WreathGroup


class FunctorInstance:
    """Capability record for one global Mackey functor."""

    def __init__(self, name, *, pull, push, push_domain, basis, unit, zero,
                 group_of, scalar, payload, product=None, external=None,
                 power=None, eta_gset=None, has_kunneth_iso=False,
                 satisfies_surjections_axiom=True):
        self.name = name
        self.pull = pull                    # (phi, x) -> M(phi.source)
        self.push = push                    # (phi, x) -> M(phi.target)
        self.push_domain = push_domain      # "all" or "faithful"
        self.basis = basis                  # G -> list of values
        self.unit = unit                    # G -> 1 in M(G)
        self.zero = zero                    # G -> 0 in M(G)
        self.group_of = group_of            # value -> its group
        self.scalar = scalar                # value over pt -> number
        self.payload = payload              # value -> JSON-able
        self.product = product              # (x, y) -> x*y, same group
        self.external = external            # (x, y, product_data) -> M(GxH)
        self.power = power                  # (k, x) -> M(S_k wr G)
        self.eta_gset = eta_gset            # GSet -> value (image of eta)
        self.has_kunneth_iso = has_kunneth_iso
        self.satisfies_surjections_axiom = satisfies_surjections_axiom

    def __repr__(self):
        return "FunctorInstance(%s)" % self.name


# ---------------------------------------------------------------------------
# the four instances


def burnside_functor():
    def external(x, y, pd):
        # bilinear over effective parts; to_gset needs genuine actions
        xp, xn = _effective_pair(x)
        yp, yn = _effective_pair(y)
        out = _eff_external(xp, yp, pd)
        if yn is not None:
            out = out - _eff_external(xp, yn, pd)
        if xn is not None:
            out = out - _eff_external(xn, yp, pd)
            if yn is not None:
                out = out + _eff_external(xn, yn, pd)
        return out

    def _effective_pair(v):
        if all(c >= 0 for c in v.coords):
            return v, None
        pos = bur.BurnsideElement(v.group, tuple(max(c, 0) for c in v.coords))
        neg = bur.BurnsideElement(v.group, tuple(max(-c, 0) for c in v.coords))
        return pos, neg

    def _eff_external(x, y, pd):
        P = pd[0]
        X, Y = x.to_gset(), y.to_gset()
        proj_g, proj_h = pd[3], pd[4]
        tables = []
        for p in P.gens:
            tg = X.act_element(proj_g(p))
            th = Y.act_element(proj_h(p))
            tables.append(tuple(
                tg[i] * Y.size + th[j]
                for i in range(X.size) for j in range(Y.size)
            ))
        Z = GSet(P, tables, X.size * Y.size, check=False)
        return bur.BurnsideElement.from_gset(Z)

    return FunctorInstance(
        "burnside",
        pull=bur.restrict,
        push=bur.induce,
        push_domain="all",
        basis=lambda G: [
            bur.BurnsideElement.basis(G, i)
            for i in range(len(G.subgroup_classes()))
        ],
        unit=bur.BurnsideElement.unit,
        zero=bur.BurnsideElement.zero,
        group_of=lambda x: x.group,
        scalar=lambda x: x.coords[0],
        payload=lambda x: list(x.coords),
        product=lambda x, y: x * y,
        external=external,
        power=bur.power_operation,
        eta_gset=bur.BurnsideElement.from_gset,
        has_kunneth_iso=False,
        satisfies_surjections_axiom=True,
    )


def rep_functor():
    def external(x, y, pd):
        P, proj_g, proj_h = pd[0], pd[3], pd[4]
        return VirtualCharacter.from_function(
            P, lambda p: x.at(proj_g(p)) * y.at(proj_h(p))
        )

    def eta_gset(X):
        return VirtualCharacter.from_function(
            X.G, lambda g: len(X.fixed_of_elements([g]))
        )

    return FunctorInstance(
        "rep",
        pull=rep.res,
        push=rep.ind,
        push_domain="all",
        basis=rep.irreducible_characters,
        unit=VirtualCharacter.trivial,
        zero=lambda G: VirtualCharacter(G, [0] * len(G.conjugacy_classes())),
        group_of=lambda x: x.group,
        scalar=lambda x: _as_number(x.values[0]),
        payload=lambda x: [v.to_json() for v in x.values],
        product=lambda x, y: x * y,
        external=external,
        power=rep.power_operation,
        eta_gset=eta_gset,
        has_kunneth_iso=True,
        satisfies_surjections_axiom=True,
    )


def _nclass_power(k, f):
    # depth >= 2 needs the wreath enumerated; labels suffice at depth 1
    if f.n == 1:
        return ncl.power_operation(k, f)
    W = WreathGroup(k, f.group)
    return ncl.power_operation(k, f, target=W.to_permgroup())


def nclass_functor(n):
    def pull(phi, f):
        return NClassFunction.from_function(
            phi.source, n,
            lambda *tup: f.at(*[phi(g) for g in tup]),
        )

    def basis(G):
        k = len(ncl.commuting_tuple_classes(G, n))
        out = []
        for i in range(k):
            vals = [0] * k
            vals[i] = 1
            out.append(NClassFunction(G, n, vals))
        return out

    def external(x, y, pd):
        P, proj_g, proj_h = pd[0], pd[3], pd[4]
        return NClassFunction.from_function(
            P, n,
            lambda *tup: x.at(*[proj_g(p) for p in tup])
            * y.at(*[proj_h(p) for p in tup]),
        )

    def eta_gset(X):
        return NClassFunction.from_function(
            X.G, n, lambda *tup: len(X.fixed_of_elements(list(tup)))
        )

    return FunctorInstance(
        "nclass-%d" % n,
        pull=pull,
        push=ncl.transfer,
        push_domain="faithful",
        basis=basis,
        unit=lambda G: NClassFunction.constant(G, n, 1),
        zero=lambda G: NClassFunction.constant(G, n, 0),
        group_of=lambda f: f.group,
        scalar=lambda f: _as_number(f.values[0]),
        payload=lambda f: [_json_value(v) for v in f.values],
        product=lambda x, y: x * y,
        external=external,
        power=_nclass_power,
        eta_gset=eta_gset,
        has_kunneth_iso=True,
        satisfies_surjections_axiom=(n == 1),
    )


def scf_functor():
    def external(x, y, pd):
        P, proj_g, proj_h = pd[0], pd[3], pd[4]

        def value(U):
            img_g = proj_g.target.subgroup(
                [proj_g(u) for u in U.gens] or [proj_g.target.identity()])
            img_h = proj_h.target.subgroup(
                [proj_h(u) for u in U.gens] or [proj_h.target.identity()])
            return x.at(img_g) * y.at(img_h)

        return SubgroupClassFunction.from_function(P, value)

    def basis(G):
        k = len(G.subgroup_classes())
        out = []
        for i in range(k):
            vals = [0] * k
            vals[i] = 1
            out.append(SubgroupClassFunction(G, vals))
        return out

    return FunctorInstance(
        "scf",
        pull=scfm.restrict,
        push=scfm.transfer,
        push_domain="faithful",
        basis=basis,
        unit=lambda G: SubgroupClassFunction.constant(G, 1),
        zero=lambda G: SubgroupClassFunction.constant(G, 0),
        group_of=lambda f: f.group,
        scalar=lambda f: f.values[0],
        payload=lambda f: [_json_value(v) for v in f.values],
        product=lambda x, y: x * y,
        external=external,
        power=lambda k, f: scfm.scf_power_operation(k, f),
        eta_gset=scfm.subgroup_character,
        has_kunneth_iso=False,
        satisfies_surjections_axiom=False,
    )


def _as_number(v):
    if isinstance(v, Cyc):
        return v.as_fraction() if v.is_rational else v
    return v


def _json_value(v):
    if isinstance(v, Cyc):
        return v.to_json()
    if isinstance(v, Fraction):
        return [v.numerator, v.denominator]
    return v


# ---------------------------------------------------------------------------
# sampling


def sample_basis(M, G, seed=0, full_cap=64, keep=32):
    """Full basis when small, else a seeded random selection."""
    b = M.basis(G)
    if len(b) <= full_cap:
        return b
    rng = random.Random(seed)
    return rng.sample(b, keep)


# ---------------------------------------------------------------------------
# skeleton reduction of a pullback square


def skeleton_legs(square, K, H):
    """Per component of the fibered product: (group, hom to K, hom to H).

    The component group is realized by its regular action on the loop
    set; the legs evaluate the two groupoid projections on loops.
    """
    F = square.groupoid
    sk = F.skeleton()
    out = []
    for comp in sk.components:
        aut = comp.aut
        row_to_arrow = {comp.regular_perm(a): a for a in comp.loop_arrows}
        k_images = []
        h_images = []
        for g in aut.gens:
            a = row_to_arrow[g]
            k_images.append(square.to_k.target.payloads[square.to_k.arrow_map[a]])
            h_images.append(square.to_h.target.payloads[square.to_h.arrow_map[a]])
        to_k = GroupHom(aut, K, k_images)
        to_h = GroupHom(aut, H, h_images)
        out.append((aut, to_k, to_h))
    return out


def _report(axiom, status, counterexample=None):
    return {"axiom": axiom, "status": status, "counterexample": counterexample}


# ---------------------------------------------------------------------------
# axiom checks


def check_push_pull(M, delta, gamma, samples=None, seed=0):
    """delta* gamma_* against the fibered product, on samples from M(H).

    delta: K -> G and gamma: H -> G are group homomorphisms; the
    fibered product is taken at the groupoid level and reduced to its
    skeleton before the right-hand side is evaluated.
    """
    K, H, G = delta.source, gamma.source, delta.target
    assert gamma.target is G
    if samples is None:
        samples = sample_basis(M, H, seed=seed)
    bg = one_object_groupoid(G)
    square = homotopy_pullback(map_from_hom(delta, dst_gpd=bg),
                               map_from_hom(gamma, dst_gpd=bg))
    legs = skeleton_legs(square, K, H)
    for s in samples:
        try:
            lhs = M.pull(delta, M.push(gamma, s))
            rhs = M.zero(K)
            for _F, to_k, to_h in legs:
                rhs = rhs + M.push(to_k, M.pull(to_h, s))
        except NonIntegralTransfer:
            # the transfer exists rationally; restate the identity there
            s = s * Fraction(1, 2)
            lhs = M.pull(delta, M.push(gamma, s))
            rhs = M.zero(K)
            for _F, to_k, to_h in legs:
                rhs = rhs + M.push(to_k, M.pull(to_h, s))
        if lhs != rhs:
            return _report("fibered-products", "fail", {
                "sample": M.payload(s),
                "lhs": M.payload(lhs),
                "rhs": M.payload(rhs),
            })
    return _report("fibered-products", "pass")


def check_surjections(M, phi, samples=None, seed=0):
    """Does phi_* phi^* = id hold on M(target) samples?

    Report-valued; a NonIntegralTransfer on the way counts as failure
    evidence, since the axiom asserts the composite is the identity.
    """
    assert phi.surjective
    if samples is None:
        samples = sample_basis(M, phi.target, seed=seed)
    for s in samples:
        try:
            back = M.push(phi, M.pull(phi, s))
        except NonIntegralTransfer as exc:
            return _report("surjections", "fail", {
                "sample": M.payload(s), "error": str(exc),
            })
        if back != s:
            return _report("surjections", "fail", {
                "sample": M.payload(s),
                "round_trip": M.payload(back),
            })
    return _report("surjections", "pass")


def check_webb_cases(M, G, seed=0):
    """Push-pull across the three square shapes over one group.

    Case 1 takes both legs to be subgroup inclusions, case 2 mixes an
    inclusion into a proper quotient with the projection onto it, and
    case 3 uses two copies of the same projection, whose fibered
    product is the order |G|^2 / |Q| subgroup of G x G.
    """
    from .perm import quotient_hom

    reports = []
    classes = G.subgroup_classes()
    for H in classes:
        for K in classes:
            r = check_push_pull(M, K.inclusion_into(G), H.inclusion_into(G),
                                seed=seed)
            if r["status"] != "pass":
                r["axiom"] = "webb-case-1"
                return [r]
    reports.append(_report("webb-case-1", "pass"))

    quotients = [
        quotient_hom(G, N)
        for ci, N in enumerate(classes)
        if classes.normalizer_order(ci) == G.order and 1 < N.order < G.order
    ]
    status2 = "pass"
    witness2 = None
    for q in quotients:
        Q = q.target
        for K in Q.subgroup_classes():
            r = check_push_pull(M, K.inclusion_into(Q), q, seed=seed)
            if r["status"] != "pass":
                status2, witness2 = "fail", r["counterexample"]
    reports.append(_report("webb-case-2", status2, witness2))

    status3 = "pass"
    witness3 = None
    for q in quotients:
        r = check_push_pull(M, q, q, seed=seed)
        if r["status"] != "pass":
            status3, witness3 = "fail", r["counterexample"]
    reports.append(_report("webb-case-3", status3, witness3))
    return reports


# ---------------------------------------------------------------------------
# Green structure


def augmentation_hom(G):
    T = PermGroup.trivial(1)
    return GroupHom(G, T, [T.identity()] * len(G.gens), check=False)


def inner_product(M, G, r, s, rational=True):
    """<r, s> = push of r*s along G -> pt; bilinear, no conjugation.

    With rational=False an integral pairing that leaves Z raises
    TransferUnavailable instead of falling back to the Q-valued form.
    """
    eps = augmentation_hom(G)
    try:
        v = M.push(eps, M.product(r, s))
    except NonIntegralTransfer as exc:
        if not rational:
            raise TransferUnavailable(str(exc)) from None
        v = M.push(eps, M.product(r, s) * Fraction(1, 2))
        return 2 * M.scalar(v)
    return M.scalar(v)


def eta_basis(M, G, H):
    """The image of [G/H]: induce the unit of M(H) up to G."""
    return M.push(H.inclusion_into(G), M.unit(H))


def eta(M, x):
    """Initiality map out of the Burnside ring, extended additively."""
    G = x.group
    out = M.zero(G)
    for ci, c in enumerate(x.coords):
        if c:
            out = out + c * eta_basis(M, G, G.subgroup_classes().reps[ci])
    return out


def check_green(M, G, H, samples=None, seed=0):
    """(a) Kunneth then diagonal is the product, (b) Frobenius,
    (c) reciprocity of the bilinear form, all on samples."""
    if samples is None:
        samples = sample_basis(M, G, seed=seed)
    pd = direct_product(G, G)
    diag = GroupHom(G, pd[0], [pair_element(g, g) for g in G.gens],
                    check=False)
    phi = H.inclusion_into(G)
    sub_samples = sample_basis(M, H, seed=seed)
    for x in samples:
        for y in samples:
            lhs = M.pull(diag, M.external(x, y, pd))
            if lhs != M.product(x, y):
                return _report("green-kunneth-diagonal", "fail", {
                    "x": M.payload(x), "y": M.payload(y),
                })
    for s in sub_samples:
        for t in samples:
            lhs = M.product(M.push(phi, s), t)
            rhs = M.push(phi, M.product(s, M.pull(phi, t)))
            if lhs != rhs:
                return _report("green-frobenius", "fail", {
                    "s": M.payload(s), "t": M.payload(t),
                })
            a = inner_product(M, G, t, M.push(phi, s))
            b = inner_product(M, H, M.pull(phi, t), s)
            if a != b:
                return _report("green-reciprocity", "fail", {
                    "s": M.payload(s), "t": M.payload(t),
                    "lhs": str(a), "rhs": str(b),
                })
    return _report("green", "pass")


def check_kunneth_surjectivity(M, G, H):
    """Rank of the span of external products of basis elements against
    the rank of M(G x H); reported against the declared flag."""
    pd = direct_product(G, H)
    P = pd[0]
    target_rank = len(M.basis(P))
    vectors = []
    for x in M.basis(G):
        for y in M.basis(H):
            v = M.external(x, y, pd)
            vectors.append(_coordinates(v))
    rank = _rational_rank(vectors)
    surjective = rank == target_rank
    agrees = surjective == M.has_kunneth_iso
    return _report(
        "kunneth-iso",
        "pass" if agrees else "fail",
        None if agrees else {"rank": rank, "target": target_rank},
    )


def _coordinates(v):
    entries = getattr(v, "coords", None)
    if entries is None:
        entries = v.values
    out = []
    for entry in entries:
        if isinstance(entry, Cyc):
            entry = entry.as_fraction()
        out.append(Fraction(entry))
    return out


def _rational_rank(rows):
    """Row rank over Q by fraction-free style elimination."""
    rank = 0
    ncols = len(rows[0]) if rows else 0
    pivot_rows = []
    for row in rows:
        row = list(row)
        for prow, pcol in pivot_rows:
            if row[pcol]:
                f = row[pcol] / prow[pcol]
                row = [a - f * b for a, b in zip(row, prow)]
        for j in range(ncols):
            if row[j]:
                pivot_rows.append((row, j))
                rank += 1
                break
    return rank
