"""Symmetric functions truncated at degree N, plus S_n character values.

Internally everything is stored in the power-sum basis with Fraction
coefficients, keyed by partitions (descending tuples).  Conversions to
the m/e/h/s bases go through per-degree transition matrices; Schur
functions are defined by their character expansion, so the classical
s_lambda facts are theorems checked in the tests, not input tables.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegreeBoundExceeded

BASES = ("m", "e", "h", "p", "s")


@lru_cache(maxsize=None)
def partitions(n):
    """Partitions of n as descending tuples, reverse-lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(maxpart, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def zee(lam):
    """Centralizer order of the cycle type: prod k^{m_k} m_k!."""
    from math import factorial

    z = 1
    counts = {}
    for part in lam:
        counts[part] = counts.get(part, 0) + 1
    for k, m in counts.items():
        z *= k**m * factorial(m)
    return z


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


def _beta_set(lam, length):
    return tuple(
        (lam[i] if i < len(lam) else 0) + (length - 1 - i) for i in range(length)
    )


def _from_beta(beta):
    vals = sorted(beta, reverse=True)
    length = len(vals)
    lam = [vals[i] - (length - 1 - i) for i in range(length)]
    return tuple(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def sn_character(lam, mu):
    """chi^lam evaluated at the class of cycle type mu, by rim hooks."""
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    length = max(len(lam), 1)
    beta = set(_beta_set(lam, length))
    total = 0
    for b in sorted(beta):
        if b - k >= 0 and (b - k) not in beta:
            new = set(beta)
            new.remove(b)
            new.add(b - k)
            height = sum(1 for c in beta if b - k < c < b)
            sub = _from_beta(tuple(new))
            total += (-1) ** height * sn_character(sub, rest)
    return total


# ---------------------------------------------------------------------------
# the ring


class SymFunc:
    """A symmetric function of degree <= N; internal p-basis storage."""

    __slots__ = ("N", "pc")

    def __init__(self, N, pcoeffs=None):
        self.N = N
        pc = {}
        for lam, c in (pcoeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if sum(lam) > N:
                raise DegreeBoundExceeded("term of degree %d > %d" % (sum(lam), N))
            pc[tuple(lam)] = c
        self.pc = pc

    # -- construction ------------------------------------------------------

    @staticmethod
    def zero(N):
        return SymFunc(N, {})

    @staticmethod
    def one(N):
        return SymFunc(N, {(): Fraction(1)})

    @staticmethod
    def p(k, N):
        return SymFunc(N, {(k,): Fraction(1)})

    @staticmethod
    def e(k, N):
        return SymFunc(N, dict(_e_in_p(k)))

    @staticmethod
    def h(k, N):
        return SymFunc(N, dict(_h_in_p(k)))

    @staticmethod
    def m(lam, N):
        return SymFunc.from_basis("m", {tuple(lam): 1}, N)

    @staticmethod
    def s(lam, N):
        """Schur function via the character expansion over z_mu."""
        lam = tuple(lam)
        n = sum(lam)
        pc = {}
        for mu in partitions(n):
            pc[mu] = Fraction(sn_character(lam, mu), zee(mu))
        return SymFunc(N, pc)

    @staticmethod
    def from_basis(basis, terms, N):
        out = SymFunc.zero(N)
        for lam, c in terms.items():
            lam = tuple(sorted(lam, reverse=True))
            if basis == "p":
                base = SymFunc(N, {lam: 1})
            elif basis == "e":
                base = _product(SymFunc.one(N), [SymFunc.e(k, N) for k in lam])
            elif basis == "h":
                base = _product(SymFunc.one(N), [SymFunc.h(k, N) for k in lam])
            elif basis == "s":
                base = SymFunc.s(lam, N)
            elif basis == "m":
                base = _m_to_p(lam, N)
            else:
                raise ValueError("unknown basis %r" % basis)
            out = out + base * c
        return out

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        assert self.N == other.N
        pc = dict(self.pc)
        for lam, c in other.pc.items():
            pc[lam] = pc.get(lam, Fraction(0)) + c
        return SymFunc(self.N, pc)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            assert self.N == other.N
            pc = {}
            for a, ca in self.pc.items():
                for b, cb in other.pc.items():
                    if sum(a) + sum(b) > self.N:
                        continue
                    lam = tuple(sorted(a + b, reverse=True))
                    pc[lam] = pc.get(lam, Fraction(0)) + ca * cb
            return SymFunc(self.N, pc)
        pc = {lam: c * Fraction(other) for lam, c in self.pc.items()}
        return SymFunc(self.N, pc)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.pc == other.pc

    def __hash__(self):
        return hash(frozenset(self.pc.items()))

    def __repr__(self):
        if not self.pc:
            return "SymFunc(0)"
        bits = []
        for lam in sorted(self.pc, key=lambda t: (sum(t), t)):
            bits.append("%s*p%s" % (self.pc[lam], list(lam)))
        return "SymFunc(" + " + ".join(bits) + ")"

    def degree_part(self, d):
        return SymFunc(self.N, {l: c for l, c in self.pc.items() if sum(l) == d})

    def max_degree(self):
        return max((sum(l) for l in self.pc), default=0)

    # -- basis conversion ------------------------------------------------------

    def to_basis(self, basis):
        """Coordinates in the target basis: dict partition -> Fraction."""
        out = {}
        for d in range(self.N + 1):
            part = {l: c for l, c in self.pc.items() if sum(l) == d}
            if not part:
                continue
            if basis == "p":
                out.update(part)
                continue
            lams = partitions(d)
            cols = []
            for lam in lams:
                if basis == "m":
                    v = _m_to_p(lam, self.N)
                elif basis == "e":
                    v = _product(SymFunc.one(self.N),
                                 [SymFunc.e(k, self.N) for k in lam])
                elif basis == "h":
                    v = _product(SymFunc.one(self.N),
                                 [SymFunc.h(k, self.N) for k in lam])
                elif basis == "s":
                    v = SymFunc.s(lam, self.N)
                else:
                    raise ValueError("unknown basis %r" % basis)
                cols.append([v.pc.get(mu, Fraction(0)) for mu in lams])
            rhs = [part.get(mu, Fraction(0)) for mu in lams]
            coords = _solve(cols, rhs)
            for lam, c in zip(lams, coords):
                if c != 0:
                    out[lam] = c
        return out

    # -- plethysm ---------------------------------------------------------------

    def plethysm(self, g):
        """self composed with g: p_k -> g with indices multiplied by k."""
        assert self.N == g.N
        out = SymFunc.zero(self.N)
        for lam, c in self.pc.items():
            term = SymFunc.one(self.N) * c
            for k in lam:
                gk = SymFunc(
                    self.N,
                    {
                        tuple(k * part for part in mu): cc
                        for mu, cc in g.pc.items()
                        if k * sum(mu) <= self.N
                    },
                )
                term = term * gk
            out = out + term
        return out

    # -- evaluation ---------------------------------------------------------------

    def in_variables(self, m):
        """Monomial coordinates using only m variables (drop longer parts)."""
        mm = self.to_basis("m")
        return {lam: c for lam, c in mm.items() if len(lam) <= m}


def _product(start, factors):
    out = start
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def _e_in_p(k):
    """Newton: k e_k = sum_{i=1..k} (-1)^{i-1} p_i e_{k-i}."""
    if k == 0:
        return ((tuple(), Fraction(1)),)
    acc = {}
    for i in range(1, k + 1):
        sub = {lam: c for lam, c in _e_in_p(k - i)}
        sign = Fraction((-1) ** (i - 1), k)
        for lam, c in sub.items():
            new = tuple(sorted(lam + (i,), reverse=True))
            acc[new] = acc.get(new, Fraction(0)) + sign * c
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _h_in_p(k):
    if k == 0:
        return ((tuple(), Fraction(1)),)
    acc = {}
    for i in range(1, k + 1):
        sub = {lam: c for lam, c in _h_in_p(k - i)}
        for lam, c in sub.items():
            new = tuple(sorted(lam + (i,), reverse=True))
            acc[new] = acc.get(new, Fraction(0)) + Fraction(1, k) * c
    return tuple(sorted(acc.items()))


def _m_to_p(lam, N):
    """Monomial symmetric function in the p-basis, by inverting p -> m."""
    d = sum(lam)
    lams = partitions(d)
    cols = []
    for mu in lams:
        exp = _p_in_m(mu)
        cols.append([exp.get(nu, 0) for nu in lams])
    rhs = [Fraction(1) if nu == tuple(lam) else Fraction(0) for nu in lams]
    coords = _solve(cols, rhs)
    return SymFunc(N, {mu: c for mu, c in zip(lams, coords) if c != 0})


@lru_cache(maxsize=None)
def _p_in_m(mu):
    """p_mu expanded in the monomial basis (exact integer coefficients)."""
    out = {(): Fraction(1)}
    for k in mu:
        out = _mult_by_pk_in_m(out, k)
    return out


def _mult_by_pk_in_m(mdict, k):
    out = {}
    for nu, c in mdict.items():
        nvar = len(nu) + 1
        nuv = sorted(list(nu) + [0] * (nvar - len(nu)), reverse=True)
        cands = set()
        for v in set(nuv):
            parts = list(nu)
            if v == 0:
                mu = tuple(sorted(parts + [k], reverse=True))
            else:
                parts.remove(v)
                mu = tuple(sorted(parts + [v + k], reverse=True))
            cands.add(mu)
        for mu in cands:
            width = max(len(mu), nvar)
            muv = sorted(list(mu) + [0] * (width - len(mu)), reverse=True)
            base = sorted(list(nu) + [0] * (width - len(nu)), reverse=True)
            cnt = 0
            for i in range(width):
                if muv[i] >= k:
                    w = list(muv)
                    w[i] -= k
                    if sorted(w, reverse=True) == base:
                        cnt += 1
            if cnt:
                out[mu] = out.get(mu, Fraction(0)) + c * cnt
    return out


def _solve(cols, rhs):
    """Solve sum_j x_j cols[j] = rhs exactly; the matrices here are
    invertible change-of-basis blocks."""
    n = len(rhs)
    m = len(cols)
    A = [[Fraction(cols[j][i]) for j in range(m)] + [Fraction(rhs[i])]
         for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [v - f * w for v, w in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, n):
        if A[i][m] != 0:
            raise ValueError("inconsistent basis conversion")
    out = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        out[c] = A[i][m]
    return out


# ---------------------------------------------------------------------------
# Frobenius characteristic


def frobenius_char(values_by_partition, n, N):
    """ch(x) = sum over |mu| = n of z_mu^{-1} chi_x(mu) p_mu.

    values_by_partition maps each partition of n to a rational (the
    class-function value of x on that cycle type).
    """
    pc = {}
    for mu in partitions(n):
        v = Fraction(values_by_partition[mu])
        if v != 0:
            pc[mu] = v / zee(mu)
    return SymFunc(N, pc)
