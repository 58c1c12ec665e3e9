"""Exact character tables of finite permutation groups.

Natural symmetric groups get the rim-hook recursion; direct products
tensor the factor tables; everything else goes through the mod-p method
(class-sum matrices, simultaneous eigenspace splitting over F_p, then a
discrete-Fourier lift to exact cyclotomic values).
"""

from __future__ import annotations

from math import gcd, isqrt

from .cyclo import Cyc
from .errors import OrderBoundExceeded
from .perm import cycle_type, perm_order, pinv, pmul, ppow, split_element
from .symfunc import partitions, sn_character

DEFAULT_TABLE_BOUND = 2000


class CharacterTable:
    """Irreducible character values, rows aligned with conjugacy_classes()."""

    __slots__ = ("group", "classes", "rows", "labels")

    def __init__(self, group, rows, labels):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.rows = tuple(tuple(_as_cyc(v) for v in row) for row in rows)
        self.labels = tuple(labels)

    def __len__(self):
        return len(self.rows)

    @property
    def degrees(self):
        return [row[self._identity_col()].as_int() for row in self.rows]

    def _identity_col(self):
        for i, cl in enumerate(self.classes):
            if perm_order(cl.rep) == 1:
                return i
        raise AssertionError("no identity class")

    def value(self, i, g):
        """chi_i at an arbitrary group element."""
        return self.rows[i][self.group.class_of(g)]

    def __repr__(self):
        return "CharacterTable(%d irreducibles, |G|=%d)" % (
            len(self.rows),
            self.group.order,
        )


def _as_cyc(v):
    if isinstance(v, Cyc):
        return v
    return Cyc.rational(v)


def _value_key(v):
    return (v.n, tuple((a.numerator, a.denominator) for a in v.c))


def character_table(G, bound=DEFAULT_TABLE_BOUND):
    if G._char_table is not None:
        return G._char_table
    if G.natural_symmetric is not None:
        tab = _symmetric_table(G, G.natural_symmetric)
    elif G._product_info is not None:
        tab = _product_table(G, bound)
    else:
        if G.order > bound:
            raise OrderBoundExceeded(
                "character table of order %d exceeds bound %d" % (G.order, bound)
            )
        tab = _dixon_table(G)
    _verify_table(tab)
    G._char_table = tab
    return tab


# ---------------------------------------------------------------------------
# symmetric groups


def _symmetric_table(G, n):
    classes = G.conjugacy_classes()
    if n <= 1:
        lam = ((1,) * n,) if n else ((),)
        return CharacterTable(G, [[1]], [lam[0]])
    types = []
    for cl in classes:
        ct = cycle_type(cl.rep)
        assert sum(ct) == n
        types.append(ct)
    rows = []
    labels = list(partitions(n))
    for lam in labels:
        rows.append([sn_character(lam, mu) for mu in types])
    return CharacterTable(G, rows, labels)


# ---------------------------------------------------------------------------
# direct products


def _product_table(G, bound):
    A, B = G._product_info
    ta = character_table(A, bound)
    tb = character_table(B, bound)
    dA = A.degree
    rows = []
    labels = []
    split = [split_element(cl.rep, dA) for cl in G.conjugacy_classes()]
    cols = [(A.class_of(a), B.class_of(b)) for a, b in split]
    for i, ra in enumerate(ta.rows):
        for j, rb in enumerate(tb.rows):
            rows.append([ra[ca] * rb[cb] for ca, cb in cols])
            labels.append((ta.labels[i], tb.labels[j]))
    order = sorted(
        range(len(rows)),
        key=lambda r: (
            _value_key(rows[r][_identity_index(G)]),
            [_value_key(v) for v in rows[r]],
        ),
    )
    return CharacterTable(G, [rows[r] for r in order], [labels[r] for r in order])


def _identity_index(G):
    for i, cl in enumerate(G.conjugacy_classes()):
        if perm_order(cl.rep) == 1:
            return i
    raise AssertionError


# ---------------------------------------------------------------------------
# mod-p method for the general case


def _dixon_table(G):
    classes = G.conjugacy_classes()
    k = len(classes)
    reps = [cl.rep for cl in classes]
    sizes = [cl.size for cl in classes]
    e = 1
    for r in reps:
        e = e * perm_order(r) // gcd(e, perm_order(r))
    p = _pick_prime(e, G.order)
    ident = _identity_index(G)

    # class-multiplication coefficients a[i][j][l]
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    cindex = G._class_index
    for i, cl in enumerate(classes):
        for xi in cl.indices:
            u = pinv(G.element(int(xi)))
            for l, z in enumerate(reps):
                j = int(cindex[G.index_of(pmul(u, z))])
                a[i][j][l] += 1

    # split the column space into common eigenvectors of all B_i
    spaces = [[_unit(k, j) for j in range(k)]]
    finished = []
    for i in range(k):
        if i == ident:
            continue
        Bi = [[a[i][j][l] % p for l in range(k)] for j in range(k)]
        nxt = []
        for S in spaces:
            if len(S) == 1:
                finished.append(S)
                continue
            R = _restriction(Bi, S, p)
            assert _restrict_check(Bi, S, R, p), "span not invariant"
            found = 0
            for lam in _eigenvalues(R, p):
                M = [[(R[r][c] - (lam if r == c else 0)) % p for c in range(len(S))]
                     for r in range(len(S))]
                sub = []
                for coeffs in _kernel_basis(M, p):
                    vec = [0] * k
                    for c, basis_vec in zip(coeffs, S):
                        for t in range(k):
                            vec[t] = (vec[t] + c * basis_vec[t]) % p
                    sub.append(vec)
                if sub:
                    found += len(sub)
                    nxt.append(sub)
            assert found == len(S), "class-sum matrix not diagonalizable"
        spaces = nxt
        if not spaces:
            break
    finished.extend(spaces)
    assert all(len(S) == 1 for S in finished), "splitting did not separate"
    assert len(finished) == k, "eigenspace splitting did not finish"

    # normalize to central characters, recover degrees and values mod p
    omegas = []
    for S in finished:
        v = S[0]
        assert v[ident] % p != 0
        inv0 = pow(v[ident], p - 2, p)
        omegas.append([x * inv0 % p for x in v])
    invcls = [int(cindex[G.index_of(pinv(r))]) for r in reps]
    rows_modp = []
    degrees = []
    for om in omegas:
        s = 0
        for l in range(k):
            s = (s + om[l] * om[invcls[l]] * pow(sizes[l], p - 2, p)) % p
        d2 = G.order * pow(s, p - 2, p) % p
        d = None
        for cand in range(1, isqrt(G.order) + 1):
            if cand * cand % p == d2:
                d = cand
                break
        assert d is not None, "no degree matches mod p"
        degrees.append(d)
        row = [d * om[l] * pow(sizes[l], p - 2, p) % p for l in range(k)]
        rows_modp.append(row)
    assert sum(d * d for d in degrees) == G.order

    # lift each value through the discrete Fourier transform mod p
    w = _primitive_root_power(p, e)
    rows = []
    for row in rows_modp:
        vals = []
        for l, g in enumerate(reps):
            o = perm_order(g)
            chi_pows = [row[int(cindex[G.index_of(ppow(g, j))])] for j in range(o)]
            wo = pow(w, e // o, p)
            oinv = pow(o, p - 2, p)
            val = Cyc.rational(0)
            for s in range(o):
                m = 0
                for j in range(o):
                    m = (m + chi_pows[j] * pow(wo, (-j * s) % o, p)) % p
                m = m * oinv % p
                if m:
                    assert m <= max(degrees), "multiplicity lift out of range"
                    val = val + Cyc.zeta(o, s) * m
            vals.append(val)
        rows.append(vals)

    order = sorted(
        range(k),
        key=lambda r: (degrees[r], [_value_key(v) for v in rows[r]]),
    )
    labels = ["x%d" % t for t in range(k)]
    return CharacterTable(G, [rows[r] for r in order], labels)


def _unit(k, j):
    v = [0] * k
    v[j] = 1
    return v


def _pick_prime(e, order):
    floor = 2 * isqrt(order) + 1
    p = e + 1
    while True:
        if p > floor and _is_prime(p):
            return p
        p += e


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _primitive_root_power(p, e):
    """A fixed primitive e-th root of unity in F_p (p = 1 mod e)."""
    fac = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return pow(g, (p - 1) // e, p)
    raise AssertionError("no primitive root")


def _restriction(B, S, p):
    """Matrix R with B*S = S*R, S a list of independent column vectors."""
    k = len(B)
    d = len(S)
    cols = []
    for v in S:
        Bv = [sum(B[r][t] * v[t] for t in range(k)) % p for r in range(k)]
        cols.append(_solve_in_span(S, Bv, p))
    # cols[c] holds coordinates of B*S_c, i.e. column c of R
    return [[cols[c][r] for c in range(d)] for r in range(d)]


def _solve_in_span(S, target, p):
    k = len(target)
    d = len(S)
    A = [[S[c][r] % p for c in range(d)] + [target[r] % p] for r in range(k)]
    piv = []
    row = 0
    for col in range(d):
        sel = None
        for r in range(row, k):
            if A[r][col]:
                sel = r
                break
        if sel is None:
            continue
        A[row], A[sel] = A[sel], A[row]
        inv = pow(A[row][col], p - 2, p)
        A[row] = [x * inv % p for x in A[row]]
        for r in range(k):
            if r != row and A[r][col]:
                f = A[r][col]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[row])]
        piv.append(col)
        row += 1
    for r in range(row, k):
        assert A[r][d] == 0, "vector not in span"
    out = [0] * d
    for r, col in enumerate(piv):
        out[col] = A[r][d]
    return out


def _eigenvalues(R, p):
    """Roots in F_p of det(R - x), by interpolation of the determinant."""
    d = len(R)
    if d == 1:
        return [R[0][0] % p]
    xs = list(range(d + 1))
    ys = []
    for x in xs:
        M = [[(R[r][c] - (x if r == c else 0)) % p for c in range(d)]
             for r in range(d)]
        ys.append(_fp_det(M, p))
    coeffs = _interpolate(xs, ys, p)
    roots = [lam for lam in range(p) if _horner(coeffs, lam, p) == 0]
    return roots


def _fp_det(M, p):
    d = len(M)
    M = [row[:] for row in M]
    det = 1
    for col in range(d):
        sel = None
        for r in range(col, d):
            if M[r][col]:
                sel = r
                break
        if sel is None:
            return 0
        if sel != col:
            M[col], M[sel] = M[sel], M[col]
            det = -det % p
        det = det * M[col][col] % p
        inv = pow(M[col][col], p - 2, p)
        for r in range(col + 1, d):
            if M[r][col]:
                f = M[r][col] * inv % p
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[col])]
    return det % p


def _interpolate(xs, ys, p):
    """Lagrange interpolation; returns coefficient list, low degree first."""
    n = len(xs)
    coeffs = [0] * n
    for i in range(n):
        # numerator polynomial prod_{j != i} (x - x_j)
        num = [1]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            num = _poly_mul(num, [(-xs[j]) % p, 1], p)
            denom = denom * (xs[i] - xs[j]) % p
        f = ys[i] * pow(denom, p - 2, p) % p
        for t, c in enumerate(num):
            coeffs[t] = (coeffs[t] + f * c) % p
    return coeffs


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _horner(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _restrict_check(B, S, R, p):
    k = len(B)
    for c, v in enumerate(S):
        Bv = [sum(B[r][t] * v[t] for t in range(k)) % p for r in range(k)]
        SR = [sum(S[j][r] * R[j][c] for j in range(len(S))) % p for r in range(k)]
        if Bv != SR:
            return False
    return True


def _kernel_basis(M, p):
    """Basis of the null space of M over F_p (rows of the output)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [row[:] for row in M]
    piv_of_col = {}
    r = 0
    for c in range(cols):
        sel = None
        for rr in range(r, rows):
            if A[rr][c]:
                sel = rr
                break
        if sel is None:
            continue
        A[r], A[sel] = A[sel], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv % p for x in A[r]]
        for rr in range(rows):
            if rr != r and A[rr][c]:
                f = A[rr][c]
                A[rr] = [(x - f * y) % p for x, y in zip(A[rr], A[r])]
        piv_of_col[c] = r
        r += 1
    free = [c for c in range(cols) if c not in piv_of_col]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for c, rr in piv_of_col.items():
            v[c] = (-A[rr][fc]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# verification


def _verify_table(tab):
    G = tab.group
    classes = tab.classes
    ident = tab._identity_col()
    degs = [row[ident].as_int() for row in tab.rows]
    assert sum(d * d for d in degs) == G.order, "degree sum check failed"
    invcls = [G.class_of(pinv(cl.rep)) for cl in classes]
    n = len(tab.rows)
    for i in range(n):
        for j in range(i, n):
            s = Cyc.rational(0)
            for l, cl in enumerate(classes):
                s = s + tab.rows[i][l] * tab.rows[j][invcls[l]] * cl.size
            expected = G.order if i == j else 0
            assert s == Cyc.rational(expected), (
                "orthogonality failed for rows %d,%d" % (i, j)
            )
