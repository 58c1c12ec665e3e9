"""Integer lattices: Hermite normal form, kernels, Smith form, solving.

Conventions used throughout the package:
  * lattice bases are stored as ROWS of an integer matrix;
  * the canonical basis is the row-style HNF with positive pivots and
    the entries above each pivot reduced into [0, pivot);
  * for a full-rank lattice the HNF determinant equals the index and is
    positive, which is what "oriented basis" means here.
"""

from __future__ import annotations

from fractions import Fraction


class InfiniteQuotient(ValueError):
    """The kernel has rank below the ambient rank."""


class SingularDiagonal(ValueError):
    pass


def hnf(rows):
    """Row-style Hermite normal form; zero rows are dropped.

    Returns a list of rows.  Pure integer row operations, so the row
    span over Z is preserved exactly.
    """
    A = [list(r) for r in rows]
    if not A:
        return []
    m, n = len(A), len(A[0])
    r = 0
    for col in range(n):
        if r == m:
            break
        # clear column col below row r by gcd chaining
        while True:
            piv, best = None, None
            for i in range(r, m):
                v = abs(A[i][col])
                if v and (best is None or v < best):
                    piv, best = i, v
            if piv is None:
                break
            A[r], A[piv] = A[piv], A[r]
            if A[r][col] < 0:
                A[r] = [-x for x in A[r]]
            done = True
            for i in range(r + 1, m):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][col]:
                        done = False
            if done:
                break
        if piv is None:
            continue
        for i in range(r):
            q = A[i][col] // A[r][col]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return [row for row in A[:r] if any(row)]


def integer_kernel(A):
    """HNF basis of { v in Z^m : v*A = 0 } for an m x n integer matrix."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    # Stack [A | I] and HNF: pivots land in the A block first, so the
    # kernel rows are exactly those whose A-part vanished.
    stacked = [list(A[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    H = hnf(stacked)
    out = [row[n:] for row in H if not any(row[:n])]
    return hnf(out)


class IntegerLattice:
    """A sublattice of Z^n given by its canonical HNF row basis."""

    __slots__ = ("ambient", "basis", "index", "orientation")

    def __init__(self, ambient, rows):
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in hnf(rows))
        if len(self.basis) == ambient:
            det = 1
            for i in range(ambient):
                det *= self.basis[i][_pivot(self.basis[i])]
            self.index = det
            self.orientation = 1  # HNF pivots are positive by construction
        else:
            self.index = None
            self.orientation = None

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, vec):
        v = list(vec)
        for row in self.basis:
            p = _pivot(row)
            if v[p] % row[p] == 0:
                q = v[p] // row[p]
                v = [x - q * y for x, y in zip(v, row)]
        return not any(v)

    def __eq__(self, other):
        return (
            isinstance(other, IntegerLattice)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "IntegerLattice(%d, %r)" % (self.ambient, list(self.basis))


def _pivot(row):
    for j, x in enumerate(row):
        if x:
            return j
    raise ValueError("zero row")


def hnf_kernel(alpha, moduli):
    """Kernel lattice of v -> v*alpha taken modulo the given moduli.

    alpha is an n x m integer matrix presenting a map Z^n -> Z/m_1 x ...
    x Z/m_m.  The kernel must have full rank n (finite quotient), else
    InfiniteQuotient is raised.  Returns an IntegerLattice whose index
    equals the order of the image subgroup.
    """
    n = len(alpha)
    if n == 0:
        return IntegerLattice(0, [])
    m = len(alpha[0])
    if len(moduli) != m:
        raise ValueError("moduli length mismatch")
    if any(md <= 0 for md in moduli):
        raise InfiniteQuotient("nonpositive modulus entails infinite quotient")
    stacked = [list(alpha[i]) for i in range(n)]
    for j in range(m):
        stacked.append([moduli[j] if k == j else 0 for k in range(m)])
    ker = integer_kernel(stacked)
    rows = [row[:n] for row in ker if any(row[:n])]
    lat = IntegerLattice(n, rows)
    if lat.rank < n:
        raise InfiniteQuotient("kernel rank %d < ambient %d" % (lat.rank, n))
    return lat


def solve_unitriangular(M, v):
    """Solve Mx = v for lower-triangular M with nonzero diagonal, exactly."""
    n = len(M)
    x = [Fraction(0)] * n
    for i in range(n):
        if M[i][i] == 0:
            raise SingularDiagonal("zero diagonal at %d" % i)
        acc = Fraction(v[i])
        for j in range(i):
            acc -= Fraction(M[i][j]) * x[j]
        x[i] = acc / Fraction(M[i][i])
    return x


def smith_normal_form(rows):
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns (diag, U, V) with U*A*V = diag(d_i) padded by zeros, U and V
    unimodular.  Straightforward reduction; fine at the tiny sizes used
    for quotient labels.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def addmul_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # find a nonzero entry in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j]:
                    if piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        again = True
        while again:
            again = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    addmul_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(i, t)
                        again = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    addmul_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(j, t)
                        again = True
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        # divisibility fixup: fold in any entry the pivot does not divide
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            addmul_row(t, bad, 1)
            continue
        t += 1
    diag = [A[i][i] for i in range(min(m, n)) if A[i][i]]
    return diag, U, V


def quotient_label(lattice):
    """Canonical surjection Z^n ->> Z^n / L as (matrix, moduli).

    The matrix columns are read against the moduli: v maps to
    (v * matrix) mod moduli componentwise.  Kernel is exactly L.
    """
    n = lattice.ambient
    B = [list(r) for r in lattice.basis]
    diag, U, V = smith_normal_form(B)
    # keep only the noninvertible quotient factors
    cols = [j for j, d in enumerate(diag) if d != 1]
    matrix = [[V[i][j] for j in cols] for i in range(n)]
    moduli = [diag[j] for j in cols]
    if not cols:
        matrix = [[] for _ in range(n)]
    return matrix, moduli


def sublattices_of_index(n, k):
    """All sublattices of Z^n of index k, as IntegerLattice values.

    Enumerated through upper-triangular HNF matrices: positive diagonal
    with product k, off-diagonal column entries reduced mod the pivot.
    """
    out = []

    def diag_splits(rem, length):
        if length == 1:
            yield (rem,)
            return
        for d in range(1, rem + 1):
            if rem % d == 0:
                for rest in diag_splits(rem // d, length - 1):
                    yield (d,) + rest

    def fill(diag):
        # rows[i][i] = diag[i]; free entries rows[j][i] for j < i in [0, diag[i])
        mats = [[[0] * n for _ in range(n)]]
        for i in range(n):
            for M in mats:
                M[i][i] = diag[i]
        for i in range(n):
            for j in range(i):
                nxt = []
                for M in mats:
                    for v in range(diag[i]):
                        M2 = [row[:] for row in M]
                        M2[j][i] = v
                        nxt.append(M2)
                mats = nxt
        return mats

    for diag in diag_splits(k, n):
        for M in fill(diag):
            out.append(IntegerLattice(n, M))
    return out


def gl_generators(n):
    """A standard generating set of GL_n(Z) as row matrices."""
    gens = []
    if n == 0:
        return gens
    neg = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    neg[0][0] = -1
    gens.append(neg)
    if n == 1:
        return gens
    cyc = [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)]
    gens.append(cyc)
    swap = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    swap[0][0] = swap[1][1] = 0
    swap[0][1] = swap[1][0] = 1
    gens.append(swap)
    trans = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    trans[0][1] = 1
    gens.append(trans)
    return gens


def sl_generators(n):
    """Elementary transvections E_ij(1), generating SL_n(Z) for n >= 2."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            M = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            M[i][j] = 1
            gens.append(M)
    return gens


def int_det(A):
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(A)
    if n == 0:
        return 1
    M = [[int(x) for x in row] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def mat_mul(A, B):
    rows = len(A)
    inner = len(B)
    cols = len(B[0]) if inner else 0
    return [
        [sum(A[i][t] * B[t][j] for t in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]
