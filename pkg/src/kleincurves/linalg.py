"""Exact linear algebra over Q(i), plus a division-free determinant for rings."""
from itertools import combinations

from .field import ONE, ZERO, GaussianRational

__all__ = ["rref", "rank", "kernel_basis", "field_det", "solve_left_inverse", "ring_det", "primitive"]

_coerce = GaussianRational.coerce


def _as_field_matrix(M):
    return [[_coerce(x) for x in row] for row in M]


def rref(M):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    A = _as_field_matrix(M)
    if not A:
        return [], []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def rank(M):
    return len(rref(M)[1])


def kernel_basis(M, ncols=None):
    """Basis of the right null space {x : M x = 0}, one vector per free column.

    ``ncols`` is needed only when M has no rows.
    """
    if not M:
        n = ncols or 0
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    A, pivots = rref(M)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pc in zip(A, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def field_det(M):
    A = _as_field_matrix(M)
    n = len(A)
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c]
        inv = A[c][c].inverse()
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det


def solve_left_inverse(B):
    """A matrix L with L B = I for a full-column-rank matrix B (rows >= cols)."""
    B = _as_field_matrix(B)
    m, n = len(B), len(B[0])
    _, pivots = rref([list(col) for col in zip(*B)])
    rows = pivots  # pivot columns of B^T are independent rows of B
    if len(rows) != n:
        raise ValueError("matrix does not have full column rank")
    sub = [B[r] + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    R, _ = rref(sub)
    inv = [row[n:] for row in R]
    L = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for j, r in enumerate(rows):
            L[i][r] = inv[i][j]
    return L


def ring_det(M, zero=None):
    """Determinant over any commutative ring by expansion in column minors.

    Expands along successive rows while memoizing the minors indexed by the
    set of columns used, so the cost is O(n 2^n) ring operations and no
    division ever happens.
    """
    n = len(M)
    if n == 0:
        return ONE if zero is None else zero + 1
    if zero is None:
        zero = M[0][0] - M[0][0]
    prev = {(): None}
    for r in range(n):
        cur = {}
        for cols in combinations(range(n), r + 1):
            acc = zero
            for t, c in enumerate(cols):
                entry = M[r][c]
                if not entry:
                    continue
                rest = cols[:t] + cols[t + 1:]
                sub = prev[rest]
                term = entry if sub is None else entry * sub
                acc = acc + term if (r + t) % 2 == 0 else acc - term
            cur[cols] = acc
        prev = cur
    return prev[tuple(range(n))]


def primitive(vec):
    """Scale a vector over Q(i) to a canonical primitive representative.

    Rational vectors become primitive integer vectors whose first nonzero
    entry is positive; other vectors are scaled the same way on the
    concatenated real and imaginary parts.
    """
    from math import gcd, lcm

    vec = [_coerce(x) for x in vec]
    if not any(vec):
        return vec
    den = 1
    for x in vec:
        den = lcm(den, int(x.re.denominator), int(x.im.denominator))
    ints = [(int(x.re * den), int(x.im * den)) for x in vec]
    g = 0
    for a, b in ints:
        g = gcd(g, a, b)
    lead = next(x for x in vec if x)
    sign = 1 if (lead.re > 0 or (lead.re == 0 and lead.im > 0)) else -1
    return [GaussianRational(sign * a // g, sign * b // g) for a, b in ints]
