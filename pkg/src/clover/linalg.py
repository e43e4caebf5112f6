"""Exact integer linear algebra on lists of Python ints."""
from dataclasses import dataclass


@dataclass
class SmithForm:
    """``U @ A @ V = diag(diagonal)`` with ``V`` and its inverse kept.

    Only column operations are recorded; the quotient ``Z^m / rowspace(A)``
    is read off in the coordinates ``x @ V``.
    """

    diagonal: list
    V: list
    V_inv: list
    rows: int
    cols: int


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix, cols=None):
    A = [list(map(int, row)) for row in matrix]
    m = cols if cols is not None else (len(A[0]) if A else 0)
    r = len(A)
    V, Vi = identity(m), identity(m)

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if not q:
            return
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    def negate_col(i):
        for row in A:
            row[i] = -row[i]
        for row in V:
            row[i] = -row[i]
        Vi[i] = [-a for a in Vi[i]]

    diagonal = []
    t = 0
    while t < min(r, m):
        pivot = None
        for i in range(t, r):
            for j in range(t, m):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        if j != t:
            swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, r):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, m):
                q = A[t][j] // p
                if q:
                    add_col(j, t, -q)
                if A[t][j]:
                    dirty = True
            if dirty:
                best = None
                for i in range(t + 1, r):
                    if A[i][t] and (best is None or abs(A[i][t]) < abs(best[1])):
                        best = (("row", i), A[i][t])
                for j in range(t + 1, m):
                    if A[t][j] and (best is None or abs(A[t][j]) < abs(best[1])):
                        best = (("col", j), A[t][j])
                kind, idx = best[0]
                if kind == "row":
                    A[t], A[idx] = A[idx], A[t]
                else:
                    swap_cols(t, idx)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, r) for j in range(t + 1, m) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        if A[t][t] < 0:
            negate_col(t)
        diagonal.append(A[t][t])
        t += 1
    return SmithForm(diagonal, V, Vi, r, m)


def bareiss_rank(matrix):
    """Rank over Q by fraction-free Gaussian elimination."""
    A = [list(map(int, row)) for row in matrix]
    if not A:
        return 0
    r, m = len(A), len(A[0])
    rank, prev = 0, 1
    for col in range(m):
        piv = next((i for i in range(rank, r) if A[i][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(rank + 1, r):
            A[i] = [(A[rank][col] * A[i][j] - A[i][col] * A[rank][j]) // prev for j in range(m)]
        prev = A[rank][col]
        rank += 1
        if rank == r:
            break
    return rank


def vec_mat(x, M):
    if not M:
        return []
    return [sum(a * row[j] for a, row in zip(x, M)) for j in range(len(M[0]))]
