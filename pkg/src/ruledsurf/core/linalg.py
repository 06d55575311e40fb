"""Dense linear algebra over Z/p (numpy int64, p small)."""

from __future__ import annotations

import numpy as np


def row_reduce(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A mod p and its pivot columns."""
    M = np.array(A, dtype=np.int64) % p
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
        col = M[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(col[nzr], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(row_reduce(A, p)[1])


def nullspace(A, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0 mod p}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1] if A.ndim == 2 and A.size else (ncols if ncols is not None else A.shape[-1])
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = row_reduce(A, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, c in enumerate(piv):
            basis[t, c] = (-R[i, f]) % p
    return basis


def independent_rows(A, p: int) -> list[int]:
    """Indices of a maximal set of linearly independent rows, greedy in order."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return []
    _, piv = row_reduce(A.T, p)
    return piv
