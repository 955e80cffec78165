"""Dense linear algebra over a FieldSpec on integer-encoded numpy arrays."""

from __future__ import annotations

import numpy as np

from .gf import FieldSpec


def rref(F: FieldSpec, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    M = np.array(A, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = F.vmul(F.inv(int(M[r, c])), M[r])
        others = np.nonzero(M[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = F.vneg(M[others, c])
            M[others] = F.vadd(M[others], F.vmul(factors[:, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: FieldSpec, A) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: FieldSpec, A, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0}."""
    A = np.asarray(A, dtype=np.int64)
    if n is None:
        n = A.shape[1]
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(piv):
            basis[i, pc] = F.neg(int(R[r, f]))
    return basis


def matmul(F: FieldSpec, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError("shape mismatch")
    if A.shape[0] == 0 or B.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if F.e == 1:
        return (A @ B) % F.p
    return F.vsum(F.vmul(A[:, :, None], B[None, :, :]), axis=1)


def systematic(F: FieldSpec, G, columns=None) -> tuple[np.ndarray, list[int]] | None:
    """
    Row-reduce ``G`` on the given column order; returns (M, pivots) with an
    identity on the pivot columns, or None if ``G`` loses rank.
    """
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    order = list(range(n)) if columns is None else list(columns)
    R, piv = rref(F, G[:, order])
    if len(piv) < k:
        return None
    M = np.zeros_like(R)
    M[:, order] = R
    return M, [order[c] for c in piv]
