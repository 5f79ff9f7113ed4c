"""Exact linear algebra over prime fields GF(p)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["FieldSpec", "DEFAULT_FIELD", "gf_rank"]


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid far beyond 2^31
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p) with p small enough for int64 arithmetic."""

    p: int = 32003

    def __post_init__(self) -> None:
        if not 2 <= self.p < 2**31:
            raise ValueError(f"characteristic out of range: {self.p}")
        if not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime: {self.p}")


DEFAULT_FIELD = FieldSpec(32003)


def gf_rank(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by Gaussian elimination.

    Row-reduces a working copy in int64; p < 2^31 keeps every product of
    residues inside int64.
    """
    if matrix.size == 0:
        return 0
    a = np.mod(np.asarray(matrix, dtype=np.int64), p)
    rows, cols = a.shape
    if rows < cols:
        a = a.T.copy()
        rows, cols = cols, rows
    rank = 0
    for c in range(cols):
        sub = a[rank:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank, c:] = a[rank, c:] * inv % p
        col = a[rank + 1 :, c]
        hot = np.nonzero(col)[0]
        if hot.size:
            block = a[rank + 1 :, c:]
            block[hot] = (block[hot] - np.outer(col[hot], a[rank, c:])) % p
        rank += 1
        if rank == rows:
            break
    return rank
