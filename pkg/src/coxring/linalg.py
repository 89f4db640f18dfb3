"""Exact rank over the rationals (row reduction with ``Fraction``)."""
from __future__ import annotations

from fractions import Fraction


def exact_rank(rows) -> int:
    """Rank of a list of equal-length rows of exact rationals."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def sparse_rank(vectors) -> int:
    """Rank of sparse vectors given as ``{key: coefficient}`` dicts."""
    pivots: dict = {}
    rank = 0
    for v in vectors:
        v = {k: Fraction(c) for k, c in v.items() if c}
        while v:
            k = max(v)
            if k not in pivots:
                pivots[k] = v
                rank += 1
                break
            p = pivots[k]
            f = v[k] / p[k]
            for key, c in p.items():
                nv = v.get(key, 0) - f * c
                if nv:
                    v[key] = nv
                else:
                    v.pop(key, None)
    return rank
