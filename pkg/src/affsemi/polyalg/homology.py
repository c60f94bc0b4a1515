"""Reduced simplicial homology over Q or F_p."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..kernels import rank_mod_p, rank_q
from .field import Field


def matrix_rank(rows: Sequence[Sequence[int]], ncols: int, field: Field) -> int:
    if not rows or not ncols:
        return 0
    if field.characteristic:
        return rank_mod_p(rows, ncols, field.characteristic)
    return rank_q(rows, ncols)


def reduced_homology(faces: Iterable[Sequence[int]], field: Field) -> dict[int, int]:
    """Ranks of reduced homology ``{dim: rank}`` of a simplicial complex.

    ``faces`` must be closed under taking subsets and include the empty face
    unless the complex is void (then all homology vanishes).
    """
    by_size: dict[int, list[tuple]] = {}
    for f in faces:
        f = tuple(sorted(f))
        by_size.setdefault(len(f), []).append(f)
    if not by_size:
        return {}
    for v in by_size.values():
        v.sort()
    top = max(by_size)
    index = {k: {f: i for i, f in enumerate(v)} for k, v in by_size.items()}
    ranks = {}
    for k in range(1, top + 1):
        src = by_size.get(k, [])
        dst = index.get(k - 1, {})
        rows = []
        for f in src:
            row = [0] * len(dst)
            for pos in range(k):
                g = f[:pos] + f[pos + 1:]
                row[dst[g]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[k] = matrix_rank(rows, len(dst), field)
    out = {}
    for k in range(0, top + 1):
        n = len(by_size.get(k, []))
        h = n - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k - 1] = h
    return out
