"""Hilbert series of monomial quotients in the standard grading."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .orders import Exp, minimalize


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _shift(a: list[int], k: int) -> list[int]:
    return [0] * k + a


@lru_cache(maxsize=4096)
def _numerator(gens: tuple[Exp, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return (0,)
    # pairwise coprime generators: product formula
    if all(sum(1 for x in g if x) == 1 for g in gens):
        support = {}
        for g in gens:
            i = next(j for j, x in enumerate(g) if x)
            support[i] = min(support.get(i, g[i]), g[i])
        out = [1]
        for d in support.values():
            out = _poly_sub(out, _shift(out, d))
        return tuple(out)
    last = gens[-1]
    rest = gens[:-1]
    colon = tuple(minimalize(tuple(max(a - b, 0) for a, b in zip(g, last)) for g in rest))
    out = _poly_sub(list(_numerator(rest)), _shift(list(_numerator(colon)), sum(last)))
    return tuple(out)


def hilbert_numerator(gens: Iterable[Sequence[int]], nvars: int) -> list[int]:
    """Coefficients of ``N(t)`` with ``HS(R/I) = N(t) / (1 - t)^nvars``."""
    mins = tuple(minimalize(gens))
    for g in mins:
        if len(g) != nvars:
            raise ValueError("exponent length does not match nvars")
    return list(_numerator(mins))


def _divide_one_minus_t(a: list[int]) -> list[int]:
    """Exact quotient ``a / (1 - t)``; requires ``a(1) == 0``."""
    out = []
    acc = 0
    for c in a[:-1]:
        acc += c
        out.append(acc)
    return out or [0]


def dimension_and_degree(numerator: Sequence[int], nvars: int) -> tuple[int, int]:
    """Krull dimension and degree of the quotient with the given numerator."""
    a = list(numerator)
    if not any(a):
        return -1, 0
    k = 0
    while sum(a) == 0:
        a = _divide_one_minus_t(a)
        k += 1
    return nvars - k, sum(a)


def hilbert_function(gens: Iterable[Sequence[int]], nvars: int, upto: int) -> list[int]:
    """``dim_K (R/I)_t`` for ``t = 0..upto`` from the numerator."""
    num = hilbert_numerator(gens, nvars)
    # coefficients of 1/(1-t)^n are binomial(t + n - 1, n - 1)
    out = []
    for t in range(upto + 1):
        s = 0
        for i, c in enumerate(num):
            if i <= t and c:
                s += c * (comb(t - i + nvars - 1, nvars - 1) if nvars else int(t == i))
        out.append(s)
    return out
