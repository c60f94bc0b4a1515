"""Ring-theoretic properties of simplicial semigroup rings.

All tests read the decomposition of ``K[B]`` over the polynomial ring on the
extremal generators of ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import intlin
from .decompose import Decomposition, decompose
from .errors import NotSimplicial
from .polyalg.betti import monomial_betti
from .polyalg.field import QQ
from .polyalg.orders import minimalize
from .semigroup import AffineSemigroup

Vector = tuple[int, ...]


@dataclass
class PropertyReport:
    dim: int
    depth: int
    cohen_macaulay: bool
    gorenstein: bool
    buchsbaum: bool
    normal: bool
    seminormal: bool
    witnesses: dict[str, dict] = field(default_factory=dict)

    def implications_hold(self) -> bool:
        ok = True
        if self.cohen_macaulay:
            ok &= self.buchsbaum and self.depth == self.dim
        if self.buchsbaum:
            ok &= self.depth >= min(1, self.dim)
        if self.gorenstein:
            ok &= self.cohen_macaulay
        if self.normal:
            ok &= self.seminormal
        if self.seminormal and self.buchsbaum:
            ok &= self.cohen_macaulay
        return ok

    def flags(self) -> dict[str, bool]:
        return {
            "cohen_macaulay": self.cohen_macaulay,
            "gorenstein": self.gorenstein,
            "buchsbaum": self.buchsbaum,
            "normal": self.normal,
            "seminormal": self.seminormal,
        }


def lambda_coordinates(x: Sequence[int], base: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Rational ``lam`` with ``x = sum lam_i base_i`` (base linearly independent)."""
    lam = intlin.rational_solve(base, x)
    if lam is None:
        raise AssertionError(f"{tuple(x)} is outside the span of the base")
    return lam


def _ideal_depth(exps: Sequence[Vector], d: int) -> int:
    gens = minimalize(exps)
    if any(not any(g) for g in gens):
        return d
    return monomial_betti(gens, d, QQ, method="koszul").depth(d)


def _maximal_shifts(B: AffineSemigroup, shifts: Sequence[Vector]) -> list[Vector]:
    def below(x, y):  # x <= y in the order induced by B
        return x != y and B.member(tuple(b - a for a, b in zip(x, y)))

    return [y for y in shifts if not any(below(y, z) for z in shifts)]


def ring_properties(B: AffineSemigroup, decomposition: Decomposition | None = None) -> PropertyReport:
    if not B.simplicial:
        raise NotSimplicial("B is not simplicial")
    D = decomposition
    if D is None:
        D = decompose(AffineSemigroup(B.extremal_generators()), B)
    base = D.base.generators
    d = len(base)
    unit_vectors = {tuple(int(i == j) for j in range(d)) for i in range(d)}
    wit: dict[str, dict] = {}

    depths = {c.class_label: _ideal_depth(c.ideal_exponents, d) for c in D}
    depth = min(depths.values())
    low = min(depths, key=lambda k: (depths[k], k))
    proper = [c for c in D if not c.is_unit]
    cm = not proper
    if proper:
        wit["depth"] = {"class": list(low), "depth": depth}
        wit["cohen_macaulay"] = {"class": list(proper[0].class_label), "ideal": [list(e) for e in proper[0].ideal_exponents]}

    shifts = [c.shift for c in D]
    if cm:
        tops = _maximal_shifts(B, shifts)
        gor = len(tops) == 1
        wit["gorenstein"] = {"maximal_shifts": [list(t) for t in tops]}
    else:
        gor = False
        wit["gorenstein"] = {"reason": "not Cohen-Macaulay"}

    buchs = True
    for c in proper:
        gens = set(minimalize(c.ideal_exponents))
        if gens != unit_vectors:
            buchs = False
            wit["buchsbaum"] = {"class": list(c.class_label), "ideal": sorted(list(g) for g in gens)}
            break
        bad = next(
            (b for b in B.generators if not B.member(tuple(x + y for x, y in zip(c.shift, b)))), None
        )
        if bad is not None:
            buchs = False
            wit["buchsbaum"] = {"class": list(c.class_label), "shift": list(c.shift), "generator": list(bad)}
            break

    normal = seminormal = True
    for x in D.module_generators:
        lam = lambda_coordinates(x, base)
        if seminormal and any(v < 0 or v > 1 for v in lam):
            seminormal = False
            wit["seminormal"] = {"element": list(x), "lambda": [str(v) for v in lam]}
        if normal and any(v < 0 or v >= 1 for v in lam):
            normal = False
            wit["normal"] = {"element": list(x), "lambda": [str(v) for v in lam]}
    return PropertyReport(d, depth, cm, gor, buchs, normal, seminormal, wit)
