"""Toric ideals of affine semigroups.

The ideal ``I_B`` of the map ``x_i -> t^(b_i)`` is the saturation of the
lattice-basis ideal ``<x^(w+) - x^(w-) : w in a basis of ker>`` by the
product of all variables. Saturation is done one variable at a time: in a
weighted reverse lexicographic order with ``x_i`` cheapest, the Groebner
basis of a homogeneous ideal saturates by ``x_i`` after dividing every
element by the largest power of ``x_i`` it contains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import intlin
from .polyalg.field import QQ, Field
from .polyalg.groebner import Binomial, GroebnerBasis, binomial_groebner, binomial_reduce, binomials_to_basis
from .polyalg.orders import DEGREVLEX, Exp, MonomialOrder
from .semigroup import AffineSemigroup


def _split(w: Sequence[int]) -> tuple[Exp, Exp]:
    return tuple(max(x, 0) for x in w), tuple(max(-x, 0) for x in w)


def _divide_out(b: Binomial, i: int) -> Binomial:
    p, q = b
    k = p[i] if q is None else min(p[i], q[i])
    if not k:
        return b
    p = p[:i] + (p[i] - k,) + p[i + 1:]
    if q is not None:
        q = q[:i] + (q[i] - k,) + q[i + 1:]
    return (p, q)


def saturate_lattice_ideal(binomials: Sequence[Binomial], weights: Sequence[int]) -> list[Binomial]:
    """Saturate a homogeneous binomial ideal by the product of all variables.

    ``weights`` must be positive and make every binomial homogeneous.
    """
    n = len(weights)
    gens = list(binomials)
    for i in range(n):
        if not any(p[i] or (q is not None and q[i]) for p, q in gens):
            continue
        perm = tuple(j for j in range(n) if j != i) + (i,)
        order = MonomialOrder("wdegrevlex", perm, tuple(weights))
        gb = binomial_groebner(gens, order)
        gens = [_divide_out(b, i) for b in gb]
    return gens


@dataclass(frozen=True)
class ToricIdeal:
    """Reduced Groebner basis of ``I_B`` plus the lattice it comes from.

    ``binomials`` lists ``(u, v)`` for ``x^u - x^v`` with ``x^u`` leading.
    """

    semigroup: AffineSemigroup
    binomials: tuple[Binomial, ...]
    order: MonomialOrder
    lattice_kernel: tuple[tuple[int, ...], ...]

    @property
    def nvars(self) -> int:
        return len(self.semigroup.generators)

    @property
    def leading_monomials(self) -> list[Exp]:
        return [b[0] for b in self.binomials]

    def is_zero(self) -> bool:
        return not self.binomials

    def groebner(self, field: Field = QQ) -> GroebnerBasis:
        return binomials_to_basis(self.binomials, self.nvars, self.order, field)

    def contains_binomial(self, u: Sequence[int], v: Sequence[int]) -> bool:
        if tuple(u) == tuple(v):
            return True
        return binomial_reduce((tuple(u), tuple(v)), self.binomials, self.order) is None

    def contains_kernel_vector(self, w: Sequence[int]) -> bool:
        u, v = _split(w)
        return self.contains_binomial(u, v)


def toric_ideal(B: AffineSemigroup, order: MonomialOrder = DEGREVLEX) -> ToricIdeal:
    gens = B.generators
    K = intlin.kernel_basis(gens)
    if not K:
        return ToricIdeal(B, (), order, ())
    weights = tuple(sum(g) for g in gens)
    lattice = [_split(w) for w in K]
    sat = saturate_lattice_ideal(lattice, weights)
    gb = binomial_groebner(sat, order)
    return ToricIdeal(B, tuple(gb), order, tuple(tuple(w) for w in K))
