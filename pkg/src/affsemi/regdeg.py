"""Regularity, degree and codimension of homogeneous semigroup rings.

``reg K[B] = max_g (reg I_g + deg h_g)`` over the decomposition of ``K[B]``
over ``K[A]``, ``A`` generated by the extremal generators of ``B``, and
``deg K[B] = #G * deg K[A]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from . import intlin
from .decompose import Decomposition, decompose
from .errors import NotHomogeneous, OracleMismatch
from .polyalg.betti import (
    BettiTable,
    SemigroupModule,
    minimal_resolution,
    monomial_betti,
    quotient_betti,
    quotient_betti_bound,
    two_variable_regularity,
)
from .polyalg.field import QQ, Field
from .polyalg.groebner import binomial_groebner
from .polyalg.hilbert import dimension_and_degree, hilbert_numerator
from .semigroup import AffineSemigroup
from .toric import toric_ideal

PATHS = ("auto", "free", "plane", "generic")


@dataclass
class RegularityResult:
    reg: int
    per_class: dict[tuple[int, ...], tuple[int, int]]
    degree: int
    codim: int
    dim: int
    path: str
    field: Field = QQ
    betti: dict[tuple[int, ...], BettiTable] = dc_field(default_factory=dict, repr=False)


def _base(B: AffineSemigroup, base: AffineSemigroup | None) -> AffineSemigroup:
    if B.degree is None:
        raise NotHomogeneous("the generators do not lie on a common hyperplane")
    A = base if base is not None else AffineSemigroup(B.extremal_generators())
    for a in A.generators:
        if B.degree(a) != 1:
            raise NotHomogeneous(f"base generator {a} does not have degree 1")
    return A


def _generic_bound(D: Decomposition, comp) -> int:
    """Degree bound for the Betti numbers of ``I_g`` over ``T = K[y_1..y_d]``.

    ``0 -> I_g -> K[A] -> K[A]/I_g -> 0`` bounds them by those of
    ``T/I_A`` and ``T/(I_A + J_g)``, and each of these by the Betti degrees
    of its initial ideal.
    """
    A = D.base
    d = len(A.generators)
    IA = toric_ideal(A)
    b1 = quotient_betti_bound(IA.leading_monomials, d) if IA.binomials else 0
    J = binomial_groebner(list(IA.binomials) + [(e, None) for e in comp.ideal_exponents], IA.order)
    b2 = quotient_betti_bound([g[0] for g in J], d)
    return max(b1, b2, 0)


def class_regularity(D: Decomposition, comp, field: Field = QQ, path: str = "auto") -> tuple[int, BettiTable | None]:
    """``reg I_g`` for one component, by the requested path."""
    A = D.base
    d = len(A.generators)
    deg = D.total.degree
    if path == "auto":
        path = "free" if D.free_base else "generic"
    if path in ("free", "plane") and not D.free_base:
        raise ValueError(f"path {path!r} needs linearly independent base generators")
    if path == "plane":
        if d != 2:
            raise ValueError("the plane path needs two base generators")
        return two_variable_regularity(comp.ideal_exponents), None
    if path == "free":
        t = monomial_betti(comp.ideal_exponents, d, field, method="koszul")
        return t.regularity, t
    if path == "generic":
        M: SemigroupModule = comp.as_module(A, deg.integral, _generic_bound(D, comp) + 1)
        t = minimal_resolution(M, field)
        return t.regularity, t
    raise ValueError(f"unknown path {path!r}")


def degree_codim(B: AffineSemigroup, base: AffineSemigroup | None = None, decomposition: Decomposition | None = None) -> tuple[int, int, int]:
    """``(degree, codim, dim)`` of ``K[B]``."""
    A = _base(B, base)
    dim = B.rank
    codim = len(B.generators) - dim
    order = intlin.snf_quotient(A.generators, B.generators).order
    if decomposition is not None:
        order = len(decomposition.components)
    IA = toric_ideal(A)
    dA = len(A.generators)
    _, degA = dimension_and_degree(hilbert_numerator(IA.leading_monomials, dA), dA)
    return order * degA, codim, dim


def hilbert_degree(B: AffineSemigroup) -> int:
    """Degree of ``R/in(I_B)`` from its Hilbert series."""
    T = toric_ideal(B)
    n = len(B.generators)
    return dimension_and_degree(hilbert_numerator(T.leading_monomials, n), n)[1]


def regularity(
    B: AffineSemigroup, field: Field = QQ, path: str = "auto", base: AffineSemigroup | None = None
) -> RegularityResult:
    """Castelnuovo-Mumford regularity of ``K[B]`` through the decomposition.

    ``path`` is ``"free"`` (lcm-lattice Betti numbers of monomial ideals,
    needs a free base), ``"plane"`` (the two-variable formula), ``"generic"``
    (Koszul homology of ``I_g`` as a module over the polynomial ring on the
    base generators) or ``"auto"``.
    """
    if path not in PATHS:
        raise ValueError(f"unknown path {path!r}")
    A = _base(B, base)
    D = decompose(A, B)
    deg = B.degree
    per_class = {}
    tables = {}
    used = path
    if path == "auto":
        used = "free" if D.free_base else "generic"
    for comp in D:
        r, t = class_regularity(D, comp, field, used)
        per_class[comp.class_label] = (r, deg.integral(comp.shift))
        if t is not None:
            tables[comp.class_label] = t
    reg = max(r + h for r, h in per_class.values())
    degree, codim, dim = degree_codim(B, A, D)
    return RegularityResult(reg, per_class, degree, codim, dim, used, field, tables)


def direct_betti(B: AffineSemigroup, field: Field = QQ, method: str = "groebner") -> BettiTable:
    """Betti table of ``K[B] = R/I_B`` over ``R = K[x_1..x_n]``, without the decomposition.

    ``method="groebner"`` takes Koszul homology of ``R/I_B`` through normal
    forms modulo the Groebner basis of ``I_B``; ``method="semigroup"`` uses
    the squarefree divisor complexes ``{S : a - sum_S b_i in B}``.
    """
    if B.degree is None:
        raise NotHomogeneous("the generators do not lie on a common hyperplane")
    T = toric_ideal(B)
    n = len(B.generators)
    bound = quotient_betti_bound(T.leading_monomials, n) if T.binomials else 0
    if method == "groebner":
        return quotient_betti(T.groebner(field), bound, grading=B.generators)
    if method == "semigroup":
        M = SemigroupModule(B.generators, ((0,) * B.ambient_dim,), B.degree.integral, bound, "K[B]")
        return minimal_resolution(M, field)
    raise ValueError(f"unknown method {method!r}")


def direct_regularity(B: AffineSemigroup, field: Field = QQ, method: str = "groebner") -> int:
    return direct_betti(B, field, method).regularity


def check_regularity(B: AffineSemigroup, field: Field = QQ, method: str = "groebner") -> RegularityResult:
    """:func:`regularity` cross-checked against :func:`direct_regularity`."""
    res = regularity(B, field)
    other = direct_regularity(B, field, method)
    if other != res.reg:
        raise OracleMismatch(f"decomposition gives reg {res.reg}, direct resolution gives {other}")
    if hilbert_degree(B) != res.degree:
        raise OracleMismatch("degree from the decomposition differs from the Hilbert series")
    return res
