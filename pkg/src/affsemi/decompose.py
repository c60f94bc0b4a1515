"""Decomposition of ``K[B]`` into shifted monomial ideals over ``K[A]``.

For ``C(A) = C(B)`` the set ``B_A`` of elements of ``B`` not in
``B + (A minus 0)`` is finite and generates ``K[B]`` as a ``K[A]``-module.
Splitting ``B_A`` by classes of ``G(B)/G(A)`` gives

    K[B] = direct sum over g of I_g(-h_g),

where ``I_g`` is the monomial ideal of ``K[A]`` generated by
``t^(v - h_g)`` for ``v`` in the class ``Gamma_g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import intlin
from .errors import ConeMismatch, ContainmentViolation
from .intlin import QuotientGroup
from .polyalg.betti import SemigroupModule
from .polyalg.groebner import binomial_groebner, standard_monomials
from .semigroup import AffineSemigroup, cones_equal
from .toric import toric_ideal

Vector = tuple[int, ...]


def _glex(v: Sequence[int]) -> tuple:
    return (sum(v), tuple(v))


def _check_pair(A: AffineSemigroup, B: AffineSemigroup) -> None:
    if A.ambient_dim != B.ambient_dim:
        raise ConeMismatch("A and B live in different ambient spaces")
    for a in A.generators:
        if not B.member(a):
            raise ContainmentViolation(f"generator {a} of A is not in B")
    if not cones_equal(A, B):
        raise ConeMismatch("C(A) != C(B): B is not finitely generated over A")


def _bfs_module_generators(A: AffineSemigroup, B: AffineSemigroup) -> list[Vector]:
    # B_A is closed under predecessors in B, so it grows from 0
    def minimal(x):
        return not any(B.member(tuple(p - q for p, q in zip(x, a))) for a in A.generators)

    zero = (0,) * B.ambient_dim
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for b in B.generators:
                y = tuple(p + q for p, q in zip(x, b))
                if y not in seen and minimal(y):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=_glex)


def _groebner_module_generators(A: AffineSemigroup, B: AffineSemigroup) -> list[Vector]:
    T = toric_ideal(B)
    n = len(B.generators)
    pulls = [(B.express(a), None) for a in A.generators]
    gb = binomial_groebner(list(T.binomials) + pulls, T.order)
    std = standard_monomials([b[0] for b in gb], n)
    out = {intlin.vecmat(e, B.generators, B.ambient_dim) for e in std}
    if len(out) != len(std):
        raise AssertionError("standard monomials map to coinciding elements")
    return sorted(out, key=_glex)


def module_generators(A: AffineSemigroup, B: AffineSemigroup, method: str = "groebner") -> list[Vector]:
    """The minimal generators ``B_A`` of ``K[B]`` over ``K[A]``.

    ``method="groebner"`` reads them off the standard monomials of
    ``I_B + <x^u : t^u = a generator of A>``; ``method="bfs"`` searches ``B``
    with the membership oracle. Both return the list sorted by coordinate
    sum, then lexicographically.
    """
    _check_pair(A, B)
    if method == "groebner":
        return _groebner_module_generators(A, B)
    if method == "bfs":
        return _bfs_module_generators(A, B)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class DecompositionComponent:
    """One summand ``I_g(-h_g)``.

    ``ideal_vectors`` are the generators ``v - h_g`` of ``I_g`` inside
    ``G(A)``; ``ideal_exponents`` are the same generators as monomials in the
    variables of ``K[A]`` (the chosen coefficient vectors ``c_v - cbar``).
    """

    class_label: Vector
    gamma: tuple[Vector, ...]
    representative: Vector
    coefficients: tuple[Vector, ...]
    cbar: Vector
    shift: Vector
    ideal_vectors: tuple[Vector, ...]
    ideal_exponents: tuple[Vector, ...]

    @property
    def is_unit(self) -> bool:
        return any(not any(e) for e in self.ideal_exponents)

    def as_module(self, A: AffineSemigroup, degree, degree_bound: int) -> SemigroupModule:
        """``I_g`` as a module over the polynomial ring on the generators of ``A``."""
        return SemigroupModule(
            var_degrees=A.generators,
            generators=self.ideal_vectors,
            degree=degree,
            degree_bound=degree_bound,
            label=f"I_{self.class_label}",
        )


@dataclass(frozen=True)
class Decomposition:
    base: AffineSemigroup
    total: AffineSemigroup
    quotient: QuotientGroup
    components: tuple[DecompositionComponent, ...]
    module_generators: tuple[Vector, ...]

    @property
    def free_base(self) -> bool:
        return intlin.rank(self.base.generators) == len(self.base.generators)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def component(self, label: Sequence[int]) -> DecompositionComponent:
        label = tuple(label)
        for c in self.components:
            if c.class_label == label:
                return c
        raise KeyError(label)

    @property
    def shifts(self) -> list[Vector]:
        return [c.shift for c in self.components]


def _component(label: Vector, gamma: list[Vector], Amat: Sequence[Vector]) -> DecompositionComponent:
    gamma = sorted(gamma, key=_glex)
    rep = gamma[0]
    m = len(rep)
    coeffs = []
    for v in gamma:
        c = intlin.solve_integral(Amat, tuple(a - b for a, b in zip(v, rep)))
        if c is None:
            raise AssertionError(f"{v} and {rep} differ by a vector outside G(A)")
        coeffs.append(c)
    cbar = tuple(min(col) for col in zip(*coeffs))
    base = intlin.vecmat(cbar, Amat, m)
    shift = tuple(a + b for a, b in zip(rep, base))
    vecs = tuple(tuple(a - b for a, b in zip(v, shift)) for v in gamma)
    exps = tuple(tuple(a - b for a, b in zip(c, cbar)) for c in coeffs)
    return DecompositionComponent(label, tuple(gamma), rep, tuple(coeffs), cbar, shift, vecs, exps)


def decompose(
    A: AffineSemigroup, B: AffineSemigroup, verify_hilbert: bool = False, method: str = "groebner"
) -> Decomposition:
    """Decompose ``K[B]`` over ``K[A]``; components are sorted by class label."""
    if verify_hilbert:
        A.verify_hilbert_basis()
        B.verify_hilbert_basis()
    BA = module_generators(A, B, method)
    Q = intlin.snf_quotient(A.generators, B.generators)
    classes: dict[Vector, list[Vector]] = {}
    for v in BA:
        classes.setdefault(Q.project(v), []).append(v)
    if Q.order is not None and len(classes) != Q.order:
        raise AssertionError("some class of G(B)/G(A) has no module generator")
    comps = tuple(_component(lab, classes[lab], A.generators) for lab in sorted(classes))
    return Decomposition(A, B, Q, comps, tuple(BA))


def _levels(starts: Sequence[Vector], steps: Sequence[Vector], degree, max_degree: int) -> dict[int, set[Vector]]:
    seen = {s for s in starts if degree(s) <= max_degree}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for e in steps:
                y = tuple(a + b for a, b in zip(x, e))
                if y not in seen and degree(y) <= max_degree:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    out: dict[int, set[Vector]] = {}
    for x in seen:
        out.setdefault(degree(x), set()).add(x)
    return out


def hilbert_identity(D: Decomposition, max_degree: int = 10) -> list[tuple[int, int, int]]:
    """``(t, #B_t, sum_g #(I_g)_(t - deg h_g))`` for ``t = 0..max_degree``.

    Left counts come from enumerating ``B``, right counts from the summands
    ``(Gamma_g - h_g) + A``; they agree iff the decomposition is a direct sum
    in every degree up to ``max_degree``.
    """
    B, A = D.total, D.base
    if B.degree is None:
        raise ValueError("the identity needs a homogeneous semigroup")
    deg = B.degree.integral
    lhs = [len(level) for level in B.elements_by_degree(max_degree)]
    rhs = [0] * (max_degree + 1)
    for c in D:
        h = deg(c.shift)
        levels = _levels(c.ideal_vectors, A.generators, deg, max_degree - h)
        for s, elems in levels.items():
            if 0 <= s + h <= max_degree:
                rhs[s + h] += len(elems)
    return [(t, lhs[t], rhs[t]) for t in range(max_degree + 1)]
