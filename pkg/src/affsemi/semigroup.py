"""Positive affine semigroups in N^m given by generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import intlin
from .errors import AmbiguousExtremalRay, DegenerateInput, NonHilbert

Vector = tuple[int, ...]


def in_cone(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Exact test of ``v`` in the rational cone spanned by ``gens``.

    Phase one of the simplex method over Q with Bland's rule on the system
    ``sum_i lam_i g_i = v``, ``lam >= 0``.
    """
    m = len(v)
    k = len(gens)
    if not any(v):
        return True
    if k == 0:
        return False
    # rows: one equation per coordinate; columns: k lambdas, m artificials, rhs
    T = []
    for j in range(m):
        sign = -1 if v[j] < 0 else 1
        row = [Fraction(sign * g[j]) for g in gens]
        row += [Fraction(int(i == j)) for i in range(m)]
        row.append(Fraction(sign * v[j]))
        T.append(row)
    basis = [k + j for j in range(m)]
    # objective: minimize sum of artificials -> reduced costs
    while True:
        art_rows = [r for r in range(m) if basis[r] >= k]
        if not art_rows:
            break
        enter = None
        for c in range(k):
            if c not in basis and sum(T[r][c] for r in art_rows) > 0:
                enter = c
                break
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = T[r][enter]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            break
        piv = T[leave][enter]
        T[leave] = [a / piv for a in T[leave]]
        for r in range(m):
            if r != leave and T[r][enter] != 0:
                f = T[r][enter]
                T[r] = [a - f * b for a, b in zip(T[r], T[leave])]
        basis[leave] = enter
    infeas = sum(T[r][-1] for r in range(m) if basis[r] >= k)
    return infeas == 0


@dataclass(frozen=True)
class DegreeFunctional:
    """``deg(t) = (normal . t) / scale``."""

    normal: Vector
    scale: int

    def __call__(self, v: Sequence[int]) -> Fraction:
        return Fraction(sum(a * b for a, b in zip(self.normal, v)), self.scale)

    def integral(self, v: Sequence[int]) -> int:
        d = self(v)
        if d.denominator != 1:
            raise ValueError(f"{tuple(v)} has non-integral degree {d}")
        return d.numerator


class AffineSemigroup:
    """The semigroup generated by a list of nonzero vectors in N^m.

    Generators are kept in the given order; they are treated as the Hilbert
    basis. Pass ``check_hilbert=True`` to verify they are minimal.
    """

    def __init__(self, generators: Iterable[Sequence[int]], check_hilbert: bool = False):
        gens = tuple(tuple(int(a) for a in g) for g in generators)
        if not gens:
            raise DegenerateInput("a semigroup needs at least one generator")
        m = len(gens[0])
        seen = set()
        for g in gens:
            if len(g) != m:
                raise DegenerateInput("generators have different lengths")
            if any(a < 0 for a in g):
                raise DegenerateInput(f"generator {g} has a negative coordinate")
            if not any(g):
                raise DegenerateInput("zero generator")
            if g in seen:
                raise DegenerateInput(f"duplicate generator {g}")
            seen.add(g)
        self.generators: tuple[Vector, ...] = gens
        self.ambient_dim = m
        self.rank = intlin.rank(gens)
        self._member_cache: dict[Vector, bool] = {}
        self._witness: dict[Vector, int] = {}
        self.extremal_indices = self._extremal()
        ext = [gens[i] for i in self.extremal_indices]
        self.simplicial = len(ext) == self.rank and intlin.rank(ext) == self.rank
        self.degree = _grading(gens)
        if check_hilbert:
            self.verify_hilbert_basis()

    # basic protocol

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, AffineSemigroup) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"AffineSemigroup({[list(g) for g in self.generators]})"

    @property
    def homogeneous(self) -> bool:
        return self.degree is not None

    def sorted_key(self) -> tuple[Vector, ...]:
        return tuple(sorted(self.generators))

    # geometry

    def _extremal(self) -> tuple[int, ...]:
        gens = self.generators
        keep = []
        for i, g in enumerate(gens):
            others = gens[:i] + gens[i + 1:]
            if not in_cone(g, others):
                keep.append(i)
        ext = [gens[i] for i in keep]
        if not all(in_cone(g, ext) for g in gens):
            # two generators on one ray shadow each other
            raise AmbiguousExtremalRay("several generators span a common extremal ray")
        return tuple(keep)

    def extremal_generators(self) -> tuple[Vector, ...]:
        return tuple(self.generators[i] for i in self.extremal_indices)

    def contains_cone_of(self, other: "AffineSemigroup") -> bool:
        return all(in_cone(g, self.generators) for g in other.generators)

    # membership

    def member(self, v: Sequence[int]) -> bool:
        """Is ``v`` a nonnegative integer combination of the generators?"""
        v = tuple(v)
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return self._member(v)

    def _member(self, v: Vector) -> bool:
        cache = self._member_cache
        hit = cache.get(v)
        if hit is not None:
            return hit
        if not any(v):
            cache[v] = True
            return True
        if min(v) < 0:
            return False
        if self.degree is not None:
            dv = self.degree(v)
            if dv.denominator != 1 or dv < 0:
                cache[v] = False
                return False
        stack = [v]
        # iterative DFS: each state's answer depends on the states v - g
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            pending = False
            found = False
            for idx, g in enumerate(self.generators):
                w = tuple(a - b for a, b in zip(u, g))
                if min(w) < 0:
                    continue
                if not any(w):
                    found = True
                    self._witness[u] = idx
                    break
                r = cache.get(w)
                if r is None:
                    stack.append(w)
                    pending = True
                    break
                if r:
                    found = True
                    self._witness[u] = idx
                    break
            if found:
                cache[u] = True
                stack.pop()
            elif not pending:
                cache[u] = False
                stack.pop()
        return cache[v]

    def express(self, v: Sequence[int]) -> Vector | None:
        """A nonnegative coefficient vector ``c`` with ``c * gens == v``."""
        v = tuple(v)
        if not self.member(v):
            return None
        coeffs = [0] * len(self.generators)
        while any(v):
            idx = self._witness[v]
            coeffs[idx] += 1
            v = tuple(a - b for a, b in zip(v, self.generators[idx]))
        return tuple(coeffs)

    def verify_hilbert_basis(self) -> None:
        for i, g in enumerate(self.generators):
            rest = self.generators[:i] + self.generators[i + 1:]
            if rest and AffineSemigroup(rest).member(g):
                raise NonHilbert(f"generator {g} is a sum of the others")

    # enumeration

    def elements_by_degree(self, max_degree: int) -> list[set[Vector]]:
        """Elements of degree ``0..max_degree`` (homogeneous semigroups only)."""
        if self.degree is None:
            raise ValueError("semigroup is not homogeneous")
        levels: list[set[Vector]] = [{(0,) * self.ambient_dim}]
        for _ in range(max_degree):
            nxt = set()
            for u in levels[-1]:
                for g in self.generators:
                    nxt.add(tuple(a + b for a, b in zip(u, g)))
            levels.append(nxt)
        return levels


def _grading(gens: Sequence[Vector]) -> DegreeFunctional | None:
    """Primitive ``(a, c)`` with ``a . g == c`` for all generators, or None.

    The solution ``a`` is taken from the rational row space of the generator
    matrix, which makes it unique.
    """
    basis = intlin.lattice_basis(gens)
    r = len(basis)
    # a = y * basis; need (y * basis) . g = 1, i.e. y * (basis * g^T) = 1
    gram = [[sum(a * b for a, b in zip(brow, g)) for g in gens] for brow in basis]
    y = _rational_solve_any(gram, [1] * len(gens))
    if y is None:
        return None
    a = [sum(y[i] * basis[i][j] for i in range(r)) for j in range(len(gens[0]))]
    den = 1
    for t in a:
        den = den * t.denominator // gcd(den, t.denominator)
    ints = [int(t * den) for t in a]
    g = 0
    for t in ints:
        g = gcd(g, t)
    g = g or 1
    normal = tuple(t // g for t in ints)
    scale = sum(x * y for x, y in zip(normal, gens[0]))
    return DegreeFunctional(normal, scale)


def _rational_solve_any(M: Sequence[Sequence[int]], v: Sequence[int]):
    """Some rational ``x`` with ``x * M == v`` (rows of M independent)."""
    try:
        return intlin.rational_solve(M, v)
    except ValueError:
        return None


def extremal_subset(B: AffineSemigroup) -> tuple[int, ...]:
    return B.extremal_indices


def cones_equal(A: AffineSemigroup, B: AffineSemigroup) -> bool:
    return A.contains_cone_of(B) and B.contains_cone_of(A)


def member(B: AffineSemigroup, v: Sequence[int]) -> bool:
    return B.member(v)


def grading(B: AffineSemigroup) -> DegreeFunctional | None:
    return B.degree
