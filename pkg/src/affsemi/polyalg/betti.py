"""Graded Betti numbers.

Every route computes ``beta_{i,j} = dim_K Tor_i(M, K)_j``, i.e. the ranks of
a minimal graded free resolution of ``M``:

* :func:`monomial_betti` -- monomial ideals, through the lcm lattice
  (order complexes of lower intervals, or upper Koszul simplicial complexes
  at lattice elements).
* :func:`taylor_betti` -- monomial ideals, through the Taylor complex with
  all unit entries cancelled; kept as an independent oracle.
* :func:`minimal_resolution` -- modules with a monomial K-basis over a
  polynomial ring, such as shifted monomial ideals of semigroup rings, and
  quotient rings ``R/I`` by any homogeneous ideal given by a Groebner basis.
  Tor is computed from the Koszul complex of the variables tensored with
  the module, one multidegree at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from math import lcm as ilcm
from typing import Callable, Iterable, Mapping, Sequence

from ..kernels import find_divisor, koszul_faces
from .field import QQ, Field
from .groebner import GroebnerBasis, _reduce_terms
from .homology import matrix_rank, reduced_homology
from .orders import Exp, divides, lcm, minimalize

Vector = tuple[int, ...]


@dataclass
class BettiTable:
    """Graded Betti numbers ``entries[(i, j)] = beta_{i,j}`` (nonzero only)."""

    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)
    label: str = ""
    field: Field = QQ

    def __post_init__(self):
        self.entries = {k: v for k, v in sorted(self.entries.items()) if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def regularity(self) -> int | None:
        if not self.entries:
            return None
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int | None:
        if not self.entries:
            return None
        return max(i for i, _ in self.entries)

    def depth(self, nvars: int) -> int | None:
        """Depth over a polynomial ring in ``nvars`` variables (Auslander-Buchsbaum)."""
        pd = self.projective_dimension
        return None if pd is None else nvars - pd

    def betti(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def shifted(self, d: int) -> "BettiTable":
        return BettiTable({(i, j + d): v for (i, j), v in self.entries.items()}, self.label, self.field)

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return BettiTable(out, self.label, self.field)

    def euler_numerator(self) -> dict[int, int]:
        """``sum_i (-1)^i beta_{i,j}`` per degree ``j``."""
        out: dict[int, int] = {}
        for (i, j), v in self.entries.items():
            out[j] = out.get(j, 0) + (-1) ** i * v
        return {j: v for j, v in sorted(out.items()) if v}

    def to_dict(self) -> dict:
        return {
            "field": self.field.characteristic,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "BettiTable":
        return cls({(int(i), int(j)): int(v) for i, j, v in d["entries"]}, field=Field(int(d.get("field", 0))))

    def pretty(self) -> str:
        if not self.entries:
            return "(zero module)"
        pd = self.projective_dimension
        lo = min(j - i for i, j in self.entries)
        hi = self.regularity
        lines = ["      " + " ".join(f"{i:>4}" for i in range(pd + 1))]
        for r in range(lo, hi + 1):
            vals = [self.entries.get((i, i + r), 0) for i in range(pd + 1)]
            lines.append(f"{r:>4}: " + " ".join(f"{v if v else '.':>4}" for v in vals))
        return "\n".join(lines)


def _from_multigraded(mg: Mapping[tuple[int, Vector], int], degree: Callable[[Vector], int], **kw) -> BettiTable:
    out: dict[tuple[int, int], int] = {}
    for (i, a), v in mg.items():
        key = (i, degree(a))
        out[key] = out.get(key, 0) + v
    return BettiTable(out, **kw)


# lcm lattice -----------------------------------------------------------------


def lcm_lattice(gens: Sequence[Exp]) -> list[Exp]:
    """All lcms of nonempty subsets of ``gens`` (the lcm lattice minus its bottom)."""
    L = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for b in L:
                m = lcm(a, b)
                if m not in L:
                    new.add(m)
        L |= new
        frontier = new
    return sorted(L, key=lambda e: (sum(e), e))


def _order_complex_faces(P: Sequence[Exp]) -> list[tuple[int, ...]]:
    """Chains of the poset ``P`` (divisibility), as sorted index tuples.

    ``P`` must be listed along a linear extension (e.g. sorted by degree).
    """
    n = len(P)
    above = [[j for j in range(i + 1, n) if P[j] != P[i] and divides(P[i], P[j])] for i in range(n)]
    faces: list[tuple[int, ...]] = [()]
    stack = [(i,) for i in range(n)]
    while stack:
        ch = stack.pop()
        faces.append(ch)
        for j in above[ch[-1]]:
            stack.append(ch + (j,))
    return faces


def _upper_koszul_faces(m: Exp, gens: Sequence[Exp]) -> list[tuple[int, ...]]:
    """Faces ``S`` of the upper Koszul complex: ``x^(m - e_S)`` lies in the ideal."""
    n = len(m)
    if find_divisor(gens, m) < 0:
        return []
    faces: list[tuple[int, ...]] = [()]
    stack: list[tuple[tuple[int, ...], Exp]] = [((), m)]
    while stack:
        S, e = stack.pop()
        start = S[-1] + 1 if S else 0
        for k in range(start, n):
            if e[k] == 0:
                continue
            f = e[:k] + (e[k] - 1,) + e[k + 1:]
            if find_divisor(gens, f) >= 0:
                S2 = S + (k,)
                faces.append(S2)
                stack.append((S2, f))
    return faces


def monomial_betti_multigraded(
    gens: Iterable[Sequence[int]], field: Field = QQ, method: str = "lcm"
) -> dict[tuple[int, Exp], int]:
    """Multigraded Betti numbers ``{(i, m): beta_{i,m}(I)}`` of a monomial ideal."""
    G = minimalize(gens)
    if not G:
        return {}
    if any(not any(g) for g in G):
        return {(0, G[0]): 1}
    L = lcm_lattice(G)
    out: dict[tuple[int, Exp], int] = {}
    for m in L:
        if method == "lcm":
            P = [x for x in L if x != m and divides(x, m)]
            faces = _order_complex_faces(P)
        elif method == "koszul":
            faces = _upper_koszul_faces(m, G)
        else:
            raise ValueError(f"unknown method {method!r}")
        for d, r in reduced_homology(faces, field).items():
            out[(d + 1, m)] = r
    return out


def monomial_betti(
    gens: Iterable[Sequence[int]], nvars: int | None = None, field: Field = QQ, method: str = "lcm"
) -> BettiTable:
    """Graded Betti numbers of the monomial ideal ``I`` (as a module).

    ``method="lcm"`` uses order complexes of lower intervals of the lcm
    lattice; ``method="koszul"`` uses upper Koszul simplicial complexes at the
    lattice elements, which is much cheaper for ideals with many generators in
    few variables. Both give identical tables.
    """
    gens = [tuple(g) for g in gens]
    if nvars is not None and any(len(g) != nvars for g in gens):
        raise ValueError("exponent length does not match nvars")
    mg = monomial_betti_multigraded(gens, field, method)
    return _from_multigraded(mg, sum, label="monomial ideal", field=field)


def two_variable_regularity(gens: Iterable[Sequence[int]]) -> int:
    """Regularity of a nonzero monomial ideal in two variables.

    With minimal generators ``x^a_1 y^b_1, ..., x^a_r y^b_r`` sorted by
    decreasing ``a``, the syzygies sit in degrees ``a_i + b_{i+1}``.
    """
    G = sorted(minimalize(gens), key=lambda e: -e[0])
    if not G:
        raise ValueError("zero ideal")
    if any(len(g) != 2 for g in G):
        raise ValueError("two variables expected")
    reg = max(a + b for a, b in G)
    for (a1, _), (_, b2) in zip(G, G[1:]):
        reg = max(reg, a1 + b2 - 1)
    return reg


def taylor_betti_multigraded(gens: Iterable[Sequence[int]], field: Field = QQ) -> dict[tuple[int, Exp], int]:
    """Betti numbers of the minimalized Taylor resolution of ``I``."""
    G = minimalize(gens)
    k = len(G)
    by_lcm: dict[Exp, dict[int, list[tuple[int, ...]]]] = {}
    for size in range(1, k + 1):
        for S in combinations(range(k), size):
            m = G[S[0]]
            for s in S[1:]:
                m = lcm(m, G[s])
            by_lcm.setdefault(m, {}).setdefault(size, []).append(S)
    out: dict[tuple[int, Exp], int] = {}
    for m, cells in by_lcm.items():
        index = {size: {S: i for i, S in enumerate(v)} for size, v in cells.items()}
        ranks = {}
        for size, v in cells.items():
            if size == 1:
                continue
            dst = index.get(size - 1, {})
            rows = []
            for S in v:
                row = [0] * len(dst)
                for pos in range(size):
                    T = S[:pos] + S[pos + 1:]
                    if T in dst:
                        row[dst[T]] = -1 if pos % 2 else 1
                rows.append(row)
            ranks[size] = matrix_rank(rows, len(dst), field)
        for size, v in cells.items():
            h = len(v) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                out[(size - 1, m)] = h
    return out


def taylor_betti(gens: Iterable[Sequence[int]], field: Field = QQ) -> BettiTable:
    mg = taylor_betti_multigraded(gens, field)
    return _from_multigraded(mg, sum, label="monomial ideal (Taylor)", field=field)


def quotient_betti_bound(leads: Iterable[Sequence[int]], nvars: int) -> int:
    """Upper bound for the degrees ``j`` with ``beta_{i,j}(R/J) != 0``, ``J`` monomial.

    Every Betti degree of ``R/J`` is the degree of the lcm of at most
    ``nvars`` minimal generators. By upper semicontinuity the bound also
    holds for every homogeneous ideal with initial ideal ``J``.
    """
    G = minimalize(leads)
    if not G:
        return 0
    if any(not any(g) for g in G):
        return -1
    top = lcm(G[0], G[0])
    for g in G[1:]:
        top = lcm(top, g)
    degs = sorted((sum(g) for g in G), reverse=True)
    return min(sum(top), sum(degs[:nvars]))


# modules with a monomial basis --------------------------------------------


@dataclass(frozen=True)
class SemigroupModule:
    """A Z^m-graded module with K-basis ``{t^a : a in support}``.

    The polynomial ring ``T = K[x_1..x_d]`` acts by ``x_k t^a = t^(a + e_k)``
    where ``e_k = var_degrees[k]``. The support is the union of
    ``g + <e_1..e_d>`` over the module generators ``g``. ``degree`` is a
    Z-grading with ``degree(e_k) > 0`` and ``degree_bound`` an upper bound
    for the Z-degrees of the (minimal) Betti numbers.
    """

    var_degrees: tuple[Vector, ...]
    generators: tuple[Vector, ...]
    degree: Callable[[Vector], int]
    degree_bound: int
    label: str = ""

    def support_up_to(self, D: int) -> set[Vector]:
        out = set()
        frontier = [g for g in self.generators if self.degree(g) <= D]
        out.update(frontier)
        E = self.var_degrees
        while frontier:
            nxt = []
            for a in frontier:
                for e in E:
                    b = tuple(x + y for x, y in zip(a, e))
                    if b not in out and self.degree(b) <= D:
                        out.add(b)
                        nxt.append(b)
            frontier = nxt
        return out


def _is_cone(faces: list[tuple[int, ...]], d: int) -> bool:
    fs = set(faces)
    for k in range(d):
        if all(tuple(sorted(set(f) | {k})) in fs for f in faces):
            return True
    return False


def semigroup_module_betti_multigraded(M: SemigroupModule, field: Field = QQ) -> dict[tuple[int, Vector], int]:
    D = M.degree_bound
    supp = M.support_up_to(D)
    E = M.var_degrees
    out: dict[tuple[int, Vector], int] = {}
    for a in sorted(supp, key=lambda v: (M.degree(v), v)):
        faces = koszul_faces(a, E, supp)
        if len(faces) > 1 and _is_cone(faces, len(E)):
            continue
        for dim, r in reduced_homology(faces, field).items():
            out[(dim + 1, a)] = r
    return out


def quotient_betti(G: GroebnerBasis, degree_bound: int | None = None, grading=None) -> BettiTable:
    """Graded Betti numbers of ``R/I`` for a homogeneous ideal with Groebner basis ``G``.

    ``grading`` optionally lists a multidegree vector for every variable
    (the ideal must be homogeneous for it); the Koszul complex is then split
    into multigraded pieces. The Z-grading is the standard one.
    """
    n = G.nvars
    F = G.field
    leads = G.leading_monomials
    if G.is_unit():
        return BettiTable({}, "quotient ring", F)
    D = quotient_betti_bound(leads, n) if degree_bound is None else degree_bound
    keyf = G.order.keyfunc()
    basis = [(g.leading_monomial(G.order), g.terms) for g in G.generators]
    # standard monomials of degree <= D
    zero = (0,) * n
    std = {zero}
    frontier = [zero]
    for _ in range(D):
        nxt = []
        for e in frontier:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in std and find_divisor(leads, f) < 0:
                    std.add(f)
                    nxt.append(f)
        frontier = nxt
    if grading is None:
        mdeg = sum
        var_mdeg = [1] * n
    else:
        grading = [tuple(w) for w in grading]

        def mdeg(e):
            return tuple(sum(e[i] * grading[i][c] for i in range(n)) for c in range(len(grading[0])))

        var_mdeg = grading

    def add_deg(a, b):
        if grading is None:
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    # cells (S, u) : e_S (x) u, grouped by multidegree
    cells: dict[object, dict[int, list]] = {}
    std_deg = {u: mdeg(u) for u in std}
    for u in std:
        du = sum(u)
        for size in range(0, n + 1):
            if du + size > D:
                break
            for S in combinations(range(n), size):
                md = std_deg[u]
                for s in S:
                    md = add_deg(md, var_mdeg[s])
                cells.setdefault((md, du + size), {}).setdefault(size, []).append((S, u))
    mul_cache: dict[tuple[int, Exp], dict] = {}

    def times_var(k, u):
        key = (k, u)
        hit = mul_cache.get(key)
        if hit is None:
            e = u[:k] + (u[k] + 1,) + u[k + 1:]
            hit = _reduce_terms({e: F(1)}, basis, keyf, F)
            # integral coefficients stay plain ints so ranks skip Fraction arithmetic
            hit = {w: (c.numerator if type(c) is Fraction and c.denominator == 1 else c) for w, c in hit.items()}
            mul_cache[key] = hit
        return hit

    out: dict[tuple[int, int], int] = {}
    for md, by_size in cells.items():
        ranks = {}
        index = {s: {c: i for i, c in enumerate(sorted(v))} for s, v in by_size.items()}
        for size, v in by_size.items():
            if size == 0:
                continue
            dst = index.get(size - 1, {})
            rows = []
            for S, u in sorted(v):
                row = [0] * len(dst)
                for pos, k in enumerate(S):
                    T = S[:pos] + S[pos + 1:]
                    sign = -1 if pos % 2 else 1
                    for w, c in times_var(k, u).items():
                        j = dst.get((T, w))
                        if j is None:
                            raise AssertionError("Koszul differential left its multidegree")
                        row[j] += sign * c
                rows.append(row)
            ranks[size] = _field_rank(rows, len(dst), F)
        zdeg = md[1]
        for size, v in by_size.items():
            h = len(v) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                out[(size, zdeg)] = out.get((size, zdeg), 0) + h
    return BettiTable(out, "quotient ring", F)


def _field_rank(rows, ncols, F: Field) -> int:
    if F.characteristic:
        return matrix_rank(rows, ncols, F)
    ints = []
    for r in rows:
        if all(type(x) is int for x in r):
            ints.append(r)
            continue
        den = 1
        for x in r:
            den = ilcm(den, Fraction(x).denominator)
        ints.append([int(Fraction(x) * den) for x in r])
    return matrix_rank(ints, ncols, F)


def minimal_resolution(module, field: Field = QQ) -> BettiTable:
    """Graded Betti numbers of a minimal free resolution of ``module``.

    Accepts a :class:`SemigroupModule`, a :class:`GroebnerBasis` (meaning
    the quotient ring ``R/I``), a :class:`FreeModule`, or a list of those
    (direct sum).
    """
    if isinstance(module, (list, tuple)):
        out = BettiTable({}, "direct sum", field)
        for m in module:
            out = out + minimal_resolution(m, field)
        return out
    if isinstance(module, FreeModule):
        ent: dict[tuple[int, int], int] = {}
        for s in module.shifts:
            ent[(0, s)] = ent.get((0, s), 0) + 1
        return BettiTable(ent, "free module", field)
    if isinstance(module, GroebnerBasis):
        if module.field != field:
            raise ValueError("basis field differs from requested field")
        return quotient_betti(module)
    if isinstance(module, SemigroupModule):
        mg = semigroup_module_betti_multigraded(module, field)
        return _from_multigraded(mg, module.degree, label=module.label, field=field)
    raise TypeError(f"cannot resolve {type(module).__name__}")


@dataclass(frozen=True)
class FreeModule:
    """``R(-s_1) + ... + R(-s_k)`` over a polynomial ring in ``nvars`` variables."""

    nvars: int
    shifts: tuple[int, ...]
