"""Exact integer lattice linear algebra.

Matrices are plain lists of rows of Python ints (arbitrary precision). All
functions copy their inputs and never mutate them.

Conventions
-----------
* Row-style Hermite normal form: ``H = U * M`` with ``U`` unimodular, ``H``
  in row echelon form, pivots positive, entries above a pivot reduced into
  ``[0, pivot)``. Zero rows are kept at the bottom, so ``H`` has the shape of
  ``M``.
* Vectors act on matrices from the left: a solution ``x`` of
  ``solve_integral(M, v)`` satisfies ``x * M == v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import ContainmentViolation

IntMatrix = list[list[int]]
Vector = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def copy_matrix(M: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(map(int, row)) for row in M]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vecmat(x: Sequence[int], M: Sequence[Sequence[int]], ncols: int | None = None) -> Vector:
    """Row vector times matrix."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    out = [0] * ncols
    for xi, row in zip(x, M):
        if xi:
            for j, mij in enumerate(row):
                out[j] += xi * mij
    return tuple(out)


def det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    A = copy_matrix(M)
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def rank(M: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    if not M:
        return 0
    H, _ = hnf(M)
    return sum(1 for row in H if any(row))


def hnf(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form ``(H, U)`` with ``H == U * M``."""
    H = copy_matrix(M)
    nrows = len(H)
    ncols = len(H[0]) if nrows else 0
    U = identity(nrows)
    pr = 0
    for j in range(ncols):
        if pr == nrows:
            break
        for i in range(pr + 1, nrows):
            b = H[i][j]
            if b == 0:
                continue
            a = H[pr][j]
            if a == 0:
                H[pr], H[i] = H[i], H[pr]
                U[pr], U[i] = U[i], U[pr]
                continue
            x, y, g = xgcd(a, b)
            ag, bg = a // g, b // g
            rp, ri = H[pr], H[i]
            H[pr] = [x * p + y * q for p, q in zip(rp, ri)]
            H[i] = [ag * q - bg * p for p, q in zip(rp, ri)]
            up, ui = U[pr], U[i]
            U[pr] = [x * p + y * q for p, q in zip(up, ui)]
            U[i] = [ag * q - bg * p for p, q in zip(up, ui)]
        piv = H[pr][j]
        if piv == 0:
            continue
        if piv < 0:
            H[pr] = [-v for v in H[pr]]
            U[pr] = [-v for v in U[pr]]
            piv = -piv
        for k in range(pr):
            q = H[k][j] // piv
            if q:
                H[k] = [a - q * b for a, b in zip(H[k], H[pr])]
                U[k] = [a - q * b for a, b in zip(U[k], U[pr])]
        pr += 1
    return H, U


def pivots(H: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """``(row, column)`` positions of the pivots of an echelon matrix."""
    out = []
    for i, row in enumerate(H):
        for j, v in enumerate(row):
            if v:
                out.append((i, j))
                break
    return out


def lattice_basis(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical basis (nonzero HNF rows) of the row lattice of ``M``."""
    if not M:
        return []
    H, _ = hnf(M)
    return [row for row in H if any(row)]


def kernel_basis(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis in HNF of the left kernel ``{x : x * M == 0}`` of ``M``."""
    if not M:
        return []
    H, U = hnf(M)
    r = sum(1 for row in H if any(row))
    K = U[r:]
    return lattice_basis(K) if K else []


def _balanced_mod(a: int, p: int) -> int:
    r = a % p
    if r > p // 2:
        r -= p
    return r


def reduce_modulo_lattice(x: Sequence[int], K: Sequence[Sequence[int]]) -> Vector:
    """Canonical representative of ``x + rowspace(K)``, ``K`` in HNF.

    Each pivot coordinate is reduced into the half-open range
    ``(-p/2, p/2]`` of its pivot ``p``.
    """
    x = list(x)
    for i, j in pivots(K):
        p = K[i][j]
        r = _balanced_mod(x[j], p)
        t = (x[j] - r) // p
        if t:
            x = [a - t * b for a, b in zip(x, K[i])]
    return tuple(x)


def _l1_lex_key(x: Sequence[int]) -> tuple:
    return (sum(abs(v) for v in x), tuple(x))


def _descend(x: Vector, K: Sequence[Sequence[int]]) -> Vector:
    """Greedy descent on (L1 norm, lex) over small kernel steps."""
    if not K:
        return x
    steps: list[Vector] = []
    k = len(K)
    if k <= 3:
        for coeffs in product((-1, 0, 1), repeat=k):
            if any(coeffs):
                steps.append(vecmat(coeffs, K, len(x)))
    else:
        for row in K:
            steps.append(tuple(row))
            steps.append(tuple(-v for v in row))
    best = x
    best_key = _l1_lex_key(x)
    improved = True
    while improved:
        improved = False
        for s in steps:
            cand = tuple(a + b for a, b in zip(best, s))
            key = _l1_lex_key(cand)
            if key < best_key:
                best, best_key = cand, key
                improved = True
    return best


def solve_integral(M: Sequence[Sequence[int]], v: Sequence[int]) -> Vector | None:
    """Integral ``x`` with ``x * M == v``, or ``None`` if none exists.

    The solution is canonical: the particular solution is reduced modulo the
    HNF of the integer kernel into balanced half-open ranges and then pushed
    to a local minimum of (L1 norm, lexicographic order) along kernel steps.
    """
    nrows = len(M)
    ncols = len(v)
    if nrows == 0:
        return () if not any(v) else None
    H, U = hnf(M)
    piv = pivots(H)
    residual = list(v)
    y = [0] * nrows
    for i, j in piv:
        q, r = divmod(residual[j], H[i][j])
        if r:
            return None
        y[i] = q
        if q:
            residual = [a - q * b for a, b in zip(residual, H[i])]
    if any(residual):
        return None
    x = vecmat(y, U, nrows)
    r = len(piv)
    K = lattice_basis(U[r:]) if r < nrows else []
    x = reduce_modulo_lattice(x, K)
    return _descend(x, K)


def rational_solve(M: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Unique rational ``x`` with ``x * M == v`` when the rows of ``M`` are independent."""
    rows = len(M)
    cols = len(v)
    # augmented system M^T x = v, Gaussian elimination over Q
    A = [[Fraction(M[i][j]) for i in range(rows)] + [Fraction(v[j])] for j in range(cols)]
    where = [-1] * rows
    r = 0
    for c in range(rows):
        sel = next((i for i in range(r, cols) if A[i][c] != 0), None)
        if sel is None:
            continue
        A[r], A[sel] = A[sel], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(cols):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        where[c] = r
        r += 1
    for i in range(r, cols):
        if A[i][rows] != 0:
            return None
    if -1 in where:
        raise ValueError("rows are linearly dependent")
    return tuple(A[where[c]][rows] for c in range(rows))


def snf(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(D, U, V)`` with ``U * M * V == D``.

    Diagonal entries are nonnegative and each divides the next.
    """
    D = copy_matrix(M)
    m = len(D)
    n = len(D[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):  # row dst += q * row src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return D, U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            piv = D[t][t]
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // piv
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // piv
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return D, U, V


@dataclass(frozen=True)
class QuotientGroup:
    """The finitely generated abelian group ``L(ambient) / L(sub)``.

    ``invariant_factors`` lists the nontrivial factors (``0`` marks a free
    factor). Class labels are tuples of reduced coordinates, one per factor.
    """

    invariant_factors: tuple[int, ...]
    basis: tuple[Vector, ...] = field(repr=False)
    transform: tuple[Vector, ...] = field(repr=False)
    positions: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int | None:
        """Group order, ``None`` when infinite."""
        out = 1
        for d in self.invariant_factors:
            if d == 0:
                return None
            out *= d
        return out

    @property
    def is_finite(self) -> bool:
        return all(self.invariant_factors)

    def coordinates(self, v: Sequence[int]) -> Vector:
        x = solve_integral(self.basis, v) if self.basis else ()
        if x is None:
            raise ContainmentViolation(f"{tuple(v)} is not in the ambient lattice")
        return x

    def project(self, v: Sequence[int]) -> Vector:
        """Canonical class label of the lattice vector ``v``."""
        y = vecmat(self.coordinates(v), self.transform, len(self.basis))
        out = []
        for pos, d in zip(self.positions, self.invariant_factors):
            out.append(y[pos] % d if d else y[pos])
        return tuple(out)


def snf_quotient(sub: Sequence[Sequence[int]], ambient: Sequence[Sequence[int]]) -> QuotientGroup:
    """Quotient of the row lattice of ``ambient`` by the row lattice of ``sub``."""
    basis = lattice_basis(ambient)
    r = len(basis)
    coords = []
    for row in sub:
        x = solve_integral(basis, row) if basis else (() if not any(row) else None)
        if x is None:
            raise ContainmentViolation(f"{tuple(row)} is not in the ambient lattice")
        coords.append(list(x))
    if r == 0:
        return QuotientGroup((), (), (), ())
    if not coords:
        coords = [[0] * r]
    D, _, V = snf(coords)
    factors = [D[i][i] if i < len(D) else 0 for i in range(r)]
    keep = [i for i, d in enumerate(factors) if d != 1]
    return QuotientGroup(
        invariant_factors=tuple(abs(factors[i]) for i in keep),
        basis=tuple(tuple(row) for row in basis),
        transform=tuple(tuple(row) for row in V),
        positions=tuple(keep),
    )
