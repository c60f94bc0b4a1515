"""Eisenbud-Goto sweeps over homogeneous semigroups.

Every semigroup here is generated by vectors in ``N^d`` of one coordinate sum
``alpha``; the records compare ``reg K[B]`` with ``deg K[B] - codim K[B]``.
"""

from __future__ import annotations

import csv
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterator, Sequence

from . import intlin
from .errors import Infeasible
from .polyalg.field import QQ, Field
from .regdeg import regularity
from .semigroup import AffineSemigroup

Vector = tuple[int, ...]
CSV_COLUMNS = ("generators", "reg", "deg", "codim", "bound", "holds", "field")


def simplex_points(d: int, alpha: int) -> list[Vector]:
    """Lattice points of ``N^d`` with coordinate sum ``alpha``, lexicographically decreasing."""
    out: list[Vector] = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, slots - 1)

    rec((), alpha, d)
    return out


def _canonical(gens: Sequence[Vector]) -> tuple[Vector, ...]:
    d = len(gens[0])
    return min(
        tuple(sorted((tuple(g[p] for p in perm) for g in gens), reverse=True)) for perm in permutations(range(d))
    )


def enumerate_semigroups(d: int, alpha: int, dedup: bool = False) -> Iterator[AffineSemigroup]:
    """All rank-``d`` subsets of the degree-``alpha`` points, by size then lexicographically.

    With ``dedup`` only the first subset of each orbit under coordinate
    permutations is produced.
    """
    if d < 2 or alpha < 1:
        raise ValueError("need d >= 2 and alpha >= 1")
    pts = simplex_points(d, alpha)
    seen: set[tuple[Vector, ...]] = set()
    for size in range(d, len(pts) + 1):
        for S in combinations(pts, size):
            if intlin.rank(S) != d:
                continue
            if dedup:
                key = _canonical(S)
                if key in seen:
                    continue
                seen.add(key)
            yield AffineSemigroup(S)


def random_semigroup(alpha: int, d: int, c: int, simplicial: bool = False, seed: int = 0) -> AffineSemigroup:
    """``d + c`` distinct degree-``alpha`` generators of rank ``d``, reproducible from ``seed``."""
    pts = simplex_points(d, alpha)
    if d < 1 or c < 0 or alpha < 1 or d + c > len(pts):
        raise Infeasible(f"cannot pick {d + c} distinct points of coordinate sum {alpha} in N^{d}")
    rng = random.Random(seed)
    corners = [tuple(alpha * int(i == j) for j in range(d)) for i in range(d)]
    rest = [p for p in pts if p not in corners]
    for _ in range(1000):
        if simplicial:
            S = corners + rng.sample(rest, c)
        else:
            S = rng.sample(pts, d + c)
        if intlin.rank(S) == d:
            return AffineSemigroup(sorted(S, reverse=True))
    raise Infeasible("no rank-d sample found")


@dataclass(frozen=True)
class EGRecord:
    hilbert_basis: tuple[Vector, ...]
    reg: int
    degree: int
    codim: int
    field: int = 0

    @property
    def bound(self) -> int:
        return self.degree - self.codim

    @property
    def holds(self) -> bool:
        return self.reg <= self.bound

    def row(self) -> dict[str, str]:
        return {
            "generators": ";".join(",".join(str(x) for x in g) for g in self.hilbert_basis),
            "reg": str(self.reg),
            "deg": str(self.degree),
            "codim": str(self.codim),
            "bound": str(self.bound),
            "holds": "true" if self.holds else "false",
            "field": str(self.field),
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "EGRecord":
        gens = tuple(tuple(int(x) for x in g.split(",")) for g in row["generators"].split(";"))
        rec = cls(gens, int(row["reg"]), int(row["deg"]), int(row["codim"]), int(row["field"]))
        if str(rec.bound) != row["bound"] or ("true" if rec.holds else "false") != row["holds"]:
            raise ValueError(f"inconsistent record {row}")
        return rec


def verify_eg(B: AffineSemigroup, field: Field = QQ) -> EGRecord:
    r = regularity(B, field)
    return EGRecord(B.generators, r.reg, r.degree, r.codim, field.characteristic)


def _verify_task(args):
    gens, char = args
    return verify_eg(AffineSemigroup(gens), Field(char))


@dataclass(frozen=True)
class SweepSummary:
    total: int
    holds: int
    violations: int

    def to_dict(self) -> dict:
        return {"total": self.total, "holds": self.holds, "violations": self.violations}


def sweep_semigroups(
    d: int,
    alpha: int,
    mode: str = "exhaustive",
    count: int = 0,
    codim: int = 0,
    seed: int = 0,
    simplicial: bool = False,
    dedup: bool = False,
) -> list[AffineSemigroup]:
    if mode == "exhaustive":
        return list(enumerate_semigroups(d, alpha, dedup))
    if mode == "random":
        return [random_semigroup(alpha, d, codim, simplicial, seed * 1_000_003 + k) for k in range(count)]
    if mode == "empty":
        return []
    raise ValueError(f"unknown sweep mode {mode!r}")


def run_records(semigroups: Sequence[AffineSemigroup], field: Field = QQ, jobs: int = 1) -> list[EGRecord]:
    """EG records sorted by canonical semigroup key (schedule independent)."""
    tasks = [(B.generators, field.characteristic) for B in semigroups]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            recs = list(ex.map(_verify_task, tasks, chunksize=8))
    else:
        recs = [_verify_task(t) for t in tasks]
    return sorted(recs, key=lambda r: (len(r.hilbert_basis), tuple(sorted(r.hilbert_basis, reverse=True))))


def write_outputs(records: Sequence[EGRecord], csv_path, gap_path, deg_path) -> None:
    def opener(p):
        try:
            return open(p, "w", newline="", encoding="utf-8")
        except OSError as e:
            raise OSError(f"cannot write {p}: {e.strerror}") from e

    with opener(csv_path) as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(r.row())
    with opener(gap_path) as fh:
        fh.write("deg_minus_codim\treg\n")
        for r in records:
            fh.write(f"{r.bound}\t{r.reg}\n")
    with opener(deg_path) as fh:
        fh.write("deg\treg_plus_codim\n")
        for r in records:
            fh.write(f"{r.degree}\t{r.reg + r.codim}\n")


def read_records(csv_path) -> list[EGRecord]:
    with open(csv_path, newline="", encoding="utf-8") as fh:
        return [EGRecord.from_row(row) for row in csv.DictReader(fh)]


def eg_sweep(
    d: int,
    alpha: int,
    mode: str,
    csv_path,
    gap_path=None,
    deg_path=None,
    count: int = 0,
    codim: int = 0,
    seed: int = 0,
    simplicial: bool = False,
    dedup: bool = False,
    field: Field = QQ,
    jobs: int = 1,
) -> SweepSummary:
    """Run a sweep and write the CSV plus the two plot-data TSV files.

    The TSV paths default to ``<csv stem>_gap.tsv`` and ``<csv stem>_deg.tsv``.
    """
    csv_path = Path(csv_path)
    gap_path = Path(gap_path) if gap_path else csv_path.with_name(csv_path.stem + "_gap.tsv")
    deg_path = Path(deg_path) if deg_path else csv_path.with_name(csv_path.stem + "_deg.tsv")
    sgs = sweep_semigroups(d, alpha, mode, count, codim, seed, simplicial, dedup)
    recs = run_records(sgs, field, jobs)
    write_outputs(recs, csv_path, gap_path, deg_path)
    ok = sum(r.holds for r in recs)
    return SweepSummary(len(recs), ok, len(recs) - ok)
