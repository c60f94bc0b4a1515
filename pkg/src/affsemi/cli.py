"""Command-line interface: ``affsemi decompose|props|reg|eg``.

Inputs and outputs are JSON documents with a top-level ``format_version``.
Integers beyond 53 bits are written as decimal strings. Exit codes: 0 ok,
2 invalid input, 3 algebraic precondition failed, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .decompose import Decomposition, DecompositionComponent, decompose, hilbert_identity, module_generators
from .egharness import eg_sweep, read_records
from .errors import AlgebraicPreconditionError, InputError, OracleMismatch
from .intlin import snf_quotient
from .polyalg.betti import BettiTable
from .polyalg.field import Field
from .polyalg.orders import monomial_str
from .regdeg import PATHS, RegularityResult, direct_regularity, hilbert_degree, regularity
from .ringprops import PropertyReport, ring_properties
from .semigroup import AffineSemigroup

FORMAT_VERSION = 1
SAFE = 2**53


# encoding --------------------------------------------------------------------


def enc_int(x: int):
    return x if -SAFE < x < SAFE else str(x)


def dec_int(x) -> int:
    if isinstance(x, bool):
        raise InputError("booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise InputError(f"expected an integer, got {x!r}")


def enc_vec(v: Sequence[int]) -> list:
    return [enc_int(x) for x in v]


def dec_vec(v) -> tuple[int, ...]:
    if not isinstance(v, list):
        raise InputError(f"expected a list of integers, got {v!r}")
    return tuple(dec_int(x) for x in v)


def dec_vecs(vs) -> list[tuple[int, ...]]:
    if not isinstance(vs, list):
        raise InputError(f"expected a list of vectors, got {vs!r}")
    return [dec_vec(v) for v in vs]


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


# documents -------------------------------------------------------------------


def parse_semigroup_document(doc: Any) -> tuple[AffineSemigroup, AffineSemigroup | None, int | None]:
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")
    if "generators" not in doc:
        raise InputError("input needs a 'generators' list")
    B = AffineSemigroup(dec_vecs(doc["generators"]))
    A = AffineSemigroup(dec_vecs(doc["subsemigroup"])) if doc.get("subsemigroup") else None
    char = dec_int(doc["field"]) if doc.get("field") is not None else None
    return B, A, char


def decomposition_document(D: Decomposition) -> dict:
    comps = []
    for c in D:
        comps.append(
            {
                "class": enc_vec(c.class_label),
                "gamma": [enc_vec(v) for v in c.gamma],
                "representative": enc_vec(c.representative),
                "coefficients": [enc_vec(v) for v in c.coefficients],
                "cbar": enc_vec(c.cbar),
                "shift": enc_vec(c.shift),
                "ideal": {
                    "vectors": [enc_vec(v) for v in c.ideal_vectors],
                    "exponents": [enc_vec(e) for e in c.ideal_exponents],
                    "monomials": [monomial_str(e) for e in c.ideal_exponents],
                },
            }
        )
    return {
        "format_version": FORMAT_VERSION,
        "kind": "decomposition",
        "base": [enc_vec(g) for g in D.base.generators],
        "total": [enc_vec(g) for g in D.total.generators],
        "quotient": {"invariant_factors": enc_vec(D.quotient.invariant_factors), "order": enc_int(D.quotient.order)},
        "module_generators": [enc_vec(v) for v in D.module_generators],
        "components": comps,
    }


def decomposition_from_document(doc: dict) -> Decomposition:
    A = AffineSemigroup(dec_vecs(doc["base"]))
    B = AffineSemigroup(dec_vecs(doc["total"]))
    comps = []
    for c in doc["components"]:
        comps.append(
            DecompositionComponent(
                class_label=dec_vec(c["class"]),
                gamma=tuple(dec_vecs(c["gamma"])),
                representative=dec_vec(c["representative"]),
                coefficients=tuple(dec_vecs(c["coefficients"])),
                cbar=dec_vec(c["cbar"]),
                shift=dec_vec(c["shift"]),
                ideal_vectors=tuple(dec_vecs(c["ideal"]["vectors"])),
                ideal_exponents=tuple(dec_vecs(c["ideal"]["exponents"])),
            )
        )
    Q = snf_quotient(A.generators, B.generators)
    return Decomposition(A, B, Q, tuple(comps), tuple(dec_vecs(doc["module_generators"])))


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return enc_int(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def properties_document(B: AffineSemigroup, R: PropertyReport) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "properties",
        "generators": [enc_vec(g) for g in B.generators],
        "dim": R.dim,
        "depth": R.depth,
        **R.flags(),
        "witnesses": _jsonable({k: R.witnesses[k] for k in sorted(R.witnesses)}),
    }


def properties_from_document(doc: dict) -> PropertyReport:
    return PropertyReport(
        dim=dec_int(doc["dim"]),
        depth=dec_int(doc["depth"]),
        cohen_macaulay=bool(doc["cohen_macaulay"]),
        gorenstein=bool(doc["gorenstein"]),
        buchsbaum=bool(doc["buchsbaum"]),
        normal=bool(doc["normal"]),
        seminormal=bool(doc["seminormal"]),
        witnesses=doc["witnesses"],
    )


def regularity_document(B: AffineSemigroup, R: RegularityResult) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "regularity",
        "generators": [enc_vec(g) for g in B.generators],
        "field": R.field.characteristic,
        "path": R.path,
        "reg": enc_int(R.reg),
        "degree": enc_int(R.degree),
        "codim": R.codim,
        "dim": R.dim,
        "per_class": [
            {"class": enc_vec(k), "reg": enc_int(r), "shift_degree": enc_int(h)}
            for k, (r, h) in sorted(R.per_class.items())
        ],
        "betti": [
            {"class": enc_vec(k), **R.betti[k].to_dict()} for k in sorted(R.betti)
        ],
    }


def regularity_from_document(doc: dict) -> RegularityResult:
    per = {dec_vec(e["class"]): (dec_int(e["reg"]), dec_int(e["shift_degree"])) for e in doc["per_class"]}
    betti = {dec_vec(e["class"]): BettiTable.from_dict(e) for e in doc.get("betti", [])}
    return RegularityResult(
        reg=dec_int(doc["reg"]),
        per_class=per,
        degree=dec_int(doc["degree"]),
        codim=dec_int(doc["codim"]),
        dim=dec_int(doc["dim"]),
        path=doc["path"],
        field=Field(dec_int(doc["field"])),
        betti=betti,
    )


# commands --------------------------------------------------------------------


def _read_input(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})") from e


def _emit(doc: dict, out: str | None) -> None:
    text = dumps(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field(args, char: int | None) -> Field:
    c = args.char if args.char is not None else (char or 0)
    try:
        return Field(c)
    except ValueError as e:
        raise InputError(str(e)) from e


def _cmd_decompose(args) -> int:
    B, A, _ = parse_semigroup_document(_read_input(args.input))
    if A is None:
        A = AffineSemigroup(B.extremal_generators())
    D = decompose(A, B, verify_hilbert=args.verify_hilbert)
    if args.oracle:
        other = module_generators(A, B, method="bfs")
        if list(D.module_generators) != other:
            raise OracleMismatch("Groebner and search routes disagree on the module generators")
        if B.homogeneous:
            for t, lhs, rhs in hilbert_identity(D, args.max_degree):
                if lhs != rhs:
                    raise OracleMismatch(f"Hilbert function differs in degree {t}: {lhs} != {rhs}")
    _emit(decomposition_document(D), args.output)
    return 0


def _cmd_props(args) -> int:
    B, _, _ = parse_semigroup_document(_read_input(args.input))
    R = ring_properties(B)
    if args.oracle:
        rev = AffineSemigroup(tuple(reversed(B.generators)))
        R2 = ring_properties(rev)
        if R2.flags() != R.flags() or R2.depth != R.depth:
            raise OracleMismatch("properties depend on the generator order")
        if not R.implications_hold():
            raise OracleMismatch("property report violates the implication chain")
    _emit(properties_document(B, R), args.output)
    return 0


def _cmd_reg(args) -> int:
    B, A, char = parse_semigroup_document(_read_input(args.input))
    F = _field(args, char)
    R = regularity(B, F, path=args.path, base=A)
    if args.oracle:
        other = direct_regularity(B, F)
        if other != R.reg:
            raise OracleMismatch(f"direct resolution gives reg {other}, decomposition gives {R.reg}")
        if hilbert_degree(B) != R.degree:
            raise OracleMismatch("Hilbert-series degree differs from the decomposition degree")
    _emit(regularity_document(B, R), args.output)
    return 0


def _cmd_eg(args) -> int:
    F = _field(args, None)
    if args.random is not None:
        mode, count = "random", args.random
    elif args.exhaustive:
        mode, count = "exhaustive", 0
    else:
        mode, count = "empty", 0
    if args.dim < 2 or args.alpha < 1:
        raise InputError("need --dim >= 2 and --alpha >= 1")
    S = eg_sweep(
        args.dim,
        args.alpha,
        mode,
        args.out,
        count=count,
        codim=args.codim,
        seed=args.seed,
        simplicial=args.simplicial,
        dedup=args.dedup,
        field=F,
        jobs=args.jobs,
    )
    recs = read_records(args.out)
    if args.oracle:
        for r in recs:
            other = direct_regularity(AffineSemigroup(r.hilbert_basis), F, method="semigroup")
            if other != r.reg:
                raise OracleMismatch(f"{r.hilbert_basis}: direct resolution gives reg {other}, sweep gives {r.reg}")
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": "eg_sweep",
        "dim": args.dim,
        "alpha": args.alpha,
        "mode": mode,
        "field": F.characteristic,
        "csv": str(args.out),
        **S.to_dict(),
        "violators": [[enc_vec(g) for g in r.hilbert_basis] for r in recs if not r.holds],
    }
    _emit(doc, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affsemi", description="Decompositions of affine semigroup rings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="JSON semigroup document, '-' for stdin")
        sp.add_argument("-o", "--output", help="write the result document here instead of stdout")
        sp.add_argument("--oracle", action="store_true", help="cross-check with independent slow routes")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    sp = sub.add_parser("decompose", help="decompose K[B] over K[A]")
    common(sp)
    sp.add_argument("--verify-hilbert", action="store_true", help="check that the generators are minimal")
    sp.add_argument("--max-degree", type=int, default=10, help="degree bound of the oracle identity")
    sp.set_defaults(func=_cmd_decompose)

    sp = sub.add_parser("props", help="ring properties of a simplicial semigroup ring")
    common(sp)
    sp.set_defaults(func=_cmd_props)

    sp = sub.add_parser("reg", help="regularity, degree and codimension")
    common(sp)
    sp.add_argument("--char", type=int, default=None, help="field characteristic (0 or a prime)")
    sp.add_argument("--path", choices=PATHS, default="auto")
    sp.set_defaults(func=_cmd_reg)

    sp = sub.add_parser("eg", help="Eisenbud-Goto sweep")
    common(sp, with_input=False)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--random", type=int, metavar="N")
    sp.add_argument("--codim", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--simplicial", action="store_true")
    sp.add_argument("--dedup", action="store_true", help="one semigroup per coordinate permutation orbit")
    sp.add_argument("--char", type=int, default=None)
    sp.add_argument("--out", required=True, help="CSV path; plot TSV files are written next to it")
    sp.set_defaults(func=_cmd_eg)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except OracleMismatch as e:
        print(f"oracle mismatch: {e}", file=sys.stderr)
        return 4
    except AlgebraicPreconditionError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 3
    except InputError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
