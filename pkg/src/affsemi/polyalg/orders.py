"""Monomial orders on exponent tuples.

An order is turned into a sort key: ``order.key(a) > order.key(b)`` iff
``x^a > x^b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Exp = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-compatible or lexicographic monomial order.

    kind
        ``"degrevlex"``, ``"lex"`` or ``"wdegrevlex"`` (weighted degree first,
        reverse lexicographic tie-break).
    variables
        Ranking of the variables from most to least significant. ``None``
        means the natural order ``0, 1, ..., n-1``. For the reverse
        lexicographic tie-break the last variable listed is the cheapest.
    weights
        Positive weights for ``wdegrevlex``.
    """

    kind: str = "degrevlex"
    variables: tuple[int, ...] | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "wdegrevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "wdegrevlex" and self.weights is None:
            raise ValueError("wdegrevlex needs weights")

    def key(self, a: Sequence[int]):
        perm = self.variables
        if perm is None:
            perm = range(len(a))
        if self.kind == "lex":
            return tuple(a[i] for i in perm)
        if self.kind == "degrevlex":
            deg = sum(a)
        else:
            deg = sum(w * e for w, e in zip(self.weights, a))
        return (deg,) + tuple(-a[i] for i in reversed(tuple(perm)))

    def keyfunc(self):
        """A fast specialized key function for this order."""
        perm = self.variables
        kind = self.kind
        if perm is None:
            if kind == "degrevlex":
                return lambda a: (sum(a),) + tuple(-e for e in reversed(a))
            if kind == "lex":
                return tuple
        if perm is None or kind == "lex":
            return self.key
        rev = tuple(reversed(perm))
        if kind == "degrevlex":
            return lambda a: (sum(a),) + tuple([-a[i] for i in rev])
        w = self.weights
        return lambda a: (sum([x * y for x, y in zip(w, a)]),) + tuple([-a[i] for i in rev])

    def describe(self) -> dict:
        out = {"kind": self.kind}
        if self.variables is not None:
            out["variables"] = list(self.variables)
        if self.weights is not None:
            out["weights"] = list(self.weights)
        return out


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def variable_last(order: MonomialOrder, nvars: int, var: int) -> MonomialOrder:
    """Same kind of order, with ``var`` moved to the cheapest position."""
    base = order.variables if order.variables is not None else tuple(range(nvars))
    perm = tuple(v for v in base if v != var) + (var,)
    return MonomialOrder(order.kind, perm, order.weights)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Exp:
    return tuple(x if x > y else y for x, y in zip(a, b))


def gcd_exp(a: Sequence[int], b: Sequence[int]) -> Exp:
    return tuple(x if x < y else y for x, y in zip(a, b))


def coprime(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def minimalize(gens) -> list[Exp]:
    """Minimal generators of the monomial ideal generated by ``gens``.

    Output is sorted (degree, exponent) so the result is canonical.
    """
    uniq = sorted(set(tuple(g) for g in gens), key=lambda e: (sum(e), e))
    out: list[Exp] = []
    for g in uniq:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return out


def monomial_str(e: Sequence[int], names: Sequence[str] | None = None) -> str:
    parts = []
    for i, k in enumerate(e):
        if k:
            name = names[i] if names else f"x{i}"
            parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts) if parts else "1"
