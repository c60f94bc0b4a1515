"""Sparse multivariate polynomials over Q or F_p."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .field import QQ, Field
from .orders import DEGREVLEX, Exp, MonomialOrder, monomial_str


class Polynomial:
    """Polynomial in ``nvars`` variables; ``terms`` maps exponents to coefficients.

    Zero coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms: Mapping[Sequence[int], object], nvars: int, field: Field = QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError("exponent length does not match the ring")
            c = field(c)
            if c:
                if e in clean:
                    c = field.add(clean[e], c)
                    if not c:
                        del clean[e]
                        continue
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, nvars: int, field: Field) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p.field = field
        return p

    @classmethod
    def monomial(cls, e: Sequence[int], coeff=1, field: Field = QQ) -> "Polynomial":
        return cls({tuple(e): coeff}, len(e), field)

    @classmethod
    def variable(cls, i: int, nvars: int, field: Field = QQ) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e, 1, field)

    @classmethod
    def binomial(cls, a: Sequence[int], b: Sequence[int] | None, field: Field = QQ) -> "Polynomial":
        """``x^a - x^b`` (or the monomial ``x^a`` when ``b`` is None)."""
        terms = {tuple(a): 1}
        if b is not None:
            terms[tuple(b)] = -1
        return cls(terms, len(a), field)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.nvars, F)

    def __neg__(self) -> "Polynomial":
        F = self.field
        return Polynomial._raw({e: F.neg(c) for e, c in self.terms.items()}, self.nvars, F)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        F = self.field
        c = F(c)
        if not c:
            return Polynomial._raw({}, self.nvars, F)
        return Polynomial._raw({e: F.mul(c, v) for e, v in self.terms.items()}, self.nvars, F)

    def mul_term(self, c, e: Sequence[int]) -> "Polynomial":
        F = self.field
        c = F(c)
        if not c:
            return Polynomial._raw({}, self.nvars, F)
        out = {}
        for f, v in self.terms.items():
            out[tuple(a + b for a, b in zip(e, f))] = F.mul(c, v)
        return Polynomial._raw(out, self.nvars, F)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.field
        acc = Polynomial._raw({}, self.nvars, F)
        for e, c in other.terms.items():
            acc = acc + self.mul_term(c, e)
        return acc

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.terms.items()), self.nvars, self.field))

    def leading(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exp, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.keyfunc()
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Exp:
        return self.leading(order)[0]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.field.inv(c))

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exp, object]]:
        key = order.keyfunc()
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def is_homogeneous(self, weights: Sequence[Sequence[int]] | None = None) -> bool:
        degs = set()
        for e in self.terms:
            if weights is None:
                degs.add(sum(e))
            else:
                degs.add(tuple(sum(w[i] * e[i] for i in range(len(e))) for w in zip(*weights)))
        return len(degs) <= 1

    def to_str(self, order: MonomialOrder = DEGREVLEX, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms(order):
            if self.field.characteristic:
                neg = False
                mag = c
            else:
                neg = c < 0
                mag = -c if neg else c
            mono = monomial_str(e, names)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, field={self.field})"


def polynomials_from(gens: Iterable[Polynomial]) -> list[Polynomial]:
    gens = [g for g in gens]
    if gens:
        n, F = gens[0].nvars, gens[0].field
        for g in gens:
            if g.nvars != n or g.field != F:
                raise ValueError("generators live in different rings")
    return gens
