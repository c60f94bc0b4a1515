"""Buchberger's algorithm, normal forms and standard monomials.

Two engines share the pair bookkeeping (Gebauer-Moeller criteria, normal
selection strategy):

* :func:`groebner` works with arbitrary :class:`Polynomial` inputs.
* :func:`binomial_groebner` works with pure difference binomials
  ``x^a - x^b`` and monomials. Such ideals stay inside this class under
  S-polynomials and reduction, with coefficients ``+1/-1`` only, so the
  result does not depend on the coefficient field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import InfiniteDimension
from ..kernels import find_divisor
from .field import QQ, Field
from .orders import DEGREVLEX, Exp, MonomialOrder, coprime, divides, lcm
from .polynomial import Polynomial

Binomial = tuple[Exp, "Exp | None"]


# pair bookkeeping --------------------------------------------------------


class _Pairs:
    """Critical pairs with the Gebauer-Moeller update."""

    def __init__(self, keyf):
        self.keyf = keyf
        self.leads: list[Exp] = []
        self.active: list[int] = []
        self.pairs: dict[tuple[int, int], Exp] = {}

    def add(self, lead: Exp) -> int:
        h = len(self.leads)
        self.leads.append(lead)
        L = self.leads
        cands = [(g, lcm(lead, L[g])) for g in self.active]
        keep: list[tuple[int, Exp]] = []
        for idx, (g1, m1) in enumerate(cands):
            if coprime(lead, L[g1]):
                keep.append((g1, m1))
                continue
            later = (m2 for _, m2 in cands[idx + 1:])
            earlier = (m2 for _, m2 in keep)
            if not any(divides(m2, m1) for m2 in later) and not any(divides(m2, m1) for m2 in earlier):
                keep.append((g1, m1))
        new_pairs = {}
        for (a, b), m in self.pairs.items():
            if divides(lead, m) and lcm(L[a], lead) != m and lcm(lead, L[b]) != m:
                continue
            new_pairs[(a, b)] = m
        for g, m in keep:
            if not coprime(lead, L[g]):
                new_pairs[(g, h)] = m
        self.pairs = new_pairs
        self.active = [g for g in self.active if not divides(lead, L[g])] + [h]
        return h

    def pop(self) -> tuple[int, int] | None:
        if not self.pairs:
            return None
        keyf = self.keyf
        best = min(self.pairs, key=lambda p: (keyf(self.pairs[p]), p))
        del self.pairs[best]
        return best


# general polynomials -----------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, pairwise fully reduced, sorted by lead."""

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    nvars: int
    field: Field = QQ
    reduced: bool = True

    @property
    def leading_monomials(self) -> list[Exp]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit(self) -> bool:
        return any(not any(e) for e in self.leading_monomials)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _reduce_terms(terms: dict, basis: Sequence[tuple[Exp, dict]], keyf, F: Field) -> dict:
    """Full reduction of ``terms`` by monic ``basis`` entries ``(lead, terms)``."""
    leads = [b[0] for b in basis]
    f = dict(terms)
    rem = {}
    char = F.characteristic
    while f:
        t = max(f, key=keyf)
        c = f[t]
        i = find_divisor(leads, t)
        if i < 0:
            rem[t] = c
            del f[t]
            continue
        lead, g = basis[i]
        shift = tuple(a - b for a, b in zip(t, lead))
        for e, v in g.items():
            e2 = tuple(a + b for a, b in zip(e, shift))
            nv = f.get(e2, 0) - c * v
            if char:
                nv %= char
            if nv:
                f[e2] = nv
            else:
                f.pop(e2, None)
    return rem


def _spoly_terms(f: tuple[Exp, dict], g: tuple[Exp, dict], F: Field) -> dict:
    lf, tf = f
    lg, tg = g
    m = lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(m, lf))
    sg = tuple(a - b for a, b in zip(m, lg))
    out = {}
    char = F.characteristic
    for e, v in tf.items():
        out[tuple(a + b for a, b in zip(e, sf))] = v
    for e, v in tg.items():
        e2 = tuple(a + b for a, b in zip(e, sg))
        nv = out.get(e2, 0) - v
        if char:
            nv %= char
        if nv:
            out[e2] = nv
        else:
            out.pop(e2, None)
    return out


def _monic_entry(terms: dict, keyf, F: Field) -> tuple[Exp, dict]:
    lead = max(terms, key=keyf)
    inv = F.inv(terms[lead])
    return lead, {e: F.mul(inv, c) for e, c in terms.items()}


def groebner(gens: Iterable[Polynomial], order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens]
    if not gens:
        raise ValueError("need at least one generator to fix the ring")
    n, F = gens[0].nvars, gens[0].field
    for g in gens:
        if g.nvars != n or g.field != F:
            raise ValueError("generators live in different rings")
    keyf = order.keyfunc()
    store: list[tuple[Exp, dict]] = []
    pairs = _Pairs(keyf)

    def active_basis():
        return [store[i] for i in pairs.active]

    inputs = sorted((g for g in gens if g.terms), key=lambda g: keyf(g.leading_monomial(order)))
    for g in inputs:
        h = _reduce_terms(g.terms, active_basis(), keyf, F)
        if h:
            store.append(_monic_entry(h, keyf, F))
            pairs.add(store[-1][0])
    while True:
        p = pairs.pop()
        if p is None:
            break
        s = _spoly_terms(store[p[0]], store[p[1]], F)
        h = _reduce_terms(s, active_basis(), keyf, F)
        if h:
            store.append(_monic_entry(h, keyf, F))
            pairs.add(store[-1][0])
    return GroebnerBasis(_interreduce([store[i] for i in pairs.active], keyf, F, n), order, n, F)


def _interreduce(basis: list[tuple[Exp, dict]], keyf, F: Field, n: int) -> tuple[Polynomial, ...]:
    basis = sorted(basis, key=lambda b: keyf(b[0]))
    minimal = []
    for b in basis:
        if not any(divides(c[0], b[0]) for c in minimal):
            minimal.append(b)
    out = []
    for i, (lead, terms) in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = dict(terms)
        c = tail.pop(lead)
        red = _reduce_terms(tail, others, keyf, F)
        red[lead] = c
        out.append(Polynomial._raw(red, n, F))
    return tuple(out)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` under division by ``G`` (fully reduced)."""
    if f.nvars != G.nvars or f.field != G.field:
        raise ValueError("polynomial and basis live in different rings")
    keyf = G.order.keyfunc()
    basis = [(g.leading_monomial(G.order), g.terms) for g in G.generators]
    return Polynomial._raw(_reduce_terms(f.terms, basis, keyf, f.field), f.nvars, f.field)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    keyf = order.keyfunc()
    F = f.field
    s = _spoly_terms(_monic_entry(f.terms, keyf, F), _monic_entry(g.terms, keyf, F), F)
    return Polynomial._raw(s, f.nvars, F)


def is_groebner(G: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero."""
    gens = G.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not normal_form(s_polynomial(gens[i], gens[j], G.order), G).is_zero():
                return False
    return True


# binomials ---------------------------------------------------------------


def _bnorm(p: Exp | None, q: Exp | None, keyf) -> Binomial | None:
    """Normalize ``x^p - x^q`` (None stands for the zero term)."""
    if p is None:
        p, q = q, None
    if p is None:
        return None
    if q is None:
        return (p, None)
    if p == q:
        return None
    if keyf(p) < keyf(q):
        p, q = q, p
    return (p, q)


def _breduce(b: Binomial, leads: list[Exp], tails: list, keyf) -> Binomial | None:
    """Fully reduce the binomial ``b`` by the basis ``(leads, tails)``."""
    p, q = b
    while True:
        i = find_divisor(leads, p)
        if i < 0:
            break
        t = tails[i]
        if t is None:
            if q is None:
                return None
            p, q = q, None
            continue
        p2 = tuple(x - y + z for x, y, z in zip(p, leads[i], t))
        r = _bnorm(p2, q, keyf)
        if r is None:
            return None
        p, q = r
    while q is not None:
        i = find_divisor(leads, q)
        if i < 0:
            break
        t = tails[i]
        if t is None:
            q = None
            break
        q = tuple(x - y + z for x, y, z in zip(q, leads[i], t))
    return (p, q)


def binomial_groebner(
    binomials: Iterable[tuple[Sequence[int], Sequence[int] | None]],
    order: MonomialOrder = DEGREVLEX,
) -> list[Binomial]:
    """Reduced Groebner basis of an ideal of difference binomials and monomials.

    Entries are ``(a, b)`` meaning ``x^a - x^b``, or ``(a, None)`` for the
    monomial ``x^a``. Output entries have the lead first and are sorted by
    lead ascending.
    """
    keyf = order.keyfunc()
    inputs = []
    for a, b in binomials:
        r = _bnorm(tuple(a), None if b is None else tuple(b), keyf)
        if r is not None:
            inputs.append(r)
    inputs.sort(key=lambda r: keyf(r[0]))
    store: list[Binomial] = []
    pairs = _Pairs(keyf)

    def active():
        idx = pairs.active
        return [store[i][0] for i in idx], [store[i][1] for i in idx]

    for b in inputs:
        leads, tails = active()
        r = _breduce(b, leads, tails, keyf)
        if r is not None:
            store.append(r)
            pairs.add(r[0])
    while True:
        pr = pairs.pop()
        if pr is None:
            break
        (a1, b1), (a2, b2) = store[pr[0]], store[pr[1]]
        m = lcm(a1, a2)
        t1 = None if b1 is None else tuple(x - y + z for x, y, z in zip(m, a1, b1))
        t2 = None if b2 is None else tuple(x - y + z for x, y, z in zip(m, a2, b2))
        s = _bnorm(t1, t2, keyf)
        if s is None:
            continue
        leads, tails = active()
        r = _breduce(s, leads, tails, keyf)
        if r is not None:
            store.append(r)
            pairs.add(r[0])
    basis = sorted((store[i] for i in pairs.active), key=lambda r: keyf(r[0]))
    minimal: list[Binomial] = []
    for b in basis:
        if not any(divides(c[0], b[0]) for c in minimal):
            minimal.append(b)
    out = []
    for i, (p, q) in enumerate(minimal):
        if q is None:
            out.append((p, None))
            continue
        others = minimal[:i] + minimal[i + 1:]
        leads = [o[0] for o in others]
        tails = [o[1] for o in others]
        while q is not None:
            j = find_divisor(leads, q)
            if j < 0:
                break
            t = tails[j]
            q = None if t is None else tuple(x - y + z for x, y, z in zip(q, leads[j], t))
        out.append((p, q))
    return out


def binomial_reduce(b, basis: Sequence[Binomial], order: MonomialOrder = DEGREVLEX):
    """Normal form of ``x^a - x^b`` modulo a binomial Groebner basis (None for zero)."""
    keyf = order.keyfunc()
    r = _bnorm(tuple(b[0]), None if b[1] is None else tuple(b[1]), keyf)
    if r is None:
        return None
    return _breduce(r, [g[0] for g in basis], [g[1] for g in basis], keyf)


def binomials_to_basis(basis: Sequence[Binomial], nvars: int, order: MonomialOrder, field: Field = QQ) -> GroebnerBasis:
    gens = tuple(Polynomial.binomial(a, b, field) for a, b in basis)
    return GroebnerBasis(gens, order, nvars, field)


# standard monomials ------------------------------------------------------


def standard_monomials(leads: Iterable[Sequence[int]] | GroebnerBasis, nvars: int | None = None) -> list[Exp]:
    """Monomials outside the monomial ideal generated by ``leads``.

    Sorted by degree, then with ``x0 > x1 > ...`` lexicographically.
    Raises :class:`InfiniteDimension` if the set is infinite.
    """
    if isinstance(leads, GroebnerBasis):
        nvars = leads.nvars
        leads = leads.leading_monomials
    leads = [tuple(a) for a in leads]
    if nvars is None:
        raise ValueError("nvars is required")
    if any(not any(a) for a in leads):
        return []
    for i in range(nvars):
        if not any(a[i] > 0 and sum(a) == a[i] for a in leads):
            raise InfiniteDimension(f"no pure power of x{i} among the leading monomials")
    zero = (0,) * nvars
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(nvars):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f in seen:
                    continue
                if find_divisor(leads, f) >= 0:
                    continue
                seen.add(f)
                nxt.append(f)
        frontier = nxt
    return sorted(seen, key=lambda e: (sum(e), tuple(-x for x in e)))
