"""Buchberger Groebner bases for ideals and submodules of free modules.

Internally a (module) polynomial is a ``dict`` mapping a *term* to a nonzero
Fraction, where a term is a flat tuple ``(component, e_1, ..., e_d)``.  Ideals
live in component 0.  Monomial orders are degree reverse lexicographic with
``x_1 > ... > x_d``, extended to modules position-over-term with lower
component indices larger; the intersection routine additionally uses a block
order eliminating one auxiliary variable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from operator import add, sub
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import AlgebraError, NotArtinianError
from .ring import Monomial, Polynomial, monomials_of_degree

Term = Tuple[int, ...]
IPoly = Dict[Term, Fraction]


class _Order:
    """Cached term-order keys; a larger key is a larger term."""

    def __init__(self, eliminate_first: bool = False, term_first: bool = False, split: Optional[int] = None):
        self.eliminate_first = eliminate_first
        self.term_first = term_first or split is not None
        # components below ``split`` dominate every component at or above it
        self.split = split
        self._cache: Dict[Term, tuple] = {}

    def key(self, t: Term) -> tuple:
        k = self._cache.get(t)
        if k is None:
            if self.term_first:
                rest = t[1:]
                k = (sum(rest),) + tuple(-e for e in reversed(rest)) + (-t[0],)
                if self.split is not None:
                    k = (t[0] < self.split,) + k
            elif self.eliminate_first:
                rest = t[2:]
                k = (-t[0], t[1], sum(rest)) + tuple(-e for e in reversed(rest))
            else:
                rest = t[1:]
                k = (-t[0], sum(rest)) + tuple(-e for e in reversed(rest))
            self._cache[t] = k
        return k


DEGREVLEX = _Order()
# term-over-position; only used internally where the result is order independent
_TOP = _Order(term_first=True)


def _divides(a: Term, b: Term) -> bool:
    if a[0] != b[0]:
        return False
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Term, b: Term) -> Term:
    return tuple(map(max, a, b))


def _lead(p: IPoly, order: _Order) -> Term:
    return max(p, key=order.key)


def _sub_multiple(p: IPoly, g: IPoly, coeff: Fraction, shift: Term) -> None:
    """In place: ``p -= coeff * x^shift * g``."""
    for t, c in g.items():
        nt = tuple(map(add, t, shift))
        v = p.get(nt, 0) - coeff * c
        if v:
            p[nt] = v
        else:
            p.pop(nt, None)


def _reduce(p: IPoly, basis: Sequence[Tuple[Term, IPoly]], order: _Order, full: bool = True) -> IPoly:
    """Remainder of ``p`` on division by monic ``basis`` (list of (lead, poly))."""
    p = dict(p)
    rem: IPoly = {}
    key = order.key
    while p:
        lt = max(p, key=key)
        c = p[lt]
        for glead, g in basis:
            if _divides(glead, lt):
                _sub_multiple(p, g, c, tuple(map(sub, lt, glead)))
                break
        else:
            rem[lt] = c
            del p[lt]
            if not full:
                rem.update(p)
                break
    return rem


def _monic(p: IPoly, order: _Order) -> Tuple[Term, IPoly]:
    lt = _lead(p, order)
    c = p[lt]
    if c != 1:
        inv = 1 / c
        p = {t: v * inv for t, v in p.items()}
    return lt, p


def _buchberger(gens: Iterable[IPoly], order: _Order) -> List[Tuple[Term, IPoly]]:
    """Reduced Groebner basis, as a list of (lead term, monic poly), sorted by lead."""
    basis: List[Tuple[Term, IPoly]] = []
    pending = set()
    heap: list = []
    key = order.key
    gens = [g for g in gens if g]
    # the coprime-lead criterion is only valid when everything sits in one component
    ideal_case = all(t[0] == 0 for g in gens for t in g)

    def add_element(p: IPoly) -> None:
        lt, p = _monic(p, order)
        idx = len(basis)
        basis.append((lt, p))
        for j in range(idx):
            other = basis[j][0]
            if other[0] == lt[0]:
                pending.add((j, idx))
                heapq.heappush(heap, (key(_lcm(other, lt)), j, idx))

    for g in gens:
        r = _reduce(g, basis, order, full=False)
        if r:
            add_element(r)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, gi = basis[i]
        lj, gj = basis[j]
        lcm = _lcm(li, lj)
        # product criterion: coprime lead monomials in the same component
        if ideal_case and all(a == 0 or b == 0 for a, b in zip(li[1:], lj[1:])):
            continue
        # chain criterion
        skip = False
        for k, (lk, _) in enumerate(basis):
            if k in (i, j) or not _divides(lk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        s = {}
        _sub_multiple(s, gi, Fraction(-1), tuple(map(sub, lcm, li)))
        _sub_multiple(s, gj, Fraction(1), tuple(map(sub, lcm, lj)))
        r = _reduce(s, basis, order, full=False)
        if r:
            add_element(r)

    # minimize then inter-reduce
    leads = [lt for lt, _ in basis]
    keep = []
    for idx, lt in enumerate(leads):
        redundant = False
        for jdx, other in enumerate(leads):
            if jdx == idx or not _divides(other, lt):
                continue
            if other != lt or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(basis[idx])
    reduced = []
    for idx, (lt, g) in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        tail = dict(g)
        del tail[lt]
        tail = _reduce(tail, others, order)
        tail[lt] = Fraction(1)
        reduced.append((lt, tail))
    reduced.sort(key=lambda e: key(e[0]), reverse=True)
    return reduced


# -- conversions --------------------------------------------------------------


def _poly_in(f: Polynomial, comp: int = 0) -> IPoly:
    return {(comp,) + m: c for m, c in f.items()}


def _vec_in(vec: Sequence[Polynomial], offset: int = 0) -> IPoly:
    out: IPoly = {}
    for comp, f in enumerate(vec):
        for m, c in f.items():
            out[(comp + offset,) + m] = c
    return out


def _poly_out(p: IPoly, nvars: int) -> Polynomial:
    return Polynomial._raw({t[1:]: c for t, c in p.items()}, nvars)


def _vec_out(p: IPoly, rank: int, nvars: int, offset: int = 0) -> Tuple[Polynomial, ...]:
    parts: List[dict] = [{} for _ in range(rank)]
    for t, c in p.items():
        parts[t[0] - offset][t[1:]] = c
    return tuple(Polynomial._raw(d, nvars) for d in parts)


# -- ideals -------------------------------------------------------------------


class Ideal:
    """An ideal given by generators, with a write-once Groebner basis cache."""

    def __init__(self, gens: Iterable[Polynomial], nvars: Optional[int] = None):
        gens = list(gens)
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for an ideal without generators")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generators live in different rings")
        self.nvars = nvars
        self.gens: Tuple[Polynomial, ...] = tuple(g for g in gens if g)
        self._gb: Optional[List[Tuple[Term, IPoly]]] = None

    def _basis(self) -> List[Tuple[Term, IPoly]]:
        if self._gb is None:
            self._gb = _buchberger((_poly_in(g) for g in self.gens), DEGREVLEX)
        return self._gb

    def groebner_basis(self) -> Tuple[Polynomial, ...]:
        return tuple(_poly_out(p, self.nvars) for _, p in self._basis())

    def lead_monomials(self) -> List[Monomial]:
        return [lt[1:] for lt, _ in self._basis()]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return _poly_out(_reduce(_poly_in(f), self._basis(), DEGREVLEX), self.nvars)

    def contains(self, f: Polynomial) -> bool:
        return not _reduce(_poly_in(f), self._basis(), DEGREVLEX)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.lead_monomials())

    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __repr__(self):
        return f"Ideal([{', '.join(g.format() for g in self.gens)}])"


def groebner_basis(I):
    """Reduced Groebner basis of an :class:`Ideal` or :class:`Module`."""
    return I.groebner_basis()


def normal_form(f, I):
    return I.normal_form(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.nvars != J.nvars:
        return False
    return I._basis() == J._basis()


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.gens + J.gens, I.nvars)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    seen = []
    for f in I.gens:
        for g in J.gens:
            h = f * g
            if h not in seen:
                seen.append(h)
    return Ideal(seen, I.nvars)


def unit_ideal(nvars: int) -> Ideal:
    return Ideal([Polynomial.one(nvars)], nvars)


def max_ideal_power(s: int, d: int) -> Ideal:
    """``m^s`` for ``m = (x_1, ..., x_d)``, generated by all degree-``s`` monomials."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    return Ideal([Polynomial.monomial(m) for m in monomials_of_degree(s, d)], d)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    n = I.nvars
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    if not I.gens or not J.gens:
        return Ideal([], n)
    gens = []
    for f in I.gens:
        gens.append({(0, 1) + m: c for m, c in f.items()})
    for g in J.gens:
        p: IPoly = {}
        for m, c in g.items():
            p[(0, 0) + m] = c
            p[(0, 1) + m] = -c
        gens.append(p)
    basis = _buchberger(gens, _Order(eliminate_first=True))
    kept = [Polynomial._raw({t[2:]: c for t, c in p.items()}, n) for lt, p in basis if lt[1] == 0]
    return Ideal(kept, n)


def quotient_by_element(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g`` read off the syzygies of ``(g, f_1, ..., f_k)``."""
    n = I.nvars
    if not g:
        return unit_ideal(n)
    if I.contains(g):
        return unit_ideal(n)
    syz = syzygies([(g,)] + [(f,) for f in I.gens], 1, n)
    return Ideal([v[0] for v in syz], n)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """``I : J = {f : f J ⊆ I}``, intersecting ``I : g`` over the generators of ``J``."""
    if not J.gens:
        raise AlgebraError("colon by zero ideal")
    result: Optional[Ideal] = None
    for g in J.gens:
        q = quotient_by_element(I, g)
        result = q if result is None else ideal_intersection(result, q)
    result._basis()
    return result


# -- standard monomials -------------------------------------------------------


def _pure_power_bounds(I: Ideal) -> Optional[List[int]]:
    """Exponent ``n_i`` of the pure power ``x_i^{n_i}`` among the lead monomials."""
    d = I.nvars
    bounds: List[Optional[int]] = [None] * d
    for m in I.lead_monomials():
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
        elif not support:
            return [0] * d
    if any(b is None for b in bounds):
        return None
    return bounds  # type: ignore[return-value]


def standard_monomials(I: Ideal) -> List[Monomial]:
    """Monomials outside the lead-term ideal, sorted by degrevlex."""
    bounds = _pure_power_bounds(I)
    if bounds is None:
        raise NotArtinianError("not Artinian")
    leads = I.lead_monomials()
    out: List[Monomial] = []

    def rec(prefix: List[int], i: int) -> None:
        if i == I.nvars:
            m = tuple(prefix)
            if not any(all(a <= b for a, b in zip(l, m)) for l in leads):
                out.append(m)
            return
        for e in range(bounds[i]):
            prefix.append(e)
            rec(prefix, i + 1)
            prefix.pop()

    if all(b > 0 for b in bounds):
        rec([], 0)
    from .ring import degrevlex_key

    out.sort(key=degrevlex_key)
    return out


def colength(I: Ideal) -> int:
    """``dim_k R/I``; raises :class:`NotArtinianError` for infinite quotients."""
    return len(standard_monomials(I))


@dataclass(frozen=True)
class OriginCheck:
    ok: bool
    D: Optional[int]


def origin_primary_check(I: Ideal) -> OriginCheck:
    """Check ``m^D ⊆ I`` with ``D = 1 + sum(n_i - 1)`` from the pure-power leads."""
    bounds = _pure_power_bounds(I)
    if bounds is None or any(b == 0 for b in bounds):
        return OriginCheck(False, None)
    D = 1 + sum(b - 1 for b in bounds)
    for m in monomials_of_degree(D, I.nvars):
        if not I.contains(Polynomial.monomial(m)):
            return OriginCheck(False, None)
    return OriginCheck(True, D)


# -- modules ------------------------------------------------------------------


class Module:
    """Submodule of ``R^rank`` generated by polynomial vectors."""

    def __init__(self, gens: Iterable[Sequence[Polynomial]], rank: int, nvars: int, order: _Order = DEGREVLEX):
        self.rank = rank
        self.nvars = nvars
        self.order = order
        vecs = []
        for v in gens:
            v = tuple(v)
            if len(v) != rank:
                raise ValueError(f"generator of length {len(v)} in a rank-{rank} module")
            if any(v):
                vecs.append(v)
        self.gens: Tuple[Tuple[Polynomial, ...], ...] = tuple(vecs)
        self._gb: Optional[List[Tuple[Term, IPoly]]] = None

    def _basis(self):
        if self._gb is None:
            self._gb = _buchberger((_vec_in(v) for v in self.gens), self.order)
        return self._gb

    def groebner_basis(self):
        return tuple(_vec_out(p, self.rank, self.nvars) for _, p in self._basis())

    def normal_form(self, vec: Sequence[Polynomial]):
        return _vec_out(_reduce(_vec_in(vec), self._basis(), self.order), self.rank, self.nvars)

    def contains(self, vec: Sequence[Polynomial]) -> bool:
        return not _reduce(_vec_in(vec), self._basis(), self.order)

    def is_zero(self) -> bool:
        return not self.gens


def syzygies(gens: Sequence[Sequence[Polynomial]], rank: int, nvars: int) -> List[Tuple[Polynomial, ...]]:
    """Generators of ``{c : sum c_j g_j = 0}`` for vectors ``g_j`` in ``R^rank``.

    Computes a reduced basis of the module spanned by ``(g_j, e_j)`` in
    ``R^rank + R^k`` under a block order where the first summand dominates;
    the basis elements leading in the second summand span the syzygies.  The
    result is not minimal.
    """
    gens = [tuple(v) for v in gens]
    if not gens:
        return []
    k = len(gens)
    stacked = []
    for j, v in enumerate(gens):
        p = _vec_in(v)
        p[(rank + j,) + (0,) * nvars] = Fraction(1)
        stacked.append(p)
    basis = _buchberger(stacked, _Order(split=rank))
    return [_vec_out(p, k, nvars, offset=rank) for lt, p in basis if lt[0] >= rank]


def local_membership(g: Sequence[Polynomial], N: Module) -> bool:
    """Whether ``g`` lies in ``N`` after localizing at the origin.

    Holds iff the colon ``(N : g)`` contains an element that is a unit at the
    origin, i.e. one of its generators has a nonzero constant term.
    """
    g = tuple(g)
    if len(g) != N.rank:
        raise ValueError("vector length does not match module rank")
    if not any(g):
        return True
    if not N.gens:
        return False
    syz = syzygies([g] + list(N.gens), N.rank, N.nvars)
    return any(v[0].constant_term() != 0 for v in syz)
