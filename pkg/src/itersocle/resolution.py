"""Locally minimal free resolutions of ``R/I`` for origin-primary ideals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import AlgebraError, NotOriginPrimaryError
from .groebner import _TOP, DEGREVLEX, Ideal, Module, _vec_in, origin_primary_check, syzygies
from .linalg import rank as rank_of
from .ring import INFINITY, Polynomial, variables

Vector = Tuple[Polynomial, ...]
Matrix = Tuple[Tuple[Polynomial, ...], ...]


def vector_order(v: Sequence[Polynomial]):
    return min((f.order() for f in v), default=INFINITY)


def _lead_key(v: Sequence[Polynomial]) -> tuple:
    p = _vec_in(v)
    return DEGREVLEX.key(max(p, key=DEGREVLEX.key))


def canonical_key(v: Sequence[Polynomial]) -> tuple:
    """Sort key: order, then top degree and size (small syzygies first), then the lead."""
    top = max((f.degree() for f in v if f), default=0)
    return (vector_order(v), top, sum(len(f) for f in v), _lead_key(v))


def normalize_vector(v: Sequence[Polynomial]) -> Vector:
    p = _vec_in(v)
    lead = max(p, key=DEGREVLEX.key)
    c = p[lead]
    return tuple(f * (1 / c) for f in v)


def minimal_generators(gens: Sequence, rank: int | None = None) -> list:
    """Greedy locally minimal subset of ``gens`` (polynomials or vectors).

    Generators are sorted by ``(order, lead)`` and kept greedily from the
    smallest up while their images in ``N/mN`` stay linearly independent.  By
    Nakayama these images form a basis exactly when the kept set generates
    ``N`` locally at the origin.
    """
    scalar = bool(gens) and isinstance(gens[0], Polynomial)
    vecs = [(g,) if scalar else tuple(g) for g in gens]
    vecs = [v for v in vecs if any(v)]
    if not vecs:
        return []
    nvars = vecs[0][0].nvars
    rank = len(vecs[0])
    vecs.sort(key=canonical_key)
    # drop exact duplicates up front
    unique: List[Vector] = []
    for v in vecs:
        if v not in unique:
            unique.append(v)
    # N/mN lives at the origin, so independence of normal forms modulo mN
    # decides local minimality; normal forms are k-linear in the input
    shifted = [tuple(f * x for f in v) for v in unique for x in variables(nvars)]
    mN = Module(shifted, rank, nvars, _TOP)
    kept: List[Vector] = []
    rows: List[dict] = []
    for v in unique:
        nf = _vec_in(mN.normal_form(v))
        if not nf:
            continue
        if rows:
            cols = sorted(set().union(nf, *rows))
            if rank_of([[r.get(c, 0) for c in cols] for r in rows + [nf]], len(cols)) == len(rows):
                continue
        rows.append(nf)
        kept.append(v)
    return [v[0] for v in kept] if scalar else kept


def syzygy(gens: Sequence[Sequence[Polynomial]]) -> Module:
    """Kernel of the map ``R^k -> R^r`` whose columns are ``gens``."""
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("syzygy of an empty generator list")
    rank = len(gens[0])
    nvars = gens[0][0].nvars
    return Module(syzygies(gens, rank, nvars), len(gens), nvars)


@dataclass(frozen=True)
class FreeComplex:
    """``0 -> F_d -> ... -> F_1 -> F_0 = R``; ``maps[i-1]`` is ``phi_i`` as rows."""

    nvars: int
    maps: Tuple[Matrix, ...]

    @property
    def betti(self) -> Tuple[int, ...]:
        if not self.maps:
            return (1,)
        return (1,) + tuple(len(m[0]) for m in self.maps)

    @property
    def length(self) -> int:
        return len(self.maps)

    def phi(self, i: int) -> Matrix:
        return self.maps[i - 1]

    def columns(self, i: int) -> List[Vector]:
        m = self.phi(i)
        return [tuple(row[j] for row in m) for j in range(len(m[0]))]

    def generators(self) -> Tuple[Polynomial, ...]:
        """Entries of ``phi_1``, the generators of the resolved ideal."""
        return self.maps[0][0]

    def check(self) -> None:
        """Raise if a complex invariant fails."""
        for i in range(1, self.length):
            a, b = self.phi(i), self.phi(i + 1)
            for r in range(len(a)):
                for c in range(len(b[0])):
                    s = Polynomial.zero(self.nvars)
                    for k in range(len(b)):
                        s = s + a[r][k] * b[k][c]
                    if s:
                        raise AlgebraError(f"phi_{i} * phi_{i + 1} != 0")
        for m in self.maps:
            for row in m:
                for f in row:
                    if f.constant_term():
                        raise AlgebraError("resolution is not locally minimal")
        if sum((-1) ** i * b for i, b in enumerate(self.betti)):
            raise AlgebraError("alternating sum of Betti numbers is not zero")


def _columns_to_rows(cols: Sequence[Vector]) -> Matrix:
    return tuple(tuple(c[r] for c in cols) for r in range(len(cols[0])))


def minimal_free_resolution(I: Ideal) -> FreeComplex:
    """Locally minimal free resolution of ``R/I``; ``I`` must be origin-primary."""
    if not origin_primary_check(I).ok:
        raise NotOriginPrimaryError("input ideal not primary to the origin")
    d = I.nvars
    gens = minimal_generators(list(I.gens))
    gens = [g.monic() for g in gens]
    cols: List[Vector] = [(g,) for g in gens]
    maps = [_columns_to_rows(cols)]
    while True:
        kernel = syzygy(cols)
        if kernel.is_zero():
            break
        if len(maps) == d:
            raise AlgebraError("resolution longer than the ring dimension")
        cols = [normalize_vector(v) for v in minimal_generators(list(kernel.gens))]
        maps.append(_columns_to_rows(cols))
    if len(maps) != d:
        raise AlgebraError(f"resolution of length {len(maps)} for an Artinian quotient in {d} variables")
    return FreeComplex(d, tuple(maps))


def order_of_last_map(C: FreeComplex) -> int:
    """``o(I_1(phi_d))``, the least order of an entry of the last matrix."""
    if C.length < 1:
        raise ValueError("complex has no maps")
    return min(f.order() for row in C.maps[-1] for f in row if f)
