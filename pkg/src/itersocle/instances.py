"""Seeded random test instances and named fixtures."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .groebner import Ideal, origin_primary_check
from .koszul import KoszulElement
from .matrices import PolyMatrix, maximal_minors, minors
from .ring import Polynomial, a_degree, monomials_of_degree, variables

DEFAULT_SEED = 20240611
SEED_ENV = "ITERSOCLE_SEED"

FIXTURE_TEXT = """ring vars=x,y
ideal
x^2*y^2 + y^5
x^4 + x^2*y^3
x^6
"""


def suite_seed(seed: Optional[int] = None) -> int:
    """Explicit seed, else the environment override, else the default."""
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    return int(env) if env else DEFAULT_SEED


def fixture_ideal() -> Ideal:
    x, y = variables(2)
    return Ideal([x**2 * y**2 + y**5, x**4 + x**2 * y**3, x**6], 2)


def _pure(i: int, e: int, d: int) -> Polynomial:
    exps = [0] * d
    exps[i] = e
    return Polynomial.monomial(exps)


def _random_monomial(rng: random.Random, d: int, lo: int, hi: int) -> Tuple[int, ...]:
    deg = rng.randint(lo, hi)
    return rng.choice(list(monomials_of_degree(deg, d)))


def _coeff(rng: random.Random) -> int:
    return rng.choice([1, -1, 2, -2, 3])


@dataclass
class SuiteIdeal:
    label: str
    ideal: Ideal


def random_origin_primary_ideal(rng: random.Random, d: int, max_degree: int = 5) -> Ideal:
    """Perturbed pure powers plus a few extra binomials, rejected until primary to the origin."""
    top = max_degree if d == 2 else min(max_degree, 4)
    while True:
        gens = []
        for i in range(d):
            e = rng.randint(2, top)
            f = _pure(i, e, d)
            if rng.random() < 0.6:
                f = f + Polynomial.monomial(_random_monomial(rng, d, e, top), _coeff(rng))
            gens.append(f)
        for _ in range(rng.randint(0, 2)):
            lo = rng.randint(2, top)
            g = Polynomial.monomial(_random_monomial(rng, d, lo, top), 1)
            if rng.random() < 0.5:
                g = g + Polynomial.monomial(_random_monomial(rng, d, lo, top), _coeff(rng))
            if g:
                gens.append(g)
        I = Ideal(gens, d)
        if origin_primary_check(I).ok and not I.is_unit():
            return I


def random_ideal_suite(count: int = 30, seed: Optional[int] = None) -> List[SuiteIdeal]:
    rng = random.Random(suite_seed(seed))
    out = []
    for k in range(count):
        d = 2 if k % 5 < 3 else 3
        out.append(SuiteIdeal(f"ideal{k:02d}_d{d}", random_origin_primary_ideal(rng, d)))
    return out


def random_complete_intersection(rng: random.Random, d: int, binomial: bool) -> List[Polynomial]:
    top = 5 if d == 2 else 4
    while True:
        gens = []
        for i in range(d):
            e = rng.randint(2, top)
            f = _pure(i, e, d)
            if binomial:
                lo = max(e, 2)
                m = _random_monomial(rng, d, lo, top + 1)
                while m == f.lead_monomial():
                    m = _random_monomial(rng, d, lo, top + 1)
                f = f + Polynomial.monomial(m, _coeff(rng))
            gens.append(f)
        if origin_primary_check(Ideal(gens, d)).ok:
            return gens


def random_ci_suite(count: int = 10, seed: Optional[int] = None) -> List[Tuple[str, List[Polynomial]]]:
    rng = random.Random(suite_seed(seed) + 1)
    out = []
    for k in range(count):
        d = 2 if k % 2 == 0 else 3
        binomial = k % 4 >= 2
        kind = "binomial" if binomial else "monomial"
        out.append((f"ci{k:02d}_{kind}_d{d}", random_complete_intersection(rng, d, binomial)))
    return out


def _order_at_least(rng: random.Random, s: int, spread: int, terms: int) -> Polynomial:
    t = {}
    for _ in range(terms):
        t[_random_monomial(rng, 2, s, s + spread)] = _coeff(rng)
    return Polynomial(t, 2)


def random_hb_matrix(rng: random.Random, columns: int, s: int) -> PolyMatrix:
    """``(columns+1) x columns`` matrix with entries of order ``>= s`` presenting an origin-primary ideal."""
    x, y = variables(2)
    zero = Polynomial.zero(2)
    while True:
        rows = [[zero] * columns for _ in range(columns + 1)]
        for j in range(columns):
            rows[j][j] = x ** (s + rng.randint(0, 1))
            rows[j + 1][j] = y ** (s + rng.randint(0, 1))
            if rng.random() < 0.6:
                r = rng.randrange(columns + 1)
                rows[r][j] = rows[r][j] + _order_at_least(rng, s, 1, 1)
        M = PolyMatrix(rows, 2)
        if any(f and f.order() < s for f in M.entries()):
            continue
        I = Ideal(maximal_minors(M), 2)
        if origin_primary_check(I).ok:
            return M


def random_hb_suite(count: int = 15, seed: Optional[int] = None) -> List[Tuple[str, PolyMatrix, int]]:
    rng = random.Random(suite_seed(seed) + 2)
    out = []
    for k in range(count):
        columns = 2 if k % 3 else 3
        s = 1 + k % 3 if columns == 2 else 1 + k % 2
        out.append((f"hb{k:02d}_{columns + 1}x{columns}_s{s}", random_hb_matrix(rng, columns, s), s))
    return out


def random_lower_minor_matrix(rng: random.Random, s: int) -> PolyMatrix:
    """``2 x 3`` matrix with entries in ``m^s`` whose ``2 x 2`` minors are primary to the origin."""
    x, y = variables(2)
    zero = Polynomial.zero(2)
    while True:
        rows = [[zero] * 3 for _ in range(2)]
        for j in range(2):
            rows[j][j] = x ** (s + rng.randint(0, 1))
            rows[j][j + 1] = y ** (s + rng.randint(0, 1))
        for _ in range(rng.randint(1, 3)):
            r, c = rng.randrange(2), rng.randrange(3)
            rows[r][c] = rows[r][c] + _order_at_least(rng, s, 1, 1)
        M = PolyMatrix(rows, 2)
        if any(f and f.order() < s for f in M.entries()):
            continue
        if origin_primary_check(minors(M, 2)).ok:
            return M


def random_lower_minor_suite(count: int = 10, seed: Optional[int] = None) -> List[Tuple[str, PolyMatrix, int]]:
    rng = random.Random(suite_seed(seed) + 3)
    out = []
    for k in range(count):
        s = 1 + k % 2
        out.append((f"lm{k:02d}_s{s}", random_lower_minor_matrix(rng, s), s))
    return out


def linear_sharpness_matrix(n: int) -> PolyMatrix:
    """``n x (n+1)`` linear matrix with ``x`` on the diagonal and ``y`` above it; ``I_n = m^n``."""
    x, y = variables(2)
    zero = Polynomial.zero(2)
    rows = []
    for r in range(n):
        row = [zero] * (n + 1)
        row[r] = x
        row[r + 1] = y
        rows.append(row)
    return PolyMatrix(rows, 2)


def random_koszul_element(rng: random.Random) -> KoszulElement:
    """Random element of the Koszul complex with no component of internal degree 0."""
    from itertools import combinations

    d = rng.randint(1, 3)
    a = tuple(rng.randint(1, 4) for _ in range(d))
    ell = rng.randint(0, d)
    subsets = list(combinations(range(d), ell))
    coeffs = {}
    for J in rng.sample(subsets, rng.randint(1, len(subsets))):
        t = {}
        for _ in range(rng.randint(1, 4)):
            t[_random_monomial(rng, d, 0, 6)] = rng.choice([1, -1, 2, 3, -5])
        if ell == 0:
            # internal degree 0 means every exponent below its a_i
            t = {m: c for m, c in t.items() if a_degree(m, a) > 0}
        coeffs[J] = Polynomial(t, d)
    v = KoszulElement(a, ell, coeffs)
    if v.is_zero():
        return random_koszul_element(rng)
    return v


def random_koszul_suite(count: int = 200, seed: Optional[int] = None) -> List[KoszulElement]:
    rng = random.Random(suite_seed(seed) + 4)
    return [random_koszul_element(rng) for _ in range(count)]
