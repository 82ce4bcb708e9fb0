"""Iterated socles ``I : m^s`` and the structural checks around them."""

from __future__ import annotations

from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import AlgebraError, NotOriginPrimaryError, OutOfRangeError
from .groebner import (
    Ideal,
    ideal_equal,
    ideal_product,
    ideal_quotient,
    max_ideal_power,
    origin_primary_check,
    standard_monomials,
)
from .koszul import koszul_cycle_generators
from .linalg import nullspace
from .matrices import PolyMatrix, det
from .report import COMPUTED, FAIL, PASS, Report, format_generators
from .resolution import FreeComplex, minimal_free_resolution, order_of_last_map
from .ring import Polynomial, compositions, monomials_of_degree


def _require_origin_primary(I: Ideal) -> None:
    if not origin_primary_check(I).ok:
        raise NotOriginPrimaryError("input ideal not primary to the origin")


def socle_by_linear_algebra(I: Ideal, s: int) -> Ideal:
    """``I : m^s`` as ``I`` plus the kernel of ``f -> (u f)_u`` on the standard monomials of ``R/I``."""
    basis = standard_monomials(I)
    index = {m: k for k, m in enumerate(basis)}
    rows: List[List] = []
    for u in monomials_of_degree(s, I.nvars):
        block = [[0] * len(basis) for _ in basis]
        for col, b in enumerate(basis):
            prod = tuple(p + q for p, q in zip(u, b))
            for m, c in I.normal_form(Polynomial.monomial(prod)).items():
                block[index[m]][col] = c
        rows.extend(block)
    extra = []
    for v in nullspace(rows, len(basis)):
        extra.append(Polynomial({m: c for m, c in zip(basis, v) if c}, I.nvars))
    return Ideal(list(I.gens) + extra, I.nvars)


def socle_oracle(I: Ideal, s: int, cross_check: bool = True) -> Ideal:
    """``I : m^s`` by Groebner colon, optionally confirmed by linear algebra."""
    if s < 1:
        raise ValueError("s must be positive")
    _require_origin_primary(I)
    K = ideal_quotient(I, max_ideal_power(s, I.nvars))
    if cross_check and not ideal_equal(K, socle_by_linear_algebra(I, s)):
        raise AlgebraError(f"Groebner colon and linear-algebra socle disagree at s={s}")
    return K


def _resolve(I: Ideal, C: Optional[FreeComplex]) -> FreeComplex:
    return minimal_free_resolution(I) if C is None else C


def _check_range(C: FreeComplex, s: int) -> None:
    bound = order_of_last_map(C)
    if s > bound:
        raise OutOfRangeError(f"s={s} violates s ≤ o(I_1(φ_d)) = {bound}")


def power_ideal(a: Sequence[int]) -> Ideal:
    """``(x_1^{a_1}, ..., x_d^{a_d})``."""
    d = len(a)
    gens = []
    for i, ai in enumerate(a):
        exps = [0] * d
        exps[i] = ai
        gens.append(Polynomial.monomial(exps))
    return Ideal(gens, d)


def socle_compositions(s: int, d: int) -> List[Tuple[int, ...]]:
    """Positive compositions of ``s + d - 1`` into ``d`` parts, lexicographic."""
    return list(compositions(s + d - 1, d))


def socle_via_decomposition(
    I: Ideal, s: int, C: Optional[FreeComplex] = None, check_range: bool = True
) -> Ideal:
    """Sum over ``|a| = s + d - 1`` of ``I : (x_1^{a_1}, ..., x_d^{a_d})``."""
    C = _resolve(I, C)
    if check_range:
        _check_range(C, s)
    gens = list(I.gens)
    for a in socle_compositions(s, I.nvars):
        gens.extend(ideal_quotient(I, power_ideal(a)).groebner_basis())
    return Ideal(gens, I.nvars)


def formula_generators_by_composition(
    I: Ideal, s: int, C: Optional[FreeComplex] = None, check_range: bool = True
) -> Dict[Tuple[int, ...], List[Polynomial]]:
    """Closed-formula generators of ``I : (x^a)`` for every composition ``a``."""
    C = _resolve(I, C)
    if check_range:
        _check_range(C, s)
    d = I.nvars
    full = tuple(range(d))
    out = {}
    for a in socle_compositions(s, d):
        cycles = koszul_cycle_generators(C, a, d, modulo=I)
        out[a] = [z.coefficient(full) for z in cycles]
    return out


def socle_generators_formula(
    I: Ideal, s: int, C: Optional[FreeComplex] = None, check_range: bool = True
) -> List[Polynomial]:
    """Generators of ``(I : m^s)/I`` from the contracting-homotopy formula."""
    per = formula_generators_by_composition(I, s, C, check_range)
    return [g for a in per for g in per[a]]


def predicted_socle_dimension(C: FreeComplex, s: int, check_range: bool = True) -> int:
    """``rank F_d * C(s + d - 1, d)``, the length of ``(I : m^s)/I``."""
    if check_range:
        _check_range(C, s)
    d = C.nvars
    return C.betti[d] * comb(s + d - 1, d)


def verify_reduction_one(I: Ideal, s: int, C: Optional[FreeComplex] = None) -> Report:
    """Check ``K^2 = I K`` for ``K = I : m^s``.

    Status is FAIL with a witness whenever equality fails.  When it holds the
    status is PASS inside the range ``s ≤ o(I_1(φ_d)) - 1`` and COMPUTED
    outside it.
    """
    if I.nvars < 2:
        raise ValueError("reduction-number check needs d ≥ 2")
    C = _resolve(I, C)
    bound = order_of_last_map(C)
    in_range = s <= bound - 1
    K = socle_oracle(I, s)
    Kgens = K.groebner_basis()
    IK = ideal_product(I, K)
    KK = ideal_product(K, K)
    payload = {
        "s": s,
        "order_last_map": bound,
        "in_range": in_range,
        "socle": format_generators(Kgens),
    }
    if ideal_equal(KK, IK):
        return Report("reduction_one", PASS if in_range else COMPUTED, payload)
    witness = None
    for i, f in enumerate(Kgens):
        for g in Kgens[i:]:
            if not IK.contains(f * g):
                witness = {"product": f"({f.format()})*({g.format()})", "value": (f * g).format()}
                break
        if witness:
            break
    payload["equality"] = "K^2 != I*K"
    return Report("reduction_one", FAIL, payload, [witness])


def verify_dimension(I: Ideal, s: int, C: Optional[FreeComplex] = None) -> Report:
    """Compare ``colength(I) - colength(I : m^s)`` with ``rank F_d * C(s+d-1, d)``."""
    from .groebner import colength

    C = _resolve(I, C)
    bound = order_of_last_map(C)
    in_range = s <= bound
    K = socle_oracle(I, s)
    observed = colength(I) - colength(K)
    predicted = predicted_socle_dimension(C, s, check_range=False)
    payload = {
        "s": s,
        "order_last_map": bound,
        "in_range": in_range,
        "observed": observed,
        "predicted": predicted,
        "rank_last": C.betti[-1],
    }
    if observed == predicted:
        return Report("dimension", PASS if in_range else COMPUTED, payload)
    if not in_range:
        return Report("dimension", COMPUTED, payload)
    return Report("dimension", FAIL, payload, [{"observed": observed, "predicted": predicted}])


def transition_matrix(gens: Sequence[Polynomial]) -> PolyMatrix:
    """``C`` with ``f_i = sum_j C_ij x_j``, splitting each monomial at its first variable."""
    d = gens[0].nvars
    entries = [[{} for _ in range(d)] for _ in gens]
    for i, f in enumerate(gens):
        for m, c in f.items():
            j = next((k for k, e in enumerate(m) if e), None)
            if j is None:
                raise AlgebraError(f"generator {f.format()} has a nonzero constant term")
            rest = m[:j] + (m[j] - 1,) + m[j + 1:]
            entries[i][j][rest] = c
    return PolyMatrix([[Polynomial(e, d) for e in row] for row in entries], d)


def ci_socle(gens: Sequence[Polynomial]) -> Ideal:
    """Socle ``(f_1, ..., f_d, det C)`` of a complete intersection at the origin."""
    gens = list(gens)
    if not gens:
        raise AlgebraError("no generators")
    d = gens[0].nvars
    if len(gens) != d:
        raise AlgebraError(f"a complete intersection in {d} variables needs {d} generators, got {len(gens)}")
    for f in gens:
        if not f or f.constant_term():
            raise AlgebraError(f"generator {f.format()} is not in the maximal ideal")
    I = Ideal(gens, d)
    if not origin_primary_check(I).ok:
        raise AlgebraError("not a complete intersection at the origin: ideal is not primary to the origin")
    return Ideal(gens + [det(transition_matrix(gens))], d)


def redundant_formula_generators(I: Ideal, s: int, gens: Sequence[Polynomial]) -> List[int]:
    """Indices of ``gens`` lying in ``I + (other gens) + m (I : m^s)``.

    Every such ideal contains ``I`` and so is primary to the origin; global
    membership therefore agrees with membership after localizing.
    """
    K = socle_oracle(I, s, cross_check=False)
    mK = ideal_product(max_ideal_power(1, I.nvars), K)
    bad = []
    for i, g in enumerate(gens):
        others = [h for j, h in enumerate(gens) if j != i]
        if Ideal(list(I.gens) + others + list(mK.gens), I.nvars).contains(g):
            bad.append(i)
    return bad
