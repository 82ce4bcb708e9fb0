"""Seeded end-to-end checks, one report per claim."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .determinantal import (
    containment_witness,
    hb_delta,
    hb_psi,
    hb_psi_minors,
    verify_lower_minor_containment,
)
from .errors import AlgebraError
from .groebner import Ideal, colength, ideal_equal, max_ideal_power
from .instances import (
    FIXTURE_TEXT,
    linear_sharpness_matrix,
    random_ci_suite,
    random_hb_suite,
    random_ideal_suite,
    random_koszul_suite,
    random_lower_minor_suite,
    suite_seed,
)
from .koszul import connection_defect, koszul_differential, nabla_tilde
from .matrices import PolyMatrix, minors
from .problem import parse_problem
from .report import COMPUTED, FAIL, PASS, Report
from .resolution import FreeComplex, minimal_free_resolution, order_of_last_map
from .ring import Polynomial, variables
from .socle import (
    ci_socle,
    formula_generators_by_composition,
    predicted_socle_dimension,
    redundant_formula_generators,
    socle_oracle,
    socle_via_decomposition,
    verify_reduction_one,
)

MAX_S = 3


def _result(claim: str, failures: List, payload: Dict) -> Report:
    payload = dict(payload, failures=len(failures))
    if failures:
        return Report(claim, FAIL, payload, failures)
    return Report(claim, PASS, payload)


@lru_cache(maxsize=4)
def _resolved_suite(seed: int) -> Tuple[Tuple[str, Ideal, FreeComplex, int], ...]:
    out = []
    for item in random_ideal_suite(seed=seed):
        C = minimal_free_resolution(item.ideal)
        out.append((item.label, item.ideal, C, order_of_last_map(C)))
    return tuple(out)


def _in_range(seed: int):
    for label, I, C, bound in _resolved_suite(seed):
        for s in range(1, min(bound, MAX_S) + 1):
            yield label, I, C, bound, s


def check_oracle_consistency(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures, cases = [], 0
    for label, I, _, _ in _resolved_suite(seed):
        for s in range(1, MAX_S + 1):
            cases += 1
            try:
                socle_oracle(I, s, cross_check=True)
            except AlgebraError as exc:
                failures.append({"ideal": label, "s": s, "error": str(exc)})
    return _result("oracle_consistency", failures, {"seed": seed, "cases": cases})


def check_decomposition(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures, cases = [], 0
    for label, I, C, _, s in _in_range(seed):
        cases += 1
        if not ideal_equal(socle_via_decomposition(I, s, C), socle_oracle(I, s, cross_check=False)):
            failures.append({"ideal": label, "s": s})
    return _result("decomposition", failures, {"seed": seed, "cases": cases})


def check_formula(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures, cases = [], 0
    for label, I, C, _, s in _in_range(seed):
        cases += 1
        per = formula_generators_by_composition(I, s, C)
        counts = {a: len(g) for a, g in per.items()}
        if any(c != C.betti[-1] for c in counts.values()):
            failures.append({"ideal": label, "s": s, "counts": str(counts)})
            continue
        flat = [g for a in per for g in per[a]]
        K = socle_oracle(I, s, cross_check=False)
        if not ideal_equal(Ideal(list(I.gens) + flat, I.nvars), K):
            failures.append({"ideal": label, "s": s, "check": "ideal"})
            continue
        bad = redundant_formula_generators(I, s, flat)
        if bad:
            failures.append({"ideal": label, "s": s, "redundant": [flat[i].format() for i in bad]})
    return _result("formula", failures, {"seed": seed, "cases": cases})


def _fixture_ideal() -> Ideal:
    return parse_problem(FIXTURE_TEXT).ideal()


def check_dimension(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures, cases = [], 0
    for label, I, C, _, s in _in_range(seed):
        cases += 1
        observed = colength(I) - colength(socle_oracle(I, s, cross_check=False))
        predicted = predicted_socle_dimension(C, s)
        if observed != predicted:
            failures.append({"ideal": label, "s": s, "observed": observed, "predicted": predicted})
    I = _fixture_ideal()
    C = minimal_free_resolution(I)
    fixture = {}
    for s, expected in ((1, 2), (2, 6)):
        observed = colength(I) - colength(socle_oracle(I, s))
        predicted = predicted_socle_dimension(C, s)
        fixture[str(s)] = observed
        if not observed == predicted == expected:
            failures.append({"ideal": "fixture", "s": s, "observed": observed, "predicted": predicted})
    return _result("dimension", failures, {"seed": seed, "cases": cases, "fixture": fixture})


def check_reduction(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures, cases = [], 0
    for label, I, C, bound, s in _in_range(seed):
        if s > bound - 1:
            continue
        cases += 1
        r = verify_reduction_one(I, s, C)
        if r.status != PASS:
            failures.append({"ideal": label, "s": s, "status": r.status, "witnesses": r.witnesses})
    control = verify_reduction_one(Ideal(list(variables(2)), 2), 1)
    control_ok = control.status == FAIL and bool(control.witnesses)
    if not control_ok:
        failures.append({"control": "I=m, s=1", "status": control.status})
    return _result("reduction_one", failures, {
        "seed": seed,
        "cases": cases,
        "control_status": control.status,
        "control_witness": control.witnesses[0] if control.witnesses else None,
    })


def _random_a_element(rng: random.Random, a) -> Polynomial:
    d = len(a)
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[tuple(ai * rng.randint(0, 2) for ai in a)] = rng.choice([1, -1, 2, 3])
    return Polynomial(terms, d)


def check_homotopy(seed: Optional[int] = None, count: int = 200) -> Report:
    seed = suite_seed(seed)
    failures = []
    elements = random_koszul_suite(count, seed=seed)
    rng = random.Random(seed + 5)
    for k, v in enumerate(elements):
        lhs = koszul_differential(nabla_tilde(v))
        if v.degree > 0:
            lhs = lhs + nabla_tilde(koszul_differential(v))
        if lhs != v:
            failures.append({"element": k, "check": "homotopy", "value": v.format()})
        if v.degree >= 2 and not koszul_differential(koszul_differential(v)).is_zero():
            failures.append({"element": k, "check": "dd"})
        f = _random_a_element(rng, v.a)
        if not connection_defect(f, v).is_zero():
            failures.append({"element": k, "check": "connection", "scalar": f.format()})
    return _result("homotopy", failures, {"seed": seed, "elements": count})


def _worked_matrix() -> PolyMatrix:
    x, y = variables(2)
    return PolyMatrix([[y**2], [-x**2]], 2)


def _fixture_phi2() -> PolyMatrix:
    C = minimal_free_resolution(_fixture_ideal())
    return PolyMatrix(C.phi(2), 2)


def _hb_cases(seed: int) -> List[Tuple[str, PolyMatrix, int]]:
    cases = list(random_hb_suite(seed=seed))
    cases.append(("fixture_s2", _fixture_phi2(), 2))
    cases.append(("x2y2_s2", _worked_matrix(), 2))
    cases.append(("x2y2_s1", _worked_matrix(), 1))
    return cases


def check_hb_delta(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures = []
    cases = _hb_cases(seed)
    for label, phi, s in cases:
        res = hb_delta(phi, s)
        if not res.agrees:
            failures.append({"matrix": label, "s": s})
    x, y = variables(2)
    worked = hb_delta(_worked_matrix(), 2).deltas
    if worked != {(1, 1): y, (1, 2): x}:
        failures.append({"matrix": "x2y2_s2", "deltas": {f"{k}": v.format() for k, v in worked.items()}})
    return _result("hb_delta", failures, {"seed": seed, "cases": len(cases)})


def check_hb_psi(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures = []
    minimality = {}
    cases = _hb_cases(seed)
    for label, phi, s in cases:
        psi = hb_psi(phi, s)
        main, minimal = hb_psi_minors(psi, phi, s)
        if main.status != PASS:
            failures.append({"matrix": label, "s": s, "witnesses": main.witnesses})
        if minimal.status != COMPUTED:
            failures.append({"matrix": label, "s": s, "minimality_status": minimal.status})
        minimality[label] = minimal.payload["minimal"]
    if minimality.get("x2y2_s2") is not False:
        failures.append({"matrix": "x2y2_s2", "expected": "not minimal"})
    return _result("hb_psi", failures, {"seed": seed, "cases": len(cases), "minimal": minimality})


def check_lower_minors(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures = []
    cases = list(random_lower_minor_suite(seed=seed))
    x, y = variables(2)
    zero = Polynomial.zero(2)
    cases.append(("structured", PolyMatrix([[x**2, y**2, zero], [zero, x**2, y**2]], 2), 2))
    for label, phi, s in cases:
        r = verify_lower_minor_containment(phi, 2, s)
        if r.status != PASS:
            failures.append({"matrix": label, "s": s, "status": r.status})
    sharp = {}
    for n in (2, 3):
        M = linear_sharpness_matrix(n)
        K = socle_oracle(minors(M, n), 1)
        top = containment_witness(K, minors(M, n))
        lower = verify_lower_minor_containment(M, n, 1)
        sharp[str(n)] = {"fails_in_I_n": top is not None, "lower": lower.status}
        if top is None or lower.status != PASS or not ideal_equal(K, max_ideal_power(n - 1, 2)):
            failures.append({"sharpness": n})
    return _result("lower_minors", failures, {"seed": seed, "cases": len(cases), "sharpness": sharp})


def check_fixture() -> Report:
    I = _fixture_ideal()
    C = minimal_free_resolution(I)
    K = socle_oracle(I, 1)
    x, y = variables(2)
    inside = x**5 * y**2
    outside = 7 * x * y**4 + 6 * x**3 * y
    payload = {
        "betti": list(C.betti),
        "order_last_map": order_of_last_map(C),
        "first_in_socle": K.contains(inside),
        "second_in_socle": K.contains(outside),
    }
    failures = []
    if payload["betti"] != [1, 3, 2] or payload["order_last_map"] != 2:
        failures.append({"check": "resolution"})
    if not payload["first_in_socle"] or payload["second_in_socle"]:
        failures.append({"check": "membership"})
    return _result("fixture", failures, payload)


def check_ci(seed: Optional[int] = None) -> Report:
    seed = suite_seed(seed)
    failures = []
    cases = random_ci_suite(seed=seed)
    for label, gens in cases:
        I = Ideal(gens, gens[0].nvars)
        if not ideal_equal(ci_socle(gens), socle_oracle(I, 1)):
            failures.append({"ci": label})
    return _result("ci_socle", failures, {"seed": seed, "cases": len(cases)})


SUITES: Dict[str, List[Callable]] = {
    "ideals": [check_oracle_consistency, check_decomposition, check_formula, check_dimension, check_reduction],
    "koszul": [check_homotopy],
    "hb": [check_hb_delta, check_hb_psi],
    "lower-minors": [check_lower_minors],
    "ci": [check_ci],
}


def run_suite(name: str, seed: Optional[int] = None) -> List[Report]:
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for n in names:
        for fn in SUITES[n]:
            reports.append(fn(seed))
    if name == "all":
        reports.append(check_fixture())
    return reports
