"""Height-two socle formulas from a Hilbert-Burch matrix, and lower-minor containment."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import AlgebraError
from .groebner import Ideal, colength, ideal_equal, ideal_product, max_ideal_power, origin_primary_check
from .matrices import PolyMatrix, det, maximal_minors, minors, signed_maximal_minors
from .report import COMPUTED, ERROR, FAIL, PASS, Report, format_generators
from .ring import Polynomial
from .socle import socle_oracle


def _check_hb(phi: PolyMatrix, s: int) -> Ideal:
    """Validate the height-two hypotheses and return ``I`` = ideal of maximal minors."""
    if phi.nvars != 2:
        raise AlgebraError("height-two formulas need exactly two variables")
    n, k = phi.shape
    if n != k + 1:
        raise AlgebraError(f"expected an n x (n-1) matrix, got {n}x{k}")
    if s < 1:
        raise ValueError("s must be positive")
    for r, row in enumerate(phi.rows):
        for c, f in enumerate(row):
            if f and f.order() < s:
                raise AlgebraError(
                    f"entry ({r + 1},{c + 1}) = {f.format()} has order {f.order()} < {s}; entries must lie in m^s"
                )
    I = Ideal(maximal_minors(phi), 2)
    if not origin_primary_check(I).ok:
        raise AlgebraError("maximal minors do not generate an ideal primary to the origin")
    return I


def _replace_column(phi: PolyMatrix, i: int, eta, xi) -> PolyMatrix:
    cols = phi.columns()
    return PolyMatrix.from_columns(cols[:i] + [tuple(eta), tuple(xi)] + cols[i + 1:])


def delta_split(column, s: int, a: int) -> Tuple[List[Polynomial], List[Polynomial]]:
    """Write ``column = x^(s+1-a) eta + y^a xi`` monomial by monomial.

    A monomial ``x^p y^q`` goes to ``eta`` when ``p >= s+1-a`` and to ``xi``
    otherwise (then ``q >= a`` because the entry has order at least ``s``).
    """
    shift = s + 1 - a
    eta, xi = [], []
    for f in column:
        e, x = {}, {}
        for (p, q), c in f.items():
            if p >= shift:
                e[(p - shift, q)] = c
            elif q >= a:
                x[(p, q - a)] = c
            else:
                raise AlgebraError(f"monomial x^{p}*y^{q} has order below {s}")
        eta.append(Polynomial(e, 2))
        xi.append(Polynomial(x, 2))
    return eta, xi


def psi_split(column, s: int) -> List[List[Polynomial]]:
    """``column = sum_j x^(s-j) y^j phi_j``, the monomial ``x^p y^q`` going to slot ``j = min(q, s)``."""
    slots = [[{} for _ in column] for _ in range(s + 1)]
    for r, f in enumerate(column):
        for (p, q), c in f.items():
            j = min(q, s)
            if p < s - j:
                raise AlgebraError(f"monomial x^{p}*y^{q} has order below {s}")
            slots[j][r][(p - s + j, q - j)] = c
    return [[Polynomial(t, 2) for t in slot] for slot in slots]


@dataclass
class DeltaResult:
    deltas: Dict[Tuple[int, int], Polynomial]
    ideal: Ideal
    oracle: Ideal

    @property
    def agrees(self) -> bool:
        return ideal_equal(self.ideal, self.oracle)


def hb_delta(phi: PolyMatrix, s: int) -> DeltaResult:
    """``Delta_ia`` for ``1 <= i <= n-1``, ``1 <= a <= s`` and the ideal ``I + (Delta_ia)``.

    Keys of ``deltas`` are 1-based ``(i, a)``.
    """
    I = _check_hb(phi, s)
    deltas = {}
    for i, col in enumerate(phi.columns()):
        for a in range(1, s + 1):
            eta, xi = delta_split(col, s, a)
            deltas[(i + 1, a)] = det(_replace_column(phi, i, eta, xi))
    J = Ideal(list(I.gens) + list(deltas.values()), 2)
    return DeltaResult(deltas, J, socle_oracle(I, s))


def hb_delta_report(phi: PolyMatrix, s: int) -> Report:
    res = hb_delta(phi, s)
    payload = {
        "s": s,
        "deltas": {f"{i},{a}": d.format() for (i, a), d in res.deltas.items()},
        "ideal": format_generators(res.ideal.groebner_basis()),
        "oracle": format_generators(res.oracle.groebner_basis()),
    }
    if res.agrees:
        return Report("hb_delta", PASS, payload)
    witness = next(g for g in res.oracle.groebner_basis() if not res.ideal.contains(g))
    return Report("hb_delta", FAIL, payload, [witness.format()])


def hb_psi(phi: PolyMatrix, s: int) -> PolyMatrix:
    """The ``[(n-1)(s+1)+1] x (n-1)(s+1)`` matrix stacking ``B`` over ``chi``."""
    _check_hb(phi, s)
    n, k = phi.shape
    zero = Polynomial.zero(2)
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    B_cols = []
    for col in phi.columns():
        B_cols.extend(psi_split(col, s))
    width = k * (s + 1)
    rows = [list(r) for r in PolyMatrix.from_columns(B_cols).rows]
    for block in range(k):
        for r in range(s):
            row = [zero] * width
            row[block * (s + 1) + r] = -y
            row[block * (s + 1) + r + 1] = x
            rows.append(row)
    return PolyMatrix(rows, 2)


def slot_deltas(phi: PolyMatrix, s: int) -> List[Polynomial]:
    """``Delta_ia`` built from the slot decomposition, ordered by ``l = n + (i-1)s + a``."""
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    out = []
    for i, col in enumerate(phi.columns()):
        slots = psi_split(col, s)
        for a in range(1, s + 1):
            eta = [Polynomial.zero(2)] * len(col)
            xi = [Polynomial.zero(2)] * len(col)
            for j, slot in enumerate(slots):
                w = x ** (a - 1 - j) * y ** j if j < a else x ** (s - j) * y ** (j - a)
                target = eta if j < a else xi
                for r, f in enumerate(slot):
                    if f:
                        target[r] = target[r] + w * f
            out.append(det(_replace_column(phi, i, eta, xi)))
    return out


def _sign_match(left: List[Polynomial], right: List[Polynomial]) -> Optional[int]:
    """Return ``e`` in ``{1, -1}`` with ``left == e * right`` termwise, or ``None``."""
    for e in (1, -1):
        if all(l == (r if e == 1 else -r) for l, r in zip(left, right)):
            return e
    return None


def hb_psi_minors(psi: PolyMatrix, phi: PolyMatrix, s: int) -> List[Report]:
    """Check the maximal-minor identities of ``psi`` and record minimality.

    Returns two reports: ``hb_psi_minors`` (asserted identities) and
    ``hb_psi_minimality`` (always COMPUTED).
    """
    I = _check_hb(phi, s)
    n = phi.nrows
    signed = signed_maximal_minors(psi)
    plain = maximal_minors(psi)
    row = PolyMatrix([signed], 2)
    complex_ok = (row @ psi).is_zero()
    phi_minors = maximal_minors(phi)
    top = _sign_match(plain[:n], phi_minors)
    # with the same global sign e, the signed minor in row l = n + (i-1)s + a
    # equals e * (-1)^(i+1) * Delta_ia
    deltas = slot_deltas(phi, s)
    bottom_ok = top is not None and all(
        signed[n + (i - 1) * s + a - 1] == deltas[(i - 1) * s + a - 1] * (top * (-1) ** (i + 1))
        for i in range(1, n)
        for a in range(1, s + 1)
    )
    K = socle_oracle(I, s)
    J = Ideal(signed, 2)
    ideal_ok = ideal_equal(J, K)
    payload = {
        "s": s,
        "shape": list(psi.shape),
        "signed_minors": [m.format() for m in signed],
        "orthogonal": complex_ok,
        "phi_minor_sign": top,
        "delta_rule": bottom_ok,
        "ideal_matches_oracle": ideal_ok,
    }
    witnesses = []
    if not complex_ok:
        witnesses.append({"check": "minors*psi", "value": (row @ psi).format()[0]})
    if top is None:
        witnesses.append({"check": "l<=n minors", "psi": [m.format() for m in plain[:n]],
                          "phi": [m.format() for m in phi_minors]})
    if not bottom_ok:
        witnesses.append({"check": "l>n minors", "psi": [m.format() for m in signed[n:]],
                          "delta": [d.format() for d in deltas]})
    if not ideal_ok:
        bad = next((g for g in K.groebner_basis() if not J.contains(g)), None)
        if bad is None:
            bad = next(g for g in J.groebner_basis() if not K.contains(g))
        witnesses.append({"check": "ideal", "element": bad.format()})
    main = Report("hb_psi_minors", FAIL if witnesses else PASS, payload, witnesses)

    mu = colength(ideal_product(max_ideal_power(1, 2), K)) - colength(K)
    rows = psi.nrows
    minimality = Report(
        "hb_psi_minimality",
        COMPUTED,
        {"s": s, "rows": rows, "minimal_generators": mu, "minimal": mu == rows},
    )
    return [main, minimality]


def containment_witness(K: Ideal, J: Ideal) -> Optional[Polynomial]:
    """A Groebner generator of ``K`` outside ``J``, or ``None`` if ``K ⊆ J``."""
    return next((g for g in K.groebner_basis() if not J.contains(g)), None)


def verify_lower_minor_containment(phi: PolyMatrix, n: int, s: int) -> Report:
    """Check ``I : m^s ⊆ I_{n-1}(phi)`` where ``I = I_n(phi)``."""
    l, m = phi.shape
    payload = {"n": n, "s": s, "shape": [l, m]}
    if not 1 <= n <= min(l, m):
        return Report("lower_minors", ERROR, dict(payload, violated=f"n must lie in 1..{min(l, m)}"))
    if n == 1:
        payload["note"] = "I_0 is the unit ideal"
        return Report("lower_minors", PASS, payload)
    for f in phi.entries():
        if f and f.order() < s:
            return Report("lower_minors", ERROR, dict(payload, violated=f"entry {f.format()} not in m^{s}"))
    d = phi.nvars
    need = (l - n + 1) * (m - n + 1)
    if d != need:
        return Report("lower_minors", ERROR, dict(payload, violated=f"height: d = {d} but (l-n+1)(m-n+1) = {need}"))
    I = minors(phi, n)
    if not origin_primary_check(I).ok:
        return Report("lower_minors", ERROR, dict(payload, violated="I_n(phi) is not primary to the origin"))
    K = socle_oracle(I, s)
    target = minors(phi, n - 1)
    payload["socle"] = format_generators(K.groebner_basis())
    bad = containment_witness(K, target)
    if bad is None:
        return Report("lower_minors", PASS, payload)
    return Report("lower_minors", FAIL, payload, [bad.format()])
