"""Koszul complex on ``x_1^{a_1}, ..., x_d^{a_d}`` with the connection and its homotopy.

An element of ``K_l`` is stored as a map from sorted ``l``-subsets of axes
(0-based) to coefficient polynomials.  The internal degree of ``r e_J`` is
the degree of ``r`` in the grading where ``x_i^{a_i}`` has degree one, plus
``|J|``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import AlgebraError
from .groebner import Ideal
from .resolution import FreeComplex
from .ring import Polynomial, a_degree

Subset = Tuple[int, ...]


class KoszulElement:
    __slots__ = ("a", "degree", "coeffs")

    def __init__(self, a: Sequence[int], degree: int, coeffs: Mapping[Sequence[int], Polynomial] | None = None):
        self.a = tuple(a)
        if any(ai < 1 for ai in self.a):
            raise ValueError("composition entries must be positive")
        self.degree = degree
        clean: Dict[Subset, Polynomial] = {}
        for J, r in (coeffs or {}).items():
            J = tuple(J)
            if len(J) != degree or list(J) != sorted(set(J)):
                raise ValueError(f"bad basis index {J} for degree {degree}")
            if r:
                clean[J] = clean[J] + r if J in clean else r
                if not clean[J]:
                    del clean[J]
        self.coeffs = clean

    @property
    def nvars(self) -> int:
        return len(self.a)

    @classmethod
    def basis(cls, a: Sequence[int], J: Sequence[int], r: Polynomial | None = None) -> "KoszulElement":
        J = tuple(J)
        r = Polynomial.one(len(a)) if r is None else r
        return cls(a, len(J), {J: r})

    @classmethod
    def zero(cls, a: Sequence[int], degree: int) -> "KoszulElement":
        return cls(a, degree, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, J: Sequence[int]) -> Polynomial:
        return self.coeffs.get(tuple(J), Polynomial.zero(self.nvars))

    def _check(self, other: "KoszulElement") -> None:
        if self.a != other.a or self.degree != other.degree:
            raise ValueError("incompatible Koszul elements")

    def __add__(self, other: "KoszulElement") -> "KoszulElement":
        self._check(other)
        out = dict(self.coeffs)
        for J, r in other.coeffs.items():
            out[J] = out[J] + r if J in out else r
        return KoszulElement(self.a, self.degree, out)

    def __neg__(self):
        return KoszulElement(self.a, self.degree, {J: -r for J, r in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r) -> "KoszulElement":
        """Multiply every coefficient by a polynomial or scalar."""
        return KoszulElement(self.a, self.degree, {J: c * r for J, c in self.coeffs.items()})

    def map_coefficients(self, fn) -> "KoszulElement":
        return KoszulElement(self.a, self.degree, {J: fn(c) for J, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, KoszulElement):
            return NotImplemented
        return self.a == other.a and self.degree == other.degree and self.coeffs == other.coeffs

    __hash__ = None

    def internal_split(self) -> Dict[int, "KoszulElement"]:
        """Components by internal degree."""
        parts: Dict[int, Dict[Subset, Dict]] = {}
        for J, r in self.coeffs.items():
            for m, c in r.items():
                k = a_degree(m, self.a) + self.degree
                parts.setdefault(k, {}).setdefault(J, {})[m] = c
        return {
            k: KoszulElement(self.a, self.degree, {J: Polynomial._raw(t, self.nvars) for J, t in v.items()})
            for k, v in sorted(parts.items())
        }

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for J in sorted(self.coeffs):
            basis = "^".join(f"e{j + 1}" for j in J) or "1"
            pieces.append(f"({self.coeffs[J].format(names)})*{basis}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"KoszulElement(a={self.a}, degree={self.degree}, {self.format()})"


def wedge_insert(i: int, J: Subset) -> Tuple[int, Optional[Subset]]:
    """``e_i ∧ e_J = sign * e_{J ∪ i}``; returns ``(0, None)`` if ``i ∈ J``."""
    if i in J:
        return 0, None
    smaller = sum(1 for j in J if j < i)
    return (-1) ** smaller, tuple(sorted(J + (i,)))


def koszul_differential(v: KoszulElement) -> KoszulElement:
    """``∂(r e_J) = sum_p (-1)^p x_{j_p}^{a_{j_p}} r e_{J - j_p}`` (``p`` 0-based)."""
    if v.degree == 0:
        raise AlgebraError("Koszul differential is undefined on degree 0")
    out: Dict[Subset, Polynomial] = {}
    n = v.nvars
    for J, r in v.coeffs.items():
        for p, j in enumerate(J):
            exps = [0] * n
            exps[j] = v.a[j]
            term = r.mul_monomial(exps, (-1) ** p)
            K = J[:p] + J[p + 1:]
            out[K] = out[K] + term if K in out else term
    return KoszulElement(v.a, v.degree - 1, out)


def nabla(v: KoszulElement) -> KoszulElement:
    """``∇(r e_J) = sum_i (∂r/∂x_i^{a_i}) e_i ∧ e_J``."""
    out: Dict[Subset, Polynomial] = {}
    for J, r in v.coeffs.items():
        for i in range(v.nvars):
            sign, K = wedge_insert(i, J)
            if not sign:
                continue
            dr = r.gen_derivative(i, v.a[i])
            if dr:
                dr = dr if sign > 0 else -dr
                out[K] = out[K] + dr if K in out else dr
    return KoszulElement(v.a, v.degree + 1, out)


def nabla_tilde(v: KoszulElement) -> KoszulElement:
    """Contracting homotopy on the positive part: ``sum_m (1/m) ∇(v_m)``, ``m`` the internal degree."""
    result = KoszulElement.zero(v.a, v.degree + 1)
    for m, part in v.internal_split().items():
        if m == 0:
            raise AlgebraError("element not in K_{>0}")
        result = result + nabla(part).scale(Fraction(1, m))
    return result


def _in_power_ideal(f: Polynomial, a: Sequence[int]) -> bool:
    # membership in the monomial ideal (x_1^{a_1}, ..., x_d^{a_d})
    return all(a_degree(m, a) >= 1 for m in f.monomials())


def _staircase(C: FreeComplex, a: Sequence[int], t: int, ell: int) -> KoszulElement:
    """``[(id ⊗ ∇~)(φ ⊗ id)]^t (w_ell ⊗ 1)``, landing in ``F_0 ⊗ K_t``."""
    n = C.nvars
    one = Polynomial.one(n)
    rank_t = C.betti[t]
    state: List[KoszulElement] = [
        KoszulElement.basis(a, (), one) if mu == ell else KoszulElement.zero(a, 0) for mu in range(rank_t)
    ]
    for i in range(t, 0, -1):
        phi = C.phi(i)
        level = state[0].degree
        moved: List[KoszulElement] = []
        for row in phi:
            acc = KoszulElement.zero(a, level)
            for entry, v in zip(row, state):
                if entry and not v.is_zero():
                    acc = acc + v.scale(entry)
            moved.append(acc)
        state = [nabla_tilde(v) for v in moved]
    (out,) = state
    return out


def check_power_containment(C: FreeComplex, a: Sequence[int], t: int) -> None:
    """Raise unless every entry of ``φ_t`` lies in ``(x_1^{a_1}, ..., x_d^{a_d})``."""
    for r, row in enumerate(C.phi(t)):
        for c, f in enumerate(row):
            if not _in_power_ideal(f, a):
                raise AlgebraError(
                    f"entry ({r + 1},{c + 1}) of phi_{t}, {f.format()}, is not in the ideal of x^a for a={tuple(a)}"
                )


def _normalize(v: KoszulElement) -> KoszulElement:
    for J in sorted(v.coeffs):
        c = v.coeffs[J].lead_coefficient()
        return v.scale(1 / c)
    return v


def koszul_cycle_generators(
    C: FreeComplex, a: Sequence[int], t: int, modulo: Ideal | None = None
) -> List[KoszulElement]:
    """Generators of the Koszul cycles ``Z_t(x^a; R/I)``, one per basis element of ``F_t``.

    Coefficients are reduced to normal form modulo ``I`` (``modulo``, or the
    ideal generated by the entries of ``φ_1``) and scaled to be monic.
    """
    a = tuple(a)
    if len(a) != C.nvars:
        raise ValueError("composition length must equal the number of variables")
    if not 1 <= t <= C.length:
        raise ValueError(f"t must lie in 1..{C.length}")
    check_power_containment(C, a, t)
    I = modulo if modulo is not None else Ideal(C.generators(), C.nvars)
    out = []
    for ell in range(C.betti[t]):
        z = _staircase(C, a, t, ell).map_coefficients(I.normal_form)
        out.append(_normalize(z))
    return out


def is_cycle_mod(v: KoszulElement, I: Ideal) -> bool:
    if v.degree == 0:
        return True
    return all(I.contains(r) for r in koszul_differential(v).coeffs.values())


def wedge_degree_one(u: KoszulElement, v: KoszulElement) -> KoszulElement:
    """``u ∧ v`` for ``u`` of homological degree one."""
    if u.degree != 1:
        raise ValueError("left factor must have degree 1")
    if u.a != v.a:
        raise ValueError("incompatible Koszul elements")
    out: Dict[Subset, Polynomial] = {}
    for (i,), c in u.coeffs.items():
        for J, r in v.coeffs.items():
            sign, K = wedge_insert(i, J)
            if not sign:
                continue
            term = c * r if sign > 0 else -(c * r)
            out[K] = out[K] + term if K in out else term
    return KoszulElement(v.a, v.degree + 1, out)


def connection_defect(f: Polynomial, v: KoszulElement) -> KoszulElement:
    """``∇(f v) - f ∇(v) - (sum_i ∂f/∂x_i^{a_i} e_i) ∧ v``; zero when ``f`` lies in ``k[x_i^{a_i}]``."""
    grad = KoszulElement(v.a, 1, {(i,): f.gen_derivative(i, v.a[i]) for i in range(v.nvars)})
    return nabla(v.scale(f)) - nabla(v).scale(f) - wedge_degree_one(grad, v)
