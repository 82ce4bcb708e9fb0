"""Exact sparse polynomials over the rationals.

Monomials are dense exponent tuples; a polynomial is an immutable map from
monomials to nonzero :class:`fractions.Fraction` coefficients.  Besides the
usual ring operations this module provides the pieces the socle formulas
need: the order of an element, ordinary partials, the generalized
derivative ``d/dx_i^a`` and the grading in which ``x_i^{a_i}`` has degree 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

#: order of the zero polynomial
INFINITY = math.inf

DEFAULT_NAMES = ("x", "y", "z", "w")


def default_names(nvars: int) -> Tuple[str, ...]:
    if nvars <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def degrevlex_key(mono: Monomial) -> tuple:
    """Sort key for degree-reverse-lexicographic order, ``x_1 > ... > x_d``.

    A larger key means a larger monomial.
    """
    return (sum(mono),) + tuple(-e for e in reversed(mono))


def monomials_of_degree(deg: int, nvars: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree ``deg``, in lex-descending order."""
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(deg - first, nvars - 1):
            yield (first,) + rest


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over Q."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, nvars: int | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    mono = tuple(mono)
                    clean[mono] = Fraction(c)
            if nvars is None:
                nvars = len(next(iter(terms)))
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        for mono in clean:
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have length {nvars}")
            if min(mono, default=0) < 0:
                raise ValueError(f"negative exponent in {mono}")
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        exps = tuple(exps)
        coeff = Fraction(coeff)
        return cls._raw({exps: coeff} if coeff else {}, len(exps))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        exps = [0] * nvars
        exps[i] = 1
        return cls.monomial(exps)

    # -- basic access -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def order(self):
        """Least total degree of a term; :data:`INFINITY` for zero."""
        if not self._terms:
            return INFINITY
        return min(sum(m) for m in self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def lead_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self._terms, key=degrevlex_key)

    def lead_coefficient(self) -> Fraction:
        return self._terms[self.lead_monomial()]

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self * (1 / self.lead_coefficient())

    def sorted_terms(self):
        """Terms in descending degrevlex order."""
        return sorted(self._terms.items(), key=lambda kv: degrevlex_key(kv[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"ring mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw({m: c * other for m, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(m, exps)): c * coeff for m, c in self._terms.items()},
            self.nvars,
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus -----------------------------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """Ordinary partial derivative along axis ``i`` (0-based)."""
        return self.gen_derivative(i, 1)

    def gen_derivative(self, i: int, a: int) -> "Polynomial":
        """Generalized derivative ``d/dx_i^a``: ``x^b -> floor(b_i/a) x^(b - a e_i)``."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"axis {i} out of range for {self.nvars} variables")
        if a < 1:
            raise ValueError("a must be positive")
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            q = m[i] // a
            if q:
                nm = m[:i] + (m[i] - a,) + m[i + 1:]
                out[nm] = out.get(nm, 0) + c * q
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.nvars)

    def a_degree_split(self, a: Sequence[int]) -> Dict[int, "Polynomial"]:
        """Split into components homogeneous for the grading ``deg x^b = sum floor(b_i/a_i)``."""
        parts: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            parts.setdefault(a_degree(m, a), {})[m] = c
        return {k: Polynomial._raw(v, self.nvars) for k, v in sorted(parts.items())}

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    # -- printing -----------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(self.nvars)
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            mag = abs(c)
            if not factors:
                body = _fmt_scalar(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt_scalar(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, nvars={self.nvars})"


def _fmt_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def a_degree(mono: Monomial, a: Sequence[int]) -> int:
    """Degree of ``x^mono`` when ``x_i^{a_i}`` is given degree 1."""
    return sum(e // ai for e, ai in zip(mono, a))


def order(f: Polynomial):
    return f.order()


def gen_derivative(f: Polynomial, i: int, a: int) -> Polynomial:
    return f.gen_derivative(i, a)


def a_degree_split(f: Polynomial, a: Sequence[int]) -> Dict[int, Polynomial]:
    return f.a_degree_split(a)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Positive integer tuples of length ``parts`` summing to ``total``, in lex order."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def variables(nvars: int) -> Tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(i, nvars) for i in range(nvars))


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    out: Dict[Monomial, Fraction] = {}
    for p in polys:
        for m, c in p.items():
            out[m] = out.get(m, 0) + c
    return Polynomial._raw({m: c for m, c in out.items() if c}, nvars)
