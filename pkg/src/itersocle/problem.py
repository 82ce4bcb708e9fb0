"""Line-oriented problem files: a ring, then an ideal or a matrix.

::

    ring vars=x,y
    ideal
    x^2*y^2 + y^5     # one generator per line
    x^4 + x^2*y^3
    x^6

or ``matrix rows=R cols=C`` followed by ``R`` lines of ``C`` comma-separated
polynomials.  An optional ``params s=2 n=2`` line may appear after ``ring``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import AlgebraError
from .groebner import Ideal
from .matrices import PolyMatrix
from .ring import Polynomial

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class ProblemFile:
    names: Tuple[str, ...]
    kind: str  # "ideal" or "matrix"
    generators: List[Polynomial] = field(default_factory=list)
    matrix: Optional[PolyMatrix] = None
    params: Dict[str, int] = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def ideal(self) -> Ideal:
        if self.kind != "ideal":
            raise AlgebraError("problem file holds a matrix, not an ideal")
        return Ideal(self.generators, self.nvars)


class _PolyParser:
    """Recursive-descent reader for one polynomial on one line."""

    def __init__(self, text: str, names: Sequence[str], line: int, offset: int = 0):
        self.text = text
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)
        self.line = line
        self.offset = offset
        self.pos = 0

    def error(self, msg: str, pos: Optional[int] = None):
        col = self.offset + (self.pos if pos is None else pos) + 1
        raise ParseError(msg, self.line, col)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        terms: Dict[Tuple[int, ...], Fraction] = {}
        if not self.peek():
            self.error("empty polynomial")
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            coeff, mono = self.term()
            terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
            c = self.peek()
            if not c:
                break
            if c not in "+-":
                self.error(f"unexpected character {c!r}")
            sign = -1 if c == "-" else 1
            self.pos += 1
        return Polynomial(terms, self.nvars)

    def term(self) -> Tuple[Fraction, Tuple[int, ...]]:
        coeff = Fraction(1)
        exps = [0] * self.nvars
        first = True
        while True:
            c = self.peek()
            if c.isdigit():
                num = self.integer()
                den = 1
                if self.peek() == "/":
                    self.pos += 1
                    here = self.pos
                    den = self.integer()
                    if den == 0:
                        self.error("zero denominator", here)
                coeff *= Fraction(num, den)
            elif c.isalpha() or c == "_":
                start = self.pos
                while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                    self.pos += 1
                name = self.text[start:self.pos]
                if name not in self.index:
                    self.error(f"undeclared variable {name!r}", start)
                k = 1
                if self.peek() == "^":
                    self.pos += 1
                    self.skip()
                    here = self.pos
                    if not self.peek().isdigit():
                        self.error("malformed exponent", here)
                    k = self.integer()
                    if k < 1:
                        self.error("malformed exponent", here)
                exps[self.index[name]] += k
            else:
                self.error("expected a coefficient or variable" if first else f"unexpected character {c!r}")
            first = False
            if self.peek() == "*":
                self.pos += 1
                continue
            return coeff, tuple(exps)


def parse_polynomial(text: str, names: Sequence[str], line: int = 1, offset: int = 0) -> Polynomial:
    return _PolyParser(text, names, line, offset).parse()


def _strip_comment(raw: str) -> str:
    cut = raw.find("#")
    return raw if cut < 0 else raw[:cut]


def _keywords(body: str, line: int, start_col: int) -> Dict[str, str]:
    out = {}
    for piece in body.split():
        if "=" not in piece:
            raise ParseError(f"expected key=value, got {piece!r}", line, start_col)
        k, v = piece.split("=", 1)
        out[k] = v
    return out


def _positive(v: str, what: str, line: int) -> int:
    if not v.isdigit() or int(v) < 1:
        raise ParseError(f"{what} must be a positive integer", line, 1)
    return int(v)


def parse_problem(text: str) -> ProblemFile:
    lines = [(i + 1, _strip_comment(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(no, s) for no, s in lines if s.strip()]
    if not lines:
        raise ParseError("empty problem file", 1, 1)
    no, head = lines[0]
    head_s = head.strip()
    if not head_s.startswith("ring"):
        raise ParseError("first line must be 'ring vars=...'", no, 1)
    kw = _keywords(head_s[4:], no, 5)
    if set(kw) != {"vars"}:
        raise ParseError("ring line takes exactly vars=...", no, 1)
    names = tuple(n.strip() for n in kw["vars"].split(","))
    for n in names:
        if not _NAME.match(n):
            raise ParseError(f"bad variable name {n!r}", no, head.find(n) + 1)
    if len(set(names)) != len(names):
        raise ParseError("variable names must be unique", no, 1)
    rest = lines[1:]
    params: Dict[str, int] = {}
    if rest and rest[0][1].strip().startswith("params"):
        pno, ptxt = rest[0]
        for k, v in _keywords(ptxt.strip()[6:], pno, 7).items():
            params[k] = _positive(v, k, pno)
        rest = rest[1:]
    if not rest:
        raise ParseError("missing 'ideal' or 'matrix' block", no, 1)
    bno, block = rest[0]
    block_s = block.strip()
    body = rest[1:]
    if block_s == "ideal":
        gens = [parse_polynomial(s, names, n) for n, s in body]
        if not gens:
            raise ParseError("ideal block has no generators", bno, 1)
        return ProblemFile(names, "ideal", gens, None, params)
    if block_s.startswith("matrix"):
        kw = _keywords(block_s[6:], bno, 7)
        if set(kw) != {"rows", "cols"}:
            raise ParseError("matrix line takes rows=R cols=C", bno, 1)
        R, C = _positive(kw["rows"], "rows", bno), _positive(kw["cols"], "cols", bno)
        if len(body) != R:
            raise ParseError(f"expected {R} matrix rows, found {len(body)}", bno, 1)
        rows = []
        for n, s in body:
            cells, col = [], 0
            for piece in s.split(","):
                cells.append(parse_polynomial(piece, names, n, col))
                col += len(piece) + 1
            if len(cells) != C:
                raise ParseError(f"expected {C} entries, found {len(cells)}", n, 1)
            rows.append(cells)
        return ProblemFile(names, "matrix", [], PolyMatrix(rows, len(names)), params)
    raise ParseError(f"expected 'ideal' or 'matrix', got {block_s!r}", bno, 1)


def format_problem(p: ProblemFile) -> str:
    """Inverse of :func:`parse_problem` up to whitespace and comments."""
    out = [f"ring vars={','.join(p.names)}"]
    if p.params:
        out.append("params " + " ".join(f"{k}={v}" for k, v in sorted(p.params.items())))
    if p.kind == "ideal":
        out.append("ideal")
        out.extend(g.format(p.names) for g in p.generators)
    else:
        M = p.matrix
        out.append(f"matrix rows={M.nrows} cols={M.ncols}")
        out.extend(", ".join(f.format(p.names) for f in row) for row in M.rows)
    return "\n".join(out) + "\n"


def read_problem(path: str) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
