"""
Parser for the element text syntax.

    element := ["+"|"-"] term (("+"|"-") term)*
    term    := [coeff "*"] atom | coeff
    atom    := "[" name ("," name)* "]"            (a path)
             | letter ("*" letter)*                 (a word in Q)
    letter  := ("x" | "X") "_{" name "," name "}"
    coeff   := integer | integer "/" integer

The unicode minus sign is accepted for ``-``.  A bare coefficient is a
scalar, which only makes sense in ``Q`` (or as the literal ``0``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .coxsys import CoxeterMatrix
from .pathalg import QQ, ZZ, Element, FreeAlgebra, PathAlgebra


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        where = f" at column {pos + 1}" if pos is not None else ""
        super().__init__(f"{message}{where}")
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<letter>[xX]_\{\s*[A-Za-z_][A-Za-z0-9_]*\s*,\s*[A-Za-z_][A-Za-z0-9_]*\s*\})
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[\[\],*+\-−])
""", re.VERBOSE)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            val = m.group()
            if kind == "op" and val == "−":
                val = "-"
            if kind == "letter":
                val = re.sub(r"\s+", "", val)
            out.append((kind, val, pos))
        pos = m.end()
    return out


@dataclass
class Term:
    coeff: Fraction
    kind: str          # "path", "word" or "scalar"
    symbols: tuple     # names or letter strings


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", len(self.text))

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def element(self) -> list[Term]:
        terms = []
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] != "eof":
            op = self.peek()
            if op[1] not in ("+", "-"):
                raise ParseError(f"expected '+' or '-', got {op[1]!r}", op[2])
            self.take()
            terms.append(self.term(-1 if op[1] == "-" else 1))
        return terms

    def term(self, sign: int) -> Term:
        coeff = Fraction(sign)
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            num, _, den = tok[1].partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", tok[2])
            coeff *= Fraction(int(num), int(den) if den else 1)
            if self.peek()[1] != "*":
                return Term(coeff, "scalar", ())
            self.take("*")
            tok = self.peek()
        if tok[1] == "[":
            return Term(coeff, "path", self.path())
        if tok[0] == "letter":
            return Term(coeff, "word", self.word())
        raise ParseError(f"expected a path or a word, got {tok[1] or 'end of input'!r}", tok[2])

    def path(self) -> tuple:
        self.take("[")
        names = [self.take(kind="name")]
        while self.peek()[1] == ",":
            self.take(",")
            names.append(self.take(kind="name"))
        self.take("]")
        return tuple((v, p) for _, v, p in names)

    def word(self) -> tuple:
        letters = [self.take(kind="letter")]
        while self.peek()[1] == "*" and self._next_is_letter():
            self.take("*")
            letters.append(self.take(kind="letter"))
        return tuple((v, p) for _, v, p in letters)

    def _next_is_letter(self) -> bool:
        return self.i + 1 < len(self.toks) and self.toks[self.i + 1][0] == "letter"


def parse_terms(text: str) -> list[Term]:
    if not text.strip():
        raise ParseError("empty expression", 0)
    return _Parser(text).element()


def _domain_for(coeffs) -> str:
    return ZZ if all(c.denominator == 1 for c in coeffs) else QQ


def parse_element(text: str, M: CoxeterMatrix, lax_paths: bool = False, domain: str | None = None) -> Element:
    """Parse a path-algebra element over ``M``.

    Non-paths (consecutive vertices with ``m = 2``) are rejected, or dropped
    when ``lax_paths`` is set, following the convention that they are zero.
    """
    alg = PathAlgebra(M)
    terms: dict = {}
    coeffs = []
    for t in parse_terms(text):
        coeffs.append(t.coeff)
        if t.kind == "scalar":
            if t.coeff != 0:
                raise ParseError("a bare scalar is not an element of the path algebra")
            continue
        if t.kind == "word":
            raise ParseError("free-product letters are not paths", t.symbols[0][1])
        idx = []
        for name, pos in t.symbols:
            if name not in M.names:
                raise ParseError(f"unknown generator {name!r}", pos)
            idx.append(M.names.index(name))
        bad = next((k for k in range(len(idx) - 1) if not M.graph.adjacent(idx[k], idx[k + 1])), None)
        if bad is not None:
            if lax_paths:
                continue
            a, b = t.symbols[bad][0], t.symbols[bad + 1][0]
            raise ParseError(f"[{a},{b}] is not an edge (m = {M.m(idx[bad], idx[bad + 1])})",
                             t.symbols[bad + 1][1])
        p = tuple(idx)
        terms[p] = terms.get(p, 0) + t.coeff
    dom = domain or _domain_for(coeffs)
    if dom == ZZ and any(Fraction(c).denominator != 1 for c in terms.values()):
        raise ParseError("non-integer coefficient in an integer ring")
    return Element(alg, {p: (int(c) if dom == ZZ else c) for p, c in terms.items()}, dom)


def parse_q_element(text: str, alg: FreeAlgebra) -> Element:
    """Parse an element of the free algebra on ``alg.letters`` (a word in ``Q``)."""
    lookup = {name: k for k, name in enumerate(alg.letters)}
    terms: dict = {}
    for t in parse_terms(text):
        if t.kind == "path":
            raise ParseError("paths are not elements of Q", t.symbols[0][1])
        word = []
        for sym, pos in t.symbols:
            if sym not in lookup:
                raise ParseError(f"unknown letter {sym!r}", pos)
            word.append(lookup[sym])
        w = tuple(word)
        terms[w] = terms.get(w, 0) + t.coeff
    return Element(alg, terms, QQ)
