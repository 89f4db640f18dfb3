"""
Sparse exact linear combinations of monomials, with two monomial models:

* ``PathAlgebra`` -- paths of a Coxeter graph stored as vertex tuples;
  concatenation glues the shared vertex and is zero on an extremity mismatch.
* ``FreeAlgebra`` -- words over a finite alphabet (letter tuples); the empty
  word is the identity.

Both use the length-lex order, which on vertex tuples is ``(len, tuple)``:
comparing equal-length paths edge by edge with edges ordered by
``(origin, terminus)`` is the same as comparing the vertex tuples.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .coxsys import CoxeterMatrix, CoxGraph

LT, EQ, GT = -1, 0, 1

ZZ = "ZZ"
QQ = "QQ"


def llex_key(p: tuple) -> tuple:
    return (len(p), p)


def compare_llex(p: tuple, q: tuple) -> int:
    kp, kq = llex_key(p), llex_key(q)
    return LT if kp < kq else (GT if kp > kq else EQ)


def _norm_coeff(c, domain: str):
    if isinstance(c, bool) or not isinstance(c, (int, Rational)):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    if isinstance(c, int):
        return c
    c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    if domain == ZZ:
        raise ValueError(f"non-integer coefficient {c} in integer mode")
    return c


class PathAlgebra:
    """The path algebra of the graph of a Coxeter matrix."""

    kind = "path"

    def __init__(self, M: CoxeterMatrix):
        self.M = M
        self.graph: CoxGraph = M.graph
        self.names = M.names

    def __eq__(self, other):
        return isinstance(other, PathAlgebra) and other.M == self.M

    def __hash__(self):
        return hash(("path", self.M))

    @staticmethod
    def concat(p: tuple, q: tuple):
        if p[-1] != q[0]:
            return None
        return p + q[1:]

    def check(self, p: tuple) -> tuple:
        if not self.graph.is_path(p):
            raise ValueError(f"{self.format_monomial(p)} is not a path")
        return p

    def vertices(self) -> list[tuple]:
        return [(v,) for v in range(self.M.rank)]

    def format_monomial(self, p: tuple) -> str:
        return "[" + ",".join(self.names[v] for v in p) + "]"

    def one(self, domain: str = ZZ) -> Element:
        return Element(self, {(v,): 1 for v in range(self.M.rank)}, domain)


class FreeAlgebra:
    """Noncommutative polynomials over a finite alphabet of named letters."""

    kind = "free"

    def __init__(self, letters):
        self.letters = tuple(letters)

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and other.letters == self.letters

    def __hash__(self):
        return hash(("free", self.letters))

    @staticmethod
    def concat(p: tuple, q: tuple) -> tuple:
        return p + q

    def check(self, w: tuple) -> tuple:
        if any(not 0 <= a < len(self.letters) for a in w):
            raise ValueError(f"letter out of range in {w}")
        return w

    def format_monomial(self, w: tuple) -> str:
        return "*".join(self.letters[a] for a in w) if w else "1"

    def one(self, domain: str = QQ) -> Element:
        return Element(self, {(): 1}, domain)


class Element:
    """An immutable finite linear combination of monomials with exact coefficients."""

    __slots__ = ("alg", "terms", "domain", "_hash")

    def __init__(self, alg, terms=None, domain: str = ZZ, _trusted: bool = False):
        if domain not in (ZZ, QQ):
            raise ValueError(f"unknown coefficient domain {domain!r}")
        self.alg = alg
        self.domain = domain
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for p, c in (terms or {}).items():
            c = _norm_coeff(c, domain)
            if c:
                clean[tuple(p)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, alg, p, coeff=1, domain: str = ZZ) -> Element:
        return cls(alg, {alg.check(tuple(p)): coeff}, domain)

    @classmethod
    def zero(cls, alg, domain: str = ZZ) -> Element:
        return cls(alg, {}, domain, _trusted=True)

    def _new(self, terms: dict) -> Element:
        return Element(self.alg, terms, self.domain, _trusted=True)

    def _same(self, other: Element):
        if self.alg != other.alg:
            raise ValueError("elements live in different algebras")
        if self.domain != other.domain:
            raise ValueError(f"coefficient domain mismatch: {self.domain} vs {other.domain}")

    def to_domain(self, domain: str) -> Element:
        return Element(self.alg, dict(self.terms), domain)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, p) -> object:
        return self.terms.get(tuple(p), 0)

    def sorted_terms(self, descending: bool = True):
        return sorted(self.terms.items(), key=lambda kv: llex_key(kv[0]), reverse=descending)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: Element) -> Element:
        self._same(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return self._new(out)

    def __neg__(self) -> Element:
        return self._new({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, a) -> Element:
        a = _norm_coeff(a, self.domain)
        if not a:
            return self._new({})
        return self._new({p: _norm_coeff(c * a, self.domain) for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self):
        return f"Element({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def mul(x: Element, y: Element) -> Element:
    x._same(y)
    concat = x.alg.concat
    out: dict = {}
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            r = concat(p, q)
            if r is None:
                continue
            v = out.get(r, 0) + a * b
            if v:
                out[r] = v
            else:
                del out[r]
    return x._new(out)


def concat(p: tuple, q: tuple):
    """Path concatenation of vertex tuples; ``None`` when ``t(p) != o(q)``."""
    return PathAlgebra.concat(p, q)


def tip(x: Element) -> tuple:
    if not x.terms:
        raise ValueError("the zero element has no tip")
    return max(x.terms, key=llex_key)


def leading_coeff(x: Element):
    return x.terms[tip(x)]


def component(x: Element, r: int, s: int) -> Element:
    return x._new({p: c for p, c in x.terms.items() if p[0] == r and p[-1] == s})


def is_uniform(x: Element) -> bool:
    if x.alg.kind != "path":
        return True
    ends = {(p[0], p[-1]) for p in x.terms}
    return len(ends) <= 1


def format_coeff_term(c, mono: str, first: bool) -> str:
    neg = c < 0
    mag = -c if neg else c
    body = mono if mag == 1 else f"{mag}*{mono}"
    if first:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def format_element(x: Element) -> str:
    if not x.terms:
        return "0"
    out = []
    for k, (p, c) in enumerate(x.sorted_terms()):
        mono = x.alg.format_monomial(p)
        if x.alg.kind == "free" and not p:
            # bare scalar
            neg = c < 0
            mag = -c if neg else c
            out.append((("-" if neg else "") if k == 0 else (" - " if neg else " + ")) + str(mag))
        else:
            out.append(format_coeff_term(c, mono, k == 0))
    return "".join(out)
