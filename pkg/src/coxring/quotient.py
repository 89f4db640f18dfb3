"""
Arithmetic in the quotient rings via normal forms, plus the combinatorial
basis enumeration (paths avoiding long alternating factors).

Ring tags: ``R`` (integer coefficients, strict relators), ``Rtilde``
(integer coefficients, lax relators) and ``Rhat`` (rational coefficients,
strict relators).
"""
from __future__ import annotations

from functools import lru_cache

from .coxsys import INF, CoxeterMatrix
from .minpoly import euler_phi
from .pathalg import QQ, ZZ, Element, PathAlgebra, component, llex_key, mul
from .rewrite import RING_R, RING_RTILDE, RewriteSystem, normal_form, rules_for

RING_RHAT = "Rhat"
RINGS = (RING_R, RING_RTILDE, RING_RHAT)


@lru_cache(maxsize=64)
def _system(M: CoxeterMatrix, tag: str) -> RewriteSystem:
    return rules_for(M, tag)


class QuotientRing:
    def __init__(self, M: CoxeterMatrix, ring: str = RING_R):
        if ring not in RINGS:
            raise ValueError(f"unknown ring {ring!r}; expected one of {RINGS}")
        self.M = M
        self.ring = ring
        self.system: RewriteSystem = _system(M, RING_RTILDE if ring == RING_RTILDE else RING_R)
        self.alg: PathAlgebra = self.system.alg
        self.domain = QQ if ring == RING_RHAT else ZZ

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and (self.M, self.ring) == (other.M, other.ring)

    def __hash__(self):
        return hash((self.M, self.ring))

    def __repr__(self):
        return f"QuotientRing({self.ring}, {self.M.names})"

    def __call__(self, x) -> QElement:
        """Reduce an ``Element`` (or a dict of path -> coefficient) into the ring."""
        if not isinstance(x, Element):
            x = Element(self.alg, x, self.domain)
        if x.domain != self.domain:
            x = x.to_domain(self.domain)
        return QElement(self, normal_form(x, self.system))

    def path(self, *verts, coeff=1) -> QElement:
        """``coeff * [v0, ..., vn]``; ``verts`` may be indices or generator names."""
        idx = tuple(self.M.index(v) if isinstance(v, str) else v for v in verts)
        return self(Element.monomial(self.alg, idx, coeff, self.domain))

    def idempotent(self, v) -> QElement:
        return self.path(v)

    def zero(self) -> QElement:
        return QElement(self, Element.zero(self.alg, self.domain))

    def one(self) -> QElement:
        return QElement(self, self.alg.one(self.domain))


class QElement:
    """An element of a quotient ring, stored as its normal form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: QuotientRing, value: Element):
        self.ring = ring
        self.value = value

    def _check(self, other: QElement):
        if not isinstance(other, QElement) or other.ring != self.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        self._check(other)
        return QElement(self.ring, self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return QElement(self.ring, self.value - other.value)

    def __neg__(self):
        return QElement(self.ring, -self.value)

    def __mul__(self, other):
        if isinstance(other, QElement):
            return qmul(self, other)
        return QElement(self.ring, self.value.scale(other))

    def __rmul__(self, other):
        return QElement(self.ring, self.value.scale(other))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.value.is_zero()
        if not isinstance(other, QElement):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def component(self, r: int, s: int) -> QElement:
        return QElement(self.ring, component(self.value, r, s))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"QElement({self.ring.ring}: {self.value})"


def qmul(x: QElement, y: QElement) -> QElement:
    x._check(y)
    return QElement(x.ring, normal_form(mul(x.value, y.value), x.ring.system))


def surject_tilde_to_R(x: QElement) -> QElement:
    if x.ring.ring != RING_RTILDE:
        raise ValueError("surject_tilde_to_R expects an element of Rtilde")
    target = QuotientRing(x.ring.M, RING_R)
    return target(x.value)


# ---------------------------------------------------------------------------
# bases

def _alternation_limit(M: CoxeterMatrix, ring: str, i: int, j: int):
    """Number of vertices of the shortest forbidden alternating factor on ``{i, j}``."""
    m = M.m(i, j)
    if m == INF:
        return None
    if ring == RING_RTILDE:
        return m
    return 1 + euler_phi(m)


def enumerate_basis(M: CoxeterMatrix, ring: str, max_len: int, start=None, end=None) -> list[tuple]:
    """Paths of length ``<= max_len`` with no forbidden alternating factor.

    For ``R``/``Rhat`` the forbidden factors alternate on ``{r, s}`` with
    ``1 + phi(m_rs)`` vertices; for ``Rtilde`` they have ``m_rs`` vertices.
    Sorted by the length-lex order.
    """
    if max_len < 0:
        return []
    g = M.graph
    limits = {}
    for i, j in g.pos_edges:
        limits[(i, j)] = limits[(j, i)] = _alternation_limit(M, ring, i, j)
    out = []

    def extend(path: list, run: int):
        if end is None or path[-1] == end:
            out.append(tuple(path))
        if len(path) - 1 == max_len:
            return
        last = path[-1]
        for v in sorted(g.neighbors[last]):
            new_run = run + 1 if len(path) >= 2 and path[-2] == v else 2
            lim = limits[(last, v)]
            if lim is not None and new_run >= lim:
                continue
            path.append(v)
            extend(path, new_run)
            path.pop()

    starts = range(M.rank) if start is None else [start]
    for v in starts:
        extend([v], 1)
    out.sort(key=llex_key)
    return out


def all_paths(M: CoxeterMatrix, max_len: int, start=None, end=None) -> list[tuple]:
    """Every path of length ``<= max_len`` (no rules applied)."""
    g = M.graph
    out = []
    frontier = [(v,) for v in (range(M.rank) if start is None else [start])]
    for _ in range(max_len + 1):
        nxt = []
        for p in frontier:
            if end is None or p[-1] == end:
                out.append(p)
            nxt.extend(p + (v,) for v in sorted(g.neighbors[p[-1]]))
        frontier = nxt
    out.sort(key=llex_key)
    return out


def graded_rank(M: CoxeterMatrix, ring: str, r: int, s: int, length: int) -> int:
    return sum(1 for p in enumerate_basis(M, ring, length, r, s) if len(p) - 1 == length)


def rank_table(M: CoxeterMatrix, ring: str, max_len: int) -> list[dict]:
    counts: dict = {}
    for p in enumerate_basis(M, ring, max_len):
        key = (len(p) - 1, p[0], p[-1])
        counts[key] = counts.get(key, 0) + 1
    rows = []
    for length in range(max_len + 1):
        for r in range(M.rank):
            for s in range(M.rank):
                rows.append({"len": length, "from": M.names[r], "to": M.names[s],
                             "rank": counts.get((length, r, s), 0)})
    return rows


def total_rank(M: CoxeterMatrix, ring: str, max_len: int) -> int:
    return len(enumerate_basis(M, ring, max_len))
