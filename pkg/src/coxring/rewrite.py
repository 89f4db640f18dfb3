"""
Monic tip-rewriting systems over a path algebra or a free algebra.

A rule replaces an occurrence of its tip (a contiguous factor of a monomial)
by a combination of strictly smaller monomials.  Splicing is the same for
vertex tuples and letter tuples: a replacement path starts and ends on the
tip's extremities, so ``p[:i] + q + p[i + len(tip):]`` is the rewritten path.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .chebyshev import cheb_c
from .coxsys import INF, CoxeterMatrix
from .minpoly import min_poly_4cos2
from .pathalg import (Element, PathAlgebra, ZZ, is_uniform, llex_key, mul,
                      tip as tip_of)

RING_R = "R"
RING_RTILDE = "Rtilde"


@dataclass(frozen=True)
class RewriteRule:
    tip: tuple
    replacement: Element
    label: str = ""

    def __post_init__(self):
        key = llex_key(self.tip)
        for p in self.replacement.terms:
            if llex_key(p) >= key:
                raise ValueError(f"replacement term {p} is not smaller than tip {self.tip}")

    @property
    def relator(self) -> Element:
        alg = self.replacement.alg
        return Element(alg, {self.tip: 1}, self.replacement.domain) - self.replacement

    @classmethod
    def from_relator(cls, g: Element, label: str = "") -> RewriteRule:
        t = tip_of(g)
        if g.terms[t] != 1:
            raise ValueError("relator is not monic")
        if not is_uniform(g):
            raise ValueError("relator is not uniform")
        repl = Element(g.alg, {p: -c for p, c in g.terms.items() if p != t}, g.domain)
        return cls(t, repl, label)


def _neg_key(p: tuple) -> tuple:
    return (-len(p), tuple(-a for a in p))


class RewriteSystem:
    """An immutable set of rules with a prefix index for occurrence search."""

    def __init__(self, alg, rules, ring_tag: str = "", matrix: CoxeterMatrix | None = None):
        self.alg = alg
        self.rules: tuple[RewriteRule, ...] = tuple(rules)
        self.ring_tag = ring_tag
        self.matrix = matrix
        self._by2: dict[tuple, list[RewriteRule]] = {}
        self._by1: dict[tuple, list[RewriteRule]] = {}
        for r in self.rules:
            if len(r.tip) >= 2:
                self._by2.setdefault(r.tip[:2], []).append(r)
            elif len(r.tip) == 1:
                self._by1.setdefault(r.tip[:1], []).append(r)
            else:
                raise ValueError("a rule with empty tip reduces everything")

    def __len__(self):
        return len(self.rules)

    def _candidates(self, p: tuple, i: int):
        out = self._by2.get(p[i:i + 2], ())
        if self._by1:
            out = list(out) + self._by1.get(p[i:i + 1], [])
        return out

    def occurrences(self, p: tuple):
        """All ``(position, rule)`` pairs with the rule's tip at that position."""
        found = []
        for i in range(len(p)):
            for r in self._candidates(p, i):
                L = len(r.tip)
                if p[i:i + L] == r.tip:
                    found.append((i, r))
        return found

    def find(self, p: tuple, rightmost: bool = False):
        rng = range(len(p) - 1, -1, -1) if rightmost else range(len(p))
        for i in rng:
            for r in self._candidates(p, i):
                L = len(r.tip)
                if p[i:i + L] == r.tip:
                    return i, r
        return None

    def is_irreducible(self, p: tuple) -> bool:
        return self.find(p) is None

    def tip_reduced(self) -> bool:
        tips = [r.tip for r in self.rules]
        for a, ta in enumerate(tips):
            for b, tb in enumerate(tips):
                if a != b and _contains(tb, ta):
                    return False
        return True


def _contains(hay: tuple, needle: tuple) -> bool:
    L = len(needle)
    return any(hay[i:i + L] == needle for i in range(len(hay) - L + 1))


def normal_form(x: Element, sys: RewriteSystem, rightmost: bool = False) -> Element:
    """Reduce ``x`` until no tip occurs in any term.

    Terms are processed largest first; every rewrite produces strictly
    smaller terms, so each monomial is visited at most once.
    """
    if x.alg != sys.alg:
        raise ValueError("element and rewrite system live in different algebras")
    work = dict(x.terms)
    heap = [(_neg_key(p), p) for p in work]
    heapq.heapify(heap)
    done = {}
    while heap:
        _, p = heapq.heappop(heap)
        c = work.pop(p)
        if not c:
            continue
        occ = sys.find(p, rightmost)
        if occ is None:
            done[p] = c
            continue
        i, rule = occ
        pre, post = p[:i], p[i + len(rule.tip):]
        for q, d in rule.replacement.terms.items():
            new = pre + q + post
            if new in work:
                work[new] += c * d
            else:
                work[new] = c * d
                heapq.heappush(heap, (_neg_key(new), new))
    return Element(x.alg, done, x.domain)


# ---------------------------------------------------------------------------
# Coxeter rule sets

def alternating(i: int, j: int, nverts: int) -> tuple:
    return tuple(i if k % 2 == 0 else j for k in range(nverts))


def C_relator(alg: PathAlgebra, i: int, j: int, domain: str = ZZ) -> Element:
    """``C_m([i j i])`` inside ``[i] P [i]`` for ``m = m_ij`` finite, ``m >= 3``."""
    poly = min_poly_4cos2(alg.M.m(i, j))
    return Element(alg, {alternating(i, j, 2 * k + 1): c for k, c in enumerate(poly.coeffs)}, domain)


def c_relator(alg: PathAlgebra, r: int, s: int, domain: str = ZZ) -> Element:
    """``c_m([rs], [sr], [s], [r])`` for ``m = m_rs`` finite, ``m >= 3``."""
    def mono(*v):
        return Element(alg, {tuple(v): 1}, domain, _trusted=True)
    return cheb_c(alg.M.m(r, s), mono(r, s), mono(s, r), mono(s), mono(r))


def _finite_pairs(M: CoxeterMatrix):
    for i in range(M.rank):
        for j in range(M.rank):
            if i != j and 3 <= M.m(i, j) < INF:
                yield i, j


def rules_for_R(M: CoxeterMatrix) -> RewriteSystem:
    alg = PathAlgebra(M)
    rules = []
    for i, j in _finite_pairs(M):
        rules.append(RewriteRule.from_relator(
            C_relator(alg, i, j), f"C[{M.names[i]}{M.names[j]}]"))
    return RewriteSystem(alg, rules, RING_R, M)


def rules_for_Rtilde(M: CoxeterMatrix) -> RewriteSystem:
    alg = PathAlgebra(M)
    rules = []
    for r, s in _finite_pairs(M):
        rules.append(RewriteRule.from_relator(
            c_relator(alg, r, s), f"c[{M.names[r]}{M.names[s]}]"))
    return RewriteSystem(alg, rules, RING_RTILDE, M)


def rules_for(M: CoxeterMatrix, ring: str) -> RewriteSystem:
    if ring == RING_R:
        return rules_for_R(M)
    if ring == RING_RTILDE:
        return rules_for_Rtilde(M)
    raise ValueError(f"unknown ring {ring!r} (expected R or Rtilde)")


# ---------------------------------------------------------------------------
# overlap verification

@dataclass
class Overlap:
    first: int
    second: int
    left: tuple    # p in  T(f) q = p T(g)
    right: tuple   # q
    word: tuple
    residue: Element
    kind: str = "overlap"


@dataclass
class OverlapReport:
    system: RewriteSystem
    overlaps: list = field(default_factory=list)
    tip_reduced: bool = True
    uniform: bool = True

    @property
    def residues(self) -> list:
        return [o for o in self.overlaps if not o.residue.is_zero()]

    @property
    def ok(self) -> bool:
        return self.tip_reduced and self.uniform and not self.residues


def _overlap_pieces(alg, tf: tuple, tg: tuple, k: int):
    """Cofactors ``p, q`` with ``T(f) q = p T(g)`` sharing ``k`` symbols."""
    if alg.kind == "path":
        return tf[:len(tf) - k + 1], tg[k - 1:]
    return tf[:len(tf) - k], tg[k:]


def verify_overlaps(sys: RewriteSystem) -> OverlapReport:
    """Reduce every overlap relation ``f q - p g`` to normal form.

    Also reports inclusion ambiguities (one tip inside another), which do not
    occur for tip-reduced systems.
    """
    alg = sys.alg
    rep = OverlapReport(sys, tip_reduced=sys.tip_reduced(),
                        uniform=all(is_uniform(r.relator) for r in sys.rules))
    min_share = 2 if alg.kind == "path" else 1
    rels = [r.relator for r in sys.rules]
    for a, f in enumerate(sys.rules):
        tf = f.tip
        for b, g in enumerate(sys.rules):
            tg = g.tip
            for k in range(min_share, min(len(tf), len(tg))):
                if tf[-k:] != tg[:k]:
                    continue
                p, q = _overlap_pieces(alg, tf, tg, k)
                word = tf + tg[k:]
                rel = mul(rels[a], Element(alg, {q: 1}, rels[a].domain)) - \
                    mul(Element(alg, {p: 1}, rels[b].domain), rels[b])
                rep.overlaps.append(Overlap(a, b, p, q, word, normal_form(rel, sys)))
            if a != b and len(tg) < len(tf):
                for i in range(len(tf) - len(tg) + 1):
                    if tf[i:i + len(tg)] != tg:
                        continue
                    if alg.kind == "path":
                        u, v = tf[:i + 1], tf[i + len(tg) - 1:]
                    else:
                        u, v = tf[:i], tf[i + len(tg):]
                    d = rels[a].domain
                    rel = rels[a] - mul(mul(Element(alg, {u: 1}, d), rels[b]), Element(alg, {v: 1}, d))
                    rep.overlaps.append(Overlap(a, b, u, v, tf, normal_form(rel, sys), "inclusion"))
    return rep
