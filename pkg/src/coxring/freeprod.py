"""
The coefficient ring ``Q`` and the matrix embedding of ``Rhat``.

``Q`` is the free algebra on letters ``x_y`` and ``X_y`` (the bar of ``x_y``),
one pair per positive edge ``y``, modulo ``C_m(x_y X_y)`` and ``C_m(X_y x_y)``
for every finite label ``m``.  It is handled by the same rewriting engine as the
path algebras.  Letter ``2k`` is ``x`` and ``2k + 1`` is ``X`` for the ``k``-th
positive edge.

The apex extension adds a generator ``w`` 3-bonded to every ``s_i``; apex
elements ``P_i^j`` route through it, and ``Phi`` / ``Psi`` translate between
``Rhat`` of the extended system and ``(N+1) x (N+1)`` matrices over ``Q``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coxsys import INF, CoxeterMatrix, extend_with_apex
from .minpoly import min_poly_4cos2
from .pathalg import QQ, Element, FreeAlgebra, mul
from .quotient import RING_RHAT, QElement, QuotientRing, enumerate_basis, qmul
from .rewrite import RewriteRule, RewriteSystem, normal_form

RING_Q = "Q"


def letter_names(M: CoxeterMatrix) -> list[str]:
    out = []
    for i, j in M.graph.pos_edges:
        a, b = M.names[i], M.names[j]
        out += [f"x_{{{a},{b}}}", f"X_{{{a},{b}}}"]
    return out


def edge_letter(M: CoxeterMatrix, i: int, j: int) -> int:
    """Letter of ``phi`` on the directed edge ``(i, j)``: ``x`` if positive, ``X`` if reversed."""
    k = M.graph.pos_edges.index((min(i, j), max(i, j)))
    return 2 * k if i < j else 2 * k + 1


def _power(pair: tuple, d: int) -> tuple:
    return pair * d


@lru_cache(maxsize=64)
def q_system(M: CoxeterMatrix) -> RewriteSystem:
    """Rules ``(x X)^d -> -(C_m(t) - t^d)`` and the mirror ``(X x)^d``, per finite edge."""
    alg = FreeAlgebra(letter_names(M))
    rules = []
    for k, (i, j) in enumerate(M.graph.pos_edges):
        m = M.m(i, j)
        if m == INF:
            continue
        poly = min_poly_4cos2(m)
        d = poly.degree
        for pair, tag in (((2 * k, 2 * k + 1), "xX"), ((2 * k + 1, 2 * k), "Xx")):
            repl = Element(alg, {_power(pair, e): -c for e, c in enumerate(poly.coeffs[:d])}, QQ)
            label = f"C[{tag} {M.names[i]}{M.names[j]}]"
            rules.append(RewriteRule(_power(pair, d), repl, label))
    return RewriteSystem(alg, rules, RING_Q, M)


def q_elem(M: CoxeterMatrix, terms) -> Element:
    sys = q_system(M)
    return normal_form(Element(sys.alg, terms, QQ), sys)


class QRing:
    """Arithmetic in ``Q`` for a fixed base system."""

    def __init__(self, M: CoxeterMatrix):
        self.M = M
        self.system = q_system(M)
        self.alg: FreeAlgebra = self.system.alg

    def __call__(self, terms) -> Element:
        if isinstance(terms, Element):
            return normal_form(terms.to_domain(QQ), self.system)
        return normal_form(Element(self.alg, terms, QQ), self.system)

    def one(self) -> Element:
        return self.alg.one(QQ)

    def zero(self) -> Element:
        return Element.zero(self.alg, QQ)

    def letter(self, i: int, j: int) -> Element:
        return Element(self.alg, {(edge_letter(self.M, i, j),): 1}, QQ)

    def mul(self, x: Element, y: Element) -> Element:
        return normal_form(mul(x, y), self.system)

    def inverse_witness(self, k: int) -> Element:
        """Two-sided inverse of ``x`` for the ``k``-th positive edge, finite label.

        With ``C_m(t) = t h(t) + c0`` the inverse is ``X h(x X) / (-c0)``.
        """
        i, j = self.M.graph.pos_edges[k]
        m = self.M.m(i, j)
        if m == INF:
            raise ValueError("x_y is not invertible for an infinite label")
        poly = min_poly_4cos2(m)
        c0 = poly.coeffs[0]
        pair = (2 * k, 2 * k + 1)
        terms = {(2 * k + 1,) + _power(pair, e - 1): Fraction(c, -c0)
                 for e, c in enumerate(poly.coeffs) if e >= 1}
        return self(terms)


def q_mul(x: Element, y: Element, M: CoxeterMatrix) -> Element:
    return QRing(M).mul(x, y)


# ---------------------------------------------------------------------------
# matrices over Q

@dataclass
class MatrixQ:
    ring: QRing
    entries: dict = field(default_factory=dict)  # (i, j) -> nonzero Element

    @property
    def size(self) -> int:
        return self.ring.M.rank + 1

    @classmethod
    def unit(cls, ring: QRing, i: int, j: int, q: Element | None = None) -> MatrixQ:
        q = ring.one() if q is None else q
        return cls(ring, {(i, j): q} if not q.is_zero() else {})

    def __getitem__(self, ij) -> Element:
        return self.entries.get(ij, self.ring.zero())

    def __add__(self, other: MatrixQ) -> MatrixQ:
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out[k] + v if k in out else v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return MatrixQ(self.ring, out)

    def __sub__(self, other: MatrixQ) -> MatrixQ:
        return self + other.scale(-1)

    def scale(self, c) -> MatrixQ:
        return MatrixQ(self.ring, {k: v.scale(c) for k, v in self.entries.items() if c})

    def __matmul__(self, other: MatrixQ) -> MatrixQ:
        acc: dict = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                if j == k:
                    acc[(i, l)] = acc[(i, l)] + mul(a, b) if (i, l) in acc else mul(a, b)
        out = {}
        for key, v in acc.items():
            v = normal_form(v, self.ring.system)
            if not v.is_zero():
                out[key] = v
        return MatrixQ(self.ring, out)

    def __eq__(self, other):
        return isinstance(other, MatrixQ) and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def nonzero_entries(self):
        return sorted(self.entries.items())


# ---------------------------------------------------------------------------
# the extended system, apex elements, psi, Phi, Psi

class Embedding:
    """``Phi``, ``Psi`` and ``psi_i`` for a base system ``M`` and its apex extension."""

    def __init__(self, M: CoxeterMatrix):
        self.M = M
        self.N = M.rank
        self.ext = extend_with_apex(M)
        self.R = QuotientRing(self.ext, RING_RHAT)
        self.base = QuotientRing(M, RING_RHAT)
        self.Q = QRing(M)

    @property
    def apex(self) -> int:
        return self.N

    def P(self, i: int, j: int) -> QElement:
        """``P_i^j`` with 0-based indices; index ``N`` is the apex."""
        w = self.apex
        if i == w and j == w:
            return self.R.path(w)
        if i == w:
            return self.R.path(w, j)
        if j == w:
            return self.R.path(i, w)
        return self.R.path(i, w, j)

    def _psi_letter(self, i: int, a: int) -> QElement:
        k, bar = divmod(a, 2)
        u, v = self.M.graph.pos_edges[k]
        if bar:
            u, v = v, u
        return qmul(qmul(self.P(i, u), self.R.path(u, v)), self.P(v, i))

    def psi(self, i: int, q: Element) -> QElement:
        out = self.R.zero()
        gens = {}
        for word, c in q.terms.items():
            acc = self.R.path(i)
            for a in word:
                if a not in gens:
                    gens[a] = self._psi_letter(i, a)
                acc = qmul(acc, gens[a])
            out = out + acc * c
        return out

    def Psi(self, X: MatrixQ) -> QElement:
        out = self.R.zero()
        for (i, j), q in X.entries.items():
            out = out + qmul(self.psi(i, q), self.P(i, j))
        return out

    def phi_path(self, p: tuple) -> tuple[int, int, tuple]:
        """``phi`` of a path of the extended system: ``(row, column, word)``."""
        word = []
        for u, v in zip(p, p[1:]):
            if self.apex not in (u, v):
                word.append(edge_letter(self.M, u, v))
        return p[0], p[-1], tuple(word)

    def Phi(self, x: QElement | Element) -> MatrixQ:
        value = x.value if isinstance(x, QElement) else x
        acc: dict = {}
        for p, c in value.terms.items():
            i, j, word = self.phi_path(p)
            acc.setdefault((i, j), {})
            acc[(i, j)][word] = acc[(i, j)].get(word, 0) + c
        out = {}
        for key, terms in acc.items():
            v = self.Q(terms)
            if not v.is_zero():
                out[key] = v
        return MatrixQ(self.Q, out)

    def include(self, x: QElement) -> QElement:
        """Paths of the base system, read in the extended one."""
        return self.R(Element(self.R.alg, x.value.terms, QQ))

    def embed(self, x: QElement) -> MatrixQ:
        return self.Phi(self.include(x))

    def generators(self) -> list[QElement]:
        """Vertices and edges of the extended graph."""
        g = self.ext.graph
        gens = [self.R.path(i) for i in range(self.ext.rank)]
        for u, v in g.edges():
            gens.append(self.R.path(u, v))
        return gens

    def matrix_generators(self) -> list[MatrixQ]:
        """``e_ij`` for all ``i, j`` and ``x_y e_ij``, ``X_y e_ij`` for all letters and ``i, j``."""
        n = self.N + 1
        out = [MatrixQ.unit(self.Q, i, j) for i in range(n) for j in range(n)]
        for a in range(len(self.Q.alg.letters)):
            q = Element(self.Q.alg, {(a,): 1}, QQ)
            out += [MatrixQ.unit(self.Q, i, j, q) for i in range(n) for j in range(n)]
        return out


@lru_cache(maxsize=32)
def embedding(M: CoxeterMatrix) -> Embedding:
    return Embedding(M)


# ---------------------------------------------------------------------------
# near-domain verification

@dataclass
class Counterexample:
    trial: int
    x1: str
    x2: str
    reason: str


@dataclass
class NearDomainReport:
    system: tuple
    trials: int
    max_len: int
    coeff_bound: int
    seed: int
    counterexamples: list = field(default_factory=list)
    checked_embed: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def sample_component(rng: random.Random, paths: list, ring: QuotientRing, coeff_bound: int,
                     max_terms: int = 3) -> QElement:
    """A nonzero combination of up to ``max_terms`` distinct basis paths."""
    k = rng.randint(1, min(max_terms, len(paths)))
    chosen = rng.sample(paths, k)
    terms = {}
    for p in chosen:
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        terms[p] = c
    return ring(Element(ring.alg, terms, ring.domain))


def near_domain_check(M: CoxeterMatrix, trials: int = 1000, max_len: int = 5,
                      coeff_bound: int = 5, seed: int = 0, cross_check: bool = True) -> NearDomainReport:
    """Sample ``x1 in [r] Rhat [s]``, ``x2 in [s] Rhat [t]`` nonzero; ``x1 x2`` must be nonzero.

    Each trial draws from its own generator seeded by ``(seed, trial)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    ring = QuotientRing(M, RING_RHAT)
    basis = enumerate_basis(M, RING_RHAT, max_len)
    by_ends: dict = {}
    for p in basis:
        by_ends.setdefault((p[0], p[-1]), []).append(p)
    triples = [(r, s, t) for (r, s) in by_ends for (s2, t) in by_ends if s2 == s]
    emb = embedding(M) if cross_check else None
    rep = NearDomainReport(M.names, trials, max_len, coeff_bound, seed)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        r, s, t = rng.choice(triples)
        x1 = sample_component(rng, by_ends[(r, s)], ring, coeff_bound)
        x2 = sample_component(rng, by_ends[(s, t)], ring, coeff_bound)
        prod = qmul(x1, x2)
        if prod.is_zero():
            rep.counterexamples.append(Counterexample(trial, str(x1), str(x2), "x1*x2 == 0"))
            continue
        if emb is not None:
            E = emb.embed(x1) @ emb.embed(x2)
            rep.checked_embed += 1
            if E.is_zero() or E != emb.embed(prod):
                rep.counterexamples.append(
                    Counterexample(trial, str(x1), str(x2), "embedding disagrees with x1*x2"))
    return rep
