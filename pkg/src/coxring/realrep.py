"""
Real reflection matrices and the monomial homomorphism into ``S x S`` matrices.

``theta_prime`` sends the path with vertices ``s_1 ... s_n`` to
``(-1)^(n-1) a[s_1,s_2] ... a[s_(n-1),s_n] e[s_1, s_n]``.  Exact mode keeps
``Fraction`` entries in object arrays and is limited to crystallographic
labels; everything else runs in double precision with tolerance ``1e-8``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .coxsys import INF, CoxeterMatrix
from .linalg import exact_rank
from .pathalg import Element, PathAlgebra
from .quotient import QElement, QuotientRing, RING_RTILDE, enumerate_basis
from .rewrite import C_relator, c_relator

FLOAT_TOL = 1e-8

LAX = "lax"
STRICT = "strict"


@dataclass(frozen=True)
class RRMatrix:
    M: CoxeterMatrix
    a: np.ndarray = field(compare=False)
    exact: bool
    strict: bool
    degenerate: bool = False

    def __getitem__(self, ij):
        return self.a[ij]

    @property
    def tol(self) -> float:
        return 0.0 if self.exact else FLOAT_TOL

    def zero_matrix(self) -> np.ndarray:
        n = self.M.rank
        if self.exact:
            return np.array([[Fraction(0)] * n for _ in range(n)], dtype=object)
        return np.zeros((n, n))

    def product(self, r: int, s: int):
        return self.a[r, s] * self.a[s, r]


_GCM = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3), INF: (-2, -2)}


def ngcm_crystallographic(M: CoxeterMatrix) -> RRMatrix:
    """Integer generalized Cartan matrix; for ``i < j`` the entry ``a[i, j]``
    takes the first value of the pair and ``a[j, i]`` the second."""
    n = M.rank
    a = np.array([[Fraction(2) if i == j else Fraction(0) for j in range(n)] for i in range(n)],
                 dtype=object)
    for i in range(n):
        for j in range(i + 1, n):
            m = M.m(i, j)
            if m not in _GCM:
                raise ValueError(
                    f"label m({M.names[i]},{M.names[j]}) = {m} is not crystallographic; use float mode")
            a[i, j], a[j, i] = (Fraction(v) for v in _GCM[m])
    return RRMatrix(M, a, exact=True, strict=True)


def rrm_float(M: CoxeterMatrix, k: dict | None = None) -> RRMatrix:
    """Symmetric real reflection matrix ``a[r,s] = a[s,r] = -2 cos(k pi / m)``.

    ``k`` maps unordered pairs ``(i, j)`` to ``1 <= k <= m/2`` (default 1).
    Infinite labels get ``-2`` (product 4).
    """
    k = {tuple(sorted(key)): v for key, v in (k or {}).items()}
    n = M.rank
    a = np.zeros((n, n))
    strict, degenerate = True, False
    for i in range(n):
        a[i, i] = 2.0
        for j in range(i + 1, n):
            m = M.m(i, j)
            kij = k.get((i, j), 1)
            if m == 2:
                val = 0.0
            elif m == INF:
                val = -2.0
            else:
                if not (1 <= kij and 2 * kij <= m):
                    raise ValueError(f"k = {kij} out of range 1..{m // 2} for m = {m}")
                if math.gcd(kij, m) != 1:
                    strict = False
                if 2 * kij == m:
                    degenerate = True
                    val = 0.0
                else:
                    val = -2.0 * math.cos(kij * math.pi / m)
            a[i, j] = a[j, i] = val
    return RRMatrix(M, a, exact=False, strict=strict, degenerate=degenerate)


def theta_prime(A: RRMatrix, x: Element) -> np.ndarray:
    out = A.zero_matrix()
    for p, c in x.terms.items():
        val = Fraction(c) if A.exact else float(c)
        for u, v in zip(p, p[1:]):
            val = -val * A.a[u, v]
        out[p[0], p[-1]] += val
    return out


def max_abs(mat: np.ndarray):
    if mat.size == 0:
        return 0
    return max(abs(x) for x in mat.flat)


@dataclass
class KillReport:
    entries: list = field(default_factory=list)  # (kind, label, residue)
    tol: float = 0.0

    def max_residue(self, kind: str):
        vals = [r for k, _, r in self.entries if k == kind]
        return max(vals, default=0)

    def killed(self, kind: str) -> bool:
        return bool(self.max_residue(kind) <= self.tol)


def check_kills_ideal(A: RRMatrix, M: CoxeterMatrix | None = None) -> KillReport:
    M = M or A.M
    alg = PathAlgebra(M)
    rep = KillReport(tol=A.tol)
    for i in range(M.rank):
        for j in range(M.rank):
            if i != j and 3 <= M.m(i, j) < INF:
                lbl = f"{M.names[i]}{M.names[j]}"
                rep.entries.append((STRICT, f"C[{lbl}]", max_abs(theta_prime(A, C_relator(alg, i, j)))))
                rep.entries.append((LAX, f"c[{lbl}]", max_abs(theta_prime(A, c_relator(alg, i, j)))))
    return rep


class KillCheckFailed(ValueError):
    pass


def theta_R(A: RRMatrix, q: QElement) -> np.ndarray:
    kind = LAX if q.ring.ring == RING_RTILDE else STRICT
    if not check_kills_ideal(A, q.ring.M).killed(kind):
        raise KillCheckFailed(f"theta does not factor through {q.ring.ring}: {kind} relators survive")
    return theta_prime(A, q.value)


def act_B(word, mat: np.ndarray, A: RRMatrix, side: str = "right") -> np.ndarray:
    """``W`` acting on matrices: on the right ``e[r,t] s = e[r,t] - a[t,s] e[r,s]``,
    on the left ``s e[r,t] = e[r,t] - a[s,r] e[s,t]``."""
    X = mat.copy()
    if side == "right":
        for s in word:
            col = X.dot(A.a[:, s])
            X[:, s] = X[:, s] - col
    elif side == "left":
        for s in reversed(tuple(word)):
            row = A.a[s, :].dot(X)
            X[s, :] = X[s, :] - row
    else:
        raise ValueError("side must be 'left' or 'right'")
    return X


def matrices_equal(X: np.ndarray, Y: np.ndarray, tol: float = 0.0) -> bool:
    d = X - Y
    return max_abs(d) <= tol


def basis_images(A: RRMatrix, M: CoxeterMatrix, len_cutoff: int, ring: str = "R"):
    paths = enumerate_basis(M, ring, len_cutoff)
    alg = PathAlgebra(M)
    return paths, [theta_prime(A, Element(alg, {p: 1})) for p in paths]


def image_rank(A: RRMatrix, M: CoxeterMatrix | None = None, len_cutoff: int = 4) -> int:
    M = M or A.M
    if not A.strict:
        raise ValueError("image_rank expects a strict reflection matrix")
    _, imgs = basis_images(A, M, len_cutoff)
    rows = [list(x.flat) for x in imgs]
    if A.exact:
        return exact_rank(rows)
    if not rows:
        return 0
    return int(np.linalg.matrix_rank(np.array(rows, dtype=float), tol=FLOAT_TOL))


def word_action_matrix(A: RRMatrix, word, side: str = "right") -> np.ndarray:
    """The linear map ``X -> X w`` (or ``w X``) on ``S x S`` matrices, as an ``n^2 x n^2`` array."""
    n = A.M.rank
    cols = []
    for r in range(n):
        for t in range(n):
            E = A.zero_matrix()
            E[r, t] = Fraction(1) if A.exact else 1.0
            cols.append(act_B(word, E, A, side).flatten())
    return np.array(cols, dtype=object if A.exact else float).T


def ring_for(A: RRMatrix, M: CoxeterMatrix, ring: str) -> QuotientRing:
    return QuotientRing(M, ring)
