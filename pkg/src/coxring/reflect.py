"""
Reflection actions of ``W`` on a quotient ring ``R'`` (``R``, ``Rtilde`` or ``Rhat``).

With ``alpha_s = alpha_s^vee = [s]`` the bilinear pairing is
``<m, m'> = m G m'`` where ``G = sum_{r,s} <alpha_r, alpha_s^vee>`` has
``<alpha_s, alpha_s^vee> = 2[s]``, ``<alpha_r, alpha_s^vee> = -[r,s]`` for adjacent
``r, s`` and ``0`` otherwise.  Two generator actions come out of it:

* on ``M`` (left regular module): ``s.m = m - m G [s]``, so ``s.[r] = [r] + [r,s]``;
* on ``M^vee``: ``s.m = m - [s] G m``, so ``s.[r] = [r] + [s,r]``.

``act_word`` folds them into the commuting left/right ``W``-actions on ``R'``
that the matrix homomorphisms are equivariant for: the left action is the
``M^vee`` action, and the right action is ``m w := w^{-1} m`` on ``M``.
"""
from __future__ import annotations

from functools import lru_cache

from .chebyshev import cheb_C, cheb_c  # noqa: F401  (re-exported)
from .quotient import QElement, QuotientRing, qmul

SIDES = ("left", "right", "M", "Mcheck")

CONVENTIONS = {
    "left": "left W-action on R' = M^vee action s.[r] = [r] + [s,r], letters applied right to left",
    "right": "right W-action on R', m.w := w^-1 m on M with s.[r] = [r] + [r,s], letters applied left to right",
    "M": "left W-action on M, s.[r] = [r] + [r,s], letters applied right to left",
    "Mcheck": "left W-action on M^vee, s.[r] = [r] + [s,r], letters applied right to left",
}


@lru_cache(maxsize=64)
def _gram_pieces(ring: QuotientRing):
    """Per generator: ``G [s]`` (column) and ``[s] G`` (row)."""
    M = ring.M
    g = M.graph
    cols, rows = [], []
    for s in range(M.rank):
        col = ring.path(s, coeff=2)
        row = ring.path(s, coeff=2)
        for r in sorted(g.neighbors[s]):
            col = col - ring.path(r, s)
            row = row - ring.path(s, r)
        cols.append(col)
        rows.append(row)
    return tuple(cols), tuple(rows)


def pairing_value(ring: QuotientRing, r: int, s: int) -> QElement:
    """``<alpha_r, alpha_s^vee>``."""
    if r == s:
        return ring.path(s, coeff=2)
    if ring.M.graph.adjacent(r, s):
        return -ring.path(r, s)
    return ring.zero()


def pairing_table(ring: QuotientRing) -> dict:
    n = ring.M.rank
    return {(r, s): pairing_value(ring, r, s) for r in range(n) for s in range(n)}


def gram_element(ring: QuotientRing) -> QElement:
    cols, _ = _gram_pieces(ring)
    out = ring.zero()
    for c in cols:
        out = out + c
    return out


def pairing(m: QElement, mcheck: QElement) -> QElement:
    return qmul(qmul(m, gram_element(m.ring)), mcheck)


def reflect_left(s: int, m: QElement) -> QElement:
    """Generator ``s`` acting on ``M``: ``[s] -> -[s]``, ``[r] -> [r] + [r,s]``."""
    cols, _ = _gram_pieces(m.ring)
    return m - qmul(m, cols[s])


def reflect_right(m: QElement, s: int) -> QElement:
    """Generator ``s`` acting on ``M^vee``: ``[s] -> -[s]``, ``[r] -> [r] + [s,r]``."""
    _, rows = _gram_pieces(m.ring)
    return m - qmul(rows[s], m)


def act_word(word, m: QElement, side: str = "left") -> QElement:
    """Act by the free word ``word`` (a sequence of generator indices).

    ``side`` is one of ``left``, ``right``, ``M``, ``Mcheck``; see ``CONVENTIONS``.
    """
    if side in ("left", "Mcheck"):
        for s in reversed(tuple(word)):
            m = reflect_right(m, s)
    elif side == "M":
        for s in reversed(tuple(word)):
            m = reflect_left(s, m)
    elif side == "right":
        for s in word:
            m = reflect_left(s, m)
    else:
        raise ValueError(f"side must be one of {SIDES}")
    return m


def parse_word(text: str, names) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in names:
            raise KeyError(f"unknown generator {tok!r}")
        out.append(tuple(names).index(tok))
    return tuple(out)


def braid_words(r: int, s: int, m: int) -> tuple[tuple, tuple]:
    return (tuple(r if k % 2 == 0 else s for k in range(m)),
            tuple(s if k % 2 == 0 else r for k in range(m)))


def c_in_ring(ring: QuotientRing, r: int, s: int, strict: bool = False) -> QElement:
    """``c_m`` (or ``C_m`` when ``strict``) at ``([rs], [sr], [s], [r])`` computed in the quotient."""
    m = ring.M.m(r, s)
    a, b = ring.path(r, s), ring.path(s, r)
    e, f = ring.path(s), ring.path(r)
    fn = cheb_C if strict else cheb_c
    return fn(m, a, b, e, f, qmul)
