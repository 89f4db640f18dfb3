"""
Coxeter matrices, their graphs, the apex extension and the matrix file format.

Generators are indexed ``0..N-1`` in input order.  That order is also the
vertex order used by the length-lex path order, and the orientation of the
graph is fixed to ``{(i, j) : i < j}``.

The matrix file format is::

    r s t
    1 3 2
    3 1 5
    2 5 1

i.e. a line of generator names followed by ``N`` rows of ``N`` tokens, each a
positive integer or ``inf``.  Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

INF = math.inf

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_DEFAULT_NAMES = "rstuv"


class CoxeterMatrixError(ValueError):
    """Raised for a matrix that violates the Coxeter matrix axioms."""


class SystemParseError(ValueError):
    """Syntax error in a matrix file; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def default_names(n: int) -> tuple[str, ...]:
    if n <= len(_DEFAULT_NAMES):
        return tuple(_DEFAULT_NAMES[:n])
    return tuple(f"s{i + 1}" for i in range(n))


def _fmt_entry(m) -> str:
    return "inf" if m == INF else str(m)


@dataclass(frozen=True)
class CoxeterMatrix:
    """A symmetric matrix of bond labels ``m_ij`` with ones on the diagonal."""

    names: tuple[str, ...]
    entries: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        n = len(self.names)
        if n < 1:
            raise CoxeterMatrixError("a Coxeter matrix needs at least one generator")
        if len(set(self.names)) != n:
            raise CoxeterMatrixError(f"duplicate generator names in {self.names}")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise CoxeterMatrixError(f"invalid generator name {name!r}")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise CoxeterMatrixError(f"expected a {n}x{n} matrix")
        for i in range(n):
            if self.entries[i][i] != 1:
                raise CoxeterMatrixError(
                    f"diagonal entry ({i}, {i}) is {_fmt_entry(self.entries[i][i])}, expected 1")
            for j in range(n):
                a, b = self.entries[i][j], self.entries[j][i]
                if a != b:
                    raise CoxeterMatrixError(
                        f"matrix is not symmetric at ({i}, {j}): "
                        f"{_fmt_entry(a)} != {_fmt_entry(b)}")
                if i != j:
                    if not (a == INF or (isinstance(a, int) and a >= 2)):
                        raise CoxeterMatrixError(
                            f"off-diagonal entry ({i}, {j}) = {a!r} must be an integer >= 2 or inf")

    @property
    def rank(self) -> int:
        return len(self.names)

    def m(self, i: int, j: int):
        return self.entries[i][j]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def render(self) -> str:
        lines = [" ".join(self.names)]
        lines += [" ".join(_fmt_entry(m) for m in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    def restrict(self, indices) -> CoxeterMatrix:
        """The matrix of the standard parabolic subsystem on ``indices``."""
        idx = list(indices)
        return CoxeterMatrix(tuple(self.names[i] for i in idx),
                             tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    @cached_property
    def graph(self) -> CoxGraph:
        return build_graph(self)

    def components(self) -> list[list[int]]:
        """Irreducible components (connected components of the ``m >= 3`` graph)."""
        g = self.graph
        seen: set[int] = set()
        comps = []
        for v in range(self.rank):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in g.neighbors[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class CoxGraph:
    """The combinatorial graph with an edge ``i -- j`` whenever ``m_ij >= 3``."""

    rank: int
    pos_edges: tuple[tuple[int, int], ...]
    labels: dict = field(compare=False, hash=False)
    neighbors: tuple[frozenset, ...] = field(compare=False, hash=False)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    def label(self, i: int, j: int):
        return self.labels[(min(i, j), max(i, j))]

    @staticmethod
    def bar(edge: tuple[int, int]) -> tuple[int, int]:
        return (edge[1], edge[0])

    def edges(self) -> list[tuple[int, int]]:
        """All directed edges, each positive edge followed by its reverse."""
        out = []
        for e in self.pos_edges:
            out += [e, self.bar(e)]
        return out

    def is_path(self, verts) -> bool:
        return len(verts) >= 1 and all(0 <= v < self.rank for v in verts) and all(
            self.adjacent(a, b) for a, b in zip(verts, verts[1:]))


def build_graph(M: CoxeterMatrix) -> CoxGraph:
    n = M.rank
    pos = []
    labels = {}
    nbrs = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if M.m(i, j) >= 3:
                pos.append((i, j))
                labels[(i, j)] = M.m(i, j)
                nbrs[i].add(j)
                nbrs[j].add(i)
    return CoxGraph(n, tuple(pos), labels, tuple(frozenset(s) for s in nbrs))


def apex_name(names) -> str:
    if "w" not in names:
        return "w"
    k = len(names) + 1
    while f"s{k}" in names:
        k += 1
    return f"s{k}"


def extend_with_apex(M: CoxeterMatrix) -> CoxeterMatrix:
    """Append a generator bonded with label 3 to every existing generator."""
    n = M.rank
    rows = [list(row) + [3] for row in M.entries]
    rows.append([3] * n + [1])
    return CoxeterMatrix(M.names + (apex_name(M.names),), rows)


def parse_system(text: str) -> CoxeterMatrix:
    rows: list[tuple[int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]
        if toks:
            rows.append((lineno, toks))
    if not rows:
        raise SystemParseError("empty input", 1, 1)
    head_line, head = rows[0]
    names = []
    for col, tok in head:
        if not _NAME_RE.match(tok):
            raise SystemParseError(f"invalid generator name {tok!r}", head_line, col)
        names.append(tok)
    n = len(names)
    body = rows[1:]
    if len(body) != n:
        line = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else head_line + 1)
        raise SystemParseError(f"expected {n} matrix rows, found {len(body)}", line, 1)
    entries = []
    for lineno, toks in body:
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else toks[-1][0] + len(toks[-1][1])
            raise SystemParseError(f"expected {n} entries, found {len(toks)}", lineno, col)
        row = []
        for col, tok in toks:
            if tok.lower() in ("inf", "infinity", "oo", "∞"):
                row.append(INF)
            elif tok.isdigit():
                row.append(int(tok))
            else:
                raise SystemParseError(f"bad entry {tok!r} (positive integer or 'inf')", lineno, col)
        entries.append(row)
    return CoxeterMatrix(tuple(names), entries)


def _chain(n: int, labels: list) -> CoxeterMatrix:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, m in enumerate(labels):
        rows[i][i + 1] = rows[i + 1][i] = m
    return CoxeterMatrix(default_names(n), rows)


RUNNING_EXAMPLE = CoxeterMatrix(
    ("r", "s", "t", "u", "v"),
    ((1, 3, 2, 4, 2),
     (3, 1, 5, 2, 2),
     (2, 5, 1, 6, 5),
     (4, 2, 6, 1, INF),
     (2, 2, 5, INF, 1)),
)


def preset(name: str, n: int | None = None) -> CoxeterMatrix:
    """Standard systems: ``A``, ``B``, ``H3``, ``I2`` (``n`` is the bond label),
    ``universal`` (all labels infinite) and ``running-example``."""
    key = name.lower()
    if key == "a":
        if n is None or n < 1:
            raise ValueError("A_n needs n >= 1")
        return _chain(n, [3] * (n - 1))
    if key == "b":
        if n is None or n < 2:
            raise ValueError("B_n needs n >= 2")
        return _chain(n, [3] * (n - 2) + [4])
    if key == "h3":
        return _chain(3, [3, 5])
    if key == "i2":
        if n is None or not (n == INF or (isinstance(n, int) and n >= 2)):
            raise ValueError("I2(m) needs m >= 2 or inf")
        return _chain(2, [n])
    if key == "universal":
        if n is None or n < 1:
            raise ValueError("universal needs n >= 1")
        rows = [[1 if i == j else INF for j in range(n)] for i in range(n)]
        return CoxeterMatrix(default_names(n), rows)
    if key in ("running-example", "running", "example"):
        return RUNNING_EXAMPLE
    raise ValueError(f"unknown preset {name!r}")


_SPEC_RE = re.compile(r"(?P<name>[A-Za-z][A-Za-z0-9-]*?)(?:\((?P<p>\w+)\)|(?P<n>\d+))?\Z")


def preset_from_string(spec: str) -> CoxeterMatrix:
    """Parse preset specs such as ``A3``, ``B2``, ``H3``, ``I2(5)``, ``universal3``."""
    s = spec.strip()
    if s.lower() == "h3":
        return preset("H3")
    m = _SPEC_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse preset {spec!r}")
    name = m.group("name")
    arg = m.group("p") or m.group("n")
    if arg is None:
        return preset(name)
    value = INF if arg.lower() == "inf" else int(arg)
    return preset(name, value)


def load_system(spec: str) -> CoxeterMatrix:
    """A matrix file path, or a preset spec if no such file exists."""
    p = Path(spec)
    if p.is_file():
        return parse_system(p.read_text())
    return preset_from_string(spec)


def to_dot(M: CoxeterMatrix) -> str:
    g = M.graph
    lines = ["digraph G {"]
    for v, name in enumerate(M.names):
        lines.append(f'  "{name}";')
    for i, j in g.pos_edges:
        lines.append(f'  "{M.names[i]}" -> "{M.names[j]}" [label="{_fmt_entry(M.m(i, j))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
