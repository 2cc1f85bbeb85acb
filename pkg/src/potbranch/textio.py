"""Plain-text instance files.

Four line-oriented formats; ``#`` starts a comment, blank lines are ignored::

    phi N            N rows of N numbers, symmetric; '*' off the diagonal = no edge
    q N              N rows of N numbers; diagonal must be '*'; '*' = no arc
    ugraph N M       M lines 'u v w', then optional lines 'd i x' (diagonal values)
    digraph N M      M lines 'u v w' for the arc u -> v

Vertices are 0-based. ``phi`` and ``ugraph`` files with ``d`` lines parse to a
:class:`PotentialSystem`, a plain ``ugraph`` to an :class:`UndirectedGraph`,
``q`` and ``digraph`` to a :class:`DirectedGraph`.
"""
from __future__ import annotations

import math
from typing import Union

from .errors import InvalidGraphError, ParseError
from .graph import Arc, DirectedGraph, Edge, PotentialSystem, UndirectedGraph

Instance = Union[PotentialSystem, UndirectedGraph, DirectedGraph]

ABSENT = "*"
KINDS = ("phi", "q", "ugraph", "digraph")


def format_weight(w: float) -> str:
    """Integral values as exact integers, others as the shortest round-trip decimal."""
    w = float(w)
    if w.is_integer():
        return str(int(w))
    return repr(w)


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            out.append((lineno, toks))
    return out


def _number(tok: str, line: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"non-numeric token {tok!r}", line) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite value {tok!r}", line)
    return x


def _index(tok: str, line: int, n: int | None = None, what: str = "vertex") -> int:
    try:
        i = int(tok)
    except ValueError:
        raise ParseError(f"non-integer {what} {tok!r}", line) from None
    if i < 0 or (n is not None and i >= n):
        bound = f"[0,{n})" if n is not None else ">= 0"
        raise ParseError(f"{what} {i} out of range {bound}", line)
    return i


def _header(lines, expected_args: int) -> tuple[str, list[int], int]:
    line, toks = lines[0]
    kind = toks[0]
    if len(toks) != 1 + expected_args:
        raise ParseError(f"header '{kind}' takes {expected_args} integer argument(s), got {len(toks) - 1}", line)
    args = [_index(t, line, what="dimension") for t in toks[1:]]
    if args[0] < 1:
        raise ParseError("vertex count must be >= 1", line)
    return kind, args, line


def _matrix(lines, n: int, header_line: int) -> list[list[str]]:
    rows = lines[1:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else header_line
        raise ParseError(f"dimension mismatch: expected {n} matrix rows, found {len(rows)}", where)
    for line, toks in rows:
        if len(toks) != n:
            raise ParseError(f"dimension mismatch: expected {n} entries in row, found {len(toks)}", line)
    return [toks for _, toks in rows]


def _parse_phi(lines) -> PotentialSystem:
    _, (n,), hline = _header(lines, 1)
    rows = _matrix(lines, n, hline)
    row_line = [line for line, _ in lines[1:]]
    diag = []
    edges = []
    for i in range(n):
        if rows[i][i] == ABSENT:
            raise ParseError(f"diagonal entry ({i},{i}) may not be '*'", row_line[i])
        diag.append(_number(rows[i][i], row_line[i]))
        for j in range(n):
            if j == i:
                continue
            a, b = rows[i][j], rows[j][i]
            if (a == ABSENT) != (b == ABSENT):
                raise ParseError(f"asymmetric at ({i},{j})/({j},{i})", row_line[max(i, j)])
            if a == ABSENT:
                continue
            x = _number(a, row_line[i])
            if j > i:
                y = _number(b, row_line[j])
                if x != y:
                    raise ParseError(f"asymmetric at ({i},{j})/({j},{i})", row_line[j])
                edges.append(Edge(i, j, x))
    return PotentialSystem(n, tuple(diag), tuple(edges))


def _parse_q(lines) -> DirectedGraph:
    _, (n,), hline = _header(lines, 1)
    rows = _matrix(lines, n, hline)
    arcs = []
    for i, ((line, _), row) in enumerate(zip(lines[1:], rows)):
        for j, tok in enumerate(row):
            if j == i:
                if tok != ABSENT:
                    raise ParseError(f"diagonal entry ({i},{i}) of a q matrix must be '*'", line)
                continue
            if tok != ABSENT:
                arcs.append(Arc(i, j, _number(tok, line)))
    return DirectedGraph(n, tuple(arcs))


def _edge_lines(lines, n: int, m: int, directed: bool, hline: int):
    body = lines[1:]
    if len(body) < m:
        raise ParseError(f"dimension mismatch: expected {m} edge lines, found {len(body)}", hline)
    seen: set[tuple[int, int]] = set()
    out = []
    for line, toks in body[:m]:
        if len(toks) != 3:
            raise ParseError(f"expected 'u v w', got {len(toks)} token(s)", line)
        u, v = _index(toks[0], line, n), _index(toks[1], line, n)
        w = _number(toks[2], line)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate {'arc' if directed else 'edge'} ({u},{v})", line)
        seen.add(key)
        out.append((u, v, w))
    return out, body[m:]


def _parse_ugraph(lines) -> UndirectedGraph | PotentialSystem:
    _, (n, m), hline = _header(lines, 2)
    edges, rest = _edge_lines(lines, n, m, False, hline)
    diag: dict[int, float] = {}
    for line, toks in rest:
        if toks[0] != "d":
            raise ParseError(f"dimension mismatch: more than {m} edge lines, or unexpected token {toks[0]!r}", line)
        if len(toks) != 3:
            raise ParseError(f"expected 'd i x', got {len(toks)} token(s)", line)
        i = _index(toks[1], line, n)
        if i in diag:
            raise ParseError(f"duplicate diagonal value for vertex {i}", line)
        diag[i] = _number(toks[2], line)
    g_edges = tuple(Edge(u, v, w) for u, v, w in edges)
    if diag:
        return PotentialSystem(n, tuple(diag.get(i, 0.0) for i in range(n)), g_edges)
    return UndirectedGraph(n, g_edges)


def _parse_digraph(lines) -> DirectedGraph:
    _, (n, m), hline = _header(lines, 2)
    arcs, rest = _edge_lines(lines, n, m, True, hline)
    if rest:
        raise ParseError(f"dimension mismatch: more than {m} arc lines", rest[0][0])
    return DirectedGraph(n, tuple(Arc(*a) for a in arcs))


_PARSERS = {"phi": _parse_phi, "q": _parse_q, "ugraph": _parse_ugraph, "digraph": _parse_digraph}


def parse_instance(text: str) -> Instance:
    """Parse an instance file; raises :class:`ParseError` with a line number."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty instance file")
    line, toks = lines[0]
    parser = _PARSERS.get(toks[0])
    if parser is None:
        raise ParseError(f"unknown header {toks[0]!r}; expected one of {', '.join(KINDS)}", line)
    try:
        return parser(lines)
    except InvalidGraphError as exc:  # pragma: no cover - parsers pre-check these
        raise ParseError(str(exc)) from exc


def kind_of(obj: Instance) -> str:
    if isinstance(obj, PotentialSystem):
        return "phi"
    if isinstance(obj, UndirectedGraph):
        return "ugraph"
    if isinstance(obj, DirectedGraph):
        return "q"
    raise TypeError(f"not an instance: {type(obj).__name__}")


def format_instance(obj: Instance, kind: str | None = None) -> str:
    """Canonical text for ``obj``; ``parse_instance`` inverts it exactly."""
    kind = kind or kind_of(obj)
    fw = format_weight
    if kind == "phi" and isinstance(obj, PotentialSystem):
        n = obj.n
        m = [[ABSENT] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = fw(obj.diag[i])
        for u, v, w in obj.edges:
            m[u][v] = m[v][u] = fw(w)
        return f"phi {n}\n" + "".join(" ".join(row) + "\n" for row in m)
    if kind == "q" and isinstance(obj, DirectedGraph):
        n = obj.n
        m = [[ABSENT] * n for _ in range(n)]
        for t, h, w in obj.arcs:
            m[t][h] = fw(w)
        return f"q {n}\n" + "".join(" ".join(row) + "\n" for row in m)
    if kind == "ugraph" and isinstance(obj, (UndirectedGraph, PotentialSystem)):
        out = [f"ugraph {obj.n} {len(obj.edges)}\n"]
        out += [f"{u} {v} {fw(w)}\n" for u, v, w in obj.edges]
        if isinstance(obj, PotentialSystem):
            out += [f"d {i} {fw(x)}\n" for i, x in enumerate(obj.diag)]
        return "".join(out)
    if kind == "digraph" and isinstance(obj, DirectedGraph):
        out = [f"digraph {obj.n} {len(obj.arcs)}\n"]
        out += [f"{t} {h} {fw(w)}\n" for t, h, w in obj.arcs]
        return "".join(out)
    raise ValueError(f"cannot format {type(obj).__name__} as {kind!r}")
