"""Graph representations, solution objects and their validators.

Vertices are dense 0-based integers. Weights are stored as Python floats and
must be finite. All containers are frozen; arcs and edges are kept in a
canonical sorted order so structural equality does not depend on input order.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidGraphError


class Arc(NamedTuple):
    tail: int
    head: int
    weight: float


class Edge(NamedTuple):
    u: int
    v: int
    weight: float


class Violation(NamedTuple):
    rule: str
    witness: str


@dataclass(frozen=True)
class Diagnostic:
    """Verdict of a validator: ``ok`` iff ``violations`` is empty."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> list[str]:
        return [v.rule for v in self.violations]

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.rule}: {v.witness}" for v in self.violations)

    def __bool__(self) -> bool:
        return self.ok


def _check_weight(w, where: str, out: list[Violation]) -> float:
    try:
        x = float(w)
    except (TypeError, ValueError):
        out.append(Violation("non-numeric-weight", f"{where} weight {w!r}"))
        return math.nan
    if not math.isfinite(x):
        out.append(Violation("non-finite-weight", f"{where} weight {x!r}"))
    return x


def _check_vertex_count(n) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidGraphError(Diagnostic((Violation("vertex-count", f"n={n!r} must be >= 1"),)))


@dataclass(frozen=True)
class DirectedGraph:
    """``n`` vertices and a set of weighted arcs ``(tail, head, weight)``.

    Self-loops and parallel arcs are rejected with :class:`InvalidGraphError`.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        _check_vertex_count(self.n)
        bad: list[Violation] = []
        seen = set()
        arcs = []
        for t, h, w in self.arcs:
            t, h = int(t), int(h)
            if not (0 <= t < self.n and 0 <= h < self.n):
                bad.append(Violation("vertex-range", f"arc ({t},{h}) outside [0,{self.n})"))
                continue
            if t == h:
                bad.append(Violation("self-loop", f"arc ({t},{h})"))
                continue
            if (t, h) in seen:
                bad.append(Violation("parallel-arc", f"arc ({t},{h}) given twice"))
                continue
            seen.add((t, h))
            arcs.append(Arc(t, h, _check_weight(w, f"arc ({t},{h})", bad)))
        if bad:
            raise InvalidGraphError(Diagnostic(tuple(bad)))
        arcs.sort()
        object.__setattr__(self, "arcs", tuple(arcs))

    @cached_property
    def weights(self) -> dict[tuple[int, int], float]:
        return {(a.tail, a.head): a.weight for a in self.arcs}

    def weight(self, tail: int, head: int) -> float:
        return self.weights[tail, head]

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.weights

    @cached_property
    def out_arcs(self) -> list[list[Arc]]:
        out: list[list[Arc]] = [[] for _ in range(self.n)]
        for a in self.arcs:
            out[a.tail].append(a)
        return out

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(tail, head, weight)`` columns in canonical arc order."""
        m = len(self.arcs)
        tail = np.fromiter((a.tail for a in self.arcs), dtype=np.int64, count=m)
        head = np.fromiter((a.head for a in self.arcs), dtype=np.int64, count=m)
        weight = np.fromiter((a.weight for a in self.arcs), dtype=np.float64, count=m)
        return tail, head, weight

    @cached_property
    def transposed_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """``(src, dst, weight, arc_index)`` of the reversed arcs, sorted by (src, dst)."""
        tail, head, weight = self.arrays
        order = np.lexsort((tail, head)).astype(np.int64)
        return (
            np.ascontiguousarray(head[order]),
            np.ascontiguousarray(tail[order]),
            np.ascontiguousarray(weight[order]),
            order,
        )

    def transpose(self) -> "DirectedGraph":
        return DirectedGraph(self.n, tuple(Arc(a.head, a.tail, a.weight) for a in self.arcs))


def _normalize_edges(n: int, edges: Iterable) -> tuple[Edge, ...]:
    bad: list[Violation] = []
    seen = set()
    out = []
    for u, v, w in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            bad.append(Violation("vertex-range", f"edge {{{u},{v}}} outside [0,{n})"))
            continue
        if u == v:
            bad.append(Violation("self-loop", f"edge {{{u},{v}}}"))
            continue
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            bad.append(Violation("parallel-edge", f"edge {{{u},{v}}} given twice"))
            continue
        seen.add((u, v))
        out.append(Edge(u, v, _check_weight(w, f"edge {{{u},{v}}}", bad)))
    if bad:
        raise InvalidGraphError(Diagnostic(tuple(bad)))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class UndirectedGraph:
    """``n`` vertices and weighted edges, each stored once with ``u < v``."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        _check_vertex_count(self.n)
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[Edge, ...]) -> "UndirectedGraph":
        # edges already normalized by another container
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    @cached_property
    def adjacency(self) -> list[list[tuple[int, float]]]:
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return adj

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        m = len(self.edges)
        u = np.fromiter((e.u for e in self.edges), dtype=np.int64, count=m)
        v = np.fromiter((e.v for e in self.edges), dtype=np.int64, count=m)
        w = np.fromiter((e.weight for e in self.edges), dtype=np.float64, count=m)
        return u, v, w


@dataclass(frozen=True)
class PotentialSystem:
    """Symmetric matrix phi: per-vertex diagonal plus off-diagonal edges.

    Absent edges model absent matrix entries. Whether the diagonal-dominance
    conditions hold is checked by :func:`potbranch.potential.validate_phi`,
    not here.
    """

    n: int
    diag: tuple[float, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        _check_vertex_count(self.n)
        if len(self.diag) != self.n:
            raise InvalidGraphError(
                Diagnostic((Violation("diag-length", f"{len(self.diag)} diagonal values for n={self.n}"),))
            )
        bad: list[Violation] = []
        diag = tuple(_check_weight(x, f"diagonal {i}", bad) for i, x in enumerate(self.diag))
        if bad:
            raise InvalidGraphError(Diagnostic(tuple(bad)))
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @classmethod
    def from_graph(cls, g: UndirectedGraph, diag: Sequence[float] | None = None) -> "PotentialSystem":
        return cls(g.n, tuple(diag) if diag is not None else (0.0,) * g.n, g.edges)

    @cached_property
    def graph(self) -> UndirectedGraph:
        """The off-diagonal part as an undirected graph."""
        return UndirectedGraph._trusted(self.n, self.edges)

    def shifted(self, c: float) -> "PotentialSystem":
        """Every entry, diagonal and off-diagonal, plus ``c``."""
        return PotentialSystem(
            self.n,
            tuple(d + c for d in self.diag),
            tuple(Edge(u, v, w + c) for u, v, w in self.edges),
        )


@dataclass(frozen=True)
class InBranching:
    """A root plus one outgoing arc per non-root vertex.

    Construction does not validate; use :func:`validate_branching`.
    """

    root: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(sorted(Arc(int(t), int(h), float(w)) for t, h, w in self.arcs)))

    @property
    def parent(self) -> dict[int, int]:
        return {a.tail: a.head for a in self.arcs}

    @property
    def weight(self) -> float:
        return math.fsum(a.weight for a in self.arcs)


@dataclass(frozen=True)
class UndirectedTree:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @property
    def weight(self) -> float:
        return math.fsum(e.weight for e in self.edges)

    def pairs(self) -> set[tuple[int, int]]:
        return {(e.u, e.v) for e in self.edges}


def validate_branching(g: DirectedGraph, b: InBranching) -> Diagnostic:
    """Check every in-branching invariant of ``b`` against ``g``.

    Each broken rule contributes one violation with a witness.
    """
    n = g.n
    bad: list[Violation] = []
    root_ok = 0 <= b.root < n
    if not root_ok:
        bad.append(Violation("root-range", f"root {b.root} outside [0,{n})"))
    if len(b.arcs) != n - 1:
        bad.append(Violation("arc-count", f"{len(b.arcs)} arcs, expected {n - 1}"))

    parent: dict[int, int] = {}
    for t, h, w in b.arcs:
        if not (0 <= t < n and 0 <= h < n):
            bad.append(Violation("vertex-range", f"arc ({t},{h}) outside [0,{n})"))
            continue
        if t == b.root:
            bad.append(Violation("root-out-degree", f"root {t} has outgoing arc ({t},{h})"))
        if t in parent:
            bad.append(Violation("out-degree", f"vertex {t} has more than one outgoing arc"))
        else:
            parent[t] = h
        if not g.has_arc(t, h):
            bad.append(Violation("arc-not-in-graph", f"arc ({t},{h})"))
        elif g.weight(t, h) != w:
            bad.append(Violation("weight-mismatch", f"arc ({t},{h}) has weight {w!r}, graph says {g.weight(t, h)!r}"))

    missing = [v for v in range(n) if v != b.root and v not in parent]
    if missing:
        bad.append(Violation("missing-out-arc", f"vertices {missing} have no outgoing arc"))

    if root_ok:
        # walk parent chains; state 2 = reaches root, 1 = on current walk
        state = [0] * n
        state[b.root] = 2
        stranded = []
        for s in range(n):
            path = []
            v = s
            while state[v] == 0 and v in parent:
                state[v] = 1
                path.append(v)
                v = parent[v]
            reached = state[v] == 2
            for x in path:
                state[x] = 2 if reached else 3
            if not reached and s != b.root:
                stranded.append(s)
        if stranded:
            bad.append(Violation("unreachable-root", f"vertices {stranded} do not reach root {b.root}"))
    return Diagnostic(tuple(bad))


def branching_weight(g: DirectedGraph, b: InBranching) -> float:
    """Total weight of the branching's arcs (exactly rounded sum)."""
    diag = validate_branching(g, b)
    if not diag.ok:
        raise InvalidGraphError(diag)
    return b.weight


def components_of(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    label = [-1] * n
    out = []
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = len(out)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if label[y] < 0:
                    label[y] = label[s]
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        out.append(comp)
    return out


def connected_components(g: UndirectedGraph) -> list[list[int]]:
    """Vertex partition into connected components.

    Components are ordered by their smallest vertex and sorted internally.
    """
    return components_of(g.n, ((e.u, e.v) for e in g.edges))
