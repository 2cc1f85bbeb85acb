"""Potential weight matrices and the undirected fast path.

Directed weights are *potential* when ``Q[i, j] = phi[i, j] - phi[i, i]`` for
a symmetric ``phi`` whose diagonal is strictly below every off-diagonal entry
in its row. For such weights the optimal in-branching is an undirected
minimum spanning tree of ``phi``, oriented toward the vertex of smallest
diagonal value.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidGraphError
from .graph import (
    Arc,
    Diagnostic,
    DirectedGraph,
    Edge,
    InBranching,
    PotentialSystem,
    UndirectedTree,
    Violation,
    components_of,
)
from .mst import kruskal
from .textio import format_weight

DEFAULT_TOL = 1e-9


def validate_phi(phi: PotentialSystem) -> Diagnostic:
    """Strict diagonal dominance on every present edge.

    For each edge ``{i, k}`` both ``phi[i,i] < phi[i,k]`` and
    ``phi[k,k] < phi[i,k]`` must hold. Absent pairs impose nothing.
    """
    d = phi.diag
    bad = []
    for i, k, w in phi.edges:
        if not d[i] < w:
            bad.append(Violation("diagonal-dominance", f"({i}, {k}): phi[{i},{i}]={format_weight(d[i])} >= phi[{i},{k}]={format_weight(w)}"))
        if not d[k] < w:
            bad.append(Violation("diagonal-dominance", f"({k}, {i}): phi[{k},{k}]={format_weight(d[k])} >= phi[{k},{i}]={format_weight(w)}"))
    return Diagnostic(tuple(bad))


def _require_valid(phi: PotentialSystem) -> None:
    diag = validate_phi(phi)
    if not diag.ok:
        raise InvalidGraphError(diag)


def q_arcs(phi: PotentialSystem) -> list[Arc]:
    """Both arcs per edge with weights ``phi[i,j] - phi[i,i]``, unchecked."""
    d = phi.diag
    out = []
    for i, j, w in phi.edges:
        out.append(Arc(i, j, w - d[i]))
        out.append(Arc(j, i, w - d[j]))
    return out


def build_q(phi: PotentialSystem) -> DirectedGraph:
    """Directed weights of a valid potential system; every arc weight is > 0."""
    _require_valid(phi)
    return DirectedGraph(phi.n, tuple(q_arcs(phi)))


# ---------------------------------------------------------------- recovery


@dataclass(frozen=True)
class AsymmetricArc:
    tail: int
    head: int

    def describe(self) -> str:
        return f"asymmetric arc {self.tail} {self.head} (reverse arc absent)"


@dataclass(frozen=True)
class NonPositiveArc:
    tail: int
    head: int
    weight: float

    def describe(self) -> str:
        return f"nonpositive arc {self.tail} {self.head} weight {format_weight(self.weight)}"


@dataclass(frozen=True)
class InconsistentCycle:
    """Closed walk ``vertices[0] -> ... -> vertices[-1] -> vertices[0]``.

    ``mismatch`` is the sum over its steps ``a -> b`` of ``Q[b,a] - Q[a,b]``,
    which vanishes around every cycle of a potential matrix.
    """

    vertices: tuple[int, ...]
    mismatch: float

    def describe(self) -> str:
        return f"inconsistent cycle {' '.join(map(str, self.vertices))} mismatch {format_weight(self.mismatch)}"


Witness = Union[AsymmetricArc, NonPositiveArc, InconsistentCycle]


@dataclass(frozen=True)
class RecoveryResult:
    """Outcome of :func:`recover_phi`.

    On success ``phi`` holds the representative whose smallest diagonal is 0
    in each connected component; adding a constant to every entry of one
    component yields the same directed weights. ``components`` lists those
    components.
    """

    potential: bool
    phi: PotentialSystem | None = None
    witness: Witness | None = None
    components: list[list[int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.potential


def cycle_mismatch(q: DirectedGraph, cycle) -> float:
    w = q.weights
    steps = []
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        steps.append(w[b, a])
        steps.append(-w[a, b])
    return math.fsum(steps)


def recover_phi(q: DirectedGraph, tol: float = DEFAULT_TOL) -> RecoveryResult:
    """Decide whether ``q`` is potential and, if so, reconstruct phi.

    Three checks in order: the arc support is symmetric, all weights are
    strictly positive, and the diagonal differences forced by each arc pair,
    ``d_i - d_j = Q[j,i] - Q[i,j]``, agree around every cycle. Differences are
    propagated breadth-first from each component's smallest vertex and every
    remaining pair is checked to within ``tol * max(1, |Q[i,j]|, |Q[j,i]|)``.
    """
    w = q.weights
    for t, h, _ in q.arcs:
        if (h, t) not in w:
            return RecoveryResult(False, witness=AsymmetricArc(t, h))
    for t, h, x in q.arcs:
        if not x > 0:
            return RecoveryResult(False, witness=NonPositiveArc(t, h, x))

    n = q.n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for t, h, _ in q.arcs:
        if t < h:
            nbrs[t].append(h)
            nbrs[h].append(t)
    d = [0.0] * n
    parent = [-1] * n
    depth = [-1] * n
    for s in range(n):
        if depth[s] >= 0:
            continue
        depth[s] = 0
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j in nbrs[i]:
                if depth[j] < 0:
                    depth[j] = depth[i] + 1
                    parent[j] = i
                    d[j] = d[i] + w[i, j] - w[j, i]
                    queue.append(j)

    for i, j, qij in q.arcs:
        if i > j or parent[j] == i or parent[i] == j:
            continue
        qji = w[j, i]
        if abs((d[i] - d[j]) - (qji - qij)) > tol * max(1.0, abs(qij), abs(qji)):
            cyc = _tree_cycle(parent, depth, i, j)
            return RecoveryResult(False, witness=InconsistentCycle(tuple(cyc), cycle_mismatch(q, cyc)))

    comps = components_of(n, ((t, h) for t, h, _ in q.arcs if t < h))
    for comp in comps:
        low = min(d[v] for v in comp)
        for v in comp:
            d[v] -= low
    edges = tuple(Edge(i, j, qij + d[i]) for i, j, qij in q.arcs if i < j)
    return RecoveryResult(True, phi=PotentialSystem(n, tuple(d), edges), components=comps)


def _tree_cycle(parent, depth, i, j) -> list[int]:
    """Cycle formed by BFS-tree paths to ``i`` and ``j`` plus the pair ``{i, j}``.

    Starts at their lowest common ancestor and runs down to ``i``, across to
    ``j`` and back up.
    """
    up_i, up_j = [i], [j]
    a, b = i, j
    while depth[a] > depth[b]:
        a = parent[a]
        up_i.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        up_j.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        up_i.append(a)
        up_j.append(b)
    # up_i ends at the ancestor; up_j too (drop the duplicate)
    return up_i[::-1] + up_j[:-1]


# ---------------------------------------------------------------- fast path


def _spanning_tree(phi: PotentialSystem) -> UndirectedTree:
    _require_valid(phi)
    return kruskal(phi.graph)


def min_diagonal_vertex(phi: PotentialSystem) -> int:
    """Index of the smallest diagonal entry (first one on ties)."""
    return min(range(phi.n), key=lambda k: (phi.diag[k], k))


def orient_tree(phi: PotentialSystem, tree: UndirectedTree, root: int) -> InBranching:
    """Point every tree edge toward ``root``; arc weights follow phi to Q."""
    adj: list[list[tuple[int, float]]] = [[] for _ in range(phi.n)]
    for u, v, w in tree.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    d = phi.diag
    arcs = []
    seen = [False] * phi.n
    seen[root] = True
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, w in adj[x]:
            if not seen[y]:
                seen[y] = True
                arcs.append(Arc(y, x, w - d[y]))
                queue.append(y)
    return InBranching(root, tuple(arcs))


def solve_fast(phi: PotentialSystem) -> tuple[int, InBranching, float]:
    """Optimal in-branching of ``build_q(phi)`` without any directed search.

    Takes Kruskal's tree of the off-diagonal entries and roots it at the
    vertex with the smallest diagonal value.
    """
    tree = _spanning_tree(phi)
    root = min_diagonal_vertex(phi)
    b = orient_tree(phi, tree, root)
    return root, b, b.weight


def weight_by_formula(phi: PotentialSystem) -> float:
    """MST weight minus the diagonal sum plus the smallest diagonal entry."""
    tree = _spanning_tree(phi)
    return math.fsum([e.weight for e in tree.edges] + [-x for x in phi.diag] + [min(phi.diag)])
