"""Minimum spanning in-branchings of general directed graphs.

The solver is Chu-Liu/Edmonds written once as a minimum out-arborescence
kernel and run on the transposed graph. :func:`enumerate_optimal` is an
exhaustive oracle for small instances and shares no code with the kernel.
"""
from __future__ import annotations

import math
from collections import deque

from . import _backend
from .errors import InfeasibleError, InstanceTooLargeError
from .graph import Arc, DirectedGraph, InBranching

ENUMERATION_CAP = 8


def vertices_reaching(g: DirectedGraph, root: int) -> list[bool]:
    """Reverse reachability sweep: which vertices have a path to ``root``."""
    into: list[list[int]] = [[] for _ in range(g.n)]
    for t, h, _ in g.arcs:
        into[h].append(t)
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in into[x]:
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    return seen


def feasible_roots(g: DirectedGraph) -> list[int]:
    """All roots every vertex can reach, ascending.

    These form the unique sink strongly connected component, if there is
    exactly one. A vertex finishing last in a DFS of the transposed graph
    lies in such a component; one forward and one reverse sweep from it
    settle the answer.
    """
    n = g.n
    into: list[list[int]] = [[] for _ in range(n)]
    for t, h, _ in g.arcs:
        into[h].append(t)
    visited = [False] * n
    last = 0
    for s in range(n):
        if visited[s]:
            continue
        visited[s] = True
        stack = [(s, iter(into[s]))]
        while stack:
            x, it = stack[-1]
            for y in it:
                if not visited[y]:
                    visited[y] = True
                    stack.append((y, iter(into[y])))
                    break
            else:
                stack.pop()
                last = x
    if not all(vertices_reaching(g, last)):
        return []
    reach = [False] * n
    reach[last] = True
    queue = deque([last])
    while queue:
        x = queue.popleft()
        for a in g.out_arcs[x]:
            if not reach[a.head]:
                reach[a.head] = True
                queue.append(a.head)
    return [v for v in range(n) if reach[v]]


def _solve_root(g: DirectedGraph, root: int) -> list[int] | None:
    src, dst, w, order = g.transposed_arrays
    chosen = _backend.kernels().min_arborescence(g.n, root, src, dst, w)
    if chosen is None:
        return None
    return [int(order[a]) for a in chosen]


def _branching(g: DirectedGraph, root: int, arc_ids: list[int]) -> InBranching:
    return InBranching(root, tuple(g.arcs[i] for i in arc_ids))


def edmonds_fixed_root(g: DirectedGraph, root: int) -> InBranching:
    """Minimum-weight in-branching rooted at ``root``.

    Weights may be negative. Among equal-weight outgoing arcs the greedy step
    prefers the smallest head. Raises :class:`InfeasibleError` listing the
    vertices with no path to ``root``.
    """
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} outside [0,{g.n})")
    reaching = vertices_reaching(g, root)
    stranded = [v for v in range(g.n) if not reaching[v]]
    if stranded:
        raise InfeasibleError(stranded)
    arc_ids = _solve_root(g, root)
    if arc_ids is None:  # pragma: no cover - excluded by the sweep above
        raise InfeasibleError([])
    return _branching(g, root, arc_ids)


def edmonds_best_root(g: DirectedGraph) -> tuple[int, InBranching]:
    """Optimal in-branching over every feasible root.

    The fixed-root solver runs once per feasible root; equal weights keep the
    smallest root.
    """
    roots = feasible_roots(g)
    if not roots:
        raise InfeasibleError(
            [], "infeasible: no vertex is reachable from every other vertex"
        )
    arc_w = g.arrays[2]
    best = None
    for r in roots:
        arc_ids = _solve_root(g, r)
        w = math.fsum(arc_w[arc_ids]) if arc_ids else 0.0
        if best is None or w < best[0]:
            best = (w, r, arc_ids)
    _, r, arc_ids = best
    return r, _branching(g, r, arc_ids)


def enumerate_optimal(g: DirectedGraph, root: int | None = None) -> tuple[float, InBranching]:
    """Exhaustive oracle: cheapest in-branching for ``root`` (or any root).

    Every assignment of one outgoing arc per non-root vertex is visited in
    lexicographic order, so ties resolve to the lexicographically smallest
    sorted arc list (then the smallest root). Refuses ``n > 8``.
    """
    n = g.n
    if n > ENUMERATION_CAP:
        raise InstanceTooLargeError(f"enumeration refused for n={n} > {ENUMERATION_CAP}")
    roots = range(n) if root is None else [root]
    out = [[] for _ in range(n)]
    for t, h, w in g.arcs:
        out[t].append((h, w))
    for lst in out:
        lst.sort()

    best: list = [None]
    for r in roots:
        order = [v for v in range(n) if v != r]
        parent = [-1] * n
        weights = [0.0] * n

        def assign(i: int) -> None:
            if i == len(order):
                total = math.fsum(weights[v] for v in order)
                if best[0] is None or total < best[0][0]:
                    best[0] = (total, r, tuple((v, parent[v], weights[v]) for v in order))
                return
            v = order[i]
            for h, w in out[v]:
                x = h
                while x != v and parent[x] >= 0:
                    x = parent[x]
                if x == v:
                    continue
                parent[v] = h
                weights[v] = w
                assign(i + 1)
            parent[v] = -1

        assign(0)
    if best[0] is None:
        raise InfeasibleError([], "infeasible: no spanning in-branching exists")
    total, r, arcs = best[0]
    return total, InBranching(r, tuple(Arc(*a) for a in arcs))
