"""Undirected minimum spanning trees: Kruskal (default) and Prim."""
from __future__ import annotations

import heapq

import numpy as np

from . import _backend
from .errors import DisconnectedGraphError
from .graph import Edge, UndirectedGraph, UndirectedTree, connected_components


class DisjointSetForest:
    """Union-find with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def __len__(self):
        return len(self.parent)

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if already joined."""
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        return True


def kruskal_order(g: UndirectedGraph) -> np.ndarray:
    """Edge indices sorted by (weight, u, v)."""
    u, v, w = g.arrays
    return np.lexsort((v, u, w)).astype(np.int64)


def kruskal(g: UndirectedGraph) -> UndirectedTree:
    """Minimum spanning tree by Kruskal's greedy scan.

    Ties resolve by the sort order (weight, min endpoint, max endpoint), so
    the returned edge set is deterministic. Raises
    :class:`DisconnectedGraphError` with the component partition if ``g``
    does not span.
    """
    u, v, _ = g.arrays
    taken = _backend.kernels().kruskal_select(g.n, u, v, kruskal_order(g))
    if len(taken) != g.n - 1:
        raise DisconnectedGraphError(connected_components(g))
    return UndirectedTree(g.n, tuple(g.edges[e] for e in taken))


def prim(g: UndirectedGraph, start: int = 0) -> UndirectedTree:
    """Minimum spanning tree grown from ``start`` with a binary heap.

    Heap entries order by (weight, vertex, via); total weight always equals
    Kruskal's though the edge set may differ under ties.
    """
    if not 0 <= start < g.n:
        raise ValueError(f"start vertex {start} outside [0,{g.n})")
    adj = g.adjacency
    seen = [False] * g.n
    seen[start] = True
    heap = [(w, y, start) for y, w in adj[start]]
    heapq.heapify(heap)
    edges = []
    while heap and len(edges) < g.n - 1:
        w, y, x = heapq.heappop(heap)
        if seen[y]:
            continue
        seen[y] = True
        edges.append(Edge(min(x, y), max(x, y), w))
        for z, wz in adj[y]:
            if not seen[z]:
                heapq.heappush(heap, (wz, z, y))
    if len(edges) != g.n - 1:
        unreached = [x for x in range(g.n) if not seen[x]]
        raise DisconnectedGraphError(
            connected_components(g),
            f"graph is disconnected: vertices {unreached} unreachable from {start}",
            unreached=unreached,
        )
    return UndirectedTree(g.n, tuple(edges))
