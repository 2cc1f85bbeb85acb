"""Pure-Python kernels; the compiled ``_kernels`` module mirrors these.

``min_arborescence`` is Chu-Liu/Edmonds with the contraction bookkeeping of
Gabow et al. / Tarjan: each super-vertex keeps its incoming arcs in a skew
heap with a lazy additive offset, so reducing every arc entering a cycle is
O(1) and merging heaps on contraction is O(log m) amortized. A union-find
with rollback (no path compression) undoes the contractions in reverse order
to expand the chosen arcs.
"""
from __future__ import annotations


class _SkewHeaps:
    """Top-down skew heaps over arc indices, ordered by (key, index)."""

    def __init__(self, w):
        m = len(w)
        self.w = [float(x) for x in w]
        self.add = [0.0] * m
        self.left = [-1] * m
        self.right = [-1] * m

    def push(self, x):
        d = self.add[x]
        if d:
            self.w[x] += d
            if self.left[x] >= 0:
                self.add[self.left[x]] += d
            if self.right[x] >= 0:
                self.add[self.right[x]] += d
            self.add[x] = 0.0

    def merge(self, a, b):
        w, left, right, push = self.w, self.left, self.right, self.push
        root = tail = -1
        while a >= 0 and b >= 0:
            push(a)
            push(b)
            if w[b] < w[a] or (w[b] == w[a] and b < a):
                a, b = b, a
            if tail < 0:
                root = a
            else:
                left[tail] = a
            tail = a
            nxt = right[a]
            right[a] = left[a]
            a = nxt
        rest = a if a >= 0 else b
        if tail < 0:
            return rest
        left[tail] = rest
        return root

    def top(self, x):
        self.push(x)
        return self.w[x]

    def pop(self, x):
        self.push(x)
        return self.merge(self.left[x], self.right[x])


def min_arborescence(n, root, src, dst, w):
    """Minimum out-arborescence of ``root``; arcs given column-wise.

    Among arcs of equal reduced weight entering a super-vertex the lowest
    index wins. Returns the chosen arc indices, one per non-root vertex in
    vertex order, or ``None`` if some vertex is unreachable from ``root``.
    """
    m = len(src)
    src = [int(x) for x in src]
    dst = [int(x) for x in dst]
    heaps = _SkewHeaps(w)
    heap = [-1] * n
    for a in range(m):
        heap[dst[a]] = heaps.merge(heap[dst[a]], a)

    uf = [-1] * n  # negative size at representatives, else parent
    history = []

    def find(x):
        while uf[x] >= 0:
            x = uf[x]
        return x

    def join(a, b):
        a, b = find(a), find(b)
        if a == b:
            return False
        if uf[a] > uf[b]:
            a, b = b, a
        history.append((a, uf[a]))
        history.append((b, uf[b]))
        uf[a] += uf[b]
        uf[b] = a
        return True

    seen = [-1] * n
    seen[root] = root
    in_arc = [-1] * n
    path_arc = [0] * n
    path_vtx = [0] * n
    cycles = []
    for s in range(n):
        u = s
        qi = 0
        while seen[u] < 0:
            h = heap[u]
            while h >= 0 and find(src[h]) == u:
                h = heaps.pop(h)
            if h < 0:
                return None
            e = h
            ew = heaps.top(e)
            h = heaps.pop(e)
            if h >= 0:
                heaps.add[h] -= ew
            heap[u] = h
            path_arc[qi] = e
            path_vtx[qi] = u
            qi += 1
            seen[u] = s
            u = find(src[e])
            if seen[u] == s:
                cyc = -1
                end = qi
                t = len(history)
                while True:
                    qi -= 1
                    x = path_vtx[qi]
                    cyc = heaps.merge(cyc, heap[x])
                    if not join(u, x):
                        break
                u = find(u)
                heap[u] = cyc
                seen[u] = -1
                cycles.append((u, t, path_arc[qi:end]))
        for i in range(qi):
            e = path_arc[i]
            in_arc[find(dst[e])] = e

    for u, t, arcs in reversed(cycles):
        while len(history) > t:
            x, old = history.pop()
            uf[x] = old
        entering = in_arc[u]
        for e in arcs:
            in_arc[find(dst[e])] = e
        in_arc[find(dst[entering])] = entering
    return [in_arc[v] for v in range(n) if v != root]


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def kruskal_select(n, u, v, order):
    """Greedy scan of edges in ``order``; returns accepted edge indices."""
    parent = list(range(n))
    rank = [0] * n
    taken = []
    for e in order:
        if len(taken) == n - 1:
            break
        e = int(e)
        a = _find(parent, int(u[e]))
        b = _find(parent, int(v[e]))
        if a == b:
            continue
        if rank[a] < rank[b]:
            a, b = b, a
        parent[b] = a
        if rank[a] == rank[b]:
            rank[a] += 1
        taken.append(e)
    return taken
