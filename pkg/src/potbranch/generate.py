"""Seeded instance generators and single-arc perturbation.

Randomness comes from :class:`XorShift64Star` (Vigna's xorshift64*, shifts
12/25/27, multiplier 0x2545F4914F6CDD1D) seeded through one SplitMix64 step.
Both are specified bit-for-bit so the same :class:`GenSpec` yields the same
instance on any platform or in any language.

Draw order, for reference implementations:

1. diagonal values (potential only), vertex order;
2. Fisher-Yates shuffle of ``0..n-1`` (``i`` from ``n-1`` down to 1);
3. for ``i`` in ``1..n-1`` a tree edge ``{perm[i], perm[randint(0, i-1)]}``;
4. one uniform draw per non-tree unordered pair (potential) or ordered pair
   (general), lexicographic order; the pair/arc is kept if the draw is below
   ``density``;
5. one integer per edge (potential surplus) or arc (general weight), in
   sorted order.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ConfigError
from .graph import Arc, DirectedGraph, Edge, PotentialSystem

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` (rejection sampling, no modulo bias)."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class GenSpec:
    """Generator configuration.

    ``weight_range = (lo, hi)`` bounds diagonal values of potential systems
    and arc weights of general graphs; potential edge surpluses are drawn
    from ``[1, hi - lo + 1]``.
    """

    n: int
    density: float = 1.0
    seed: int = 0
    weight_range: tuple[int, int] = (0, 100)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigError(f"n must be a positive integer, got {self.n!r}")
        if not 0 < self.density <= 1:
            raise ConfigError(f"density must lie in (0, 1], got {self.density!r}")
        if not 0 <= self.seed <= MASK64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        lo, hi = self.weight_range
        if int(lo) != lo or int(hi) != hi or lo > hi:
            raise ConfigError(f"weight_range must be integers lo <= hi, got {self.weight_range!r}")

    def with_seed(self, seed: int) -> "GenSpec":
        return replace(self, seed=seed)


def _spanning_tree(rng: XorShift64Star, n: int) -> set[tuple[int, int]]:
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.integer(0, i)
        perm[i], perm[j] = perm[j], perm[i]
    tree = set()
    for i in range(1, n):
        u, v = perm[i], perm[rng.integer(0, i - 1)]
        tree.add((min(u, v), max(u, v)))
    return tree


def gen_potential(spec: GenSpec) -> PotentialSystem:
    """Random valid potential system on a connected support.

    Every edge gets ``phi[i,j] = max(d_i, d_j) + s`` with surplus ``s >= 1``,
    so the diagonal-dominance conditions hold by construction.
    """
    rng = XorShift64Star(spec.seed)
    lo, hi = (int(x) for x in spec.weight_range)
    n = spec.n
    diag = [rng.integer(lo, hi) for _ in range(n)]
    pairs = _spanning_tree(rng, n)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < spec.density:
                pairs.add((u, v))
    edges = []
    for u, v in sorted(pairs):
        s = rng.integer(1, hi - lo + 1)
        edges.append(Edge(u, v, float(max(diag[u], diag[v]) + s)))
    return PotentialSystem(n, tuple(float(x) for x in diag), tuple(edges))


def gen_general(spec: GenSpec) -> DirectedGraph:
    """Random directed graph with independent integer weights per arc.

    The spanning tree is laid down in both directions, so every vertex is a
    feasible root.
    """
    rng = XorShift64Star(spec.seed)
    lo, hi = (int(x) for x in spec.weight_range)
    n = spec.n
    arcs = set()
    for u, v in _spanning_tree(rng, n):
        arcs.add((u, v))
        arcs.add((v, u))
    for u in range(n):
        for v in range(n):
            if u != v and (u, v) not in arcs and rng.random() < spec.density:
                arcs.add((u, v))
    return DirectedGraph(n, tuple(Arc(t, h, float(rng.integer(lo, hi))) for t, h in sorted(arcs)))


def perturb(q: DirectedGraph, arc: tuple[int, int], delta: float) -> DirectedGraph:
    """Copy of ``q`` with the weight of ``arc`` changed by ``delta``."""
    tail, head = arc
    if not q.has_arc(tail, head):
        raise KeyError(f"arc ({tail},{head}) not in graph")
    if delta == 0:
        raise ValueError("delta must be nonzero")
    arcs = tuple(
        Arc(a.tail, a.head, a.weight + delta) if (a.tail, a.head) == (tail, head) else a
        for a in q.arcs
    )
    return DirectedGraph(q.n, arcs)
