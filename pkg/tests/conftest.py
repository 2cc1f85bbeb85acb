import itertools
import sys

import pytest

import potbranch as pb
from potbranch import _backend


@pytest.fixture(params=_backend.available_backends())
def backend(request):
    """Run the test once per kernel backend, restoring the default afterwards."""
    before = _backend.backend_name()
    _backend.use_backend(request.param)
    yield request.param
    _backend.use_backend(before)


@pytest.fixture
def phi3():
    return pb.PotentialSystem(3, (1, 2, 3), ((0, 1, 4), (0, 2, 6), (1, 2, 5)))


@pytest.fixture
def phi2():
    return pb.PotentialSystem(2, (0, 1), ((0, 1, 5),))


@pytest.fixture
def inconsistent_triangle():
    return pb.DirectedGraph(3, [(0, 1, 1), (1, 0, 2), (1, 2, 1), (2, 1, 2), (0, 2, 1), (2, 0, 1)])


def brute_spanning_trees(n, edges):
    """Every spanning tree of an undirected graph, as edge tuples."""
    for combo in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for u, v, _ in combo:
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            yield combo


def brute_out_arborescence(n, arcs, root):
    """Cheapest out-arborescence by enumerating incoming-arc choices."""
    into = {v: [(t, w) for t, h, w in arcs if h == v] for v in range(n)}
    others = [v for v in range(n) if v != root]
    best = None
    for choice in itertools.product(*(into[v] for v in others)):
        par = dict(zip(others, (t for t, _ in choice)))
        ok = True
        for v in others:
            x, steps = v, 0
            while x != root and steps <= n:
                x = par[x]
                steps += 1
            if x != root:
                ok = False
                break
        if ok:
            w = sum(w for _, w in choice)
            best = w if best is None else min(best, w)
    return best


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
