import pytest
from hypothesis import given, settings, strategies as st

import potbranch as pb
from potbranch.msa import feasible_roots

from conftest import brute_out_arborescence

EX1 = [(1, 0, 1), (2, 1, 1), (2, 0, 5), (0, 1, 2), (1, 2, 2), (0, 2, 3)]
EX2 = [(1, 2, 1), (2, 1, 1), (1, 0, 10), (2, 0, 8)]


def test_examples_against_oracle(backend):
    g = pb.DirectedGraph(3, EX1)
    assert pb.enumerate_optimal(g, 0)[0] == 2
    b = pb.edmonds_fixed_root(g, 0)
    assert {(a.tail, a.head) for a in b.arcs} == {(1, 0), (2, 1)}
    assert b.weight == 2

    g = pb.DirectedGraph(3, EX2)
    assert pb.enumerate_optimal(g, 0)[0] == 9
    b = pb.edmonds_fixed_root(g, 0)
    assert {(a.tail, a.head) for a in b.arcs} == {(1, 2), (2, 0)}
    assert b.weight == 9


def test_single_vertex(backend):
    g = pb.DirectedGraph(1)
    b = pb.edmonds_fixed_root(g, 0)
    assert b == pb.InBranching(0) and b.weight == 0
    assert pb.edmonds_best_root(g) == (0, pb.InBranching(0))
    assert pb.enumerate_optimal(g) == (0, pb.InBranching(0))


def test_negative_weights(backend):
    g = pb.DirectedGraph(3, [(1, 0, -4), (2, 1, -1), (2, 0, 3), (0, 2, -7), (1, 2, 0)])
    for r in range(3):
        try:
            w, _ = pb.enumerate_optimal(g, r)
        except pb.InfeasibleError:
            continue
        assert pb.edmonds_fixed_root(g, r).weight == w


def test_greedy_tie_prefers_smallest_head(backend):
    g = pb.DirectedGraph(4, [(3, 0, 2), (3, 1, 2), (3, 2, 2), (1, 0, 1), (2, 0, 1)])
    b = pb.edmonds_fixed_root(g, 0)
    assert b.parent[3] == 0


def test_infeasible_lists_stranded(backend):
    g = pb.DirectedGraph(4, [(1, 0, 1), (2, 3, 1), (3, 2, 1)])
    with pytest.raises(pb.InfeasibleError) as info:
        pb.edmonds_fixed_root(g, 0)
    assert info.value.stranded == [2, 3]
    with pytest.raises(pb.InfeasibleError):
        pb.edmonds_best_root(g)
    with pytest.raises(pb.InfeasibleError):
        pb.enumerate_optimal(g)


def test_best_root_examples(backend, phi3):
    r, b = pb.edmonds_best_root(pb.DirectedGraph(2, [(0, 1, 5), (1, 0, 4)]))
    assert (r, b.weight) == (0, 4)

    q = pb.build_q(phi3)
    r, b = pb.edmonds_best_root(q)
    assert (r, b.weight) == (0, 4)
    assert pb.enumerate_optimal(q) == (4, b)

    forced = pb.DirectedGraph(4, [(0, 2, 5), (1, 2, 1), (3, 2, 2)])
    r, b = pb.edmonds_best_root(forced)
    assert r == 2 and b.weight == 8
    assert feasible_roots(forced) == [2]


def test_best_root_tie_keeps_smallest(backend):
    g = pb.DirectedGraph(3, [(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)])
    assert pb.edmonds_best_root(g)[0] == 0


def test_enumerate_examples():
    assert pb.enumerate_optimal(pb.DirectedGraph(2, [(1, 0, 3)]), 0)[0] == 3
    full = pb.DirectedGraph(3, [(u, v, 1) for u in range(3) for v in range(3) if u != v])
    w, b = pb.enumerate_optimal(full, 0)
    assert w == 2
    assert b.arcs == ((1, 0, 1.0), (2, 0, 1.0))  # lexicographically first


def test_enumerate_cap():
    g = pb.DirectedGraph(9, [(v, 0, 1) for v in range(1, 9)])
    with pytest.raises(pb.InstanceTooLargeError):
        pb.enumerate_optimal(g, 0)


def test_feasible_roots_strongly_connected():
    g = pb.DirectedGraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    assert feasible_roots(g) == [0, 1, 2]
    g = pb.DirectedGraph(4, [(0, 1, 1), (1, 0, 1), (2, 1, 1), (3, 2, 1)])
    assert feasible_roots(g) == [0, 1]
    assert feasible_roots(pb.DirectedGraph(3, [(0, 1, 1)])) == []


@st.composite
def digraphs(draw, max_n=6, lo=-6, hi=9):
    n = draw(st.integers(1, max_n))
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and draw(st.integers(0, 2)):
                arcs.append((u, v, draw(st.integers(lo, hi))))
    return pb.DirectedGraph(n, arcs)


@settings(max_examples=200, deadline=None)
@given(digraphs())
def test_oracle_equivalence(g):
    before = pb.backend_name()
    for be in pb.available_backends():
        pb.use_backend(be)
        try:
            for r in range(g.n):
                try:
                    w, ob = pb.enumerate_optimal(g, r)
                except pb.InfeasibleError:
                    with pytest.raises(pb.InfeasibleError):
                        pb.edmonds_fixed_root(g, r)
                    continue
                b = pb.edmonds_fixed_root(g, r)
                assert pb.validate_branching(g, b).ok
                assert pb.validate_branching(g, ob).ok
                assert pb.branching_weight(g, b) == w
        finally:
            pb.use_backend(before)


@settings(max_examples=100, deadline=None)
@given(digraphs(), st.integers(-20, 20))
def test_weight_shift(g, c):
    roots = feasible_roots(g)
    if not roots:
        return
    r = roots[0]
    shifted = pb.DirectedGraph(g.n, [(t, h, w + c) for t, h, w in g.arcs])
    base = pb.edmonds_fixed_root(g, r)
    moved = pb.edmonds_fixed_root(shifted, r)
    assert moved.weight == base.weight + c * (g.n - 1)
    # the original optimum stays optimal after the shift
    assert sum(shifted.weight(t, h) for t, h, _ in base.arcs) == moved.weight


@settings(max_examples=100, deadline=None)
@given(digraphs(max_n=5))
def test_arc_reversal_duality(g):
    t = g.transpose()
    for r in feasible_roots(g):
        out_best = brute_out_arborescence(t.n, t.arcs, r)
        assert pb.edmonds_fixed_root(g, r).weight == out_best
