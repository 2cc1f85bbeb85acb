"""Acceptance criteria, one check per criterion.

Run with pytest (a summary line per criterion is printed at the end of the
session) or directly: ``python tests/test_acceptance.py``.
"""
import io
import sys
import time
from pathlib import Path

import pytest

import potbranch as pb
from potbranch.cli import run_command
from potbranch.generate import GenSpec, XorShift64Star, gen_general, gen_potential, perturb
from potbranch.msa import feasible_roots

GOLDEN = Path(__file__).parent / "golden"
DENSITIES = (0.2, 0.5, 1.0)
RESULTS: dict[int, tuple[bool, str]] = {}


def criterion_one_instances():
    for i in range(500):
        yield gen_potential(GenSpec(n=2 + i % 49, density=DENSITIES[i % 3], seed=1000 + i))


def check_1():
    t0 = time.perf_counter()
    bad = 0
    for phi in criterion_one_instances():
        _, _, fast = pb.solve_fast(phi)
        _, b = pb.edmonds_best_root(pb.build_q(phi))
        bad += fast != b.weight
    dt = time.perf_counter() - t0
    return bad == 0 and dt < 30, f"{500 - bad}/500 exact matches in {dt:.1f}s (budget 30s)"


def check_2():
    t0 = time.perf_counter()
    bad = checked = 0
    for i in range(200):
        spec = GenSpec(n=1 + i % 6, density=DENSITIES[i % 3], seed=2000 + i, weight_range=(-10, 10))
        potential = i % 2 == 0
        phi = gen_potential(spec) if potential else None
        q = pb.build_q(phi) if potential else gen_general(spec)
        for r in feasible_roots(q):
            w, _ = pb.enumerate_optimal(q, r)
            bad += pb.edmonds_fixed_root(q, r).weight != w
            checked += 1
        best, _ = pb.enumerate_optimal(q)
        if potential:
            bad += pb.solve_fast(phi)[2] != best
    dt = time.perf_counter() - t0
    return bad == 0 and dt < 10, f"{checked} rooted checks, {bad} disagreements in {dt:.1f}s (budget 10s)"


def check_3():
    bad = sum(pb.weight_by_formula(phi) != pb.solve_fast(phi)[2] for phi in criterion_one_instances())
    return bad == 0, f"{500 - bad}/500 closed-form weights equal"


def check_4():
    bad = 0
    for phi in criterion_one_instances():
        q = pb.build_q(phi)
        r = pb.recover_phi(q)
        ok = r.potential and pb.build_q(r.phi) == q
        ok = ok and all(min(r.phi.diag[v] for v in comp) == 0 for comp in r.components)
        bad += not ok
    return bad == 0, f"{500 - bad}/500 exact round trips"


def check_5():
    t0 = time.perf_counter()
    caught = 0
    for i in range(100):
        phi = gen_potential(GenSpec(n=3 + i % 30, density=1.0, seed=5000 + i))
        q = pb.build_q(phi)
        t, h, _ = q.arcs[XorShift64Star(i).integer(0, len(q.arcs) - 1)]
        caught += not pb.recover_phi(perturb(q, (t, h), 1)).potential
    dt = time.perf_counter() - t0
    return caught == 100 and dt < 5, f"{caught}/100 perturbations detected in {dt:.1f}s (budget 5s)"


def check_6():
    bad = 0
    for i in range(200):
        # narrow weight ranges force many ties
        spec = GenSpec(n=1 + i % 200, density=DENSITIES[i % 3], seed=6000 + i, weight_range=(0, 3 + i % 50))
        g = gen_potential(spec).graph
        start = XorShift64Star(i).integer(0, g.n - 1)
        bad += pb.kruskal(g).weight != pb.prim(g, start).weight
    return bad == 0, f"{200 - bad}/200 Kruskal/Prim weights equal"


def _inject(phi, rng):
    """Lower one edge onto its larger diagonal; only that side breaks."""
    d = phi.diag
    cands = [e for e in phi.edges if d[e.u] != d[e.v]]
    if not cands:
        return None
    u, v, _ = cands[rng.integer(0, len(cands) - 1)]
    hi, lo = (u, v) if d[u] > d[v] else (v, u)
    new = d[hi] - rng.integer(0, int(d[hi] - d[lo]) - 1)
    edges = [(a, b, new if (a, b) == (u, v) else w) for a, b, w in phi.edges]
    return pb.PotentialSystem(phi.n, d, edges), (hi, lo)


def check_7():
    valid = 0
    for i in range(100):
        phi = gen_potential(GenSpec(n=2 + i % 20, density=DENSITIES[i % 3], seed=7000 + i, weight_range=(-50, 50)))
        valid += all(a.weight > 0 for a in pb.build_q(phi).arcs)
    exact = tried = 0
    seed = 7100
    while tried < 100:
        seed += 1
        rng = XorShift64Star(seed)
        got = _inject(gen_potential(GenSpec(n=2 + seed % 20, density=0.5, seed=seed)), rng)
        if got is None:
            continue
        tried += 1
        bad_phi, (i, k) = got
        diag = pb.validate_phi(bad_phi)
        only = len(diag.violations) == 1 and diag.violations[0].witness.startswith(f"({i}, {k}):")
        nonpos = [(a.tail, a.head) for a in pb.potential.q_arcs(bad_phi) if not a.weight > 0]
        with pytest.raises(pb.InvalidGraphError):
            pb.build_q(bad_phi)
        exact += only and nonpos == [(i, k)]
    return valid == 100 and exact == 100, f"{valid}/100 valid all-positive, {exact}/100 injections reported exactly"


def check_8():
    total = ok = 0
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, argv, code = (part.strip() for part in line.split("|"))
        args = argv.split()
        args[1] = str(GOLDEN / args[1])
        out = io.StringIO()
        got = run_command(args, out, io.StringIO())
        total += 1
        ok += got == int(code) and out.getvalue() == (GOLDEN / f"{name}.out").read_text()
    return ok == total, f"{ok}/{total} golden outputs byte-exact with expected exit status"


def check_9():
    phi = gen_potential(GenSpec(n=300, density=1.0, seed=9))
    q = pb.build_q(phi)
    t0 = time.perf_counter()
    _, b = pb.edmonds_best_root(q)
    t_general = time.perf_counter() - t0
    t0 = time.perf_counter()
    _, _, w = pb.solve_fast(phi)
    t_fast = time.perf_counter() - t0
    out = io.StringIO()
    run_command(["bench", "--type", "potential", "--n", "100,150", "--seed", "9", "--reps", "3"], out, io.StringIO())
    rows = [line.split(",") for line in out.getvalue().splitlines()[1:]]
    med = {(int(n), m): float(ms) for n, m, ms, _ in rows}
    faster = all(med[n, "fast"] < med[n, "general"] for n in (100, 150))
    ok = t_general < 10 and t_fast < 0.1 and faster and w == b.weight
    detail = (f"n=300 general {t_general:.2f}s (<10s), fast {t_fast * 1e3:.1f}ms (<100ms), "
              f"bench medians " + ", ".join(f"n={n} {med[n, 'fast']:.1f} vs {med[n, 'general']:.1f}ms" for n in (100, 150)))
    return ok, detail


CHECKS = {n: globals()[f"check_{n}"] for n in range(1, 10)}


def run_check(n):
    ok, detail = CHECKS[n]()
    RESULTS[n] = (ok, detail)
    return ok, detail


@pytest.mark.slow
@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n):
    ok, detail = run_check(n)
    assert ok, detail


def summary_lines():
    return [f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}" for n, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for n in sorted(CHECKS):
        run_check(n)
        print(summary_lines()[-1], flush=True)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
