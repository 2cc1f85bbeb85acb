"""Compiled kernels vs the pure-Python fallback.

Times Edmonds best-root and Kruskal on generated potential instances with
each backend and prints a CSV with the speedup. Usage::

    python benchmarks/bench_backends.py --n 50,100,200 --reps 3
"""
import argparse
import statistics
import time

import potbranch as pb


def median_seconds(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="50,100,200")
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--density", type=float, default=1.0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = pb.available_backends()
    if "compiled" not in backends:
        print("# compiled extension not built; only the python backend is timed")
    before = pb.backend_name()
    print("n,kernel," + ",".join(f"{b}_ms" for b in backends) + ",speedup")
    try:
        for n in (int(x) for x in args.n.split(",")):
            phi = pb.gen_potential(pb.GenSpec(n, args.density, args.seed))
            q = pb.build_q(phi)
            jobs = {"edmonds_best_root": lambda: pb.edmonds_best_root(q)[1].weight,
                    "kruskal": lambda: pb.kruskal(phi.graph).weight}
            for kernel, fn in jobs.items():
                ms, weights = [], set()
                for b in backends:
                    pb.use_backend(b)
                    t, w = median_seconds(fn, args.reps)
                    ms.append(t * 1e3)
                    weights.add(w)
                assert len(weights) == 1, f"backends disagree on {kernel} at n={n}"
                speed = f"{ms[-1] / ms[0]:.1f}" if len(ms) == 2 else ""
                print(f"{n},{kernel}," + ",".join(f"{m:.3f}" for m in ms) + f",{speed}", flush=True)
    finally:
        pb.use_backend(before)


if __name__ == "__main__":
    main()
