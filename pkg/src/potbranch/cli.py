"""``potbranch`` command line.

Exit status: 0 success, 1 negative verdict (``check-potential`` said no,
``compare`` found unequal weights), 2 usage or input errors, 3 infeasible or
disconnected instances.
"""
from __future__ import annotations

import argparse
import statistics
import sys
import time
from typing import Sequence, TextIO

from . import _backend
from .errors import DisconnectedGraphError, InfeasibleError, InvalidGraphError, ParseError, PotbranchError
from .generate import GenSpec, gen_general, gen_potential
from .graph import DirectedGraph, InBranching, PotentialSystem, UndirectedGraph
from .msa import edmonds_best_root, edmonds_fixed_root
from .mst import kruskal, prim
from .potential import build_q, recover_phi, solve_fast, validate_phi
from .textio import format_instance, format_weight, parse_instance

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(PotbranchError):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_instance(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _as_phi(obj) -> PotentialSystem | None:
    if isinstance(obj, PotentialSystem):
        return obj
    if isinstance(obj, UndirectedGraph):
        return PotentialSystem.from_graph(obj)
    return None


def _checked_phi(phi: PotentialSystem) -> PotentialSystem:
    diag = validate_phi(phi)
    if not diag.ok:
        raise UsageError(f"invalid phi: {diag.describe()}")
    return phi


def _as_digraph(obj) -> DirectedGraph:
    if isinstance(obj, DirectedGraph):
        return obj
    if isinstance(obj, PotentialSystem):
        return build_q(_checked_phi(obj))
    raise UsageError("expected a directed instance (q, digraph) or a phi matrix")


def _print_branching(out: TextIO, b: InBranching) -> None:
    out.write(f"root {b.root}\n")
    for t, h, w in b.arcs:
        out.write(f"arc {t} {h} {format_weight(w)}\n")
    out.write(f"weight {format_weight(b.weight)}\n")


def cmd_mst(args, out: TextIO) -> int:
    obj = _load(args.file)
    if isinstance(obj, PotentialSystem):
        obj = obj.graph
    if not isinstance(obj, UndirectedGraph):
        raise UsageError("mst expects an undirected instance (ugraph or phi)")
    if args.algo == "prim":
        if not 0 <= args.start < obj.n:
            raise UsageError(f"--start {args.start} outside [0,{obj.n})")
        tree = prim(obj, args.start)
    else:
        tree = kruskal(obj)
    for u, v, w in tree.edges:
        out.write(f"edge {u} {v} {format_weight(w)}\n")
    out.write(f"weight {format_weight(tree.weight)}\n")
    return EXIT_OK


def cmd_msa(args, out: TextIO) -> int:
    g = _as_digraph(_load(args.file))
    if args.root is None:
        _, b = edmonds_best_root(g)
    else:
        if not 0 <= args.root < g.n:
            raise UsageError(f"--root {args.root} outside [0,{g.n})")
        b = edmonds_fixed_root(g, args.root)
    _print_branching(out, b)
    return EXIT_OK


def _witness_line(result) -> str:
    return "witness " + result.witness.describe()


def cmd_check_potential(args, out: TextIO) -> int:
    obj = _load(args.file)
    phi = _as_phi(obj)
    if phi is not None:
        diag = validate_phi(phi)
        if not diag.ok:
            out.write("potential no\n")
            for v in diag.violations:
                out.write(f"witness {v.rule} {v.witness}\n")
            return EXIT_NO
        obj = build_q(phi)
    result = recover_phi(obj)
    if not result.potential:
        out.write("potential no\n")
        out.write(_witness_line(result) + "\n")
        return EXIT_NO
    out.write("potential yes\n")
    out.write(format_instance(result.phi, "phi"))
    return EXIT_OK


def cmd_solve(args, out: TextIO) -> int:
    obj = _load(args.file)
    phi = _as_phi(obj)
    if phi is not None:
        _checked_phi(phi)
    elif not args.force_general:
        rec = recover_phi(obj)
        phi = rec.phi if rec.potential else None
    if phi is not None and not args.force_general:
        _, b, _ = solve_fast(phi)
        out.write("method fast\n")
    else:
        g = build_q(phi) if isinstance(obj, (PotentialSystem, UndirectedGraph)) else obj
        _, b = edmonds_best_root(g)
        out.write("method general\n")
    _print_branching(out, b)
    return EXIT_OK


def cmd_compare(args, out: TextIO) -> int:
    obj = _load(args.file)
    phi = _as_phi(obj)
    if phi is not None:
        q = build_q(_checked_phi(phi))
    else:
        rec = recover_phi(obj)
        if not rec.potential:
            raise UsageError(f"compare needs a potential instance: {rec.witness.describe()}")
        phi, q = rec.phi, obj
    _, _, fast_w = solve_fast(phi)
    _, b = edmonds_best_root(q)
    general_w = b.weight
    equal = fast_w == general_w
    out.write(f"fast {format_weight(fast_w)}\n")
    out.write(f"general {format_weight(general_w)}\n")
    out.write(f"equal {'yes' if equal else 'no'}\n")
    return EXIT_OK if equal else EXIT_NO


def cmd_gen(args, out: TextIO) -> int:
    spec = _gen_spec(args.n, args.density, args.seed, args.min, args.max)
    if args.type == "potential":
        out.write(format_instance(gen_potential(spec), "phi"))
    else:
        out.write(format_instance(gen_general(spec), "q"))
    return EXIT_OK


def _gen_spec(n, density, seed, lo, hi) -> GenSpec:
    try:
        return GenSpec(n=n, density=density, seed=seed, weight_range=(lo, hi))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _median_ms(fn, setup, reps: int) -> tuple[float, object]:
    times = []
    result = None
    for _ in range(reps):
        arg = setup()
        t0 = time.perf_counter()
        result = fn(arg)
        times.append((time.perf_counter() - t0) * 1e3)
    return statistics.median(times), result


def bench_rows(sizes: Sequence[int], seed: int, reps: int, density: float = 1.0,
               lo: int = 0, hi: int = 100) -> list[tuple[int, str, float, float]]:
    """Median timings of the fast and general paths on generated potential instances."""
    rows = []
    for n in sizes:
        phi = gen_potential(_gen_spec(n, density, seed, lo, hi))

        def fresh_phi():
            return PotentialSystem(phi.n, phi.diag, phi.edges)

        def fresh_q():
            return build_q(fresh_phi())

        fast_ms, (_, _, fast_w) = _median_ms(solve_fast, fresh_phi, reps)
        gen_ms, (_, b) = _median_ms(edmonds_best_root, fresh_q, reps)
        rows.append((n, "fast", fast_ms, fast_w))
        rows.append((n, "general", gen_ms, b.weight))
    return rows


def cmd_bench(args, out: TextIO) -> int:
    try:
        sizes = [int(x) for x in args.n.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--n expects comma-separated integers, got {args.n!r}") from None
    if not sizes or args.reps < 1:
        raise UsageError("--n needs at least one size and --reps must be >= 1")
    if args.backend:
        try:
            _backend.use_backend(args.backend)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out.write("n,method,median_ms,weight\n")
    for n, method, ms, w in bench_rows(sizes, args.seed, args.reps, args.density, args.min, args.max):
        out.write(f"{n},{method},{ms:.3f},{format_weight(w)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="potbranch", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mst", help="undirected minimum spanning tree")
    s.add_argument("file")
    s.add_argument("--algo", choices=("kruskal", "prim"), default="kruskal")
    s.add_argument("--start", type=int, default=0)
    s.set_defaults(func=cmd_mst)

    s = sub.add_parser("msa", help="minimum spanning in-branching (Edmonds)")
    s.add_argument("file")
    s.add_argument("--root", type=int)
    s.set_defaults(func=cmd_msa)

    s = sub.add_parser("check-potential", help="decide potentiality and recover phi")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_potential)

    s = sub.add_parser("solve", help="fast path when potential, Edmonds otherwise")
    s.add_argument("file")
    s.add_argument("--force-general", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("compare", help="fast path vs Edmonds on a potential instance")
    s.add_argument("file")
    s.set_defaults(func=cmd_compare)

    for name, helptext in (("gen", "emit a random instance"), ("bench", "time both paths, CSV output")):
        s = sub.add_parser(name, help=helptext)
        if name == "gen":
            s.add_argument("--type", choices=("potential", "general"), required=True)
            s.add_argument("--n", type=int, required=True)
            s.set_defaults(func=cmd_gen)
        else:
            s.add_argument("--type", choices=("potential",), required=True)
            s.add_argument("--n", required=True, help="comma-separated sizes")
            s.add_argument("--reps", type=int, default=5)
            s.add_argument("--backend", choices=("compiled", "python"))
            s.set_defaults(func=cmd_bench)
        s.add_argument("--density", type=float, default=1.0)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--min", type=int, default=0)
        s.add_argument("--max", type=int, default=100)
    return p


def run_command(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
                stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (DisconnectedGraphError, InfeasibleError) as exc:
        err.write(f"potbranch: {exc}\n")
        return EXIT_INFEASIBLE
    except (UsageError, InvalidGraphError, ParseError) as exc:
        err.write(f"potbranch: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
