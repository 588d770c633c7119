"""Command-line front end: solve, check, exact, gen, bench.

Exit codes: 0 ok, 1 usage or I/O error, 2 infeasible, 3 parse error,
4 refused scale, 5 benchmark found a ratio violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .errors import FgcError, Infeasible, InputError, ParseError, RefusedScale
from .exact_oracle import MAX_EDGES, exact_opt
from .feasibility import is_feasible_instance, violated_cut
from .fgc_solver import solve, verify_solution
from .instance_io import generate, parse_instance, serialize_instance, solution_document

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_PARSE = 3
EXIT_SCALE = 4
EXIT_VIOLATION = 5


class _Parser(argparse.ArgumentParser):
    # argparse's default usage exit code (2) collides with "infeasible"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str):
    with open(path) as fh:
        return parse_instance(fh.read())


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = _read(args.file)
    root = args.root - 1
    try:
        sol = solve(inst, root=root, prune=args.prune, check_invariants=args.check_invariants)
    except Infeasible:
        _emit(solution_document("infeasible", inst.k, root=root), args.out)
        return EXIT_INFEASIBLE
    _emit(
        solution_document("ok", inst.k, root=sol.root, edges=sol.edges, cost=sol.cost, arb_cost=sol.arb_cost),
        args.out,
    )
    return EXIT_OK


def _parse_ids(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad edge-id list {text!r}") from None


def cmd_check(args) -> int:
    inst = _read(args.file)
    if args.solution is None:
        ok = is_feasible_instance(inst)
        print("feasible" if ok else "infeasible")
        return EXIT_OK if ok else EXIT_INFEASIBLE
    F = _parse_ids(args.solution)
    side = violated_cut(inst, F)
    if side is None:
        print("feasible")
        return EXIT_OK
    print("infeasible")
    print("violated cut S = " + " ".join(str(v + 1) for v in sorted(side)))
    return EXIT_INFEASIBLE


def cmd_exact(args) -> int:
    inst = _read(args.file)
    try:
        res = exact_opt(inst)
    except Infeasible:
        print(solution_document("infeasible", inst.k), end="")
        return EXIT_INFEASIBLE
    print(solution_document("optimal", inst.k, edges=res.edges, cost=res.cost, opt=res.cost, ratio=1.0), end="")
    return EXIT_OK


def cmd_gen(args) -> int:
    inst = generate(
        args.n, args.m, args.k, args.safe_prob, args.max_cost, args.seed, require_feasible=args.feasible
    )
    _emit(serialize_instance(inst), args.out)
    return EXIT_OK


def trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(63) for _ in range(trials)]


def run_trial(params: tuple) -> dict:
    """One benchmark trial; a plain function of its parameters so it can run in any process."""
    index, seed, n, m, k, safe_prob, max_cost = params
    inst = generate(n, m, k, safe_prob, max_cost, seed, require_feasible=True)
    sol = solve(inst)
    opt = exact_opt(inst)
    report = verify_solution(inst, sol, opt.edges)
    return {
        "trial": index,
        "seed": seed,
        "cost": sol.cost,
        "arb_cost": sol.arb_cost,
        "opt": opt.cost,
        "ratio": report.ratio,
        "ok": report.passed,
    }


def cmd_bench(args) -> int:
    if args.m > MAX_EDGES:
        raise RefusedScale(f"bench runs the exact oracle, which refuses m > {MAX_EDGES}")
    params = [
        (i, s, args.n, args.m, args.k, args.safe_prob, args.max_cost)
        for i, s in enumerate(trial_seeds(args.seed, args.trials))
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_trial, params))
    else:
        results = [run_trial(p) for p in params]
    results.sort(key=lambda r: r["trial"])
    lines = ["trial,seed,cost,arb_cost,opt,ratio,ok"]
    for r in results:
        lines.append(
            f"{r['trial']},{r['seed']},{r['cost']},{r['arb_cost']},{r['opt']},{r['ratio']:.6f},{int(r['ok'])}"
        )
    ratios = [r["ratio"] for r in results]
    violations = sum(1 for r in results if not r["ok"])
    summary = {
        "trials": len(results),
        "k": args.k,
        "factor": args.k + 1,
        "max_ratio": max(ratios) if ratios else None,
        "mean_ratio": statistics.fmean(ratios) if ratios else None,
        "violations": violations,
    }
    text = "\n".join(lines) + "\n" + "# " + json.dumps(summary, sort_keys=True) + "\n"
    _emit(text, args.out)
    return EXIT_VIOLATION if violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kfgc", description="k-flexible graph connectivity solver")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="run the (k+1)-approximation")
    s.add_argument("file")
    s.add_argument("--root", type=int, default=1, help="1-based root vertex (default 1)")
    s.add_argument("--prune", action="store_true", help="reverse-delete redundant edges afterwards")
    s.add_argument("--check-invariants", action="store_true", help="re-verify the arborescence")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="instance or solution feasibility")
    c.add_argument("file")
    c.add_argument("--solution", help="comma-separated 0-based edge IDs")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("exact", help="brute-force optimum (m <= %d)" % MAX_EDGES)
    e.add_argument("file")
    e.set_defaults(func=cmd_exact)

    g = sub.add_parser("gen", help="random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--safe-prob", type=float, default=0.5)
    g.add_argument("--max-cost", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--feasible", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="approximation ratio against the exact oracle")
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--safe-prob", type=float, default=0.5)
    b.add_argument("--max-cost", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RefusedScale as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FgcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
