"""Command-line interface: ``mrce {solve,check,gen,audit}``.

Exit codes: 0 ok, 1 check/audit failure, 2 unreadable input or bad
parameters, 3 algorithm/input mismatch, 4 instance too large for the
exact oracle.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import formats
from .forge import (
    FormulaError,
    equalize,
    parse_dimacs,
    random_connected,
    random_interval,
    random_split,
    reduce_to_split_mrce,
)
from .general import greedy_mrce
from .graph import GraphError, RootedGraph, Solution, infeasibility, mask_of
from .interval import IntervalRealization, solve_interval
from .oracle import CapacityError, solve_exact, surveillance_lower_bound
from .split import approximate_split, is_split

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_MISMATCH, EXIT_CAPACITY = 0, 1, 2, 3, 4

ALGOS = ("exact", "split", "general", "interval")
GENERAL_GUARANTEE = Fraction(105, 1000)  # below (1 - 1/e) / 6 = 0.10535...


class Incompatible(Exception):
    pass


def _detect_format(path: str, fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return "intervals" if path.endswith(".intervals") else "edgelist"


def load_instance(path: str, fmt: Optional[str]) -> tuple[RootedGraph, Optional[IntervalRealization]]:
    text = formats.read_text(path)
    if _detect_format(path, fmt) == "intervals":
        r, g = formats.load_interval_instance(text)
        return g, r
    return formats.parse_edgelist(text), None


def run_algo(algo: str, g: RootedGraph, r: Optional[IntervalRealization], k: int) -> Solution:
    if algo == "exact":
        return solve_exact(g)
    if algo == "split":
        if not is_split(g):
            raise Incompatible("split algorithm needs a split graph")
        return approximate_split(g, k)
    if algo == "general":
        return greedy_mrce(g)
    if algo == "interval":
        if r is None:
            raise Incompatible("interval algorithm needs an intervals file")
        return solve_interval(g, r)
    raise Incompatible(f"unknown algorithm {algo!r}")


def guarantee(algo: str, k: int) -> Fraction:
    return {"exact": Fraction(1), "interval": Fraction(1), "split": Fraction(k, k + 2),
            "general": GENERAL_GUARANTEE}[algo]


def cmd_solve(args) -> int:
    try:
        g, r = load_instance(args.input, args.format)
    except (OSError, formats.ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        sol = run_algo(args.algo, g, r, args.k)
    except Incompatible as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    bound = surveillance_lower_bound(sol)
    print(f"ratio {sol.ratio.numerator}/{sol.ratio.denominator}")
    print(f"decimal {float(sol.ratio):.10g}")
    print(f"size {sol.size}")
    print(f"closed_neighborhood {sol.closed_nbhd_size}")
    print(f"surveillance_lower_bound {bound}")
    if args.output:
        text = formats.format_solution(sol, [f"algo {args.algo}"])
        Path(args.output).write_text(text)
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        g, _ = load_instance(args.input, args.format)
        claimed, vertices = formats.parse_solution(formats.read_text(args.solution))
    except (OSError, formats.ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    bad = [v for v in vertices if not 0 <= v < g.n]
    if bad:
        print(f"FAIL vertex out of range: {bad[0]}")
        return EXIT_FAIL
    s_mask = mask_of(vertices)
    reason = infeasibility(g, s_mask)
    if reason is not None:
        print(f"FAIL {reason}")
        return EXIT_FAIL
    actual = Fraction(g.closed_mask(s_mask).bit_count(), s_mask.bit_count())
    if actual != claimed:
        print(f"FAIL ratio mismatch: claimed {claimed}, actual {actual}")
        return EXIT_FAIL
    print(f"ok ratio {actual}")
    return EXIT_OK


def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_gen(args) -> int:
    base = Path(args.out)
    try:
        if args.kind == "reduction":
            if not args.cnf:
                raise FormulaError("reduction needs --cnf")
            f = parse_dimacs(formats.read_text(args.cnf))
            if args.equalize:
                f = equalize(f)
            red = reduce_to_split_mrce(f)
            th = red.threshold
            _write(base.with_suffix(".graph"),
                   formats.format_edgelist(red.graph, [f"threshold {th.numerator}/{th.denominator}"]))
            _write(base.with_suffix(".roles"), formats.format_roles(red.roles))
            return EXIT_OK
        if args.n is None:
            raise GraphError(f"{args.kind} needs -n")
        lo = args.n_min if args.n_min is not None else args.n
        if not 1 <= lo <= args.n:
            raise GraphError("--n-min must lie in [1, n]")
        for i in range(args.count):
            n = lo + i % (args.n - lo + 1)
            seed = args.seed + i
            stem = base if args.count == 1 else base.parent / f"{base.name}_{i:03d}"
            comments = [f"kind {args.kind} n {n} seed {seed}"]
            if args.kind == "split":
                g = random_split(n, seed, args.clique_size, args.edge_prob)
            elif args.kind == "general":
                g = random_connected(n, args.density, seed)
            else:
                r, g = random_interval(n, seed)
                _write(stem.with_suffix(".intervals"), formats.format_intervals(r, g.root))
            _write(stem.with_suffix(".graph"), formats.format_edgelist(g, comments))
    except (OSError, FormulaError, GraphError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def audit_rows(corpus: Path, algo: str, k: int) -> tuple[list[dict], list[str]]:
    pattern = "*.intervals" if algo == "interval" else "*.graph"
    rows, skipped = [], []
    for path in sorted(corpus.glob(pattern)):
        try:
            g, r = load_instance(str(path), None)
            exact = solve_exact(g)
            got = run_algo(algo, g, r, k)
        except CapacityError as e:
            print(f"warning: skipping {path.name}: {e}", file=sys.stderr)
            skipped.append(path.name)
            continue
        except (formats.ParseError, Incompatible) as e:
            print(f"warning: skipping {path.name}: {e}", file=sys.stderr)
            skipped.append(path.name)
            continue
        rows.append({"instance": path.name, "n": g.n, "exact": exact.ratio,
                     "algo": got.ratio, "quotient": got.ratio / exact.ratio})
    return rows, skipped


def cmd_audit(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        print(f"error: {corpus} is not a directory", file=sys.stderr)
        return EXIT_INPUT
    rows, skipped = audit_rows(corpus, args.algo, args.k)
    bound = guarantee(args.algo, args.k)
    print(f"{'instance':<28} {'n':>3} {'exact':>10} {args.algo:>10} {'quotient':>12}")
    for row in rows:
        print(f"{row['instance']:<28} {row['n']:>3} {str(row['exact']):>10} "
              f"{str(row['algo']):>10} {float(row['quotient']):>12.10g}")
    if args.csv:
        lines = ["instance,n,exact,algo,quotient"]
        lines += [f"{r['instance']},{r['n']},{r['exact']},{r['algo']},{r['quotient']}" for r in rows]
        _write(Path(args.csv), "\n".join(lines) + "\n")
    if not rows:
        print(f"audited 0 instances, skipped {len(skipped)}")
        return EXIT_FAIL
    worst = min(r["quotient"] for r in rows)
    ok = worst >= bound
    print(f"audited {len(rows)} instances, skipped {len(skipped)}")
    print(f"min quotient {worst} ({float(worst):.10g})")
    print(f"guarantee {bound} ({float(bound):.10g})")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mrce", description="Maximum rooted connected expansion.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("input")
    s.add_argument("--format", choices=("edgelist", "intervals"),
                   help="default: by extension (.intervals or edge list)")
    s.add_argument("--algo", choices=ALGOS, default="exact")
    s.add_argument("--k", type=int, default=3, help="split search size is k + 2 (default 3)")
    s.add_argument("-o", "--output", help="write the solution file here")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="verify a solution file")
    c.add_argument("input")
    c.add_argument("solution")
    c.add_argument("--format", choices=("edgelist", "intervals"))
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="generate instances")
    g.add_argument("kind", choices=("split", "interval", "general", "reduction"))
    g.add_argument("-n", type=int)
    g.add_argument("--n-min", type=int, help="cycle sizes n_min..n across --count instances")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--density", type=float, default=0.3)
    g.add_argument("--clique-size", type=int)
    g.add_argument("--edge-prob", type=float, default=0.4)
    g.add_argument("--cnf", help="DIMACS file for the reduction")
    g.add_argument("--equalize", action="store_true",
                   help="pad the formula to equal variable and clause counts first")
    g.add_argument("--out", required=True, help="output path prefix")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("audit", help="compare an algorithm with the exact oracle")
    a.add_argument("corpus")
    a.add_argument("--algo", choices=("split", "general", "interval", "exact"), required=True)
    a.add_argument("--k", type=int, default=3)
    a.add_argument("--csv", help="also write the table as CSV")
    a.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 1) < 1:
        print("error: --k must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
