"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest -m acceptance -s`` to watch the lines as they are produced;
they are also repeated in the terminal summary.
"""

import os
import random
import subprocess
import sys
from fractions import Fraction
from itertools import product

import pytest

from conftest import grow_random_set, random_graph
from mrce import interval as iv
from mrce.cli import main
from mrce.forge import (CnfFormula, random_connected, random_formula, random_interval,
                        random_split, reduce_to_split_mrce)
from mrce.general import greedy_mrce
from mrce.graph import evaluate
from mrce.oracle import peel_least_contribution, solve_exact
from mrce.split import SplitPartition, approximate_split, lift_to_clique, recognize_and_partition
from mrce.steiner import exact_rqst_oracle, rqst_2apx, tree_is_valid

pytestmark = pytest.mark.acceptance

GENERAL_BOUND = Fraction(105, 1000)


def test_interval_optimality(report):
    bad = []
    for seed in range(500):
        n = 1 + seed % 16
        r, g = random_interval(n, seed)
        if iv.solve_interval(g, r).ratio != solve_exact(g).ratio:
            bad.append(seed)
    assert report("1 interval optimality", not bad,
                  f"500 instances n<=16, mismatched seeds {bad[:5]}")


def test_split_guarantee(report):
    worst = {k: Fraction(10**9) for k in (1, 2, 3)}
    bad = []
    for seed in range(300):
        n = 1 + seed % 14
        g = random_split(n, seed, edge_prob=random.Random(seed).uniform(0.1, 0.8))
        opt = solve_exact(g).ratio
        for k in (1, 2, 3):
            q = approximate_split(g, k).ratio / opt
            worst[k] = min(worst[k], q)
            if q < Fraction(k, k + 2):
                bad.append((seed, k))
    detail = ", ".join(f"k={k} min {worst[k]} vs {Fraction(k, k + 2)}" for k in worst)
    assert report("2 split guarantee", not bad, f"300 instances n<=14, {detail}")


def test_general_guarantee(report):
    worst = Fraction(10**9)
    bad = []
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(2, 14)
        pairs = n * (n - 1) // 2
        density = rng.uniform((n - 1) / pairs, 1.0)
        g = random_connected(n, density, seed)
        q = greedy_mrce(g).ratio / solve_exact(g).ratio
        worst = min(worst, q)
        if q < GENERAL_BOUND:
            bad.append(seed)
    assert report("3 general guarantee", not bad,
                  f"200 instances n<=14, min quotient {worst} ({float(worst):.4f}) "
                  f"vs bound {float(GENERAL_BOUND)}")


def test_rqst_contract(report):
    bad = []
    worst = Fraction(0)
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.uniform(0.15, 0.8))
        profits = [rng.randint(0, 6) for _ in range(n)]
        quota = rng.randint(0, sum(profits) + 2)
        t = rqst_2apx(g, profits, quota)
        exact = exact_rqst_oracle(g, profits, quota)
        if (t is None) != (exact is None):
            bad.append(seed)
            continue
        if t is None:
            continue
        if not (tree_is_valid(g, t, profits) and t.profit >= quota and t.cost <= 2 * exact.cost):
            bad.append(seed)
        if exact.cost:
            worst = max(worst, Fraction(t.cost, exact.cost))
    assert report("4 rqst contract", not bad,
                  f"200 instances n<=12, worst cost ratio {worst}")


def _satisfiable(f):
    return any(f.satisfied_by(a) for a in product([False, True], repeat=f.num_vars))


def test_reduction_fidelity(report):
    problems = []
    for n in range(1, 31):
        red = reduce_to_split_mrce(random_formula(n, seed=n, distinct=n >= 2))
        if red.graph.n != 1 + 5 * n + 3 * n * n:
            problems.append(f"n={n} vertices {red.graph.n}")
        # one edge per literal occurrence; with distinct literals and n >= 2
        # these are also the simple edges
        if red.edge_occurrences != 8 * n * n + 8 * n:
            problems.append(f"n={n} edges {red.edge_occurrences}")
        if n >= 2 and red.graph.m != 8 * n * n + 8 * n:
            problems.append(f"n={n} simple edges {red.graph.m}")
        if not isinstance(recognize_and_partition(red.graph), SplitPartition):
            problems.append(f"n={n} not split")
    sat1 = CnfFormula(1, ((1, 1, 1),))
    sat2 = CnfFormula(2, ((1, -1, 2), (-2, 1, 2)))
    unsat2 = CnfFormula(2, ((1, 1, 1), (-1, -1, -1)))
    assert _satisfiable(sat1) and _satisfiable(sat2) and not _satisfiable(unsat2)
    r1 = solve_exact(reduce_to_split_mrce(sat1).graph).ratio
    r2 = solve_exact(reduce_to_split_mrce(sat2).graph).ratio
    r3 = solve_exact(reduce_to_split_mrce(unsat2).graph).ratio
    if r1 != Fraction(9, 2):
        problems.append(f"n=1 sat ratio {r1}")
    if r2 != Fraction(23, 3):
        problems.append(f"n=2 sat ratio {r2}")
    if not r3 < Fraction(23, 3):
        problems.append(f"n=2 unsat ratio {r3}")
    assert report("5 reduction fidelity", not problems,
                  f"n=1..30 counts and split; sat {r1}, {r2}; unsat {r3}"
                  + (f"; {problems[:3]}" if problems else ""))


def test_peeling_monotone(report):
    rng = random.Random(6)
    bad = 0
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.15, 0.8))
        s = grow_random_set(g, rng)
        seq = peel_least_contribution(g, s, 1)
        ratios = [r for _, r in seq]
        bad += ratios != sorted(ratios)
    assert report("6 peeling monotonicity", bad == 0, f"1000 sequences, {bad} decreasing")


def _lemma8(rng):
    bad = 0
    for _ in range(1000):
        g = random_split(rng.randint(1, 14), rng.randrange(10**9))
        p = recognize_and_partition(g)
        s = grow_random_set(g, rng)
        bad += evaluate(g, lift_to_clique(g, p, s)).ratio < evaluate(g, s).ratio
    return bad


def _prop15(rng):
    bad = 0
    for _ in range(100):
        raw, g = random_interval(rng.randint(1, 16), rng.randrange(10**9))
        r = iv.canonicalize_realization(raw.intervals)
        p = iv.partition_by_root(r, g.root)
        flat = [v for c in p.classes() for v in c]
        if sorted(flat) != list(range(g.n)) or p.root != g.root:
            bad += 1
            continue
        x0 = r[g.root]
        expect = {
            "containing": lambda x: iv.contained(x0, x),
            "inside": lambda x: iv.contained(x, x0),
            "cross_left": lambda x: iv.meets_left(x, x0),
            "cross_right": lambda x: iv.meets_right(x, x0),
            "left": lambda x: iv.strictly_left(x, x0),
            "right": lambda x: iv.strictly_right(x, x0),
        }
        for name, pred in expect.items():
            if set(getattr(p, name)) != {v for v in range(g.n) if v != g.root and pred(r[v])}:
                bad += 1
                break
    return bad


def _prop16(rng):
    bad = trials = 0
    while trials < 1000:
        raw, g = random_interval(rng.randint(2, 14), rng.randrange(10**9))
        r = iv.canonicalize_realization(raw.intervals)
        p = iv.partition_by_root(r, g.root)
        if not p.inside:
            continue
        s = set(grow_random_set(g, rng))
        v = rng.choice(p.inside)
        if v in s:
            continue
        bad += evaluate(g, s | {v}).ratio > evaluate(g, s).ratio
        trials += 1
    return bad


def _prop17(rng):
    bad = trials = 0
    while trials < 1000:
        raw, g = random_interval(rng.randint(3, 14), rng.randrange(10**9))
        r = iv.canonicalize_realization(raw.intervals)
        p = iv.partition_by_root(r, g.root)
        cstar = iv.core(r, p)
        dominated = [v for v in p.containing if v not in cstar]
        if not dominated:
            continue
        v = rng.choice(dominated)
        s = {g.root, v}
        for _ in range(rng.randint(0, 6)):
            front = sorted({w for u in s for w in g.adjacency[u]} - s)
            if front:
                s.add(rng.choice(front))
        w = next(c for c in cstar if iv.contained(r[v], r[c]))
        s2 = s - {v} if w in s else (s - {v}) | {w}
        bad += evaluate(g, s2).ratio < evaluate(g, s).ratio
        trials += 1
    return bad


def test_structural_lemmas(report):
    counts = {"lift": _lemma8(random.Random(81)), "partition": _prop15(random.Random(15)),
              "inside": _prop16(random.Random(16)), "core": _prop17(random.Random(17))}
    ok = not any(counts.values())
    assert report("7 structural lemmas", ok,
                  "violations " + ", ".join(f"{k} {v}" for k, v in counts.items()))


def _solve_to_file(path, algo, out):
    assert main(["solve", str(path), "--algo", algo, "-o", str(out)]) == 0
    return out.read_bytes()


def test_determinism(tmp_path, capsys, report):
    cases = [("split", "g.graph", ["exact", "split", "general"]),
             ("general", "g.graph", ["exact", "general"]),
             ("interval", "g.intervals", ["exact", "general", "interval"])]
    bad = []
    for kind, fname, algos in cases:
        d = tmp_path / kind
        for rep in ("a", "b"):
            main(["gen", kind, "-n", "12", "--seed", "5", "--out", str(d / rep / "g")])
        inp = d / "a" / fname
        assert (d / "a" / fname).read_bytes() == (d / "b" / fname).read_bytes()
        for algo in algos:
            first = _solve_to_file(inp, algo, d / f"{algo}1.sol")
            second = _solve_to_file(d / "b" / fname, algo, d / f"{algo}2.sol")
            # a fresh interpreter with a different hash seed
            env = dict(os.environ, PYTHONHASHSEED="12345")
            third = d / f"{algo}3.sol"
            subprocess.run([sys.executable, "-m", "mrce.cli", "solve", str(inp),
                            "--algo", algo, "-o", str(third)],
                           check=True, env=env, capture_output=True)
            if not first == second == third.read_bytes():
                bad.append(f"{kind}/{algo}")
    rng = random.Random(8)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12), 0.3)
        profits = [rng.randint(0, 5) for _ in range(g.n)]
        quota = rng.randint(0, sum(profits))
        if rqst_2apx(g, profits, quota) != rqst_2apx(g, profits, quota):
            bad.append("rqst")
    capsys.readouterr()
    assert report("8 determinism", not bad, f"byte-identical reruns; mismatches {bad}")
