"""Generate seeded corpora and compare each approximation with the exact oracle.

    python3 scripts/audit_corpus.py --count 200 --n-max 14
"""

import argparse
import random
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction

from mrce.forge import random_connected, random_interval, random_split
from mrce.general import greedy_mrce
from mrce.interval import solve_interval
from mrce.oracle import solve_exact
from mrce.split import approximate_split


@dataclass
class AuditConfig:
    count: int = 200
    n_min: int = 2
    n_max: int = 14
    seed: int = 0
    ks: tuple = (1, 2, 3)


def _sizes(cfg: AuditConfig, i: int) -> int:
    return cfg.n_min + i % (cfg.n_max - cfg.n_min + 1)


def _summary(name: str, quotients, bound, elapsed):
    worst = min(quotients)
    mean = statistics.fmean(float(q) for q in quotients)
    exact_hits = sum(q == 1 for q in quotients)
    verdict = "PASS" if worst >= bound else "FAIL"
    print(f"{name:<12} n={len(quotients):<4} min {float(worst):.4f} ({worst})  mean {mean:.4f}  "
          f"optimal {exact_hits}/{len(quotients)}  bound {float(bound):.4f}  "
          f"{elapsed:.1f}s  {verdict}")


def run(cfg: AuditConfig):
    t0 = time.perf_counter()
    qs = []
    for i in range(cfg.count):
        r, g = random_interval(_sizes(cfg, i), cfg.seed + i)
        qs.append(solve_interval(g, r).ratio / solve_exact(g).ratio)
    _summary("interval", qs, Fraction(1), time.perf_counter() - t0)

    split_graphs = []
    for i in range(cfg.count):
        rng = random.Random(cfg.seed + i)
        g = random_split(_sizes(cfg, i), cfg.seed + i, edge_prob=rng.uniform(0.1, 0.8))
        split_graphs.append((g, solve_exact(g).ratio))
    for k in cfg.ks:
        t0 = time.perf_counter()
        qs = [approximate_split(g, k).ratio / opt for g, opt in split_graphs]
        _summary(f"split k={k}", qs, Fraction(k, k + 2), time.perf_counter() - t0)

    t0 = time.perf_counter()
    qs = []
    for i in range(cfg.count):
        rng = random.Random(cfg.seed + i)
        n = _sizes(cfg, i)
        pairs = n * (n - 1) // 2
        g = random_connected(n, rng.uniform((n - 1) / pairs, 1.0), cfg.seed + i)
        qs.append(greedy_mrce(g).ratio / solve_exact(g).ratio)
    _summary("general", qs, Fraction(105, 1000), time.perf_counter() - t0)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=AuditConfig.count)
    ap.add_argument("--n-min", type=int, default=AuditConfig.n_min)
    ap.add_argument("--n-max", type=int, default=AuditConfig.n_max)
    ap.add_argument("--seed", type=int, default=AuditConfig.seed)
    args = ap.parse_args()
    run(AuditConfig(count=args.count, n_min=args.n_min, n_max=args.n_max, seed=args.seed))


if __name__ == "__main__":
    main()
