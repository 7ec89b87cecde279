"""Survey the quota Steiner tree heuristic's cost ratio against the exact oracle.

    python3 scripts/rqst_survey.py --count 2000 --n-max 12
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from mrce.forge import random_connected
from mrce.steiner import exact_rqst_oracle, rqst_2apx


@dataclass
class SurveyConfig:
    count: int = 2000
    n_max: int = 12
    max_profit: int = 6
    seed: int = 0


def _instance(rng: random.Random, cfg: SurveyConfig):
    n = rng.randint(2, cfg.n_max)
    pairs = n * (n - 1) // 2
    g = random_connected(n, rng.uniform((n - 1) / pairs, 1.0), rng.randrange(2**31))
    g = g.with_root(rng.randrange(n))
    profits = [rng.randint(0, cfg.max_profit) for _ in range(n)]
    return g, profits, rng.randint(0, sum(profits))


def run(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    ratios = Counter()
    worst = Fraction(1)
    for _ in range(cfg.count):
        g, profits, quota = _instance(rng, cfg)
        exact = exact_rqst_oracle(g, profits, quota)
        approx = rqst_2apx(g, profits, quota)
        if exact is None or exact.cost == 0:
            ratios[Fraction(1)] += 1
            continue
        r = Fraction(approx.cost, exact.cost)
        ratios[r] += 1
        worst = max(worst, r)
    print(f"instances {cfg.count}  worst cost ratio {worst} ({float(worst):.3f})")
    for r, c in sorted(ratios.items()):
        print(f"  {str(r):>6}  {c}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SurveyConfig.count)
    ap.add_argument("--n-max", type=int, default=SurveyConfig.n_max)
    ap.add_argument("--max-profit", type=int, default=SurveyConfig.max_profit)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    args = ap.parse_args()
    run(SurveyConfig(args.count, args.n_max, args.max_profit, args.seed))


if __name__ == "__main__":
    main()
