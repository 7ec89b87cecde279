"""Constant-factor approximation on general graphs.

Pipeline: hang ``n**2`` pendant leaves on the root, run the greedy
dominating set on the augmented graph to get profits, then ask a rooted
quota Steiner tree solver for cheap trees reaching quota
``floor((1 - 1/e) * q)`` for every guess ``q`` of the best domination count.
The best tree by exact ratio in the original graph wins.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .graph import RootedGraph, Solution, best_of, evaluate
from .steiner import rqst_2apx

# 1 - 1/e = 0.63212055882...; this rational sits just below it
ONE_MINUS_INV_E_LOW = Fraction(632120558, 10**9)


def augment_with_leaves(g: RootedGraph) -> RootedGraph:
    n = g.n
    extra = [(g.root, n + j) for j in range(n * n)]
    return RootedGraph.from_edges(n + n * n, g.edges + extra, g.root)


def greedy_dominating_set(g: RootedGraph) -> tuple[list[int], list[int]]:
    """Greedy dominating set and the profit each pick earned.

    Each round takes the vertex outside ``D`` dominating the most still
    undominated vertices (ties: smallest index) and records that count as
    its profit.  Returns ``(D in pick order, profits)``.
    """
    undominated = (1 << g.n) - 1
    picked = 0
    order: list[int] = []
    profits = [0] * g.n
    cm = g.closed_masks
    while undominated:
        best, best_gain = -1, -1
        for v in range(g.n):
            if picked >> v & 1:
                continue
            gain = (cm[v] & undominated).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        profits[best] = best_gain
        undominated &= ~cm[best]
        picked |= 1 << best
        order.append(best)
    return order, profits


def quota_for(q: int) -> int:
    return (q * ONE_MINUS_INV_E_LOW.numerator) // ONE_MINUS_INV_E_LOW.denominator


def original_profits(g: RootedGraph, augmented_profits: Sequence[int]) -> list[int]:
    """Profits on ``V(g)`` counting only vertices of ``g`` itself.

    The root picks up every pendant leaf in the augmented graph; those ``n**2``
    units are not dominations in ``g`` and are removed.
    """
    p = list(augmented_profits[:g.n])
    p[g.root] -= g.n * g.n
    return p


def greedy_mrce(g: RootedGraph) -> Solution:
    aug = augment_with_leaves(g)
    order, aug_profits = greedy_dominating_set(aug)
    assert order[0] == g.root
    profits = original_profits(g, aug_profits)

    # the quota depends on the guess q alone, so each size i shares the calls
    trees = {}
    for i in range(1, g.n + 1):
        for q in range(i, g.n + 1):
            quota = quota_for(q)
            if quota not in trees:
                trees[quota] = rqst_2apx(g, profits, quota)
    return best_of(evaluate(g, t.vertices) for t in trees.values() if t is not None)
