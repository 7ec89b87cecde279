"""Split graphs: recognition, clique lifting and the bounded-size search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import (
    FeasibilityError,
    GraphError,
    RootedGraph,
    Solution,
    _check_indices,
    infeasibility,
    iter_connected_supersets,
    mask_beats,
    members,
    ratio_of_mask,
    solution_from_mask,
)


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


@dataclass(frozen=True)
class NotSplit:
    """Verdict for a non-split graph.

    ``witness`` is a vertex pair breaking the degree-ordered candidate
    partition: either two non-adjacent clique candidates or two adjacent
    independent candidates.
    """

    witness: tuple[int, int]
    reason: str


def recognize_and_partition(g: RootedGraph) -> SplitPartition | NotSplit:
    """Split partition with a maximum clique, or a witness that none exists.

    Vertices are ordered by degree (descending, ties by index) and the first
    ``m = max{i : d_i >= i - 1}`` are taken as the clique.  A graph is split
    iff this candidate is a valid partition.  When it is, at most one
    independent vertex can be adjacent to the whole clique; moving it over
    makes the clique maximum.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    m = 0
    for i, v in enumerate(order, start=1):
        if g.degree(v) >= i - 1:
            m = i
    clique = order[:m]
    indep = order[m:]
    adj = [set(a) for a in g.adjacency]

    for i, u in enumerate(clique):
        for w in clique[i + 1:]:
            if w not in adj[u]:
                return NotSplit((min(u, w), max(u, w)), "clique candidates not adjacent")
    indep_set = set(indep)
    for u in indep:
        for w in adj[u]:
            if w in indep_set and u < w:
                return NotSplit((u, w), "independent candidates adjacent")

    for u in sorted(indep):
        if all(c in adj[u] for c in clique):
            clique.append(u)
            indep.remove(u)
            break
    return SplitPartition(tuple(sorted(clique)), tuple(sorted(indep)))


def is_split(g: RootedGraph) -> bool:
    return isinstance(recognize_and_partition(g), SplitPartition)


def lift_to_clique(g: RootedGraph, p: SplitPartition, s: Iterable[int]) -> tuple[int, ...]:
    """Replace independent-set members (other than the root) by clique neighbors.

    Keeps the root and ``s`` intersected with the clique, then for every other
    independent member adds its smallest-index neighbor.  The result is
    feasible, no larger than ``s`` and dominates a superset of ``N[s]``.
    """
    s_mask = _check_indices(g, s)
    reason = infeasibility(g, s_mask)
    if reason is not None:
        raise FeasibilityError(reason)
    clique = set(p.clique)
    out = {g.root} | {v for v in members(s_mask) if v in clique}
    for u in members(s_mask):
        if u == g.root or u in clique:
            continue
        out.add(g.adjacency[u][0])
    return tuple(sorted(out))


def approximate_split(g: RootedGraph, k: int,
                      partition: Optional[SplitPartition] = None) -> Solution:
    """Best feasible set among those with at most ``k + 2`` vertices.

    On a split graph this is within ``k / (k + 2)`` of the optimum.  Pass a
    precomputed ``partition`` to skip recognition.
    """
    if k < 1:
        raise GraphError("k must be a positive integer")
    if partition is None and not is_split(g):
        raise GraphError("graph is not split")
    root_mask = 1 << g.root
    best_mask, best_ratio = root_mask, ratio_of_mask(g, root_mask)
    for s_mask in iter_connected_supersets(g, root_mask, k + 2):
        r = ratio_of_mask(g, s_mask)
        if mask_beats(s_mask, r, best_mask, best_ratio):
            best_mask, best_ratio = s_mask, r
    return solution_from_mask(g, best_mask)
