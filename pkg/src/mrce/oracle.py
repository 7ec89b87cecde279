"""Brute-force exact solver, greedy peeling and the surveillance bound."""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Iterable, Optional

from .graph import (
    GraphError,
    RootedGraph,
    Solution,
    _check_indices,
    iter_connected_supersets,
    mask_beats,
    members,
    ratio_of_mask,
    solution_from_mask,
)

DEFAULT_CAP = 26


class CapacityError(RuntimeError):
    """Instance too large for exhaustive enumeration."""


def oracle_cap() -> int:
    raw = os.environ.get("MRCE_ORACLE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise CapacityError(f"MRCE_ORACLE_CAP is not an integer: {raw!r}") from None


def _superset_bound(g: RootedGraph, s_mask: int, nbhd: int, room: int) -> Fraction:
    """Upper bound on the ratio of any strict superset of ``s_mask``.

    A vertex added later dominates at most ``gain`` vertices outside the
    current closed neighborhood, where ``gain`` is the best single-vertex
    gain now; neighborhoods only grow, so the bound stays valid.
    """
    s = s_mask.bit_count()
    covered = nbhd.bit_count()
    gain = 0
    cm = g.closed_masks
    rest = ((1 << g.n) - 1) & ~s_mask
    while rest:
        low = rest & -rest
        rest ^= low
        c = (cm[low.bit_length() - 1] & ~nbhd).bit_count()
        if c > gain:
            gain = c
    ts = {1, room}
    if gain:
        t_sat = (g.n - covered) / gain
        ts.update({math.floor(t_sat), math.ceil(t_sat)})
    best = Fraction(0)
    for t in ts:
        if 1 <= t <= room:
            val = Fraction(min(g.n, covered + t * gain), s + t)
            if val > best:
                best = val
    return best


def solve_exact(g: RootedGraph, size_cap: Optional[int] = None, force: bool = False,
                prune: bool = True) -> Solution:
    """Maximum-ratio connected set containing the root, by enumeration.

    Ties go to the smaller set, then to the lexicographically smaller vertex
    list.  Branches whose best conceivable superset ratio falls strictly
    below the incumbent are skipped, which keeps the answer exact.
    """
    cap = oracle_cap()
    if g.n > cap and not force:
        raise CapacityError(f"n = {g.n} exceeds the oracle cap of {cap}")
    limit = g.n if size_cap is None else min(size_cap, g.n)
    if limit < 1:
        raise GraphError("size_cap must be at least 1")

    root_mask = 1 << g.root
    best_mask = root_mask
    best_ratio = ratio_of_mask(g, root_mask)

    def cut(s_mask: int) -> bool:
        room = limit - s_mask.bit_count()
        if room <= 0:
            return True
        return _superset_bound(g, s_mask, g.closed_mask(s_mask), room) < best_ratio

    for s_mask in iter_connected_supersets(g, root_mask, limit, cut if prune else None):
        r = ratio_of_mask(g, s_mask)
        if mask_beats(s_mask, r, best_mask, best_ratio):
            best_mask, best_ratio = s_mask, r
    return solution_from_mask(g, best_mask)


def domination_profile(g: RootedGraph, force: bool = False) -> list[int]:
    """``out[i-1]`` is the most vertices dominated by a feasible set of size ``i``.

    Sizes with no feasible set cannot occur on a connected graph.
    """
    cap = oracle_cap()
    if g.n > cap and not force:
        raise CapacityError(f"n = {g.n} exceeds the oracle cap of {cap}")
    best = [0] * g.n
    for s_mask in iter_connected_supersets(g, 1 << g.root, g.n):
        k = s_mask.bit_count() - 1
        c = g.closed_mask(s_mask).bit_count()
        if c > best[k]:
            best[k] = c
    return best


def peel_least_contribution(g: RootedGraph, s: Iterable[int],
                            target_size: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """Repeatedly drop the vertex with the fewest exclusive neighbors.

    Starting from ``s`` (feasibility not required), remove one vertex at a
    time until ``target_size`` remain.  The removed vertex minimizes
    ``|N[S]| - |N[S - u]|``; ties go to the smallest index.  Returns every
    intermediate set with its ratio, largest set first.
    """
    s_mask = _check_indices(g, s)
    size = s_mask.bit_count()
    if not 1 <= target_size <= size:
        raise GraphError(f"target_size {target_size} not in [1, {size}]")
    out = [(members(s_mask), ratio_of_mask(g, s_mask))]
    while size > target_size:
        full = g.closed_mask(s_mask).bit_count()
        pick, least = -1, None
        for u in members(s_mask):
            p = full - g.closed_mask(s_mask & ~(1 << u)).bit_count()
            if least is None or p < least:
                pick, least = u, p
        s_mask &= ~(1 << pick)
        size -= 1
        out.append((members(s_mask), ratio_of_mask(g, s_mask)))
    return out


def surveillance_lower_bound(sol: Solution) -> int:
    # ceil((|N[S]| - 1) / |S|)
    return -(-(sol.closed_nbhd_size - 1) // sol.size)
