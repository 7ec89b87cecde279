"""Exact solver for interval graphs given a realization.

Intervals are closed.  After :func:`canonicalize_realization` all ``2n``
endpoints are distinct integers, which makes the relative-position
predicates below total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence, Union

from .graph import GraphError, RootedGraph, Solution, best_of, evaluate, mask_of, members

Number = Union[int, Fraction]
Direction = Literal["left", "right"]


@dataclass(frozen=True)
class IntervalRealization:
    intervals: tuple[tuple[Number, Number], ...]

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __getitem__(self, v: int) -> tuple[Number, Number]:
        return self.intervals[v]


@dataclass(frozen=True)
class RealLinePartition:
    """Position of every vertex relative to the root interval."""

    left: tuple[int, ...]          # entirely left of the root
    cross_left: tuple[int, ...]    # overlaps the root's left end only
    inside: tuple[int, ...]        # strictly inside the root
    containing: tuple[int, ...]    # strictly contains the root
    root: int
    cross_right: tuple[int, ...]
    right: tuple[int, ...]

    def classes(self) -> list[tuple[int, ...]]:
        return [self.left, self.cross_left, self.inside, self.containing,
                (self.root,), self.cross_right, self.right]


def contained(x, y) -> bool:
    return x[0] > y[0] and x[1] < y[1]


def meets_left(x, y) -> bool:
    return x[0] < y[0] and y[0] < x[1] < y[1]


def meets_right(x, y) -> bool:
    return x[1] > y[1] and y[0] < x[0] < y[1]


def strictly_left(x, y) -> bool:
    return x[1] < y[0]


def strictly_right(x, y) -> bool:
    return x[0] > y[1]


def overlaps(x, y) -> bool:
    return max(x[0], y[0]) <= min(x[1], y[1])


def canonicalize_realization(raw: Sequence[tuple[Number, Number]]) -> IntervalRealization:
    """Relabel endpoints to the distinct integers ``1..2n``.

    Order of distinct coordinates is kept; at a shared coordinate left ends
    come before right ends so touching closed intervals still meet; any
    remaining tie is broken by vertex index.
    """
    if not raw:
        raise GraphError("realization needs at least one interval")
    events = []
    for v, (lo, hi) in enumerate(raw):
        if not lo < hi:
            raise GraphError(f"interval {v} = [{lo}, {hi}] is trivial")
        events.append((lo, 0, v))
        events.append((hi, 1, v))
    events.sort()
    ends = [[0, 0] for _ in raw]
    for rank, (_, side, v) in enumerate(events, start=1):
        ends[v][side] = rank
    return IntervalRealization(tuple((a, b) for a, b in ends))


def is_canonical(r: IntervalRealization) -> bool:
    coords = [c for iv in r.intervals for c in iv]
    return len(set(coords)) == len(coords) and all(a < b for a, b in r.intervals)


def intersection_edges(r: IntervalRealization) -> list[tuple[int, int]]:
    iv = r.intervals
    return [(u, v) for u in range(len(iv)) for v in range(u + 1, len(iv))
            if overlaps(iv[u], iv[v])]


def graph_from_realization(r: IntervalRealization, root: int) -> RootedGraph:
    return RootedGraph.from_edges(r.n, intersection_edges(r), root)


def partition_by_root(r: IntervalRealization, root: int) -> RealLinePartition:
    base = r[root]
    buckets: dict[str, list[int]] = {k: [] for k in
                                     ("L", "CL", "Cp", "C", "CR", "R")}
    tests = (("C", lambda x: contained(base, x)),
             ("Cp", lambda x: contained(x, base)),
             ("CL", lambda x: meets_left(x, base)),
             ("CR", lambda x: meets_right(x, base)),
             ("L", lambda x: strictly_left(x, base)),
             ("R", lambda x: strictly_right(x, base)))
    for v in range(r.n):
        if v == root:
            continue
        hits = [name for name, test in tests if test(r[v])]
        if len(hits) != 1:
            raise AssertionError(f"vertex {v} {r[v]} not uniquely placed against {base}: {hits}")
        buckets[hits[0]].append(v)
    return RealLinePartition(tuple(buckets["L"]), tuple(buckets["CL"]), tuple(buckets["Cp"]),
                             tuple(buckets["C"]), root, tuple(buckets["CR"]),
                             tuple(buckets["R"]))


def core(r: IntervalRealization, partition: RealLinePartition) -> tuple[int, ...]:
    """Members of ``containing`` not strictly inside another member."""
    c = partition.containing
    return tuple(v for v in c if not any(w != v and contained(r[v], r[w]) for w in c))


def expand(direction: Direction, start: int, r: IntervalRealization,
           partition: RealLinePartition | None = None) -> list[tuple[int, ...]]:
    """Nested prefixes of the greedy farthest-reach chain from ``start``.

    Entry ``t`` is ``start`` plus the first ``t`` picks.  Each pick meets
    the current interval on the given side (containment does not count) and
    reaches farthest in that direction.  ``partition`` is accepted for
    signature parity and not needed.
    """
    if direction == "left":
        meets, reach = meets_left, (lambda v: -r[v][0])
    elif direction == "right":
        meets, reach = meets_right, (lambda v: r[v][1])
    else:
        raise ValueError(f"unknown direction {direction!r}")
    chain = [start]
    out = [(start,)]
    current = start
    while True:
        cands = [v for v in range(r.n) if meets(r[v], r[current])]
        if not cands:
            return out
        far = max(reach(v) for v in cands)
        picks = [v for v in cands if reach(v) == far]
        assert len(picks) == 1, "directional tie on a non-canonical realization"
        current = picks[0]
        chain.append(current)
        out.append(tuple(sorted(chain)))


def combine(base: Iterable[int], left: Sequence[Iterable[int]], right: Sequence[Iterable[int]],
            g: RootedGraph) -> Solution:
    base = tuple(base)
    cands = [evaluate(g, base)]
    for lo in left:
        for hi in right:
            cands.append(evaluate(g, members(mask_of(base) | mask_of(lo) | mask_of(hi))))
    return best_of(cands)


def solve_interval(g: RootedGraph, r: IntervalRealization) -> Solution:
    if r.n != g.n:
        raise GraphError(f"realization has {r.n} intervals, graph has {g.n} vertices")
    if not is_canonical(r):
        r = canonicalize_realization(r.intervals)
    if sorted(intersection_edges(r)) != g.edges:
        raise GraphError("realization does not match the graph")
    v0 = g.root
    part = partition_by_root(r, v0)
    sols = [combine((v0,), expand("left", v0, r), expand("right", v0, r), g)]
    for c in core(r, part):
        sols.append(combine((v0, c), expand("left", c, r), expand("right", c, r), g))
    return best_of(sols)
