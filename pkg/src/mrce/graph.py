"""Rooted graphs, closed neighborhoods and exact ratio evaluation.

Vertex sets are handled internally as Python ints used as bitsets: bit ``v``
is set iff vertex ``v`` is in the set.  The public functions accept any
iterable of vertex indices and return sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional


class GraphError(ValueError):
    """Malformed graph or vertex set (bad index, loop, disconnected input)."""


class FeasibilityError(ValueError):
    """A vertex set is not a feasible solution."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class RootedGraph:
    """Simple connected undirected graph with a distinguished root.

    Build with :meth:`from_edges`; the constructor trusts its arguments.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    root: int
    closed_masks: tuple[int, ...] = field(repr=False, compare=False, default=())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], root: int,
                   require_connected: bool = True) -> "RootedGraph":
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if not 0 <= root < n:
            raise GraphError(f"root {root} out of range [0, {n})")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        closed = tuple((1 << v) | mask_of(adjacency[v]) for v in range(n))
        g = cls(n, adjacency, root, closed)
        if require_connected and not g._reaches_all():
            raise GraphError("graph is disconnected")
        return g

    def _reaches_all(self) -> bool:
        full = (1 << self.n) - 1
        return _component_mask(self, full, 1 << self.root) == full

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def with_root(self, root: int) -> "RootedGraph":
        if not 0 <= root < self.n:
            raise GraphError(f"root {root} out of range [0, {self.n})")
        return RootedGraph(self.n, self.adjacency, root, self.closed_masks)

    def closed_mask(self, s_mask: int) -> int:
        out = 0
        cm = self.closed_masks
        while s_mask:
            low = s_mask & -s_mask
            out |= cm[low.bit_length() - 1]
            s_mask ^= low
        return out


@dataclass(frozen=True)
class Solution:
    """A feasible vertex set with its raw counts and reduced ratio."""

    vertices: tuple[int, ...]
    closed_nbhd_size: int
    ratio: Fraction

    @property
    def size(self) -> int:
        return len(self.vertices)


def _check_indices(g: RootedGraph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise GraphError(f"vertex {v!r} out of range [0, {g.n})")
        m |= 1 << v
    return m


def _component_mask(g: RootedGraph, within: int, start: int) -> int:
    seen = start
    frontier = start
    cm = g.closed_masks
    while frontier:
        grown = 0
        f = frontier
        while f:
            low = f & -f
            grown |= cm[low.bit_length() - 1]
            f ^= low
        grown &= within & ~seen
        seen |= grown
        frontier = grown
    return seen


def closed_neighborhood(g: RootedGraph, s: Iterable[int]) -> tuple[int, ...]:
    return members(g.closed_mask(_check_indices(g, s)))


def is_connected_mask(g: RootedGraph, s_mask: int) -> bool:
    if not s_mask:
        return False
    start = s_mask & -s_mask
    return _component_mask(g, s_mask, start) == s_mask


def is_connected_containing_root(g: RootedGraph, s: Iterable[int]) -> bool:
    m = _check_indices(g, s)
    return bool(m >> g.root & 1) and is_connected_mask(g, m)


def infeasibility(g: RootedGraph, s_mask: int) -> Optional[str]:
    """Name the first violated feasibility condition, or None if feasible."""
    if not s_mask:
        return "empty set"
    if not s_mask >> g.root & 1:
        return "root missing"
    if not is_connected_mask(g, s_mask):
        return "disconnected"
    return None


def ratio_of_mask(g: RootedGraph, s_mask: int) -> Fraction:
    return Fraction(g.closed_mask(s_mask).bit_count(), s_mask.bit_count())


def solution_from_mask(g: RootedGraph, s_mask: int) -> Solution:
    size = g.closed_mask(s_mask).bit_count()
    return Solution(members(s_mask), size, Fraction(size, s_mask.bit_count()))


def evaluate(g: RootedGraph, s: Iterable[int]) -> Solution:
    m = _check_indices(g, s)
    reason = infeasibility(g, m)
    if reason is not None:
        raise FeasibilityError(reason)
    return solution_from_mask(g, m)


def rank_key(sol: Solution) -> tuple:
    """Sort key under which the best solution is the minimum.

    Higher ratio first, then fewer vertices, then the lexicographically
    smaller sorted vertex list.
    """
    return (-sol.ratio, len(sol.vertices), sol.vertices)


def best_of(solutions: Iterable[Solution]) -> Solution:
    return min(solutions, key=rank_key)


def mask_beats(a: int, ratio_a: Fraction, b: int, ratio_b: Fraction) -> bool:
    """True if set ``a`` ranks strictly ahead of set ``b``."""
    if ratio_a != ratio_b:
        return ratio_a > ratio_b
    ca, cb = a.bit_count(), b.bit_count()
    if ca != cb:
        return ca < cb
    return members(a) < members(b)


def iter_connected_supersets(g: RootedGraph, seed_mask: int, max_size: int,
                             prune=None) -> Iterator[int]:
    """Yield bitmasks of connected supersets of ``seed_mask``, each once.

    Branching: every frontier vertex is either added (and its new neighbors
    join the frontier) or banned for all later siblings.  ``prune(mask)``,
    when given, is consulted before descending; a true result skips every
    strict superset of ``mask`` reached through that branch.
    """
    cm = g.closed_masks
    full = (1 << g.n) - 1
    seed_nbhd = g.closed_mask(seed_mask)

    def rec(s_mask: int, ext: int, banned: int, size: int):
        yield s_mask
        if size >= max_size or (prune is not None and prune(s_mask)):
            return
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            grown = cm[w] & full & ~(s_mask | banned | ext | low)
            yield from rec(s_mask | low, ext | grown, banned, size + 1)
            banned |= low

    frontier = seed_nbhd & ~seed_mask
    yield from rec(seed_mask, frontier, 0, seed_mask.bit_count())


def enumerate_connected_supersets(g: RootedGraph, seed: Iterable[int],
                                  max_size: int) -> Iterator[tuple[int, ...]]:
    """Every connected superset of ``seed`` with at most ``max_size`` vertices.

    Output order is lexicographic in the sorted vertex tuple.  The whole
    family is materialized to sort it, so this is meant for small graphs;
    the solvers use :func:`iter_connected_supersets` directly.
    """
    seed_mask = _check_indices(g, seed)
    reason = infeasibility(g, seed_mask)
    if reason is not None:
        raise FeasibilityError(reason)
    if max_size < seed_mask.bit_count():
        raise GraphError("max_size smaller than the seed")
    found = sorted(members(m) for m in iter_connected_supersets(g, seed_mask, max_size))
    return iter(found)


def max_degree_plus_one_bound(g: RootedGraph) -> Fraction:
    return Fraction(g.max_degree + 1)
