"""Rooted quota Steiner trees on unit edge costs.

``rqst_2apx`` searches over a Lagrangean prize multiplier: each multiplier
turns profits into prizes, the rooted Goemans-Williamson moat-growing
primal-dual produces a prize-collecting tree, and strong pruning trims it.
Trees meeting the quota are collected across the search, trimmed of
removable leaves, and the cheapest wins.  A path-greedy completion of the
best under-quota tree supplies further candidates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import RootedGraph, iter_connected_supersets, members
from .oracle import CapacityError

EPS = 1e-12
BISECTION_STEPS = 40
EXACT_RQST_CAP = 16


@dataclass(frozen=True)
class SteinerTree:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    root: int
    profit: int

    @property
    def cost(self) -> int:
        return len(self.edges)

    @property
    def contains_root(self) -> bool:
        return self.root in self.vertices


def _spanning_tree(g: RootedGraph, vertices: set[int]) -> tuple[tuple[int, int], ...]:
    """BFS tree of ``g[vertices]`` from the root, smallest neighbors first."""
    seen = {g.root}
    edges = []
    q = deque([g.root])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if w in vertices and w not in seen:
                seen.add(w)
                edges.append((min(u, w), max(u, w)))
                q.append(w)
    if seen != vertices:
        raise ValueError("vertex set is not connected")
    return tuple(sorted(edges))


def _tree(g: RootedGraph, profits: Sequence[int], vertices: set[int],
          edges: Optional[Sequence[tuple[int, int]]] = None) -> SteinerTree:
    if edges is None:
        edges = _spanning_tree(g, vertices)
    return SteinerTree(tuple(sorted(vertices)), tuple(sorted(edges)), g.root,
                       sum(profits[v] for v in vertices))


def _gw_forest(g: RootedGraph, prizes: Sequence[float]) -> list[tuple[int, int]]:
    """Rooted GW growth; returns forest edges in the order they went tight."""
    n = g.n
    comp = list(range(n))
    members_of = {v: [v] for v in range(n)}
    active = {v: v != g.root for v in range(n)}
    spent = {v: 0.0 for v in range(n)}
    prize = {v: float(prizes[v]) for v in range(n)}
    load = [0.0] * n
    edge_list = g.edges
    forest = []

    while any(active[c] for c in members_of):
        best_t, best_event = None, None
        for c in sorted(members_of):
            if active[c]:
                t = prize[c] - spent[c]
                if best_t is None or t < best_t - EPS:
                    best_t, best_event = t, ("deactivate", c)
        for idx, (u, v) in enumerate(edge_list):
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            rate = active[cu] + active[cv]
            if not rate:
                continue
            t = (1.0 - load[u] - load[v]) / rate
            if best_t is None or t < best_t - EPS:
                best_t, best_event = t, ("edge", idx)
        t = max(best_t, 0.0)
        for c, vs in members_of.items():
            if active[c]:
                spent[c] += t
                for v in vs:
                    load[v] += t
        kind, ref = best_event
        if kind == "deactivate":
            active[ref] = False
            continue
        u, v = edge_list[ref]
        cu, cv = comp[u], comp[v]
        forest.append((u, v))
        keep, gone = (cu, cv) if len(members_of[cu]) >= len(members_of[cv]) else (cv, cu)
        for w in members_of[gone]:
            comp[w] = keep
        members_of[keep].extend(members_of.pop(gone))
        spent[keep] += spent.pop(gone)
        prize[keep] += prize.pop(gone)
        has_root = comp[g.root] == keep
        active.pop(gone)
        active[keep] = not has_root
    return forest


def _strong_prune(g: RootedGraph, forest: Sequence[tuple[int, int]],
                  prizes: Sequence[float]) -> set[int]:
    """Root component of the forest, with negative-worth subtrees cut off."""
    adj: dict[int, list[int]] = {}
    for u, v in forest:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    parent = {g.root: -1}
    order = [g.root]
    for u in order:
        for w in sorted(adj.get(u, ())):
            if w not in parent:
                parent[w] = u
                order.append(w)
    worth = {}
    for u in reversed(order):
        total = float(prizes[u])
        for w in adj.get(u, ()):
            if parent.get(w) == u and worth[w] - 1.0 > EPS:
                total += worth[w] - 1.0
        worth[u] = total
    kept = {g.root}
    for u in order[1:]:
        if parent[u] in kept and worth[u] - 1.0 > EPS:
            kept.add(u)
    return kept


def _trim_leaves(g: RootedGraph, profits: Sequence[int], vertices: set[int],
                 quota: int) -> set[int]:
    """Drop non-root leaves while the quota still holds, cheapest profit first."""
    vertices = set(vertices)
    total = sum(profits[v] for v in vertices)
    edges = _spanning_tree(g, vertices)
    deg = {v: 0 for v in vertices}
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].add(v)
        adj[v].add(u)
    while True:
        leaves = [v for v in vertices if v != g.root and deg[v] <= 1
                  and total - profits[v] >= quota]
        if not leaves:
            return vertices
        v = min(leaves, key=lambda x: (profits[x], x))
        vertices.discard(v)
        total -= profits[v]
        for w in adj.pop(v):
            adj[w].discard(v)
            deg[w] -= 1


def _greedy_complete(g: RootedGraph, profits: Sequence[int], start: set[int],
                     quota: int) -> set[int]:
    """Attach shortest paths with the best profit-per-edge until the quota holds."""
    tree = set(start)
    total = sum(profits[v] for v in tree)
    while total < quota:
        dist = {v: 0 for v in tree}
        gained = {v: 0 for v in tree}
        prev = {}
        q = deque(sorted(tree))
        while q:
            u = q.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    gained[w] = gained[u] + profits[w]
                    prev[w] = u
                    q.append(w)
        best, best_key = None, None
        for v in sorted(dist):
            if v in tree or gained[v] <= 0:
                continue
            value = min(gained[v], quota - total)
            key = (value * 1.0 / dist[v], -dist[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        if best is None:
            break
        v = best
        while v not in tree:
            tree.add(v)
            total += profits[v]
            v = prev[v]
    return tree


def _pcst(g: RootedGraph, profits: Sequence[int], lam: float) -> set[int]:
    prizes = [lam * p for p in profits]
    return _strong_prune(g, _gw_forest(g, prizes), prizes)


def rqst_2apx(g: RootedGraph, profits: Sequence[int], quota: int) -> Optional[SteinerTree]:
    """Cheap tree containing the root with total profit at least ``quota``.

    Returns None when even all profits together miss the quota.  Edges
    cost 1, so the cost of a tree is its vertex count minus one.
    """
    if len(profits) != g.n or any(p < 0 for p in profits):
        raise ValueError("profits must be one nonnegative integer per vertex")
    if quota > sum(profits):
        return None
    if profits[g.root] >= quota:
        return _tree(g, profits, {g.root})

    def profit_of(vs):
        return sum(profits[v] for v in vs)

    candidates: list[set[int]] = []
    lo, hi = 0.0, float(g.n)
    below = {g.root}
    top = _pcst(g, profits, hi)
    if profit_of(top) < quota:
        top = set(range(g.n))
    candidates.append(top)
    for _ in range(BISECTION_STEPS):
        if hi - lo < 1e-9:
            break
        mid = (lo + hi) / 2
        t = _pcst(g, profits, mid)
        if profit_of(t) >= quota:
            hi = mid
            candidates.append(t)
        else:
            lo = mid
            if profit_of(t) > profit_of(below) or (
                    profit_of(t) == profit_of(below) and len(t) < len(below)):
                below = t
    candidates.append(_greedy_complete(g, profits, below, quota))
    candidates.append(_greedy_complete(g, profits, {g.root}, quota))

    best = None
    for c in candidates:
        c = _trim_leaves(g, profits, c, quota)
        if best is None or (len(c), sorted(c)) < (len(best), sorted(best)):
            best = c
    return _tree(g, profits, best)


def exact_rqst_oracle(g: RootedGraph, profits: Sequence[int], quota: int,
                      force: bool = False) -> Optional[SteinerTree]:
    """Minimum-cost quota tree by enumerating connected sets containing the root."""
    if g.n > EXACT_RQST_CAP and not force:
        raise CapacityError(f"n = {g.n} exceeds the RQST oracle cap of {EXACT_RQST_CAP}")
    if quota > sum(profits):
        return None
    weight = list(profits)
    best = None
    for s_mask in iter_connected_supersets(g, 1 << g.root, g.n):
        size = s_mask.bit_count()
        if best is not None and size > best.bit_count():
            continue
        if sum(weight[v] for v in members(s_mask)) < quota:
            continue
        if best is None or size < best.bit_count() or (
                size == best.bit_count() and members(s_mask) < members(best)):
            best = s_mask
    return _tree(g, profits, set(members(best)))


def tree_is_valid(g: RootedGraph, t: SteinerTree, profits: Sequence[int]) -> bool:
    vs = set(t.vertices)
    if g.root not in vs or len(t.edges) != len(vs) - 1:
        return False
    adj = set(map(tuple, (sorted(e) for e in g.edges)))
    if any(tuple(sorted(e)) not in adj or e[0] not in vs or e[1] not in vs for e in t.edges):
        return False
    seen = {g.root}
    q = [g.root]
    nbrs: dict[int, list[int]] = {}
    for u, v in t.edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    while q:
        u = q.pop()
        for w in nbrs.get(u, ()):
            if w not in seen:
                seen.add(w)
                q.append(w)
    return seen == vs and t.profit == sum(profits[v] for v in vs)
