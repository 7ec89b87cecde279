"""Instance generators: the 3-SAT reduction and seeded random families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .graph import GraphError, RootedGraph
from .interval import IntervalRealization, graph_from_realization


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula; literals are signed 1-based variable indices."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for c in self.clauses:
            if len(c) != 3:
                raise FormulaError(f"clause {c} does not have exactly 3 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise FormulaError(f"literal {lit} outside 1..{self.num_vars}")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[i]`` is the value of variable ``i + 1``."""
        return all(any((lit > 0) == assignment[abs(lit) - 1] for lit in c)
                   for c in self.clauses)


@dataclass(frozen=True)
class ReductionOutput:
    graph: RootedGraph
    roles: tuple[str, ...]
    threshold: Fraction
    # literal-in-clause occurrences, repeats included: (literal vertex, clause vertex)
    occurrences: tuple[tuple[int, int], ...]

    @property
    def edge_occurrences(self) -> int:
        """Edge count when every literal occurrence contributes its own edge."""
        simple_clause_edges = len(set(self.occurrences))
        return self.graph.m - simple_clause_edges + len(self.occurrences)


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = num_clauses = None
    lits: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormulaError(f"line {lineno}: bad problem line {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise FormulaError(f"line {lineno}: clause before problem line")
        try:
            lits.extend(int(tok) for tok in line.split())
        except ValueError:
            raise FormulaError(f"line {lineno}: non-integer token") from None
    if num_vars is None:
        raise FormulaError("missing 'p cnf' line")
    clauses = []
    cur: list[int] = []
    for lit in lits:
        if lit == 0:
            if len(cur) != 3:
                raise FormulaError(f"clause {cur} does not have exactly 3 literals")
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(lit)
    if cur:
        raise FormulaError("last clause not terminated by 0")
    if len(clauses) != num_clauses:
        raise FormulaError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def equalize(f: CnfFormula) -> CnfFormula:
    """Pad to as many variables as clauses without changing satisfiability.

    Too few clauses: repeat the first clause.  Too few variables: declare
    unused ones.
    """
    if f.num_vars < 1 or not f.clauses:
        raise FormulaError("formula needs at least one variable and one clause")
    clauses = list(f.clauses)
    while len(clauses) < f.num_vars:
        clauses.append(clauses[0])
    return CnfFormula(max(f.num_vars, len(clauses)), tuple(clauses))


def reduction_size(n: int) -> tuple[int, int]:
    """Vertex and (occurrence) edge counts of the reduction graph."""
    return 1 + 5 * n + 3 * n * n, 8 * n * n + 8 * n


def literal_vertex(lit: int) -> int:
    return 2 * lit - 1 if lit > 0 else -2 * lit


def reduce_to_split_mrce(f: CnfFormula) -> ReductionOutput:
    """Graph whose optimum reaches the threshold iff ``f`` is satisfiable.

    Layout: root 0; ``x_i`` at ``2i - 1`` and its negation at ``2i``; clause
    ``j`` at ``2n + j``; then ``3n + 2`` leaves per variable, row-major.
    """
    n = f.num_vars
    if len(f.clauses) != n:
        raise FormulaError(f"{n} variables but {len(f.clauses)} clauses; equalize first")
    lits = list(range(1, 2 * n + 1))
    edges = {(0, v) for v in lits}
    edges |= {(u, v) for u in lits for v in lits if u < v}
    occurrences = []
    for j, clause in enumerate(f.clauses, start=1):
        cv = 2 * n + j
        for lit in clause:
            lv = literal_vertex(lit)
            occurrences.append((lv, cv))
            edges.add((lv, cv))
    roles = ["root"] + [f"literal({(v + 1) // 2},{'+' if v % 2 else '-'})" for v in lits]
    roles += [f"clause({j})" for j in range(1, n + 1)]
    leaf = 3 * n + 1
    for i in range(1, n + 1):
        for j in range(1, 3 * n + 3):
            edges.add((2 * i - 1, leaf))
            edges.add((2 * i, leaf))
            roles.append(f"leaf({i},{j})")
            leaf += 1
    total, _ = reduction_size(n)
    g = RootedGraph.from_edges(total, sorted(edges), 0)
    return ReductionOutput(g, tuple(roles), Fraction(total, 1 + n), tuple(occurrences))


def random_formula(n: int, seed: int, distinct: bool = True) -> CnfFormula:
    """Random equalized formula; with ``distinct`` each clause has 3 different literals."""
    if distinct and n < 2:
        raise FormulaError("3 distinct literals need at least 2 variables")
    rng = random.Random(seed)
    pool = [s * v for v in range(1, n + 1) for s in (1, -1)]
    clauses = []
    for _ in range(n):
        if distinct:
            clauses.append(tuple(rng.sample(pool, 3)))
        else:
            clauses.append(tuple(rng.choice(pool) for _ in range(3)))
    return CnfFormula(n, tuple(clauses))


def random_split(n: int, seed: int, clique_size: Optional[int] = None,
                 edge_prob: float = 0.4) -> RootedGraph:
    """Clique plus independent vertices, each with at least one clique neighbor."""
    if n < 1:
        raise GraphError("n must be positive")
    rng = random.Random(seed)
    k = clique_size if clique_size is not None else rng.randint(1, n)
    if not 1 <= k <= n:
        raise GraphError(f"clique size {k} not in [1, {n}]")
    perm = list(range(n))
    rng.shuffle(perm)
    clique, indep = perm[:k], perm[k:]
    edges = {(min(u, v), max(u, v)) for i, u in enumerate(clique) for v in clique[i + 1:]}
    for u in indep:
        nbrs = [c for c in clique if rng.random() < edge_prob] or [rng.choice(clique)]
        edges |= {(min(u, c), max(u, c)) for c in nbrs}
    return RootedGraph.from_edges(n, sorted(edges), rng.randrange(n))


def random_interval(n: int, seed: int, span: int = 0) -> tuple[IntervalRealization, RootedGraph]:
    """Connected family of integer intervals on ``[0, span]``.

    Shared endpoints are deliberately likely; solvers canonicalize.  Each new
    interval overlaps the union built so far, which keeps the union a single
    segment and the graph connected.
    """
    if n < 1:
        raise GraphError("n must be positive")
    rng = random.Random(seed)
    span = span or 3 * n
    lo = rng.randint(0, span - 1)
    hi = rng.randint(lo + 1, min(span, lo + max(2, span // 3)))
    intervals = [(lo, hi)]
    left, right = lo, hi
    for _ in range(n - 1):
        length = rng.randint(1, max(1, span // 3))
        a = rng.randint(max(0, left - length), min(right, span - 1))
        b = min(span, a + length)
        intervals.append((a, b))
        left, right = min(left, a), max(right, b)
    r = IntervalRealization(tuple(intervals))
    return r, graph_from_realization(r, rng.randrange(n))


def random_connected(n: int, density: float, seed: int) -> RootedGraph:
    """Random spanning tree plus uniformly chosen extra edges.

    ``density`` is the fraction of all vertex pairs that become edges; it
    must allow at least a spanning tree.
    """
    if n < 1:
        raise GraphError("n must be positive")
    pairs = n * (n - 1) // 2
    m = round(density * pairs)
    if not 0.0 <= density <= 1.0 or m < n - 1:
        raise GraphError(f"density {density} gives {m} edges, fewer than the {n - 1} of a tree")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges |= set(rng.sample(rest, m - len(edges)))
    return RootedGraph.from_edges(n, sorted(edges), rng.randrange(n))
