"""Plain-text instance and solution files.

Edge list::

    n m root
    u v          # m lines, 0 <= u < v < n

Intervals::

    n root
    id left right  # n lines, endpoints integer or rational ("5/2", "2.5")

Solution::

    ratio p/q
    v1 v2 ...      # sorted vertex ids

``#`` starts a comment anywhere; blank lines are ignored.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .graph import GraphError, RootedGraph, Solution
from .interval import IntervalRealization, graph_from_realization


class ParseError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].split()
        if body:
            out.append((lineno, body))
    return out


def _ints(lineno: int, toks: list[str], count: int) -> list[int]:
    if len(toks) != count:
        raise ParseError(f"line {lineno}: expected {count} fields, got {len(toks)}")
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(toks)!r}") from None


def parse_edgelist(text: str) -> RootedGraph:
    rows = _lines(text)
    if not rows:
        raise ParseError("empty edge list")
    lineno, head = rows[0]
    n, m, root = _ints(lineno, head, 3)
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, toks in rows[1:]:
        u, v = _ints(lineno, toks, 2)
        edges.append((min(u, v), max(u, v)))
    try:
        return RootedGraph.from_edges(n, edges, root)
    except GraphError as e:
        raise ParseError(str(e)) from None


def format_edgelist(g: RootedGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"{g.n} {g.m} {g.root}"]
    lines += [f"# {c}" for c in comments]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_comment(text: str, key: str) -> Optional[str]:
    """Value of the first ``# key value`` comment line, if any."""
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#"):
            parts = s[1:].split(None, 1)
            if len(parts) == 2 and parts[0] == key:
                return parts[1].strip()
    return None


def _number(lineno: int, tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {lineno}: bad endpoint {tok!r}") from None


def parse_intervals(text: str) -> tuple[IntervalRealization, int]:
    rows = _lines(text)
    if not rows:
        raise ParseError("empty interval file")
    lineno, head = rows[0]
    n, root = _ints(lineno, head, 2)
    if len(rows) - 1 != n:
        raise ParseError(f"header declares {n} intervals, found {len(rows) - 1}")
    if not 0 <= root < n:
        raise ParseError(f"root {root} out of range [0, {n})")
    slots: list[Optional[tuple[Fraction, Fraction]]] = [None] * n
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise ParseError(f"line {lineno}: expected 'id left right'")
        (vid,) = _ints(lineno, toks[:1], 1)
        if not 0 <= vid < n or slots[vid] is not None:
            raise ParseError(f"line {lineno}: id {vid} out of range or repeated")
        lo, hi = _number(lineno, toks[1]), _number(lineno, toks[2])
        if not lo < hi:
            raise ParseError(f"line {lineno}: interval [{lo}, {hi}] is trivial")
        slots[vid] = (lo, hi)
    ivs = tuple((_plain(a), _plain(b)) for a, b in slots)
    return IntervalRealization(ivs), root


def _plain(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def format_intervals(r: IntervalRealization, root: int) -> str:
    lines = [f"{r.n} {root}"]
    lines += [f"{v} {a} {b}" for v, (a, b) in enumerate(r.intervals)]
    return "\n".join(lines) + "\n"


def load_interval_instance(text: str) -> tuple[IntervalRealization, RootedGraph]:
    r, root = parse_intervals(text)
    try:
        return r, graph_from_realization(r, root)
    except GraphError as e:
        raise ParseError(str(e)) from None


def format_solution(sol: Solution, comments: Iterable[str] = ()) -> str:
    lines = [f"ratio {sol.ratio.numerator}/{sol.ratio.denominator}"]
    lines += [f"# {c}" for c in comments]
    lines.append(" ".join(map(str, sol.vertices)))
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> tuple[Fraction, tuple[int, ...]]:
    rows = _lines(text)
    if len(rows) != 2 or rows[0][1][0] != "ratio" or len(rows[0][1]) != 2:
        raise ParseError("solution must be 'ratio p/q' followed by one line of vertex ids")
    try:
        ratio = Fraction(rows[0][1][1])
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad ratio {rows[0][1][1]!r}") from None
    lineno, toks = rows[1]
    return ratio, tuple(_ints(lineno, toks, len(toks)))


def format_roles(roles: Iterable[str]) -> str:
    return "".join(f"{v} {role}\n" for v, role in enumerate(roles))


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
