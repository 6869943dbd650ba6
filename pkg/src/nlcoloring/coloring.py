"""Colorings, the neighbor-locating decision procedure, and structural audits.

A coloring here is a total assignment of colors 1..k.  Properness is *not*
an invariant of the type: the solver needs to represent bad candidates, so
the checks live in :func:`is_nl_coloring`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .graphs import Graph

NOT_PROPER = "NotProper"
DUPLICATE_SIGNATURE = "DuplicateSignature"


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors 1..k to vertices 0..n-1, every color used."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if any(not (1 <= c <= self.k) for c in self.colors):
            raise ValueError("colors must lie in 1..k")
        if len(set(self.colors)) != self.k:
            raise ValueError("every color 1..k must be used by some vertex")

    @property
    def n(self) -> int:
        return len(self.colors)

    def color_class(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == color)


@dataclass(frozen=True)
class NLVerdict:
    """Outcome of neighbor-locating verification.

    ``ok`` is True exactly when there is no failure; otherwise ``reason`` is
    NotProper or DuplicateSignature and ``witness`` is the first violating
    vertex pair in lexicographic order.
    """

    ok: bool
    reason: str | None = None
    witness: tuple[int, int] | None = None


def _check_match(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ValueError(f"coloring covers {c.n} vertices, graph has {g.n}")


def neighbor_signature(g: Graph, c: Coloring, v: int) -> tuple[int, ...]:
    """Sorted set of colors appearing on the neighborhood of v."""
    _check_match(g, c)
    return tuple(sorted({c.colors[u] for u in g.adj[v]}))


def color_degree(g: Graph, c: Coloring, v: int) -> int:
    """Number of distinct colors on N(v); at most min(deg(v), k)."""
    return len(neighbor_signature(g, c, v))


def is_nl_coloring(g: Graph, c: Coloring) -> NLVerdict:
    """Decide whether a coloring is neighbor-locating.

    The coloring passes iff every color class is an independent set and no
    two same-colored vertices carry the same set of neighbor colors.  On
    failure, the witness is the lexicographically first violating pair.
    """
    _check_match(g, c)
    for u, v in g.sorted_edges():
        if c.colors[u] == c.colors[v]:
            return NLVerdict(False, NOT_PROPER, (u, v))
    signatures = [frozenset(c.colors[u] for u in g.adj[v]) for v in range(g.n)]
    seen: dict[tuple[int, frozenset], int] = {}
    clash = None
    for v in range(g.n):
        key = (c.colors[v], signatures[v])
        if key in seen:
            clash = (seen[key], v)
            break
        seen[key] = v
    if clash is None:
        return NLVerdict(True)
    # report the lexicographically first violating pair
    witness = min(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if c.colors[u] == c.colors[v] and signatures[u] == signatures[v]
    )
    return NLVerdict(False, DUPLICATE_SIGNATURE, witness)


def _require_nl(g: Graph, c: Coloring, caller: str) -> None:
    verdict = is_nl_coloring(g, c)
    if not verdict.ok:
        raise ValueError(
            f"{caller} is defined for neighbor-locating colorings only "
            f"({verdict.reason} at {verdict.witness})"
        )


def is_1_paired(g: Graph, c: Coloring) -> bool:
    """True iff every color-degree-1 vertex has a neighbor of color-degree 1.

    Defined for verified NL-colorings only; anything else is rejected.
    """
    _require_nl(g, c, "is_1_paired")
    cd = [color_degree(g, c, v) for v in range(g.n)]
    return all(
        any(cd[u] == 1 for u in g.adj[v])
        for v in range(g.n)
        if cd[v] == 1
    )


@dataclass(frozen=True)
class ClassCensus:
    color: int
    size: int
    by_color_degree: dict[int, int] = field(hash=False)


@dataclass(frozen=True)
class ClassAudit:
    """Per-color census of class sizes and color-degree distributions."""

    per_color: tuple[ClassCensus, ...]

    def census(self, color: int) -> ClassCensus:
        return self.per_color[color - 1]


def extremal_audit(g: Graph, c: Coloring) -> ClassAudit:
    """Full per-class census of a verified NL-coloring.

    Callers compare the result against the extremal expectations, e.g. on a
    max-order cycle every class has size C(k,2) with k-1 vertices of
    color-degree 1 and C(k-1,2) of color-degree 2.
    """
    _require_nl(g, c, "extremal_audit")
    cd = [color_degree(g, c, v) for v in range(g.n)]
    out = []
    for color in range(1, c.k + 1):
        members = c.color_class(color)
        dist: dict[int, int] = {}
        for v in members:
            dist[cd[v]] = dist.get(cd[v], 0) + 1
        out.append(ClassCensus(color=color, size=len(members), by_color_degree=dist))
    return ClassAudit(tuple(out))


def class_capacity_ok(g: Graph, c: Coloring) -> bool:
    """Fast necessary condition: within any class, at most C(k-1, j) vertices
    may have color-degree j.  Violations rule out neighbor-location outright."""
    _check_match(g, c)
    counts: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        j = color_degree(g, c, v)
        key = (c.colors[v], j)
        counts[key] = counts.get(key, 0) + 1
        if counts[key] > comb(c.k - 1, j):
            return False
    return True
