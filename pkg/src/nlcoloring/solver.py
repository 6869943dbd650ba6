"""Exact search oracle for the neighbor-locating chromatic number.

Complete backtracking over vertex color assignments in a fixed order
(descending degree, ties by index) with four prunes: properness, per-class
capacity derived from the color-degree ceilings, signature clashes among
vertices whose whole neighborhood is colored, and optional color-symmetry
breaking.  The search is deliberately simple and fully exhaustive: it is
the independent check the constructions are measured against, so
completeness beats speed.
"""

from __future__ import annotations

import os
import threading
import time
from dataclasses import dataclass
from math import comb

from .bounds import chi_lower_bound
from .coloring import Coloring, is_nl_coloring
from .graphs import Graph


@dataclass(frozen=True)
class SolveOptions:
    max_k: int | None = None
    time_budget: float | None = None  # seconds of wall clock
    symmetry_breaking: bool = True
    parallel: bool = False


EXACT = "Exact"
CAPPED_OUT = "CappedOut"
TIMED_OUT = "TimedOut"


@dataclass(frozen=True)
class SolveResult:
    chi: int | None
    witness: Coloring | None
    status: str
    nodes_explored: int

    def to_dict(self) -> dict:
        out: dict = {"chi": self.chi, "status": self.status,
                     "nodesExplored": self.nodes_explored}
        if self.witness is not None:
            out["certificate"] = {
                "n": self.witness.n, "k": self.witness.k,
                "colors": list(self.witness.colors),
            }
        return out


class _Budget:
    """Shared wall-clock budget, checked every few thousand nodes."""

    __slots__ = ("deadline", "nodes", "lock")

    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.nodes = 0
        self.lock = threading.Lock()

    def spend(self, nodes: int) -> None:
        with self.lock:
            self.nodes += nodes

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _OutOfTime


class _OutOfTime(TimeoutError):
    pass


class _Search:
    """Backtracking state for one (graph, k) decision instance."""

    CHECK_EVERY = 4096

    def __init__(self, g: Graph, k: int, symmetry: bool, budget: _Budget):
        self.g = g
        self.k = k
        self.symmetry = symmetry
        self.budget = budget
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.colors = [0] * g.n
        self.uncolored_neighbors = [g.degree(v) for v in range(g.n)]
        # capacity: a class may hold at most sum_{j<=D} C(k-1, j) vertices
        # whose color-degree ceiling min(deg, k-1) is at most D
        self.ceiling = [max(1, min(g.degree(v), k - 1)) for v in range(g.n)]
        self.cum_capacity = [0] * k  # index D-1 -> capacity for ceilings <= D
        total = 0
        for d in range(1, k):
            total += comb(k - 1, d)
            self.cum_capacity[d - 1] = total
        self.class_ceiling_counts = [[0] * k for _ in range(k + 1)]
        self.finalized: list[dict[frozenset, int]] = [dict() for _ in range(k + 1)]
        self.max_used = 0
        self.nodes = 0

    # -- incremental state -------------------------------------------------
    def _signature(self, v: int) -> frozenset:
        return frozenset(self.colors[u] for u in self.g.adj[v])

    def _capacity_ok(self, color: int) -> bool:
        counts = self.class_ceiling_counts[color]
        running = 0
        for d in range(1, self.k):
            running += counts[d - 1]
            if running > self.cum_capacity[d - 1]:
                return False
        return True

    def _finalize(self, v: int) -> bool:
        """Record v's now-final signature; False on a same-class clash."""
        sig = self._signature(v)
        table = self.finalized[self.colors[v]]
        if sig in table:
            return False
        table[sig] = v
        return True

    def _unfinalize(self, v: int) -> None:
        table = self.finalized[self.colors[v]]
        sig = self._signature(v)
        if table.get(sig) == v:
            del table[sig]

    def assign(self, v: int, color: int) -> tuple[bool, list[int]]:
        """Try coloring v; returns (feasible, finalized vertices to undo).

        On failure the state is fully rolled back; on success the caller
        must eventually pass the finalized list to unassign().
        """
        self.nodes += 1
        if self.nodes % self.CHECK_EVERY == 0 and self.budget.deadline is not None:
            if time.monotonic() > self.budget.deadline:
                raise _OutOfTime
        for u in self.g.adj[v]:
            if self.colors[u] == color:
                return False, []
        self.colors[v] = color
        self.class_ceiling_counts[color][self.ceiling[v] - 1] += 1
        for u in self.g.adj[v]:
            self.uncolored_neighbors[u] -= 1
        finalized: list[int] = []
        ok = self._capacity_ok(color)
        if ok:
            for u in self.g.adj[v]:
                if self.uncolored_neighbors[u] == 0 and self.colors[u] != 0:
                    if self._finalize(u):
                        finalized.append(u)
                    else:
                        ok = False
                        break
            if ok and self.uncolored_neighbors[v] == 0:
                if self._finalize(v):
                    finalized.append(v)
                else:
                    ok = False
        if not ok:
            self.unassign(v, finalized)
            return False, []
        return True, finalized

    def unassign(self, v: int, finalized: list[int]) -> None:
        for u in reversed(finalized):
            self._unfinalize(u)
        for u in self.g.adj[v]:
            self.uncolored_neighbors[u] += 1
        self.class_ceiling_counts[self.colors[v]][self.ceiling[v] - 1] -= 1
        self.colors[v] = 0

    # -- search ------------------------------------------------------------
    def color_options(self) -> range:
        if self.symmetry:
            return range(1, min(self.k, self.max_used + 1) + 1)
        return range(1, self.k + 1)

    def run(self, depth: int, stop: threading.Event | None = None) -> tuple[int, ...] | None:
        if stop is not None and stop.is_set():
            return None
        if depth == self.g.n:
            return tuple(self.colors)
        v = self.order[depth]
        for color in self.color_options():
            ok, finalized = self.assign(v, color)
            if ok:
                prev_max = self.max_used
                self.max_used = max(self.max_used, color)
                found = self.run(depth + 1, stop)
                self.max_used = prev_max
                if found is not None:
                    self.unassign(v, finalized)
                    return found
                self.unassign(v, finalized)
        return None

    def replay(self, prefix: tuple[int, ...]) -> list[tuple[int, list[int]]] | None:
        """Re-apply a branch prefix (colors for order[0..len-1]); None if infeasible."""
        trail = []
        for depth, color in enumerate(prefix):
            v = self.order[depth]
            ok, finalized = self.assign(v, color)
            if not ok:
                for w, fin in reversed(trail):
                    self.unassign(w, fin)
                return None
            trail.append((v, finalized))
            self.max_used = max(self.max_used, color)
        return trail


def _branch_prefixes(g: Graph, k: int, symmetry: bool, budget: _Budget,
                     want: int) -> list[tuple[int, ...]]:
    """Feasible assignments of the first few vertices, for parallel splitting."""
    search = _Search(g, k, symmetry, budget)
    depth = 1
    prefixes: list[tuple[int, ...]] = [()]
    while depth <= min(3, g.n) and len(prefixes) < want:
        nxt: list[tuple[int, ...]] = []
        for prefix in prefixes:
            trail = search.replay(prefix)
            if trail is None:
                continue
            for color in search.color_options():
                v = search.order[len(prefix)]
                ok, finalized = search.assign(v, color)
                if ok:
                    search.unassign(v, finalized)
                    nxt.append(prefix + (color,))
            for wv, fin in reversed(trail):
                search.unassign(wv, fin)
            search.max_used = 0
        budget.spend(search.nodes)
        search.nodes = 0
        if not nxt:
            return []
        prefixes = nxt
        depth += 1
    return prefixes


def exists_nl_coloring(g: Graph, k: int,
                       options: SolveOptions | None = None,
                       budget: _Budget | None = None) -> tuple[bool, Coloring | None]:
    """Decide whether some NL-coloring with at most k colors exists.

    Complete search; the witness (when one exists) uses at most k colors and
    is deterministic in sequential mode.  Raises nothing on negative
    instances -- the False answer is the exhausted-search certificate.
    """
    if k < 1:
        raise ValueError("k must be positive")
    opts = options or SolveOptions()
    own_budget = budget or _Budget(opts.time_budget)
    found = _solve_instance(g, k, opts, own_budget)
    if found is None:
        return False, None
    compacted = _compact_colors(found)
    return True, Coloring(max(compacted), compacted)


def _compact_colors(colors: tuple[int, ...]) -> tuple[int, ...]:
    """Renumber so the used colors are exactly 1..count (witnesses may skip
    color indices only when symmetry breaking is off)."""
    remap = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
    return tuple(remap[c] for c in colors)


def _solve_instance(g: Graph, k: int, opts: SolveOptions,
                    budget: _Budget) -> tuple[int, ...] | None:
    budget.check()
    if not opts.parallel or g.n < 4:
        search = _Search(g, k, opts.symmetry_breaking, budget)
        try:
            return search.run(0)
        finally:
            budget.spend(search.nodes)
    workers = min(8, os.cpu_count() or 2)
    prefixes = _branch_prefixes(g, k, opts.symmetry_breaking, budget, 2 * workers)
    if not prefixes:
        return None
    stop = threading.Event()
    results: list[tuple[int, ...]] = []
    lock = threading.Lock()

    def worker(chunk: list[tuple[int, ...]]) -> None:
        search = _Search(g, k, opts.symmetry_breaking, budget)
        try:
            for prefix in chunk:
                if stop.is_set():
                    break
                trail = search.replay(prefix)
                if trail is None:
                    continue
                found = search.run(len(prefix), stop)
                for wv, fin in reversed(trail):
                    search.unassign(wv, fin)
                search.max_used = 0
                if found is not None:
                    with lock:
                        results.append(found)
                    stop.set()
                    break
        except _OutOfTime:
            stop.set()
            with lock:
                results.append(())  # sentinel: ran out of time
        finally:
            budget.spend(search.nodes)

    chunks: list[list[tuple[int, ...]]] = [[] for _ in range(workers)]
    for i, prefix in enumerate(prefixes):
        chunks[i % workers].append(prefix)
    threads = [threading.Thread(target=worker, args=(chunk,)) for chunk in chunks if chunk]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    real = [r for r in results if r]
    if real:
        return real[0]
    if any(r == () for r in results):
        raise _OutOfTime
    return None


def chi_nl_exact(g: Graph, options: SolveOptions | None = None) -> SolveResult:
    """Exact NL-chromatic number by iterating k upward from the lower bound.

    The Exact status carries a verified witness with exactly chi colors and
    the implicit infeasibility certificate for chi-1 (the exhausted search).
    A max-k cap or time budget yields CappedOut / TimedOut with whatever was
    learned.
    """
    opts = options or SolveOptions()
    budget = _Budget(opts.time_budget)
    lower = chi_lower_bound(g)
    top = g.n if opts.max_k is None else min(opts.max_k, g.n)
    k = lower
    try:
        while k <= top:
            feasible, witness = exists_nl_coloring(g, k, opts, budget)
            if feasible:
                verdict = is_nl_coloring(g, witness)
                if not verdict.ok:  # cross-check against the independent verifier
                    raise RuntimeError(f"search produced an invalid witness: {verdict}")
                return SolveResult(witness.k, witness, EXACT, budget.nodes)
            k += 1
        return SolveResult(None, None, CAPPED_OUT, budget.nodes)
    except _OutOfTime:
        return SolveResult(None, None, TIMED_OUT, budget.nodes)
