"""Constructive procedures producing verified neighbor-locating colorings.

Covers the stored small bases for paths and cycles, the two vertex-insertion
operations on colored cycles (one fresh-colored vertex between a
color-degree-1 pair, or a swapped-color pair between a color-degree-2 pair),
the 1-paired cycle pipeline built from them, path colorings by edge deletion,
the universal-vertex lift, the comb coloring, the extremal unicyclic graph
and caterpillar, and the generic coloring of trees of order at least 5.

Every constructor re-verifies its output before returning; a failure raises
ConstructionError instead of shipping a bad coloring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .bounds import a2, bracket, ell
from .coloring import Coloring, color_degree, is_nl_coloring, neighbor_signature
from .graphs import FamilySpec, Graph, classify, family_graph


class ConstructionError(RuntimeError):
    """A construction produced something that failed self-verification."""


@dataclass(frozen=True)
class ColoredGraph:
    """A graph together with a verified NL-coloring and its construction trace."""

    graph: Graph
    coloring: Coloring
    provenance: tuple[str, ...] = ()

    @property
    def k(self) -> int:
        return self.coloring.k


def _certified(graph: Graph, coloring: Coloring, provenance: tuple[str, ...]) -> ColoredGraph:
    verdict = is_nl_coloring(graph, coloring)
    if not verdict.ok:
        raise ConstructionError(
            f"self-verification failed ({verdict.reason} at {verdict.witness}); "
            f"trace: {' -> '.join(provenance)}"
        )
    return ColoredGraph(graph, coloring, provenance)


# ---------------------------------------------------------------------------
# stored small bases
#
# Minimum NL-colorings for paths of order 2..9 and cycles of order 3..9,
# frozen after verification.  The order-9 cycle base is 1-paired, carries the
# consecutive run 1,2,1,2,3,2,3 and one adjacent color-degree-1 pair per
# color pair -- the pipeline below depends on those three properties.

_PATH_BASES: dict[int, tuple[int, ...]] = {
    2: (1, 2),
    3: (1, 2, 3),
    4: (1, 2, 3, 1),
    5: (1, 2, 3, 1, 2),
    6: (1, 2, 1, 3, 2, 3),
    7: (1, 2, 3, 2, 3, 1, 2),
    8: (2, 1, 2, 3, 2, 3, 1, 3),
    9: (1, 2, 3, 2, 3, 1, 3, 1, 2),
}

_CYCLE_BASES: dict[int, tuple[int, ...]] = {
    3: (1, 2, 3),
    4: (1, 2, 3, 4),
    5: (1, 2, 1, 2, 3),
    6: (1, 2, 1, 2, 3, 4),
    7: (1, 2, 1, 2, 3, 2, 3),
    8: (1, 2, 1, 2, 3, 2, 3, 4),
    9: (1, 2, 1, 2, 3, 2, 3, 1, 3),
}


def base_small_coloring(spec: FamilySpec) -> ColoredGraph:
    """Stored minimum NL-coloring for paths of order 2..9 / cycles of order 3..9."""
    fam, (n,) = spec.family, spec.args
    if fam == "path" and n in _PATH_BASES:
        seq = _PATH_BASES[n]
    elif fam == "cycle" and n in _CYCLE_BASES:
        seq = _CYCLE_BASES[n]
    else:
        raise ValueError(f"no stored base coloring for {spec.label()}")
    return _certified(family_graph(spec), Coloring(max(seq), seq),
                      (f"base({spec.label()})",))


# ---------------------------------------------------------------------------
# insertion operations on canonically labeled colored cycles

OP1 = "OP1"
OP2 = "OP2"


@dataclass(frozen=True)
class InsertionSite:
    """Where and how to insert on a colored cycle.

    ``edge`` is a vertex pair of the cycle, ``colors`` the endpoint colors
    (i, j).  OP1 additionally carries the color ``h`` of the single vertex
    inserted between a color-degree-1 pair; OP2 inserts two vertices colored
    j and i between a color-degree-2 pair.
    """

    edge: tuple[int, int]
    kind: str
    colors: tuple[int, int]
    h: int | None = None


def _is_canonical_cycle(g: Graph) -> bool:
    n = g.n
    if n < 3 or len(g.edges) != n:
        return False
    want = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return g.edges == frozenset(want)


def _edge_position(g: Graph, edge: tuple[int, int]) -> int:
    """Position p of a cycle edge joining positions p and (p+1) mod n."""
    u, v = sorted(edge)
    if v == u + 1:
        return u
    if u == 0 and v == g.n - 1:
        return v
    raise ValueError(f"({edge[0]},{edge[1]}) is not an edge of the cycle")


def _seq_color_degree(seq: tuple[int, ...], p: int) -> int:
    m = len(seq)
    return 1 if seq[p - 1] == seq[(p + 1) % m] else 2


def _splice(seq: tuple[int, ...], p: int, inserted: list[int]) -> tuple[int, ...]:
    return seq[: p + 1] + tuple(inserted) + seq[p + 1 :]


def _cycle_colored(seq: tuple[int, ...], provenance: tuple[str, ...]) -> ColoredGraph:
    graph = family_graph(FamilySpec.cycle(len(seq)))
    return _certified(graph, Coloring(max(seq), seq), provenance)


def op1_insert(cg: ColoredGraph, site: InsertionSite) -> ColoredGraph:
    """Insert one vertex colored h between two adjacent color-degree-1 vertices.

    The endpoints must carry distinct colors i, j and h must avoid both.
    Their color-degrees rise to 2, the new vertex has color-degree 2, and no
    other vertex's signature changes.  The result is re-verified.
    """
    if site.kind != OP1:
        raise ValueError("op1_insert requires an OP1 site")
    if not _is_canonical_cycle(cg.graph):
        raise ValueError("insertion operations require a canonically labeled cycle")
    seq = cg.coloring.colors
    p = _edge_position(cg.graph, site.edge)
    q = (p + 1) % len(seq)
    i, j = seq[p], seq[q]
    if i == j or {i, j} != set(site.colors):
        raise ValueError(f"site colors {site.colors} do not match endpoints ({i},{j})")
    if _seq_color_degree(seq, p) != 1 or _seq_color_degree(seq, q) != 1:
        raise ValueError("OP1 endpoints must both have color-degree 1")
    h = site.h
    if h is None or h in (i, j):
        raise ValueError(f"OP1 color h must exist and avoid the endpoint colors ({i},{j})")
    if not 1 <= h <= cg.k + 1:
        raise ValueError(f"OP1 color h={h} out of range (k={cg.k})")
    new_seq = _splice(seq, p, [h])
    return _cycle_colored(new_seq, cg.provenance + (f"op1(h={h},edge={p})",))


def op2_insert(cg: ColoredGraph, site: InsertionSite) -> ColoredGraph:
    """Insert two adjacent vertices colored j, i between color-degree-2
    endpoints colored i, j.

    Endpoint signatures are preserved; the new vertices form an adjacent
    color-degree-1 pair.  Rejected when some vertex already carries the
    signature one of the new vertices would get (in particular when the
    color pair {i, j} is already realized by a color-degree-1 pair).
    """
    if site.kind != OP2:
        raise ValueError("op2_insert requires an OP2 site")
    if not _is_canonical_cycle(cg.graph):
        raise ValueError("insertion operations require a canonically labeled cycle")
    seq = cg.coloring.colors
    p = _edge_position(cg.graph, site.edge)
    q = (p + 1) % len(seq)
    i, j = seq[p], seq[q]
    if i == j or {i, j} != set(site.colors):
        raise ValueError(f"site colors {site.colors} do not match endpoints ({i},{j})")
    if _seq_color_degree(seq, p) != 2 or _seq_color_degree(seq, q) != 2:
        raise ValueError("OP2 endpoints must both have color-degree 2")
    m = len(seq)
    for t in range(m):
        sig = {seq[t - 1], seq[(t + 1) % m]}
        if (seq[t] == j and sig == {i}) or (seq[t] == i and sig == {j}):
            raise ValueError(
                f"color pair ({min(i, j)},{max(i, j)}) is already realized by a "
                f"color-degree-1 vertex; inserting it again would clash"
            )
    new_seq = _splice(seq, p, [j, i])
    return _cycle_colored(new_seq, cg.provenance + (f"op2({min(i,j)},{max(i,j)},edge={p})",))


# ---------------------------------------------------------------------------
# the 1-paired cycle pipeline

def _site_at(cg: ColoredGraph, p: int, kind: str, h: int | None = None) -> InsertionSite:
    seq = cg.coloring.colors
    m = len(seq)
    q = (p + 1) % m
    edge = (p, q) if q == p + 1 else (0, m - 1)
    return InsertionSite(edge=edge, kind=kind, colors=(seq[p], seq[q]), h=h)


def _find_cd_pair_edge(seq: tuple[int, ...], pair: tuple[int, int], cd: int) -> int:
    """Lowest edge position whose endpoints have the given colors and color-degree."""
    m = len(seq)
    want = set(pair)
    for p in range(m):
        q = (p + 1) % m
        if ({seq[p], seq[q]} == want
                and _seq_color_degree(seq, p) == cd
                and _seq_color_degree(seq, q) == cd):
            return p
    raise ConstructionError(f"no eligible edge for color pair {pair} at color-degree {cd}")


def _designated_vertex(seq: tuple[int, ...]) -> int:
    """The unique vertex colored 2 whose two neighbors are colored 1 and 3."""
    m = len(seq)
    for p in range(m):
        if seq[p] == 2 and {seq[p - 1], seq[(p + 1) % m]} == {1, 3}:
            return p
    raise ConstructionError("no vertex colored 2 with neighbor colors {1,3}")


def _lex_pairs(top: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, top + 1), 2))


_STATE_CACHE: dict[tuple[int, int], ColoredGraph] = {}


def _cycle_state(k: int, n: int) -> ColoredGraph:
    """Deterministic 1-paired k-coloring of the order-n cycle.

    Chain structure: the order-ell(k-1) coloring of level k-1 grows by
    single insertions (new color k) at the adjacent color-degree-1 pairs,
    one per color pair of 1..k-1 in lexicographic order, up to order a2(k);
    from there pair insertions (one per color pair of 1..k) extend even
    offsets up to ell(k), and from order a2(k)-1 odd offsets up to ell(k)-3,
    skipping the color pair left unconsumed by the first phase.  The first
    two pair insertions happen on the edges at the vertex colored 2 with
    neighbors colored 1 and 3, which lays down the run 1,2,1,2,3,2,3 needed
    at full order.
    """
    cached = _STATE_CACHE.get((k, n))
    if cached is not None:
        return cached
    if k == 3:
        if n != 9:
            raise ValueError("the 3-color pipeline base is the cycle of order 9")
        state = base_small_coloring(FamilySpec.cycle(9))
    else:
        lo, a2k, hi = ell(k - 1), a2(k), ell(k)
        if not (lo < n <= hi) or n == hi - 1:
            raise ValueError(f"order {n} not reachable with {k} colors")
        if n <= a2k:
            prev = _cycle_state(k - 1, lo) if n == lo + 1 else _cycle_state(k, n - 1)
            pair = _lex_pairs(k - 1)[n - lo - 1]
            p = _find_cd_pair_edge(prev.coloring.colors, pair, cd=1)
            state = op1_insert(prev, _site_at(prev, p, OP1, h=k))
        elif (n - a2k) % 2 == 0:
            prev = _cycle_state(k, n - 2)
            step = (n - a2k) // 2
            seq = prev.coloring.colors
            if step <= 2:
                u = _designated_vertex(seq)
                m = len(seq)
                target = 1 if step == 1 else 3
                p = (u - 1) % m if seq[(u - 1) % m] == target else u
            else:
                rest = [pr for pr in _lex_pairs(k) if set(pr) not in ({1, 2}, {2, 3})]
                pair = rest[step - 3]
                p = _find_cd_pair_edge(seq, pair, cd=2)
            state = op2_insert(prev, _site_at(prev, p, OP2))
        else:
            prev = _cycle_state(k, n - 2)
            step = (n - (a2k - 1)) // 2
            skipped = {k - 2, k - 1}  # pair whose color-degree-1 vertices survive
            pairs = [pr for pr in _lex_pairs(k) if set(pr) != skipped]
            p = _find_cd_pair_edge(prev.coloring.colors, pairs[step - 1], cd=2)
            state = op2_insert(prev, _site_at(prev, p, OP2))
    _STATE_CACHE[(k, n)] = state
    return state


def one_paired_cycle_coloring(k: int, n: int) -> ColoredGraph:
    """1-paired k-NL-coloring of the order-n cycle.

    Defined for k >= 4 and ell(k-1) < n <= ell(k) except n = ell(k)-1, which
    admits no k-coloring at all.
    """
    if k < 4:
        raise ValueError("the pipeline needs at least 4 colors")
    if not (ell(k - 1) < n <= ell(k)):
        raise ValueError(f"order {n} is outside (ell({k - 1}), ell({k})]")
    if n == ell(k) - 1:
        raise ValueError(f"order {n} = ell({k})-1 has no {k}-coloring; "
                         f"use cycle_coloring for the k+1 construction")
    return _cycle_state(k, n)


def cycle_coloring(n: int) -> ColoredGraph:
    """Minimum NL-coloring of the cycle of order n >= 3."""
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    if n <= 9:
        return base_small_coloring(FamilySpec.cycle(n))
    k = bracket(n)
    if n == ell(k) - 1:
        # subdivide one edge of the order n-1 cycle with a fresh color
        prev = _cycle_state(k, n - 1)
        seq = prev.coloring.colors
        new_seq = (seq[0], k + 1) + seq[1:]
        return _cycle_colored(new_seq, prev.provenance + (f"subdivide(h={k + 1})",))
    return _cycle_state(k, n)


def _path_colored(seq: tuple[int, ...], provenance: tuple[str, ...]) -> ColoredGraph:
    graph = family_graph(FamilySpec.path(len(seq)))
    return _certified(graph, Coloring(max(seq), seq), provenance)


def path_coloring(n: int) -> ColoredGraph:
    """Minimum NL-coloring of the path of order n >= 2.

    Orders 10 and up come from the cycle pipeline: cut the cycle at an
    adjacent color-degree-1 pair (any edge when the order is a2(k), where no
    such pair exists), except at order ell(k)-1 where the full-order cycle
    loses the vertex colored 2 with neighbors colored 1 and 3.
    """
    if n < 2:
        raise ValueError("paths need at least 2 vertices")
    if n <= 9:
        return base_small_coloring(FamilySpec.path(n))
    k = bracket(n)
    if n == ell(k) - 1:
        full = _cycle_state(k, ell(k))
        seq = full.coloring.colors
        u = _designated_vertex(seq)
        path_seq = seq[u + 1 :] + seq[:u]
        return _path_colored(path_seq, full.provenance + ("drop-located-vertex",))
    cg = _cycle_state(k, n)
    seq = cg.coloring.colors
    if n == a2(k):
        cut = 0  # no color-degree-1 pair exists; any edge works, take the first
    else:
        m = len(seq)
        cut = next(p for p in range(m)
                   if _seq_color_degree(seq, p) == 1
                   and _seq_color_degree(seq, (p + 1) % m) == 1)
    path_seq = seq[cut + 1 :] + seq[: cut + 1]
    return _path_colored(path_seq, cg.provenance + (f"cut(edge={cut})",))


def cone_coloring(cg: ColoredGraph) -> ColoredGraph:
    """Add a universal vertex carrying a fresh color; the value rises by one."""
    g = cg.graph
    edges = list(g.edges) + [(v, g.n) for v in range(g.n)]
    graph = Graph(g.n + 1, edges)
    coloring = Coloring(cg.k + 1, cg.coloring.colors + (cg.k + 1,))
    return _certified(graph, coloring, cg.provenance + ("cone",))


# ---------------------------------------------------------------------------
# comb coloring

def _group_colors(k: int, r: int) -> list[int]:
    """Colors of the r-th spine group: 1..k minus r, cyclically decreasing.

    Even groups start at r+1, odd groups at r-2; the last group of an odd k
    swaps its final three entries to k-1, 1, 2.
    """
    norm = lambda x: (x - 1) % k + 1
    start = r + 1 if r % 2 == 0 else r - 2
    out: list[int] = []
    c = norm(start)
    while len(out) < k - 1:
        if c != r:
            out.append(c)
        c = norm(c - 1)
    if r == k and k % 2 == 1:
        out[-3:] = [k - 1, 1, 2]
    return out


def _comb_spine_colors(k: int) -> list[int]:
    spine: list[int] = []
    for r in range(1, k + 1):
        spine.extend(_group_colors(k, r))
    return spine


def comb_signature_table(k: int, r: int, l: int) -> frozenset | None:
    """Expected neighbor signature of the spine vertex colored l in group r.

    Transcribed case split for the standard comb coloring; returns None for
    cells the split does not cover (the color-3 rows at k=5).  Used as an
    independent cross-check of the constructed coloring.
    """
    if r == l:
        raise ValueError("a group never contains its own leaf color")
    norm = lambda x: (x - 1) % k + 1
    sig = lambda *xs: frozenset(norm(x) for x in xs)
    even = k % 2 == 0
    if l == 1:
        if r == 2:
            return sig(2, 3, k)
        if r == 3:
            return sig(3, 4, k)
        if r == k - 1:
            return sig(2, k - 1, k) if even else sig(2, k - 2, k - 1)
        if r == k:
            return sig(k - 2, k - 1, k) if even else sig(2, k - 1, k)
        return sig(r, 2, k)
    if l == 2:
        if r == 1:
            return sig(1, 3, k)
        if r == 3:
            return sig(3, 4, 5)
        if r == k:
            return sig(3, k) if even else sig(1, k)
        return sig(r, 1, 3)
    if l == 3:
        if k == 5:
            return None
        if r == 2:
            return sig(1, 2, k)
        if r == 4:
            return sig(2, 4, 5)
        if r == 5:
            return sig(2, 5, 6)
        if r == k - 1:
            return sig(2, 4, k - 1)
        if r == k:
            return sig(2, 4, k) if even else sig(4, k - 1, k)
        return sig(r, 2, 4)
    if l == k - 1:
        if r == 1:
            return sig(1, k - 2)
        if even:
            if r == k - 2:
                return sig(k - 4, k - 3, k - 2)
            if r == k:
                return sig(1, k - 2, k)
        else:
            if r == k - 3:
                return sig(k - 4, k - 3, k)
            if r == k - 2:
                return sig(k - 3, k - 2, k)
            if r == k:
                return sig(1, 3, k)
        return sig(r, k - 2, k)
    if l == k:
        if r == 1:
            return sig(1, 2, 3)
        if even:
            if r == k - 2:
                return sig(1, k - 3, k - 2)
            if r == k - 1:
                return sig(1, k - 2, k - 1)
        else:
            if r == k - 1:
                return sig(k - 3, k - 2, k - 1)
        return sig(r, 1, k - 1)
    if l % 2 == 0:
        if r == l - 1:
            return sig(l - 2, l - 1, l + 1)
        if r == l + 1:
            return sig(l + 1, l + 2, l + 3)
        if r == l - 2:
            return sig(l - 3, l - 2, l + 1)
        return sig(r, l - 1, l + 1)
    if r == l - 1:
        return sig(l - 3, l - 2, l - 1)
    if r == l + 1:
        return sig(l - 1, l + 1, l + 2)
    if r == l + 2:
        return sig(l - 1, l + 2, l + 3)
    return sig(r, l - 1, l + 1)


def _comb_spine_index(k: int, r: int, l: int) -> int:
    """Spine index of the vertex colored l in group r (0-based along the spine)."""
    return (r - 1) * (k - 1) + _group_colors(k, r).index(l)


def comb_coloring(k: int) -> ColoredGraph:
    """k-NL-coloring of the comb with k(k-1) spine vertices (order 2k(k-1)).

    Leaves over the r-th group of k-1 spine vertices are colored r; spine
    colors follow the cyclically decreasing group rule.  Besides the usual
    verification, every spine signature is checked against the tabulated
    case split and each color must appear on exactly k-1 spine vertices.
    """
    if k < 5:
        raise ValueError("the comb coloring needs at least 5 colors")
    m = k * (k - 1)
    spine = _comb_spine_colors(k)
    leaves = [r for r in range(1, k + 1) for _ in range(k - 1)]
    colors = tuple(spine + leaves)
    graph = family_graph(FamilySpec.comb(m))
    cg = _certified(graph, Coloring(k, colors), (f"comb(k={k})",))
    for color in range(1, k + 1):
        non_leaves = sum(1 for i in range(m) if spine[i] == color)
        if non_leaves != k - 1:
            raise ConstructionError(f"color {color} appears on {non_leaves} spine "
                                    f"vertices, expected {k - 1}")
    for r in range(1, k + 1):
        for l in range(1, k + 1):
            if l == r:
                continue
            expected = comb_signature_table(k, r, l)
            if expected is None:
                continue
            v = _comb_spine_index(k, r, l)
            actual = frozenset(neighbor_signature(graph, cg.coloring, v))
            if actual != expected:
                raise ConstructionError(
                    f"comb signature mismatch at group {r}, color {l}: "
                    f"built {sorted(actual)}, expected {sorted(expected)}"
                )
    return cg


# ---------------------------------------------------------------------------
# extremal unicyclic graph and caterpillar

def unicyclic_extremal(k: int) -> ColoredGraph:
    """The order-(2a1+a2) unicyclic graph with NL-chromatic number k.

    Built by cutting one ring edge with endpoint colors {2, k-1} out of the
    all-color-degree-2 cycle of order a2(k) and rerouting both ends through
    the comb spine: the end colored 2 attaches to the spine head (colored
    k-1), the end colored k-1 to the spine tail (colored 2).
    """
    if k < 5:
        raise ValueError("the extremal unicyclic construction needs at least 5 colors")
    ring = _cycle_state(k, a2(k))
    comb = comb_coloring(k)
    seq = ring.coloring.colors
    ring_n = len(seq)
    m = k * (k - 1)
    p = next(t for t in range(ring_n)
             if {seq[t], seq[(t + 1) % ring_n]} == {2, k - 1})
    q = (p + 1) % ring_n
    x, y = (p, q) if seq[p] == 2 else (q, p)  # x colored 2, y colored k-1
    spine_head = ring_n                       # comb spine vertex 0, colored k-1
    spine_tail = ring_n + m - 1               # last spine vertex, colored 2
    edges = [e for e in ring.graph.sorted_edges() if e != (min(p, q), max(p, q))]
    edges += [(u + ring_n, v + ring_n) for u, v in comb.graph.sorted_edges()]
    edges += [(x, spine_head), (y, spine_tail)]
    graph = Graph(ring_n + 2 * m, edges)
    colors = seq + comb.coloring.colors
    cg = _certified(graph, Coloring(k, colors),
                    ring.provenance + comb.provenance + ("ring-comb splice",))
    if classify(graph).kind != "Unicyclic":
        raise ConstructionError("splice did not produce a unicyclic graph")
    return cg


def _splice_signature_table(k: int) -> dict[tuple[int, int], frozenset]:
    """Expected signatures, keyed by (group, color), of the four comb vertices
    whose neighborhoods change in the caterpillar surgery."""
    even = k % 2 == 0
    return {
        (k - 1, 1): frozenset({3, k - 1, k}) if even else frozenset({3, k - 2, k - 1}),
        (k - 1, 3): frozenset({1, k - 1, k}) if k == 6 else frozenset({1, 4, k - 1}),
        (2, k - 2): frozenset({1, 2, 6}) if k == 6 else frozenset({2, k - 3, k}),
        (2, k): frozenset({1, 2, k - 2}),
    }


def caterpillar_extremal(k: int) -> ColoredGraph:
    """The order-(2a1+a2-2) caterpillar with NL-chromatic number k, for k >= 6.

    Surgery on the extremal unicyclic graph: drop the spine vertex colored
    k-1 in group 2 together with its leaf (bridging its spine neighbors),
    likewise the spine vertex colored 2 in group k-1; then cut the edge
    between a degree-2 vertex colored 2 and a degree-3 vertex colored k-1
    and hang a leaf colored k-1 off the former and a leaf colored 2 off the
    latter.  The cut candidates are tried in lexicographic order and the
    first one whose result verifies (including the four tabulated modified
    signatures) is kept.
    """
    if k < 6:
        raise ValueError("the extremal caterpillar construction needs at least 6 colors")
    base = unicyclic_extremal(k)
    ring_n = a2(k)
    m = k * (k - 1)
    spine_id = lambda r, l: ring_n + _comb_spine_index(k, r, l)
    leaf_of = lambda spine: spine + m
    colors = dict(enumerate(base.coloring.colors))
    edges = set(base.graph.sorted_edges())

    def drop_with_leaf(v: int) -> None:
        spine_neighbors = [u for u in base.graph.adj[v] if u != leaf_of(v)]
        if len(spine_neighbors) != 2:
            raise ConstructionError("dropped vertex is not an interior spine vertex")
        for u in base.graph.adj[v]:
            edges.discard((min(u, v), max(u, v)))
        edges.discard((v, leaf_of(v)))
        a, b = spine_neighbors
        edges.add((min(a, b), max(a, b)))
        del colors[v], colors[leaf_of(v)]

    x = spine_id(2, k - 1)
    y = spine_id(k - 1, 2)
    drop_with_leaf(x)
    drop_with_leaf(y)

    degree: dict[int, int] = {v: 0 for v in colors}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    directed = [pair for a, b in edges for pair in ((a, b), (b, a))]
    candidates = sorted(
        (u, v) for u, v in directed
        if degree[u] == 2 and colors[u] == 2 and degree[v] == 3 and colors[v] == k - 1
    )
    watched = {spine_id(r, l): expected
               for (r, l), expected in _splice_signature_table(k).items()}
    for u, v in candidates:
        cut_edges = set(edges)
        cut_edges.discard((min(u, v), max(u, v)))
        survivors = sorted(colors)
        relabel = {old: new for new, old in enumerate(survivors)}
        new_u_leaf, new_v_leaf = len(survivors), len(survivors) + 1
        final_edges = [(relabel[a], relabel[b]) for a, b in cut_edges]
        final_edges += [(relabel[u], new_u_leaf), (relabel[v], new_v_leaf)]
        final_colors = tuple(colors[old] for old in survivors) + (k - 1, 2)
        try:
            graph = Graph(len(survivors) + 2, final_edges)
            cg = _certified(graph, Coloring(k, final_colors),
                            base.provenance + (f"leaf surgery(cut={u}-{v})",))
        except (ConstructionError, ValueError):
            continue
        ok = all(
            frozenset(neighbor_signature(graph, cg.coloring, relabel[w])) == expected
            for w, expected in watched.items()
        )
        if ok:
            return cg
    raise ConstructionError("no cut edge yields a verified caterpillar")


# ---------------------------------------------------------------------------
# generic trees of order >= 5

def generic_tree_coloring(t: Graph) -> ColoredGraph:
    """NL-coloring of a tree of order >= 5 witnessing the general upper bound.

    Stars get all-distinct colors (their value is the order); double stars
    get s+1 colors; everything else (diameter >= 4) gets the order-minus-2
    coloring that reuses one color on the two ends and the midpoint of a
    distance-4 path.
    """
    n = t.n
    if n < 5:
        raise ValueError("generic tree coloring applies to trees of order >= 5")
    if classify(t).kind not in ("Path", "Caterpillar", "TreeGeneral"):
        raise ValueError("input is not a tree")
    degrees = [t.degree(v) for v in range(n)]

    centers = [v for v in range(n) if degrees[v] >= 2]
    if len(centers) == 1:  # star
        return _certified(t, Coloring(n, tuple(range(1, n + 1))), ("star coloring",))

    if len(centers) == 2 and t.has_edge(*centers):  # double star
        u0, v0 = centers
        if degrees[u0] > degrees[v0]:
            u0, v0 = v0, u0
        s = degrees[v0] - 1
        assignment = [0] * n
        assignment[v0] = s + 1
        for c, leaf in enumerate(sorted(w for w in t.adj[v0] if w != u0), start=1):
            assignment[leaf] = c
        assignment[u0] = 1
        for c, leaf in enumerate(sorted(w for w in t.adj[u0] if w != v0), start=2):
            assignment[leaf] = c
        return _certified(t, Coloring(s + 1, tuple(assignment)), ("double-star coloring",))

    # diameter >= 4: one shared color on x, b, y along a distance-4 path
    x, path = _first_distance4_pair(t)
    b = path[2]
    y = path[4]
    assignment = [0] * n
    assignment[x] = assignment[b] = assignment[y] = 1
    nxt = 2
    for v in range(n):
        if assignment[v] == 0:
            assignment[v] = nxt
            nxt += 1
    return _certified(t, Coloring(n - 2, tuple(assignment)), ("shared-triple coloring",))


def _first_distance4_pair(t: Graph) -> tuple[int, list[int]]:
    """Lexicographically first (x, y) at distance exactly 4, with the path."""
    for x in range(t.n):
        dist = {x: 0}
        parent = {x: None}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            if dist[u] >= 4:
                continue
            for w in t.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        hits = sorted(v for v, d in dist.items() if d == 4)
        if hits:
            y = hits[0]
            path = [y]
            while path[-1] != x:
                path.append(parent[path[-1]])
            return x, path[::-1]
    raise ValueError("tree has diameter below 4")
