"""Closed-form bounds and exact values for the neighbor-locating chromatic number.

Everything here is integer arithmetic: capacity counts a1/a2/ell, order
bounds for general / degree-bounded / unicyclic / tree inputs, the derived
lower bound for arbitrary connected graphs, and the exact values for the
named families (paths, cycles, fans, wheels, stars, double stars and the
extremal unicyclic/caterpillar instances).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import FamilySpec, Graph, classify, degree_stats


def a1(k: int) -> int:
    """Maximum number of color-degree-1 vertices in a k-NL-coloring: k(k-1)."""
    _require_k(k, 3)
    return k * (k - 1)


def a2(k: int) -> int:
    """Maximum number of color-degree-2 vertices: k(k-1)(k-2)/2."""
    _require_k(k, 3)
    return k * (k - 1) * (k - 2) // 2


def ell(k: int) -> int:
    """Maximum order of a max-degree-2 graph with a k-NL-coloring: a1 + a2."""
    _require_k(k, 3)
    return (k ** 3 - k ** 2) // 2


def _require_k(k: int, minimum: int) -> None:
    if k < minimum:
        raise ValueError(f"k must be at least {minimum}, got {k}")


def max_order(k: int, max_degree: int | None = None) -> int:
    """Largest possible order of a graph with NL-chromatic number k.

    Without a degree cap this is k(2^(k-1) - 1).  With max_degree <= k-1
    supplied, the sharper value k * sum_{j<=max_degree} C(k-1, j) applies;
    larger degree caps are rejected because the sharper formula does not
    cover them.
    """
    _require_k(k, 2)
    if max_degree is None:
        return k * (2 ** (k - 1) - 1)
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    if max_degree > k - 1:
        raise ValueError(f"degree-bounded formula requires max_degree <= k-1 "
                         f"(got degree {max_degree} with k={k})")
    return k * sum(comb(k - 1, j) for j in range(1, max_degree + 1))


def class_order_bound(k: int, kind: str) -> int:
    """Order bound for unicyclic graphs or trees with NL-chromatic number k."""
    _require_k(k, 3)
    if kind == "unicyclic":
        return (k ** 3 + k ** 2 - 2 * k) // 2
    if kind == "tree":
        return (k ** 3 + k ** 2 - 2 * k - 4) // 2
    raise ValueError(f"kind must be 'unicyclic' or 'tree', got {kind!r}")


def tree_max_degree(k: int) -> int:
    """Degree bound (k-1)^2 + (k-1)/2 for trees, floored to an integer."""
    _require_k(k, 2)
    return (k - 1) ** 2 + (k - 1) // 2


@dataclass(frozen=True)
class BoundsReport:
    """All applicable order bounds for a color count k (and optional degree cap)."""

    k: int
    general_max_order: int
    degree_bounded_max_order: int | None
    unicyclic_max_order: int
    tree_max_order: int
    tree_max_degree: int
    ell: int
    a1: int
    a2: int

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "generalMaxOrder": self.general_max_order,
            "unicyclicMaxOrder": self.unicyclic_max_order,
            "treeMaxOrder": self.tree_max_order,
            "treeMaxDegree": self.tree_max_degree,
            "ell": self.ell,
            "a1": self.a1,
            "a2": self.a2,
        }
        if self.degree_bounded_max_order is not None:
            out["degreeBoundedMaxOrder"] = self.degree_bounded_max_order
        return out


def bounds_report(k: int, max_degree: int | None = None) -> BoundsReport:
    _require_k(k, 3)
    return BoundsReport(
        k=k,
        general_max_order=max_order(k),
        degree_bounded_max_order=None if max_degree is None else max_order(k, max_degree),
        unicyclic_max_order=class_order_bound(k, "unicyclic"),
        tree_max_order=class_order_bound(k, "tree"),
        tree_max_degree=tree_max_degree(k),
        ell=ell(k),
        a1=a1(k),
        a2=a2(k),
    )


def chi_lower_bound(g: Graph) -> int:
    """Largest lower bound on the NL-chromatic number implied by the order bounds.

    Returns the smallest k passing every applicable necessary condition:
    the general order bound, the degree-bounded order bound (when the
    degree cap applies, which for paths and cycles is the ell bound), and
    the unicyclic/tree order bounds when the graph classifies as such.
    Never below 2 for graphs of order >= 2.
    """
    if g.n == 1:
        return 1
    kind = classify(g).kind
    is_tree = kind in ("Path", "Caterpillar", "TreeGeneral")
    is_unicyclic = kind in ("Cycle", "Unicyclic")
    delta = degree_stats(g).max_degree
    for k in range(2, g.n + 1):
        if g.n > max_order(k):
            continue
        if delta <= k - 1 and g.n > max_order(k, delta):
            continue
        if is_tree and k >= 3 and g.n > class_order_bound(k, "tree"):
            continue
        if is_unicyclic and k >= 3 and g.n > class_order_bound(k, "unicyclic"):
            continue
        return k
    return g.n


def bracket(n: int) -> int:
    """The unique k >= 4 with ell(k-1) < n <= ell(k); defined for n >= 10."""
    if n < 10:
        raise ValueError("bracket lookup applies to orders of at least 10")
    k = 4
    while ell(k) < n:
        k += 1
    return k


def chi_closed_form(spec: FamilySpec) -> int:
    """Exact NL-chromatic number of a named family instance.

    Covers paths, cycles, fans, wheels, stars, double stars and the
    extremal unicyclic/caterpillar instances (which have value k by
    construction).  Combs are not covered.
    """
    fam, args = spec.family, spec.args
    if fam == "path":
        n = args[0]
        if n == 2:
            return 2
        if n <= 9:
            return 3
        return bracket(n)
    if fam == "cycle":
        n = args[0]
        if n <= 9:
            return 3 if n % 2 == 1 else 4
        k = bracket(n)
        return k + 1 if n == ell(k) - 1 else k
    if fam == "fan":
        return chi_closed_form(FamilySpec.path(args[0] - 1)) + 1
    if fam == "wheel":
        return chi_closed_form(FamilySpec.cycle(args[0] - 1)) + 1
    if fam == "star":
        return args[0]
    if fam == "double-star":
        return args[1] + 1
    if fam in ("unicyclic", "caterpillar"):
        return args[0]
    raise ValueError(f"no closed-form value for family {fam!r}")
