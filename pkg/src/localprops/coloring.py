"""Edge-colored complete graphs and the local color-count property.

The central object is a coloring of the complete graph K_n: one color id
per unordered edge, stored in row-major upper-triangle order (edge (i, j)
with i < j lives at index i*n - i*(i+1)//2 + j - i - 1; this indexing is
shared by every module and by the JSON coloring format).  Color ids are
dense: the ids in use are exactly 0..num_colors-1.

A (k, ell) local property asks that every induced subgraph on k vertices
span at least ell distinct edge colors.  The color energy sum(m_c^2),
i.e. the number of ordered pairs of unordered edges sharing a color, is
the second-moment statistic that connects color multiplicities to that
property.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

__all__ = [
    "ColoredCompleteGraph",
    "LocalSpec",
    "PropertyVerdict",
    "edge_count",
    "edge_index",
    "edge_pairs",
    "monochromatic",
    "rainbow",
    "subset_color_count",
    "verify_local_property",
    "color_histogram",
    "color_energy",
    "cauchy_schwarz_floor",
    "relabel_colors",
    "permute_vertices",
]


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    """Row-major upper-triangle index of edge (i, j), i < j."""
    if not 0 <= i < j < n:
        raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
    return i * n - i * (i + 1) // 2 + j - i - 1


def edge_pairs(n: int):
    """All edges (i, j), i < j, in index order."""
    for i in range(n - 1):
        for j in range(i + 1, n):
            yield i, j


@dataclass(frozen=True)
class ColoredCompleteGraph:
    """A complete graph on n vertices with one color id per edge.

    edge_colors[edge_index(n, i, j)] is the color of edge (i, j).  Color
    ids must be dense; use from_sparse() to normalize arbitrary ids.
    """

    n: int
    edge_colors: tuple[int, ...]
    num_colors: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        colors = tuple(self.edge_colors)
        object.__setattr__(self, "edge_colors", colors)
        if len(colors) != edge_count(self.n):
            raise ValueError(
                f"expected {edge_count(self.n)} edge colors for n={self.n}, "
                f"got {len(colors)}"
            )
        used = set(colors)
        if used != set(range(len(used))):
            raise ValueError(
                "color ids must be dense 0..num_colors-1 (see from_sparse)"
            )
        object.__setattr__(self, "num_colors", len(used))

    @classmethod
    def from_sparse(cls, n: int, colors) -> "ColoredCompleteGraph":
        """Build a graph from arbitrary hashable color ids, densified.

        Ids are remapped to 0..num_colors-1 in ascending order of the
        original ids, so equal inputs always normalize identically.
        """
        colors = list(colors)
        remap = {c: i for i, c in enumerate(sorted(set(colors)))}
        return cls(n, tuple(remap[c] for c in colors))

    def color(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edge_colors[edge_index(self.n, u, v)]


def monochromatic(n: int) -> ColoredCompleteGraph:
    """K_n with every edge the same color."""
    return ColoredCompleteGraph(n, (0,) * edge_count(n))


def rainbow(n: int) -> ColoredCompleteGraph:
    """K_n with all edge colors distinct."""
    return ColoredCompleteGraph(n, tuple(range(edge_count(n))))


@dataclass(frozen=True)
class LocalSpec:
    """A (k, ell) local property: every k vertices span >= ell colors."""

    k: int
    ell: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if not 1 <= self.ell <= self.k * (self.k - 1) // 2:
            raise ValueError(
                f"ell must be in [1, C(k,2)] = [1, {self.k * (self.k - 1) // 2}]"
            )


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a local-property check.

    When holds is False, witness is the lexicographically least failing
    k-subset and witness_colors its distinct-color (or distance or
    difference) count, which is then < ell.
    """

    holds: bool
    witness: tuple | None = None
    witness_colors: int | None = None


def subset_color_count(G: ColoredCompleteGraph, subset) -> int:
    """Number of distinct colors among the edges induced by a vertex subset."""
    verts = sorted(set(subset))
    if len(verts) < 2:
        raise ValueError("subset must contain at least two distinct vertices")
    if verts[0] < 0 or verts[-1] >= G.n:
        raise ValueError(f"vertex ids must lie in [0, {G.n})")
    seen = set()
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            seen.add(G.color(verts[a], verts[b]))
    return len(seen)


def verify_local_property(G: ColoredCompleteGraph, spec: LocalSpec) -> PropertyVerdict:
    """Check whether every k-subset of vertices spans >= ell colors.

    Enumerates k-subsets in lexicographic order, depth first; a partial
    subset that already spans ell colors is skipped because extending a
    subset can only add colors, so none of its completions can fail.
    The pruning is verdict-identical to a full scan, and the first
    failure found is the lexicographically least one.
    """
    n, k, ell = G.n, spec.k, spec.ell
    if k > n:
        raise ValueError(f"k={k} exceeds vertex count n={n}: infeasible query")

    color = G.color

    def extend(prefix: tuple, colors: frozenset, start: int):
        # last admissible start still leaves room for k - len(prefix) picks
        for v in range(start, n - (k - len(prefix)) + 1):
            grown = colors | {color(u, v) for u in prefix}
            if len(prefix) + 1 == k:
                if len(grown) < ell:
                    return prefix + (v,), len(grown)
                continue
            if len(grown) >= ell:
                continue  # colors only accumulate: no completion can fail
            hit = extend(prefix + (v,), grown, v + 1)
            if hit is not None:
                return hit
        return None

    hit = extend((), frozenset(), 0)
    if hit is None:
        return PropertyVerdict(True)
    return PropertyVerdict(False, hit[0], hit[1])


def color_histogram(G: ColoredCompleteGraph) -> Counter:
    """Multiplicity m_c of every color c; the values sum to n(n-1)/2."""
    return Counter(G.edge_colors)


def color_energy(G: ColoredCompleteGraph) -> int:
    """sum of m_c^2: ordered pairs of unordered edges with equal colors.

    Pairs are ordered ((e1, e2) and (e2, e1) count separately, (e, e)
    counts once), while each edge itself is unordered.  Exact integer.
    """
    return sum(m * m for m in color_histogram(G).values())


def cauchy_schwarz_floor(G: ColoredCompleteGraph) -> int:
    """ceil((n(n-1)/2)^2 / num_colors), a guaranteed lower bound on color_energy."""
    if G.num_colors < 1:
        raise ValueError("graph has no edges, so no colors to bound against")
    e = edge_count(G.n)
    return -(-(e * e) // G.num_colors)


def relabel_colors(G: ColoredCompleteGraph, perm) -> ColoredCompleteGraph:
    """Apply a bijection on color ids; perm[old_id] gives the new id."""
    perm = list(perm)
    if sorted(perm) != list(range(G.num_colors)):
        raise ValueError("perm must be a bijection on 0..num_colors-1")
    return ColoredCompleteGraph(G.n, tuple(perm[c] for c in G.edge_colors))


def permute_vertices(G: ColoredCompleteGraph, perm) -> ColoredCompleteGraph:
    """Relabel vertices; perm[old_id] gives the new vertex id."""
    perm = list(perm)
    if sorted(perm) != list(range(G.n)):
        raise ValueError("perm must be a bijection on 0..n-1")
    out = [0] * edge_count(G.n)
    for i, j in edge_pairs(G.n):
        a, b = perm[i], perm[j]
        if a > b:
            a, b = b, a
        out[edge_index(G.n, a, b)] = G.color(i, j)
    return ColoredCompleteGraph(G.n, tuple(out))
