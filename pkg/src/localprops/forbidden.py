"""Detectors for the two local configurations that contradict a (k, ell)
property, plus the exact set-intersection counting bound.

Parameters come as (k, m) with derived a = floor(k/(m+1)) and b = m.  A
coloring in which every a(b+1) vertices span at least C(a(b+1),2)-ba+b+1
colors cannot contain either of:

  * a vertex with b*a-b+1 incident edges of one color (that star plus
    b+a-2 fillers is an a(b+1)-subset with too few colors), or
  * b colors, each appearing at least 2^j >= a times, whose endpoint
    sets share a vertices.

The counting bound: among k subsets of an n-element universe, each of
size at least m, with k >= 2d n^d / m^d, some d of them intersect in at
least m^d / (2 n^(d-1)) elements.  All threshold comparisons here are
cross-multiplied integers, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .coloring import ColoredCompleteGraph, LocalSpec, color_histogram, edge_pairs

__all__ = [
    "BudgetExceededError",
    "DetectorParams",
    "ColorSupport",
    "PopularHit",
    "SetSystem",
    "max_mono_degree",
    "mono_degree_violations",
    "color_supports",
    "popular_intersection_search",
    "counting_lemma_find",
    "lemma_hypothesis_holds",
]


class BudgetExceededError(RuntimeError):
    """A combinatorial scan would exceed its configured tuple budget."""


@dataclass(frozen=True)
class DetectorParams:
    """(k, m) parameters with the derived pair a = floor(k/(m+1)), b = m."""

    k: int
    m: int

    def __post_init__(self) -> None:
        if not self.k > self.m >= 2:
            raise ValueError("need k > m >= 2")

    @property
    def a(self) -> int:
        return self.k // (self.m + 1)

    @property
    def b(self) -> int:
        return self.m

    @property
    def mono_degree_cap(self) -> int:
        """Max same-color edges at one vertex compatible with the property."""
        return self.b * self.a - self.b

    def induced_spec(self) -> LocalSpec:
        """The (a(b+1), C(a(b+1),2)-ba+b+1) property these detectors serve."""
        kk = self.a * (self.b + 1)
        return LocalSpec(kk, comb(kk, 2) - self.b * self.a + self.b + 1)


def max_mono_degree(G: ColoredCompleteGraph):
    """Max over (vertex, color) of same-colored edges at the vertex.

    Returns (max, [(vertex, color, count), ...]) listing every attaining
    pair in (vertex, color) order; (0, []) for an edgeless graph.
    """
    counts: dict[tuple[int, int], int] = {}
    for i, j in edge_pairs(G.n):
        c = G.color(i, j)
        counts[(i, c)] = counts.get((i, c), 0) + 1
        counts[(j, c)] = counts.get((j, c), 0) + 1
    if not counts:
        return 0, []
    top = max(counts.values())
    at_max = sorted((v, c) for (v, c), k in counts.items() if k == top)
    return top, [(v, c, top) for v, c in at_max]


def mono_degree_violations(G: ColoredCompleteGraph, p: DetectorParams) -> list[tuple[int, int]]:
    """All (vertex, color) with at least b*a-b+1 same-colored incident edges."""
    threshold = p.mono_degree_cap + 1
    counts: dict[tuple[int, int], int] = {}
    for i, j in edge_pairs(G.n):
        c = G.color(i, j)
        counts[(i, c)] = counts.get((i, c), 0) + 1
        counts[(j, c)] = counts.get((j, c), 0) + 1
    return sorted(vc for vc, k in counts.items() if k >= threshold)


@dataclass(frozen=True)
class ColorSupport:
    """A color id together with the set of endpoints of its edges."""

    color: int
    vertices: frozenset[int]


def _support_masks(G: ColoredCompleteGraph) -> list[int]:
    masks = [0] * G.num_colors
    for i, j in edge_pairs(G.n):
        masks[G.color(i, j)] |= (1 << i) | (1 << j)
    return masks


def _mask_bits(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def color_supports(G: ColoredCompleteGraph) -> list[ColorSupport]:
    """Endpoint set of every color, in color-id order."""
    return [
        ColorSupport(c, frozenset(_mask_bits(m)))
        for c, m in enumerate(_support_masks(G))
    ]


@dataclass(frozen=True)
class PopularHit:
    """b colors of multiplicity >= 2^j whose supports share >= a vertices."""

    colors: tuple[int, ...]
    vertices: frozenset[int]


def popular_intersection_search(
    G: ColoredCompleteGraph,
    j: int,
    p: DetectorParams,
    tuple_budget: int | None = 1_000_000,
) -> PopularHit | None:
    """Search b-tuples of colors appearing >= 2^j times for a common
    support of size >= a.

    Tuples are scanned in lexicographic color order and the first hit is
    returned, so the result is the least one.  Supports are bitsets and
    each partial intersection exits early once its size drops below a.
    Raises BudgetExceededError when the number of b-tuples exceeds
    tuple_budget (pass None to scan regardless).
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    threshold = 1 << j
    hist = color_histogram(G)
    popular = sorted(c for c, mult in hist.items() if mult >= threshold)
    a, b = p.a, p.b
    if len(popular) < b:
        return None
    n_tuples = comb(len(popular), b)
    if tuple_budget is not None and n_tuples > tuple_budget:
        raise BudgetExceededError(
            f"{n_tuples} b-tuples exceed the budget of {tuple_budget}"
        )
    masks = _support_masks(G)
    for combo in combinations(popular, b):
        inter = masks[combo[0]]
        for c in combo[1:]:
            inter &= masks[c]
            if inter.bit_count() < a:
                break
        else:
            if inter.bit_count() >= a:
                return PopularHit(combo, frozenset(_mask_bits(inter)))
    return None


@dataclass(frozen=True)
class SetSystem:
    """Subsets of a universe {0..n-1} with an intersection arity d."""

    n: int
    sets: tuple[frozenset[int], ...]
    d: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("universe must be nonempty")
        if self.d < 2:
            raise ValueError("intersection arity d must be at least 2")
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        for idx, s in enumerate(sets):
            if not s:
                raise ValueError(f"set {idx} is empty")
            if min(s) < 0 or max(s) >= self.n:
                raise ValueError(f"set {idx} leaves the universe [0, {self.n})")

    @property
    def min_size(self) -> int:
        return min(len(s) for s in self.sets)


def lemma_hypothesis_holds(inst: SetSystem) -> bool:
    """Exact check of k >= 2d n^d / m^d with m the minimum subset size."""
    m = inst.min_size
    return len(inst.sets) * m**inst.d >= 2 * inst.d * inst.n**inst.d


def counting_lemma_find(inst: SetSystem) -> tuple[tuple[int, ...], int] | None:
    """Least d-tuple of set indices intersecting in >= m^d/(2 n^(d-1))
    elements, or None.

    Whenever the hypothesis k >= 2d n^d/m^d holds, a qualifying tuple
    exists, so None is only possible below the hypothesis.  Indices are
    0-based positions into inst.sets.  The prefix scan prunes exactly:
    an intersection can only shrink, so a prefix below the threshold is
    skipped without losing any qualifying completion.
    """
    d, n = inst.d, inst.n
    k = len(inst.sets)
    if k < d:
        return None
    m = inst.min_size
    rhs = m**d
    factor = 2 * n ** (d - 1)

    masks = []
    for s in inst.sets:
        acc = 0
        for x in s:
            acc |= 1 << x
        masks.append(acc)

    def rec(start: int, chosen: tuple[int, ...], inter: int):
        if len(chosen) == d:
            return chosen, inter.bit_count()
        for idx in range(start, k - (d - len(chosen)) + 1):
            grown = inter & masks[idx] if chosen else masks[idx]
            if factor * grown.bit_count() >= rhs:
                hit = rec(idx + 1, chosen + (idx,), grown)
                if hit is not None:
                    return hit
        return None

    return rec(0, (), 0)
