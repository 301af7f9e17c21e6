"""Generators for the standard constructions: random colorings, digit-sphere
progression-free integer sets, and isosceles-free collinear point sets.

The random coloring assigns each edge an independent uniform color; the
color budget ceil(n^((k-2)/(C(k,2)-ell+1))) is the color count at which
such a coloring starts satisfying a (k, ell) local property with decent
probability.  The progression-free sets are the classical digit-sphere
(Behrend) construction: integers whose base-(2d-1) digits in {0..d-1}
form a vector on a fixed Euclidean sphere.  Digit addition then has no
carries, so a 3-term arithmetic progression would force a sphere to
contain a midpoint, which strict convexity forbids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import count

from .coloring import ColoredCompleteGraph, LocalSpec, edge_count, verify_local_property

__all__ = [
    "RandomColoringConfig",
    "random_coloring",
    "color_budget",
    "estimate_property_probability",
    "behrend_set",
    "verify_no_3ap",
    "collinear_point_set",
    "verify_isosceles_free",
]

_MASK64 = (1 << 64) - 1


def _mix_seed(seed: int, index: int) -> int:
    """splitmix64-style per-trial seed; stable across platforms and runs."""
    x = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


@dataclass(frozen=True)
class RandomColoringConfig:
    """Parameters for an iid-uniform edge coloring of K_n."""

    n: int
    colors: int
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.colors < 1:
            raise ValueError("need at least one color")


def random_coloring(cfg: RandomColoringConfig) -> ColoredCompleteGraph:
    """Color every edge independently and uniformly from {0..colors-1}.

    The same seed reproduces the same coloring bit for bit.  Unused ids
    are densified away, which never changes any statistic or verdict.
    """
    rng = random.Random(cfg.seed)
    raw = [rng.randrange(cfg.colors) for _ in range(edge_count(cfg.n))]
    return ColoredCompleteGraph.from_sparse(cfg.n, raw)


def color_budget(n: int, spec: LocalSpec) -> int:
    """ceil(n^((k-2)/(C(k,2)-ell+1))), the random construction's color count."""
    if n < 1:
        raise ValueError("n must be positive")
    p = spec.k - 2
    q = spec.k * (spec.k - 1) // 2 - spec.ell + 1
    if q <= 0:
        raise ValueError("exponent denominator C(k,2) - ell + 1 must be positive")
    target = n**p
    # smallest x with x^q >= n^p, found exactly from a float seed
    x = max(1, int(round(target ** (1.0 / q))) - 2)
    while x**q < target:
        x += 1
    return x


def estimate_property_probability(
    n: int, colors: int, spec: LocalSpec, trials: int, seed: int
) -> float:
    """Fraction of random colorings of K_n satisfying the local property.

    Trial t uses the derived seed mix(seed, t), so the estimate is
    reproducible and independent of any execution order.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if spec.k > n:
        raise ValueError(f"k={spec.k} exceeds n={n}")
    hits = 0
    for t in range(trials):
        g = random_coloring(RandomColoringConfig(n, colors, _mix_seed(seed, t)))
        if verify_local_property(g, spec).holds:
            hits += 1
    return hits / trials


def _sphere_counts(dim: int) -> list[int]:
    """counts[r] = number of vectors in {0..dim-1}^dim with squared norm r."""
    counts = [1]
    squares = [x * x for x in range(dim)]
    for _ in range(dim):
        grown = [0] * (len(counts) + squares[-1])
        for r, c in enumerate(counts):
            if c:
                for s in squares:
                    grown[r + s] += c
        counts = grown
    return counts


def _sphere_elements(dim: int, base: int, radius: int) -> list[int]:
    """All integers whose digit vector lies on the given squared-norm sphere."""
    powers = [base**t for t in range(dim)]
    max_sq = (dim - 1) * (dim - 1)
    out: list[int] = []

    def rec(pos: int, rem: int, val: int) -> None:
        if rem < 0 or rem > (dim - pos) * max_sq:
            return
        if pos == dim:
            if rem == 0:
                out.append(val)
            return
        for x in range(dim):
            rec(pos + 1, rem - x * x, val + x * powers[pos])

    rec(0, radius, 0)
    return out


def behrend_set(size_target: int) -> tuple[int, ...]:
    """A set of >= size_target positive integers with no 3-term AP.

    Uses the smallest digit count d whose densest sphere (by direct
    count over all d^d digit vectors, base 2d-1) reaches the target;
    ties between radii go to the smallest radius.  The whole sphere is
    returned, shifted by +1 to keep every element positive.
    """
    if size_target < 1:
        raise ValueError("size_target must be positive")
    for dim in count(1):
        counts = _sphere_counts(dim)
        best = max(counts)
        if best >= size_target:
            radius = counts.index(best)
            elems = _sphere_elements(dim, 2 * dim - 1, radius)
            return tuple(sorted(v + 1 for v in elems))
    raise AssertionError("unreachable")


def verify_no_3ap(values) -> tuple[int, int, int] | None:
    """Least triple x < y < z with x + z = 2y, or None if progression-free."""
    elems = sorted(set(values))
    present = set(elems)
    for i, x in enumerate(elems):
        for y in elems[i + 1 :]:
            if 2 * y - x in present:
                return x, y, 2 * y - x
    return None


def collinear_point_set(values) -> tuple[tuple[int, int], ...]:
    """Place each integer a on the x-axis as (a, 0), in ascending order."""
    elems = sorted(set(values))
    if not elems:
        raise ValueError("need a nonempty integer set")
    return tuple((a, 0) for a in elems)


def verify_isosceles_free(points) -> tuple | None:
    """A triple with two equal pairwise squared distances, or None.

    Degenerate (collinear) triples count.  Any such triple has an apex
    vertex carrying both equal sides, so it suffices to scan, for every
    point, the squared distances to all others for a duplicate.  The
    returned witness is the least triple over first-duplicate hits, in
    sorted point order; the scan is deterministic.
    """
    pts = [tuple(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    pts.sort()
    best = None
    for qi, q in enumerate(pts):
        first_at: dict[int, int] = {}
        for ri, r in enumerate(pts):
            if ri == qi:
                continue
            d2 = (q[0] - r[0]) ** 2 + (q[1] - r[1]) ** 2
            if d2 in first_at:
                tri = tuple(sorted((q, pts[first_at[d2]], r)))
                if best is None or tri < best:
                    best = tri
            else:
                first_at[d2] = ri
    return best
