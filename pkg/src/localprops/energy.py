"""Dyadic multiplicity profiles and per-bin energy bookkeeping.

Color multiplicities are split into dyadic bins [2^j, 2^(j+1)); the
cumulative count k_j tallies colors of multiplicity at least 2^j.  Two
bounds are tracked per j, both as exact rationals:

  poor bound:  k_j < n^2 / 2^j          (unconditional: k_j 2^j <= C(n,2))
  rich bound:  k_j < 2 n^b b^(b+1) a^b / 2^(jb)

The rich bound only has to hold for j above the crossover index t =
floor(log2(b (2 a^(b+1) n^(b-1))^(1/b))) and only for colorings that
satisfy the induced local property; a violation there implies one of
the forbidden configurations, which the report can locate on request.
The per-bin energy estimate: each bin contributes less than
bin_count[j] * 2^(2j+2) to sum(m_c^2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ColoredCompleteGraph, color_histogram
from .forbidden import (
    BudgetExceededError,
    DetectorParams,
    color_supports,
    mono_degree_violations,
    popular_intersection_search,
)

__all__ = [
    "DyadicProfile",
    "BoundRow",
    "dyadic_profile",
    "crossover_index",
    "bound_report",
    "energy_decomposition",
]


def _bin_counts(G: ColoredCompleteGraph) -> list[int]:
    hist = color_histogram(G)
    if not hist:
        return []
    bins = [0] * max(m.bit_length() for m in hist.values())
    for m in hist.values():
        bins[m.bit_length() - 1] += 1
    return bins


def crossover_index(n: int, p: DetectorParams) -> int:
    """Largest t with 2^(tb) <= 2 b^b a^(b+1) n^(b-1), computed exactly."""
    a, b = p.a, p.b
    rhs = 2 * b**b * a ** (b + 1) * n ** (b - 1)
    t = 0
    while 1 << ((t + 1) * b) <= rhs:
        t += 1
    return t


@dataclass(frozen=True)
class DyadicProfile:
    """Per-exponent color counts: bin_count[j] colors with multiplicity in
    [2^j, 2^(j+1)), cum_count[j] colors with multiplicity >= 2^j, and the
    crossover index separating the poor- and rich-bound regimes."""

    bin_count: tuple[int, ...]
    cum_count: tuple[int, ...]
    crossover: int


def dyadic_profile(G: ColoredCompleteGraph, p: DetectorParams) -> DyadicProfile:
    bins = _bin_counts(G)
    cums = list(bins)
    for j in range(len(cums) - 2, -1, -1):
        cums[j] += cums[j + 1]
    return DyadicProfile(tuple(bins), tuple(cums), crossover_index(G.n, p))


@dataclass(frozen=True)
class BoundRow:
    """One dyadic exponent's counts, bounds (exact rationals as numerator/
    denominator pairs), flags, and optionally located configurations."""

    j: int
    bin_count: int
    cum_count: int
    poor_bound: tuple[int, int]  # n^2 / 2^j
    rich_bound: tuple[int, int]  # 2 n^b b^(b+1) a^b / 2^(jb)
    poor_ok: bool
    rich_regime: bool  # j > crossover
    rich_ok: bool
    remark_zone: bool  # 2^j within one dyadic step of n^((b-1)/b)
    min_support: int | None  # smallest |V_c| among colors with m_c >= 2^j
    support_bound: tuple[int, int]  # 2^(j+1) / (ba - b)
    located: tuple | None = None


def bound_report(
    G: ColoredCompleteGraph,
    p: DetectorParams,
    locate: bool = False,
    tuple_budget: int | None = 1_000_000,
) -> list[BoundRow]:
    """Per-j table comparing k_j against the poor and rich bounds.

    Diagnostic, not a verdict: the poor bound holds for every coloring,
    while a rich-bound violation above the crossover only means the
    induced local property cannot hold.  With locate=True such rows get
    the mono-degree violations and (within the tuple budget, for
    2^j >= a) the least popular-color intersection attached.
    """
    profile = dyadic_profile(G, p)
    a, b = p.a, p.b
    n = G.n
    hist = color_histogram(G)
    supports = {s.color: len(s.vertices) for s in color_supports(G)}
    rich_num = 2 * n**b * b ** (b + 1) * a**b
    rows = []
    for j, (bc, kj) in enumerate(zip(profile.bin_count, profile.cum_count)):
        pow_j = 1 << j
        pow_jb = 1 << (j * b)
        poor_ok = kj * pow_j < n * n
        rich_ok = kj * pow_jb < rich_num
        remark = (1 << ((j - 1) * b) if j >= 1 else 0) < n ** (b - 1) < (1 << ((j + 1) * b))
        popular = [c for c, m in hist.items() if m >= pow_j]
        min_support = min((supports[c] for c in popular), default=None)
        located = None
        if locate and j > profile.crossover and not rich_ok:
            mono = tuple(mono_degree_violations(G, p))
            hit = None
            if pow_j >= a:
                try:
                    hit = popular_intersection_search(G, j, p, tuple_budget)
                except BudgetExceededError:
                    hit = "budget-exceeded"
            located = (mono, hit)
        rows.append(
            BoundRow(
                j=j,
                bin_count=bc,
                cum_count=kj,
                poor_bound=(n * n, pow_j),
                rich_bound=(rich_num, pow_jb),
                poor_ok=poor_ok,
                rich_regime=j > profile.crossover,
                rich_ok=rich_ok,
                remark_zone=remark,
                min_support=min_support,
                support_bound=(2 * pow_j, b * a - b),
                located=located,
            )
        )
    return rows


def energy_decomposition(G: ColoredCompleteGraph) -> tuple[tuple[int, ...], int]:
    """Per-bin contributions to sum(m_c^2) and the exact total.

    contributions[j] sums m_c^2 over colors with multiplicity in
    [2^j, 2^(j+1)); every nonempty bin stays strictly below
    bin_count[j] * 2^(2j+2), and the total equals color_energy(G).
    """
    hist = color_histogram(G)
    if not hist:
        return (), 0
    contrib = [0] * max(m.bit_length() for m in hist.values())
    for m in hist.values():
        contrib[m.bit_length() - 1] += m * m
    return tuple(contrib), sum(contrib)
