"""Exact minimum-color search for (k, ell) local properties on K_n.

feasible() runs a depth-first search assigning colors edge by edge in
vertex-at-a-time order ((0,1), (0,2), (1,2), (0,3), ...), so every
k-subset inside the already-colored prefix completes as early as
possible.  Color symmetry is broken by first-use ordering: a branch may
open color id max_used+1 but nothing beyond it.  After each assignment,
every k-subset whose state just changed is checked with the admissible
bound distinct_so_far + unassigned_edges >= ell; at the subset's last
edge the bound is its exact color count, so the pruned search is
verdict-identical to an unpruned scan.

min_colors() walks c upward from the multiplicity lower bound, when one
applies (if C(k,2)-ell+1 <= floor(k/2)-1, every color is capped at
C(k,2)-ell+1 repeats, so at least ceil(C(n,2)/cap) colors are needed),
and from 1 otherwise.  Because colors branch in ascending order, the
first coloring found at the optimal level is the lexicographically
least one in assignment order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .coloring import ColoredCompleteGraph, LocalSpec, edge_count, edge_index

__all__ = ["SolveBudget", "FeasibleOutcome", "SolveResult", "feasible", "min_colors"]


@dataclass(frozen=True)
class SolveBudget:
    """node_limit caps DFS assignments per feasibility level; time_limit_s
    caps the whole solve (wall clock, so time-limited runs are not
    byte-reproducible; node-limited ones are)."""

    node_limit: int | None = None
    time_limit_s: float | None = None

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be positive")
        if self.time_limit_s is not None and self.time_limit_s <= 0:
            raise ValueError("time_limit_s must be positive")


@dataclass(frozen=True)
class FeasibleOutcome:
    status: str  # "yes" | "no" | "exhausted"
    certificate: ColoredCompleteGraph | None
    nodes: int


@dataclass(frozen=True)
class SolveResult:
    """status "optimal" certifies value and value-1 both ways;
    "bound-only" holds a verified certificate at value with at least one
    smaller level unresolved; "budget-exhausted" found no coloring.
    lower_bound is always certified (search or multiplicity bound)."""

    status: str
    value: int | None
    lower_bound: int
    certificate: ColoredCompleteGraph | None
    log: tuple[tuple[int, int, str], ...]  # (colors tried, nodes, outcome)


class _OutOfBudget(Exception):
    pass


def _assignment_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _subset_checks(n: int, k: int) -> list[list[tuple[tuple[int, ...], int]]]:
    """For each assignment position, the k-subsets whose state changes.

    Assigning edge (i, j) affects subsets {j} | U with U a (k-1)-subset
    of {0..j-1} containing i: their assigned edges are everything within
    U plus (u, j) for u <= i, and #{u in U : u > i} edges are still open.
    Stored as (positions of assigned edges, open count).
    """
    order = _assignment_order(n)
    pos_of = {e: p for p, e in enumerate(order)}
    checks: list[list[tuple[tuple[int, ...], int]]] = [[] for _ in order]
    for p, (i, j) in enumerate(order):
        if j < k - 1:
            continue
        others = [u for u in range(j) if u != i]
        for rest in combinations(others, k - 2):
            u_set = sorted(rest + (i,))
            assigned = [pos_of[(a, b)] for a, b in combinations(u_set, 2)]
            assigned += [pos_of[(u, j)] for u in u_set if u <= i]
            open_edges = sum(1 for u in u_set if u > i)
            checks[p].append((tuple(assigned), open_edges))
    return checks


def feasible(
    n: int,
    spec: LocalSpec,
    c: int,
    budget: SolveBudget | None = None,
    deadline: float | None = None,
) -> FeasibleOutcome:
    """Is there a coloring of K_n with at most c colors satisfying spec?

    Returns the lexicographically least satisfying assignment (in
    assignment order) as a certificate, re-encoded in the row-major
    edge index.
    """
    if spec.k > n:
        raise ValueError(f"k={spec.k} exceeds n={n}: infeasible query")
    if c < 1:
        raise ValueError("c must be positive")
    if c < spec.ell:
        # some k-subset exists (k <= n) and sees at most c < ell colors
        return FeasibleOutcome("no", None, 0)
    order = _assignment_order(n)
    checks = _subset_checks(n, spec.k)
    ell = spec.ell
    m = len(order)
    cols = [-1] * m
    node_limit = budget.node_limit if budget else None
    nodes = 0

    def dfs(pos: int, max_used: int) -> bool:
        nonlocal nodes
        if pos == m:
            return True
        top = min(max_used + 1, c - 1)
        my_checks = checks[pos]
        for col in range(top + 1):
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise _OutOfBudget
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                raise _OutOfBudget
            cols[pos] = col
            ok = True
            for positions, open_edges in my_checks:
                distinct = len({cols[q] for q in positions})
                if distinct + open_edges < ell:
                    ok = False
                    break
            if ok and dfs(pos + 1, max(max_used, col)):
                return True
        cols[pos] = -1
        return False

    try:
        found = dfs(0, -1)
    except _OutOfBudget:
        return FeasibleOutcome("exhausted", None, nodes)
    if not found:
        return FeasibleOutcome("no", None, nodes)
    row_major = [0] * m
    for p, (i, j) in enumerate(order):
        row_major[edge_index(n, i, j)] = cols[p]
    return FeasibleOutcome("yes", ColoredCompleteGraph(n, tuple(row_major)), nodes)


def _start_level(n: int, spec: LocalSpec) -> int:
    """Multiplicity lower bound on the color count, when one applies.

    If C(k,2)-ell+1 <= floor(k/2)-1, then a color repeated more than
    C(k,2)-ell+1 times yields a k-subset below ell colors (any such
    repeats fit inside k vertices), so ceil(C(n,2)/cap) colors are
    needed; otherwise start at 1.
    """
    cap = comb(spec.k, 2) - spec.ell + 1
    if cap <= spec.k // 2 - 1:
        return -(-edge_count(n) // cap)
    return 1


def min_colors(n: int, spec: LocalSpec, budget: SolveBudget | None = None) -> SolveResult:
    """Least number of colors in a coloring of K_n satisfying spec.

    Walks c upward from the multiplicity bound; each infeasible level
    extends the certified lower bound.  A level that exhausts its node
    budget is recorded as unknown and skipped, which can only weaken the
    result from "optimal" to "bound-only".
    """
    if spec.k > n:
        raise ValueError(f"k={spec.k} exceeds n={n}: infeasible query")
    deadline = None
    if budget and budget.time_limit_s is not None:
        deadline = time.monotonic() + budget.time_limit_s
    start = _start_level(n, spec)
    log: list[tuple[int, int, str]] = []
    lower = start
    contiguous = True  # every level in [start, c) certified infeasible
    for c in range(start, edge_count(n) + 1):
        out = feasible(n, spec, c, budget, deadline)
        log.append((c, out.nodes, out.status))
        if out.status == "yes":
            status = "optimal" if contiguous else "bound-only"
            return SolveResult(status, c, lower, out.certificate, tuple(log))
        if out.status == "no":
            if contiguous:
                lower = c + 1
        else:
            contiguous = False
        if deadline is not None and time.monotonic() > deadline:
            break
    return SolveResult("budget-exhausted", None, lower, None, tuple(log))
