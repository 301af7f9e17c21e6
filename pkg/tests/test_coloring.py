import random
from itertools import combinations, permutations
from math import comb

import pytest

from localprops import (
    ColoredCompleteGraph,
    LocalSpec,
    RandomColoringConfig,
    cauchy_schwarz_floor,
    color_energy,
    color_histogram,
    edge_count,
    edge_index,
    edge_pairs,
    monochromatic,
    permute_vertices,
    rainbow,
    random_coloring,
    relabel_colors,
    subset_color_count,
    verify_local_property,
)
from oracles import (
    brute_energy_quadruples,
    brute_verdict,
    random_graph_corpus,
    round_robin_proper_coloring,
)


def test_edge_index_matches_enumeration_order():
    for n in range(2, 9):
        for pos, (i, j) in enumerate(edge_pairs(n)):
            assert edge_index(n, i, j) == pos
    with pytest.raises(ValueError):
        edge_index(4, 2, 2)
    with pytest.raises(ValueError):
        edge_index(4, 1, 4)


def test_graph_validation():
    with pytest.raises(ValueError):
        ColoredCompleteGraph(3, (0, 0))  # wrong length
    with pytest.raises(ValueError):
        ColoredCompleteGraph(3, (0, 0, 2))  # sparse ids
    g = ColoredCompleteGraph.from_sparse(3, (5, 5, 9))
    assert g.edge_colors == (0, 0, 1)
    assert g.num_colors == 2
    assert ColoredCompleteGraph(1, ()).num_colors == 0


def test_subset_color_count_examples():
    g = ColoredCompleteGraph(4, (0, 0, 1, 1, 2, 2))  # edges 01,02,03,12,13,23
    assert subset_color_count(g, {0, 1, 2}) == 2
    r5 = rainbow(5)
    for s in combinations(range(5), 3):
        assert subset_color_count(r5, s) == 3
    assert subset_color_count(monochromatic(6), range(6)) == 1


def test_subset_color_count_errors():
    g = rainbow(4)
    with pytest.raises(ValueError):
        subset_color_count(g, {0})
    with pytest.raises(ValueError):
        subset_color_count(g, {0, 4})
    with pytest.raises(ValueError):
        subset_color_count(g, {-1, 2})


def test_verify_local_property_examples():
    assert verify_local_property(rainbow(6), LocalSpec(4, 6)).holds
    v = verify_local_property(monochromatic(5), LocalSpec(3, 2))
    assert not v.holds and v.witness == (0, 1, 2) and v.witness_colors == 1
    # proper 5-edge-coloring of K_5 satisfies the triangle property
    cert = round_robin_proper_coloring(5)
    assert verify_local_property(cert, LocalSpec(3, 3)).holds
    assert brute_verdict(cert, 3, 3)[0]


def test_verify_local_property_infeasible_query():
    with pytest.raises(ValueError):
        verify_local_property(rainbow(3), LocalSpec(4, 2))


def test_pruned_scan_matches_unpruned_oracle():
    rng = random.Random(20260810)
    for _ in range(160):
        n = rng.randint(2, 10)
        c = rng.randint(1, edge_count(n) if n > 1 else 1)
        g = random_coloring(RandomColoringConfig(n, c, rng.getrandbits(40)))
        k = rng.randint(2, n)
        ell = rng.randint(1, comb(k, 2))
        verdict = verify_local_property(g, LocalSpec(k, ell))
        holds, witness, count = brute_verdict(g, k, ell)
        assert verdict.holds == holds
        assert verdict.witness == witness
        assert verdict.witness_colors == count


def test_pruned_scan_exhaustive_on_k4_colorings():
    # every coloring of K_4 up to relabeling, every spec: the pruned scan
    # and the full scan agree on verdict and witness
    from oracles import restricted_growth_strings

    for labels in restricted_growth_strings(6):
        g = ColoredCompleteGraph(4, labels)
        for k in (2, 3, 4):
            for ell in range(1, comb(k, 2) + 1):
                verdict = verify_local_property(g, LocalSpec(k, ell))
                holds, witness, count = brute_verdict(g, k, ell)
                assert (verdict.holds, verdict.witness, verdict.witness_colors) == (
                    holds,
                    witness,
                    count,
                )


def test_histogram_examples():
    assert color_histogram(monochromatic(4)) == {0: 6}
    assert color_histogram(rainbow(4)) == {c: 1 for c in range(6)}
    assert color_histogram(ColoredCompleteGraph(3, (0, 0, 1))) == {0: 2, 1: 1}


def test_histogram_sums_to_edge_count():
    for g in random_graph_corpus(7, 40):
        assert sum(color_histogram(g).values()) == edge_count(g.n)


def test_color_energy_examples():
    assert color_energy(monochromatic(4)) == 36
    for n in range(2, 8):
        assert color_energy(rainbow(n)) == edge_count(n)
    assert color_energy(ColoredCompleteGraph(3, (0, 0, 1))) == 5


def test_color_energy_matches_quadruple_oracle():
    for g in random_graph_corpus(11, 60, n_hi=8):
        assert color_energy(g) == brute_energy_quadruples(g)


def test_cauchy_schwarz_floor_examples():
    r4 = rainbow(4)
    assert cauchy_schwarz_floor(r4) == 6 == color_energy(r4)
    m4 = monochromatic(4)
    assert cauchy_schwarz_floor(m4) == 36 == color_energy(m4)
    g = ColoredCompleteGraph(3, (0, 0, 1))
    assert cauchy_schwarz_floor(g) == 5 == color_energy(g)
    with pytest.raises(ValueError):
        cauchy_schwarz_floor(ColoredCompleteGraph(1, ()))


def test_cauchy_schwarz_inequality_fuzz():
    for g in random_graph_corpus(13, 150):
        e = edge_count(g.n)
        assert color_energy(g) * g.num_colors >= e * e
        assert color_energy(g) >= cauchy_schwarz_floor(g)


def test_relabel_colors():
    g = ColoredCompleteGraph(3, (0, 0, 1))
    assert relabel_colors(g, [0, 1]) == g
    swapped = relabel_colors(g, [1, 0])
    assert sorted(color_histogram(swapped).values()) == [1, 2]
    r4 = rainbow(4)
    assert relabel_colors(r4, [3, 2, 5, 0, 1, 4]).num_colors == 6
    with pytest.raises(ValueError):
        relabel_colors(g, [0, 0])
    with pytest.raises(ValueError):
        relabel_colors(g, [0, 2])


def test_statistics_invariant_under_relabeling():
    rng = random.Random(99)
    for g in random_graph_corpus(17, 30, n_hi=8):
        perm = list(range(g.num_colors))
        rng.shuffle(perm)
        h = relabel_colors(g, perm)
        assert h.num_colors == g.num_colors
        assert sorted(color_histogram(h).values()) == sorted(color_histogram(g).values())
        assert color_energy(h) == color_energy(g)
        k = rng.randint(2, g.n)
        ell = rng.randint(1, comb(k, 2))
        spec = LocalSpec(k, ell)
        assert verify_local_property(h, spec).holds == verify_local_property(g, spec).holds


def test_verdict_invariant_under_vertex_permutation():
    rng = random.Random(4242)
    for g in random_graph_corpus(19, 30, n_hi=7):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = permute_vertices(g, perm)
        k = rng.randint(2, g.n)
        ell = rng.randint(1, comb(k, 2))
        spec = LocalSpec(k, ell)
        assert verify_local_property(h, spec).holds == verify_local_property(g, spec).holds


def test_vertex_permutation_is_exhaustive_on_small_graph():
    g = ColoredCompleteGraph(4, (0, 0, 1, 1, 2, 2))
    spec = LocalSpec(3, 2)
    base = verify_local_property(g, spec).holds
    for perm in permutations(range(4)):
        assert verify_local_property(permute_vertices(g, perm), spec).holds == base


def test_high_multiplicity_color_forces_failure():
    # a color used floor(k/2) times cannot survive ell = C(k,2)-floor(k/2)+2
    rng = random.Random(31337)
    for _ in range(40):
        k = rng.randint(4, 8)
        n = rng.randint(k, 10)
        reps = k // 2
        g = random_coloring(RandomColoringConfig(n, edge_count(n), rng.getrandbits(40)))
        colors = list(g.edge_colors)
        planted = rng.sample(range(edge_count(n)), reps)
        for e in planted:
            colors[e] = colors[planted[0]]
        g = ColoredCompleteGraph.from_sparse(n, colors)
        assert max(color_histogram(g).values()) >= reps
        ell = comb(k, 2) - reps + 2
        assert not verify_local_property(g, LocalSpec(k, ell)).holds


def test_local_spec_validation():
    with pytest.raises(ValueError):
        LocalSpec(1, 1)
    with pytest.raises(ValueError):
        LocalSpec(3, 0)
    with pytest.raises(ValueError):
        LocalSpec(3, 4)
    assert LocalSpec(3, 3).ell == 3
