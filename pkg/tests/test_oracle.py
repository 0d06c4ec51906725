import random
from fractions import Fraction

import pytest

from treealpha import (
    CapExceededError,
    GraphError,
    WeightMap,
    alpha_exact,
    build_graph,
    complete_bipartite,
    complete_graph,
    contract_edge,
    cycle_graph,
    double_join,
    elimination_bag,
    independence_number,
    induced_subgraph,
    is_chordal,
    path_graph,
    sharpness_gadget,
    tin_exact,
    treewidth_exact,
    validate,
)
from treealpha.oracle import brute_force_mwis

from .conftest import (
    all_labeled_graphs,
    mwis_by_enumeration,
    random_graph,
    random_weights,
)


def test_elimination_bag_examples():
    p3 = path_graph(3)
    assert elimination_bag(p3, 0, set()) == frozenset({0, 1})
    assert elimination_bag(p3, 0, {1}) == frozenset({0, 2})
    assert elimination_bag(cycle_graph(4), 0, set()) == frozenset({0, 1, 3})


def test_elimination_bag_rejects_eliminated_vertex():
    with pytest.raises(GraphError):
        elimination_bag(path_graph(3), 1, {1})


def test_tin_examples():
    assert tin_exact(complete_bipartite(3, 3))[0] == 3
    assert tin_exact(cycle_graph(4))[0] == 2
    for g in (path_graph(6), complete_graph(5), build_graph(4, [(0, 1), (0, 2), (0, 3)])):
        assert tin_exact(g)[0] == 1
    assert tin_exact(sharpness_gadget(3))[0] == 3


def test_treewidth_examples():
    assert treewidth_exact(path_graph(5)) == 1
    assert treewidth_exact(build_graph(4, [(0, 1), (0, 2), (0, 3)])) == 1
    assert treewidth_exact(complete_graph(5)) == 4
    assert treewidth_exact(sharpness_gadget(3)) == 2
    assert treewidth_exact(build_graph(0, [])) == -1
    assert treewidth_exact(build_graph(3, [])) == 0


def test_null_graph_conventions():
    null = build_graph(0, [])
    value, witness = tin_exact(null)
    assert value == 0
    assert witness.bags == (frozenset(),)


def test_witness_soundness():
    rng = random.Random(24)
    for _ in range(40):
        g = random_graph(rng.randint(1, 9), rng.choice([0.3, 0.5, 0.7]), rng)
        value, witness = tin_exact(g)
        assert validate(g, witness).ok
        assert independence_number(g, witness) == value


def test_tin_lower_bounds_every_other_decomposition():
    # Completeness on the small corpus: nothing beats the DP value.
    from treealpha import clique_tree, trivial_decomposition

    rng = random.Random(25)
    for _ in range(20):
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        value = tin_exact(g)[0]
        assert value <= independence_number(g, trivial_decomposition(g))
        if is_chordal(g)[0]:
            assert value <= independence_number(g, clique_tree(g))


def test_chordal_characterization_small():
    for g in all_labeled_graphs(4):
        assert (tin_exact(g)[0] == 1) == is_chordal(g)[0]


def test_monotonicity_under_deletion_and_contraction():
    rng = random.Random(26)
    for _ in range(25):
        g = random_graph(rng.randint(2, 6), 0.5, rng)
        t = tin_exact(g)[0]
        for v in range(g.n):
            sub, _ = induced_subgraph(g, set(range(g.n)) - {v})
            assert tin_exact(sub)[0] <= t
        for e in g.edges():
            assert tin_exact(contract_edge(g, e))[0] <= t


def test_clique_number_lower_bounds_treewidth():
    from treealpha import omega_exact

    rng = random.Random(41)
    for g in all_labeled_graphs(4):
        assert omega_exact(g) - 1 <= treewidth_exact(g)
    for _ in range(25):
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        assert omega_exact(g) - 1 <= treewidth_exact(g)


def test_double_join_identity_small():
    rng = random.Random(27)
    for _ in range(10):
        h = random_graph(rng.randint(1, 5), 0.5, rng)
        assert tin_exact(double_join(h))[0] == alpha_exact(h)


def test_caps():
    g = build_graph(21, [])
    with pytest.raises(CapExceededError):
        tin_exact(g)
    with pytest.raises(CapExceededError):
        treewidth_exact(g)
    big = build_graph(23, [])
    with pytest.raises(CapExceededError):
        brute_force_mwis(big, WeightMap(23))


def test_brute_force_examples():
    c5 = cycle_graph(5)
    assert brute_force_mwis(c5, WeightMap(5))[0] == 2
    p3 = path_graph(3)
    assert brute_force_mwis(p3, WeightMap(3, {0: 3, 1: 1, 2: 3})) == (
        Fraction(6),
        frozenset({0, 2}),
    )
    assert brute_force_mwis(build_graph(0, []), WeightMap(0)) == (
        Fraction(0),
        frozenset(),
    )


def test_brute_force_matches_plain_enumeration():
    rng = random.Random(28)
    for _ in range(30):
        n = rng.randint(0, 8)
        g = random_graph(n, 0.5, rng)
        w = WeightMap(n, random_weights(n, rng))
        value, chosen = brute_force_mwis(g, w)
        assert value == mwis_by_enumeration(g, w)
        assert w.total(chosen) == value


def test_deterministic_outputs():
    g = random_graph(8, 0.4, random.Random(29))
    assert tin_exact(g) == tin_exact(g)
    w = WeightMap(8, random_weights(8, random.Random(30)))
    assert brute_force_mwis(g, w) == brute_force_mwis(g, w)
