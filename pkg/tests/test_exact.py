import random

import pytest

from treealpha import (
    CapExceededError,
    alpha_exact,
    alpha_of_subset,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    omega_exact,
    ramsey_binding_bound,
)

from .conftest import alpha_by_enumeration, all_labeled_graphs, random_graph


def test_alpha_examples():
    assert alpha_exact(cycle_graph(5)) == 2
    assert alpha_exact(complete_bipartite(3, 3)) == 3
    assert alpha_exact(build_graph(7, [])) == 7


def test_omega_examples():
    assert omega_exact(complete_graph(4)) == 4
    assert omega_exact(cycle_graph(5)) == 2
    assert omega_exact(build_graph(0, [])) == 0


def test_alpha_exhaustive_small():
    for n in range(5):
        for g in all_labeled_graphs(n):
            assert alpha_exact(g) == alpha_by_enumeration(g)


def test_alpha_random_mid_size():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(8, rng.choice([0.2, 0.5, 0.8]), rng)
        assert alpha_exact(g) == alpha_by_enumeration(g)


def test_alpha_omega_complement_duality():
    rng = random.Random(4)
    for _ in range(25):
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        comp_edges = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        comp = build_graph(g.n, comp_edges)
        assert alpha_exact(g) == omega_exact(comp)


def test_cap_is_enforced():
    g = build_graph(65, [])
    with pytest.raises(CapExceededError):
        alpha_exact(g)
    assert alpha_exact(g, cap=65) == 65


def test_alpha_of_subset():
    g = cycle_graph(6)
    assert alpha_of_subset(g, {0, 1, 2, 3}) == 2  # induced P_4
    assert alpha_of_subset(g, set()) == 0
    assert alpha_of_subset(g, range(6)) == 3


def test_ramsey_binding_bound_values():
    assert ramsey_binding_bound(2, 1) == 1
    assert ramsey_binding_bound(1, 1) == 0
    assert ramsey_binding_bound(2, 2, 3) == 7


def test_ramsey_binding_bound_rejects_bad_args():
    with pytest.raises(ValueError):
        ramsey_binding_bound(-1, 1)
    with pytest.raises(ValueError):
        ramsey_binding_bound(2, 0)
