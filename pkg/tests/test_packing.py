import itertools
import random
from fractions import Fraction

import pytest

from treealpha import (
    CapExceededError,
    GraphError,
    WeightMap,
    alpha_exact,
    blob_family,
    brute_force_packing,
    build_graph,
    clique_tree,
    complete_graph,
    cycle_graph,
    derived_decomposition,
    derived_graph,
    dissociation_set,
    enumerate_F_subgraphs,
    independence_number,
    induced_matching,
    is_chordal,
    k_separator,
    make_family,
    make_instance,
    path_graph,
    pattern_by_name,
    solve_mwis,
    solve_packing,
    tin_exact,
    trivial_decomposition,
    validate,
)

from .conftest import random_connected_set, random_graph


def line_graph(g):
    """Vertices are g's edges in lexicographic order; adjacency = shared endpoint."""
    edges = list(g.edges())
    adj = [
        (i, j)
        for i in range(len(edges))
        for j in range(i + 1, len(edges))
        if set(edges[i]) & set(edges[j])
    ]
    return build_graph(len(edges), adj)


def graph_square(g):
    pairs = []
    for u in range(g.n):
        two_hop = set(g.adj[u])
        for w in g.adj[u]:
            two_hop.update(g.adj[w])
        for v in two_hop:
            if v > u:
                pairs.append((u, v))
    return build_graph(g.n, pairs)


def test_family_validation():
    g = path_graph(4)
    with pytest.raises(GraphError, match="empty"):
        make_family(g, [set()])
    with pytest.raises(GraphError, match="connected"):
        make_family(g, [{0, 2}])
    with pytest.raises(GraphError):
        make_family(g, [{0, 9}])


def test_derived_identity_on_singletons():
    g = cycle_graph(5)
    fam = make_family(g, [{v} for v in range(5)])
    assert derived_graph(g, fam) == g


def test_derived_p4_edges_is_triangle():
    g = path_graph(4)
    fam = make_family(g, [frozenset(e) for e in g.edges()])
    assert derived_graph(g, fam) == complete_graph(3)


def test_derived_disjoint_edges():
    g = build_graph(4, [(0, 1), (2, 3)])
    fam = make_family(g, [{0, 1}, {2, 3}])
    assert derived_graph(g, fam).m == 0


def test_derived_methods_agree():
    rng = random.Random(31)
    for _ in range(25):
        g = random_graph(rng.randint(1, 8), 0.4, rng)
        members = {random_connected_set(g, rng.randint(1, 3), rng) for _ in range(6)}
        fam = make_family(g, sorted(members, key=sorted))
        assert derived_graph(g, fam) == derived_graph(g, fam, method="naive")


def test_derived_rejects_foreign_family():
    fam = make_family(path_graph(3), [{0}])
    with pytest.raises(GraphError, match="host"):
        derived_graph(cycle_graph(4), fam)


def test_line_graph_square_identity():
    rng = random.Random(32)
    for _ in range(25):
        g = random_graph(rng.randint(2, 8), 0.45, rng)
        fam = make_family(g, [frozenset(e) for e in g.edges()])
        assert derived_graph(g, fam) == graph_square(line_graph(g))


def test_derived_decomposition_example():
    g = path_graph(3)
    fam = make_family(g, [{0, 1}, {2}])
    td2 = derived_decomposition(g, fam, trivial_decomposition(g))
    assert td2.bags == (frozenset({0, 1}),)
    assert validate(td2.graph, td2).ok
    assert td2.graph == complete_graph(2)
    assert independence_number(td2.graph, td2) == 1


def test_derived_decomposition_identity_family():
    g = cycle_graph(5)
    td = tin_exact(g)[1]
    fam = make_family(g, [{v} for v in range(5)])
    td2 = derived_decomposition(g, fam, td)
    assert td2.bags == td.bags and td2.tree_edges == td.tree_edges


def test_derived_of_chordal_clique_tree_stays_chordal():
    rng = random.Random(33)
    seen = 0
    while seen < 12:
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        if not is_chordal(g)[0]:
            continue
        seen += 1
        members = {random_connected_set(g, rng.randint(1, 3), rng) for _ in range(5)}
        fam = make_family(g, sorted(members, key=sorted))
        td2 = derived_decomposition(g, fam, clique_tree(g))
        assert validate(td2.graph, td2).ok
        assert independence_number(td2.graph, td2) <= 1
        assert is_chordal(td2.graph)[0]


def test_derived_alpha_never_grows():
    rng = random.Random(34)
    for _ in range(30):
        g = random_graph(rng.randint(1, 8), 0.4, rng)
        members = {random_connected_set(g, rng.randint(1, 3), rng) for _ in range(6)}
        fam = make_family(g, sorted(members, key=sorted))
        td = trivial_decomposition(g) if rng.random() < 0.5 else tin_exact(g)[1]
        td2 = derived_decomposition(g, fam, td)
        assert validate(td2.graph, td2).ok
        assert independence_number(td2.graph, td2) <= independence_number(g, td)


def test_tin_of_derived_never_grows_small():
    rng = random.Random(35)
    for _ in range(15):
        g = random_graph(rng.randint(1, 6), 0.5, rng)
        members = {random_connected_set(g, rng.randint(1, 3), rng) for _ in range(5)}
        fam = make_family(g, sorted(members, key=sorted))
        assert tin_exact(derived_graph(g, fam))[0] <= tin_exact(g)[0]


def test_solve_packing_examples():
    g = build_graph(4, [(0, 1), (2, 3)])
    inst = make_instance(g, [{0, 1}, {2, 3}])
    value, chosen = solve_packing(inst, trivial_decomposition(g), 2)
    assert value == 2 and chosen == frozenset({0, 1})

    p4 = path_graph(4)
    inst = make_instance(p4, [frozenset(e) for e in p4.edges()])
    value, chosen = solve_packing(inst, trivial_decomposition(p4), 2)
    assert value == 1 and len(chosen) == 1


def test_packing_matches_brute_force_random():
    rng = random.Random(36)
    for _ in range(30):
        g = random_graph(rng.randint(2, 9), 0.35, rng)
        members = [frozenset({v}) for v in range(g.n) if rng.random() < 0.6]
        members += [frozenset(e) for e in g.edges() if rng.random() < 0.6]
        members = members[:14]
        if not members:
            continue
        ws = [Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in members]
        inst = make_instance(g, members, ws)
        td = trivial_decomposition(g)
        value, _ = solve_packing(inst, td, alpha_exact(g))
        expect, _ = brute_force_packing(inst)
        assert value == expect


def test_brute_force_packing_examples():
    g = path_graph(2)
    empty = make_instance(g, [])
    assert brute_force_packing(empty) == (Fraction(0), frozenset())
    single = make_instance(g, [{0, 1}], [Fraction(7, 2)])
    assert brute_force_packing(single) == (Fraction(7, 2), frozenset({0}))
    with pytest.raises(CapExceededError):
        brute_force_packing(
            make_instance(build_graph(23, []), [{v} for v in range(23)])
        )


def test_enumerate_patterns():
    g = path_graph(4)
    singles = enumerate_F_subgraphs(g, [pattern_by_name("k1")])
    assert sorted(sorted(s) for s in singles.members) == [[0], [1], [2], [3]]
    edges = enumerate_F_subgraphs(g, [pattern_by_name("k2")])
    assert sorted(sorted(s) for s in edges.members) == [[0, 1], [1, 2], [2, 3]]
    k3 = complete_graph(3)
    paths = enumerate_F_subgraphs(k3, [pattern_by_name("p3")])
    assert [sorted(s) for s in paths.members] == [[0, 1, 2]]


def test_enumerate_rejects_bad_patterns():
    with pytest.raises(GraphError):
        enumerate_F_subgraphs(path_graph(3), [build_graph(3, [(0, 1)])])
    with pytest.raises(GraphError):
        enumerate_F_subgraphs(path_graph(3), [build_graph(0, [])])
    with pytest.raises(CapExceededError):
        enumerate_F_subgraphs(path_graph(3), [path_graph(6)])


def test_spanning_vs_induced_containment():
    # C_4 contains a spanning P_4 but no induced one; the family keys on
    # spanning subgraphs, so the whole cycle counts as a path member.
    c4 = cycle_graph(4)
    fam = enumerate_F_subgraphs(c4, [pattern_by_name("p4")])
    assert [sorted(s) for s in fam.members] == [[0, 1, 2, 3]]


def test_k1_packing_equals_mwis():
    rng = random.Random(37)
    for _ in range(15):
        g = random_graph(rng.randint(1, 8), 0.4, rng)
        fam = enumerate_F_subgraphs(g, [pattern_by_name("k1")])
        w = WeightMap(g.n, {v: Fraction(rng.randint(0, 8)) for v in range(g.n)})
        inst = make_instance(
            g, fam.members, [w[min(s)] for s in fam.members]
        )
        td = trivial_decomposition(g)
        k = alpha_exact(g)
        got, _ = solve_packing(inst, td, k)
        expect, _ = solve_mwis(g, w, td, k)
        assert got == expect


def dissociation_by_enumeration(g):
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(range(g.n), size):
            s = set(combo)
            if all(sum(1 for u in g.adj[v] if u in s) <= 1 for v in s):
                best = size
                break
    return best


def test_induced_matching_examples():
    g = build_graph(4, [(0, 1), (2, 3)])
    value, edges = induced_matching(g, None, trivial_decomposition(g), 2)
    assert value == 2 and edges == ((0, 1), (2, 3))
    p4 = path_graph(4)
    value, edges = induced_matching(p4, None, trivial_decomposition(p4), 2)
    assert value == 1
    value, edges = induced_matching(
        p4, {(0, 1): Fraction(5), (2, 3): "1/2"}, trivial_decomposition(p4), 2
    )
    assert value == Fraction(5) and edges == ((0, 1),)


def test_dissociation_examples():
    p4 = path_graph(4)
    value, chosen = dissociation_set(p4, trivial_decomposition(p4), 2)
    assert value == 3 == dissociation_by_enumeration(p4)
    assert len(chosen) == 3
    rng = random.Random(38)
    for _ in range(10):
        g = random_graph(rng.randint(1, 7), 0.4, rng)
        td = trivial_decomposition(g)
        value, chosen = dissociation_set(g, td, alpha_exact(g))
        assert value == dissociation_by_enumeration(g)
        assert all(sum(1 for u in g.adj[v] if u in chosen) <= 1 for v in chosen)


def test_k_separator_unit_weights_small():
    # With s = n and unit weights the packing takes everything.
    g = path_graph(3)
    value, members = k_separator(
        g, WeightMap(3), 3, trivial_decomposition(g), alpha_exact(g)
    )
    assert value == 3 and members == (frozenset({0, 1, 2}),)
    with pytest.raises(CapExceededError):
        k_separator(g, None, 6, trivial_decomposition(g), 2)


def test_blob_examples():
    k2 = complete_graph(2)
    fam = blob_family(k2)
    assert sorted(sorted(s) for s in fam.members) == [[0], [0, 1], [1]]
    assert derived_graph(k2, fam) == complete_graph(3)

    p3 = path_graph(3)
    fam = blob_family(p3)
    assert len(fam) == 6
    d = derived_graph(p3, fam)
    assert d.n == 6 and d.m == 14  # complete minus the two endpoint singletons
    i = fam.members.index(frozenset({0}))
    j = fam.members.index(frozenset({2}))
    assert not d.has_edge(i, j)
    with pytest.raises(CapExceededError):
        blob_family(build_graph(13, []))


def test_selected_members_always_compatible():
    rng = random.Random(39)
    for _ in range(15):
        g = random_graph(rng.randint(2, 8), 0.4, rng)
        members = sorted(
            {random_connected_set(g, rng.randint(1, 3), rng) for _ in range(8)},
            key=sorted,
        )
        inst = make_instance(
            g, members, [Fraction(rng.randint(1, 5)) for _ in members]
        )
        _, chosen = solve_packing(inst, trivial_decomposition(g), alpha_exact(g))
        for a, b in itertools.combinations(sorted(chosen), 2):
            sa, sb = inst.family.members[a], inst.family.members[b]
            assert not (sa & sb)
            assert all(not g.has_edge(u, v) for u in sa for v in sb)
