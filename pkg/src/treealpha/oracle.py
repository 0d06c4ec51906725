"""Exact ground truth at desk scale: tree-independence number, treewidth, MWIS.

Both width-style parameters are computed by dynamic programming over subsets
of eliminated vertices. Restricting attention to elimination orderings is
exhaustive: any tree decomposition induces a chordal fill-in (make every bag
a clique) whose maximal cliques each lie inside some original bag; since the
independence number is monotone under taking subsets, the clique tree of the
fill-in is at least as good as the original decomposition; and every chordal
fill-in arises from some elimination ordering. Minimizing the worst bag cost
over all orderings therefore attains the true optimum.

State is the set of already-eliminated vertices only, since the bag of the
next vertex depends on nothing else: 2^n * n states, capped at n = 20.
"""

from fractions import Fraction

from .chordal import clique_tree
from .decomposition import make_decomposition, trivial_decomposition
from .errors import CapExceededError, GraphError
from .exact import _max_clique_size
from .graph import Graph, check_vertex_set

DEFAULT_SUBSET_DP_CAP = 20
DEFAULT_BRUTE_FORCE_CAP = 22


def elimination_bag(graph, v, eliminated):
    """The closure bag of v against an eliminated set E.

    Contains v plus every surviving vertex reachable from v along a path
    whose internal vertices all lie in E. These are exactly the bags of the
    fill-in triangulation induced by eliminating E's vertices first.
    """
    elim = check_vertex_set(graph, eliminated)
    if v in elim:
        raise GraphError(f"vertex {v} is already eliminated")
    check_vertex_set(graph, [v])
    rows = graph.bit_rows(cap=None)
    emask = 0
    for u in elim:
        emask |= 1 << u
    bag_mask = _bag_mask(rows, v, emask)
    return frozenset(u for u in range(graph.n) if bag_mask >> u & 1)


def _bag_mask(rows, v, emask):
    nb = rows[v]
    seen = 0
    pend = nb & emask
    while pend:
        b = pend & -pend
        seen |= b
        nb |= rows[b.bit_length() - 1]
        pend = nb & emask & ~seen
    return (nb & ~emask) | (1 << v)


class _AlphaByMask:
    """Memoized independence numbers of induced sub-masks of one graph."""

    def __init__(self, rows, n):
        full = (1 << n) - 1
        self.comp = [full & ~r & ~(1 << v) for v, r in enumerate(rows)]
        self.memo = {0: 0}

    def alpha(self, mask):
        got = self.memo.get(mask)
        if got is not None:
            return got
        comp = self.comp
        val = _max_clique_size([comp[v] & mask for v in range(len(comp))], mask)
        self.memo[mask] = val
        return val


def _elimination_dp(graph, cost_of_bag):
    """min over elimination orderings of the max bag cost; returns (value, order)."""
    n = graph.n
    rows = graph.bit_rows(cap=None)
    size = 1 << n
    big = n + 2**30
    dp = [big] * size
    dp[0] = -1
    choice = [0] * size
    bag_cost = {}
    for s in range(size):
        d = dp[s]
        if d >= big:
            continue
        rest = (size - 1) ^ s
        while rest:
            b = rest & -rest
            rest ^= b
            v = b.bit_length() - 1
            nb = rows[v]
            seen = 0
            pend = nb & s
            while pend:
                u = pend & -pend
                seen |= u
                nb |= rows[u.bit_length() - 1]
                pend = nb & s & ~seen
            bag = (nb & ~s) | b
            c = bag_cost.get(bag)
            if c is None:
                c = cost_of_bag(bag)
                bag_cost[bag] = c
            cand = d if d > c else c
            t = s | b
            if cand < dp[t]:
                dp[t] = cand
                choice[t] = v
    order = []
    s = size - 1
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return dp[size - 1], order


def _fill_in(graph, order):
    """Chordal supergraph from eliminating vertices in the given order."""
    rows = list(graph.bit_rows(cap=None))
    emask = 0
    for v in order:
        bag = _bag_mask(tuple(rows), v, emask)
        members = []
        m = bag
        while m:
            b = m & -m
            m ^= b
            members.append(b.bit_length() - 1)
        for i, a in enumerate(members):
            for c in members[i + 1 :]:
                rows[a] |= 1 << c
                rows[c] |= 1 << a
        emask |= 1 << v
    adj = []
    for v in range(graph.n):
        r = rows[v]
        adj.append(tuple(u for u in range(graph.n) if r >> u & 1 and u != v))
    return Graph(graph.n, tuple(adj))


def treewidth_exact(graph, cap=DEFAULT_SUBSET_DP_CAP):
    """Exact treewidth by subset DP; the null graph has treewidth -1."""
    if graph.n > cap:
        raise CapExceededError(f"treewidth_exact refused for n={graph.n} > cap={cap}")
    if graph.n == 0:
        return -1
    value, _ = _elimination_dp(graph, lambda bag: bag.bit_count() - 1)
    return value


def tin_exact(graph, cap=DEFAULT_SUBSET_DP_CAP):
    """Exact tree-independence number plus an optimal witness decomposition.

    The witness is the clique tree of the fill-in of the optimal elimination
    ordering, expressed over the input graph's vertices; it validates and its
    independence number equals the returned value.
    """
    if graph.n > cap:
        raise CapExceededError(f"tin_exact refused for n={graph.n} > cap={cap}")
    if graph.n == 0:
        return 0, trivial_decomposition(graph)
    alpha = _AlphaByMask(graph.bit_rows(cap=None), graph.n)
    value, order = _elimination_dp(graph, alpha.alpha)
    filled = _fill_in(graph, order)
    ct = clique_tree(filled)
    witness = make_decomposition(graph, ct.bags, ct.tree_edges)
    return value, witness


def brute_force_mwis(graph, weights, cap=DEFAULT_BRUTE_FORCE_CAP):
    """Exhaustive max weight independent set; exact rational optimum.

    Branch and bound over include/exclude decisions with a remaining-weight
    prune; deterministic witness for fixed inputs.
    """
    n = graph.n
    if n > cap:
        raise CapExceededError(f"brute_force_mwis refused for n={n} > cap={cap}")
    if n == 0:
        return Fraction(0), frozenset()
    rows = graph.bit_rows(cap=None)
    closed = [rows[v] | (1 << v) for v in range(n)]
    w = [weights[v] for v in range(n)]
    order = sorted(range(n), key=lambda v: (-w[v], v))
    suffix = [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + w[order[i]]
    best_w = Fraction(-1)
    best_set = 0

    def rec(idx, cand, cur_w, cur_set):
        nonlocal best_w, best_set
        while idx < n and not (cand >> order[idx] & 1):
            idx += 1
        if idx == n:
            if cur_w > best_w:
                best_w = cur_w
                best_set = cur_set
            return
        if cur_w + suffix[idx] <= best_w:
            return
        v = order[idx]
        rec(idx + 1, cand & ~closed[v], cur_w + w[v], cur_set | (1 << v))
        rec(idx + 1, cand & ~(1 << v), cur_w, cur_set)

    rec(0, (1 << n) - 1, Fraction(0), 0)
    return best_w, frozenset(v for v in range(n) if best_set >> v & 1)
