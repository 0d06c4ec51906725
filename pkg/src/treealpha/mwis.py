"""Max Weight Independent Set over a refined tree decomposition.

The solver converts the decomposition to nice form and runs the classic
bottom-up table computation, except that each node's table is indexed only
by the independent subsets of its bag that respect the refinement split:
any subset of the marked part U_t, but at most k vertices of the residual
part X_t - U_t. c[t, S] is the best weight of an independent set I of the
subtree's vertices with I restricted to the bag equal to S.

Values are exact rationals end to end. The optimum value alone would be
untestable against set-level properties, so every table entry keeps enough
child references to rebuild one optimal witness set top-down.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import GraphError, ResidualBoundViolation
from .graph import check_vertex_set, is_independent
from .nice import FORGET, INTRODUCE, JOIN, LEAF, make_nice


@dataclass(frozen=True)
class BagIndependentFamily:
    """All independent subsets of a bag, each split along the refinement."""

    bag: frozenset
    refined: frozenset
    sets: tuple

    def split(self, s):
        return s & self.refined, s - self.refined

    def __len__(self):
        return len(self.sets)


@dataclass(frozen=True)
class DPTable:
    """One node's table: set S -> best weight of an independent set of the
    subtree's vertices restricting to S on the bag, plus the child key(s)
    that achieved it (None at leaves, a (child, key) pair at introduce and
    forget nodes, two such pairs at joins)."""

    node: int
    values: dict
    backlinks: dict

    def __getitem__(self, s):
        return self.values[s]


def enumerate_bag_independent_sets(graph, bag, refined, k):
    """Independent subsets of `bag` combining any part of `refined` with at
    most k residual vertices.

    Raises ResidualBoundViolation if the residual part contains an
    independent set of size k+1, i.e. the promised bound is false and the
    enumeration would be incomplete.
    """
    bag = check_vertex_set(graph, bag)
    refined = frozenset(refined)
    if not refined <= bag:
        raise GraphError("refined set must be a subset of the bag")
    if k < 0:
        raise GraphError("residual bound k must be nonnegative")
    residual = sorted(bag - refined)
    for cand in combinations(residual, k + 1):
        if is_independent(graph, cand):
            raise ResidualBoundViolation(
                f"residual bound violated: independent set of size {k + 1} "
                f"in bag residual",
                witness=frozenset(cand),
            )
    marked = sorted(refined)
    refined_subsets = []
    for mask in range(1 << len(marked)):
        s1 = frozenset(marked[i] for i in range(len(marked)) if mask >> i & 1)
        if is_independent(graph, s1):
            refined_subsets.append(s1)
    out = []
    for size in range(min(k, len(residual)) + 1):
        for combo in combinations(residual, size):
            s2 = frozenset(combo)
            if not is_independent(graph, s2):
                continue
            for s1 in refined_subsets:
                s = s1 | s2
                if is_independent(graph, s):
                    out.append(s)
    return BagIndependentFamily(bag, refined, tuple(out))


def compute_tables(graph, weights, nice, k):
    """Bottom-up tables for every node of a nice decomposition.

    Exposed for inspection and tests; `solve_mwis` is a thin shell over this
    plus witness reconstruction.
    """
    td = nice.td
    tables = {}
    for t in nice.postorder():
        fam = enumerate_bag_independent_sets(
            graph, td.bags[t], td.refined[t], k
        )
        kind = nice.kinds[t]
        val = {}
        bk = {}
        if kind == LEAF:
            val[frozenset()] = Fraction(0)
            bk[frozenset()] = None
        elif kind == INTRODUCE:
            c = nice.children[t][0]
            v = nice.vertices[t]
            cval = tables[c].values
            wv = weights[v]
            for s in fam.sets:
                if v in s:
                    key = s - {v}
                    val[s] = cval[key] + wv
                    bk[s] = (c, key)
                else:
                    val[s] = cval[s]
                    bk[s] = (c, s)
        elif kind == FORGET:
            c = nice.children[t][0]
            v = nice.vertices[t]
            cval = tables[c].values
            for s in fam.sets:
                keep = s | {v}
                without = cval[s]
                with_v = cval.get(keep)
                # Prefer the child entry without v on ties.
                if with_v is not None and with_v > without:
                    val[s] = with_v
                    bk[s] = (c, keep)
                else:
                    val[s] = without
                    bk[s] = (c, s)
        else:  # JOIN
            c1, c2 = nice.children[t]
            v1, v2 = tables[c1].values, tables[c2].values
            for s in fam.sets:
                val[s] = v1[s] + v2[s] - weights.total(s)
                bk[s] = ((c1, s), (c2, s))
        tables[t] = DPTable(t, val, bk)
    return tables


def _solve_on_nice(graph, weights, nice, k):
    tables = compute_tables(graph, weights, nice, k)
    root_val = tables[nice.root].values[frozenset()]
    # Rebuild one optimal set by walking the stored child keys top-down.
    chosen = set()
    stack = [(nice.root, frozenset())]
    while stack:
        t, s = stack.pop()
        chosen |= s
        link = tables[t].backlinks[s]
        if link is None:
            continue
        if nice.kinds[t] == JOIN:
            stack.extend(link)
        else:
            stack.append(link)
    return root_val, frozenset(chosen)


def solve_mwis(graph, weights, td, k):
    """Optimal independent set weight and one witness set.

    `k` is the promised residual independence bound of the decomposition; it
    defines the enumeration budget, and a decomposition that breaks the
    promise is reported via ResidualBoundViolation rather than silently
    blowing up. The witness is re-verified before returning.
    """
    nice = make_nice(graph, td)
    value, witness = _solve_on_nice(graph, weights, nice, k)
    if not is_independent(graph, witness):
        raise RuntimeError("internal: witness set is not independent")
    if weights.total(witness) != value:
        raise RuntimeError("internal: witness weight does not match optimum")
    return value, witness


def solve_mwis_plain(graph, weights, td, k):
    """The unrefined specialization: requires every marked set to be empty."""
    if any(td.refined):
        raise GraphError("solve_mwis_plain requires an unrefined decomposition")
    return solve_mwis(graph, weights, td, k)
