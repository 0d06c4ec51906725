"""Refined tree decompositions: data model, validation, measures, composition.

A refined tree decomposition carries, per node t, a bag X_t and a marked
subset U_t <= X_t. The refinement budget ell is derived as max |U_t|, never
stored. Decompositions are constructed unchecked; `validate` is the explicit,
first-class check and reports violations as data rather than raising.
"""

from dataclasses import dataclass

from .errors import GraphError, InvalidDecompositionError
from .exact import DEFAULT_ALPHA_CAP, alpha_of_subset
from .graph import check_vertex_set


@dataclass(frozen=True)
class RefinedTreeDecomposition:
    """Tree decomposition of `graph` with bags `bags[t]` and marked sets `refined[t]`.

    `tree_edges` must form a tree on node ids 0..node_count-1 for the
    decomposition to validate; construction itself does not check anything.
    """

    graph: object
    bags: tuple
    tree_edges: tuple
    refined: tuple

    @property
    def node_count(self):
        return len(self.bags)

    @property
    def refinement_size(self):
        """The derived refinement budget ell = max |U_t|."""
        return max((len(u) for u in self.refined), default=0)

    def node_neighbors(self):
        nbrs = [[] for _ in range(self.node_count)]
        for a, b in self.tree_edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return nbrs

    def __repr__(self):
        return (
            f"RefinedTreeDecomposition(nodes={self.node_count}, "
            f"width={width(self)}, ell={self.refinement_size})"
        )


def make_decomposition(graph, bags, tree_edges=(), refined=None):
    """Normalize raw data into a RefinedTreeDecomposition (still unvalidated)."""
    bags = tuple(frozenset(b) for b in bags)
    edges = tuple(sorted((min(a, b), max(a, b)) for a, b in tree_edges))
    if refined is None:
        refs = tuple(frozenset() for _ in bags)
    else:
        refs = tuple(frozenset(u) for u in refined)
        if len(refs) != len(bags):
            raise GraphError("refined sets and bags must have equal length")
    return RefinedTreeDecomposition(graph, bags, edges, refs)


def trivial_decomposition(graph):
    """Single node whose bag is the whole vertex set; U empty."""
    return make_decomposition(graph, [frozenset(range(graph.n))])


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str

    def __str__(self):
        return f"[{self.clause}] {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def _tree_violation(td):
    nodes = td.node_count
    if nodes < 1:
        return Violation("tree", "decomposition has no nodes")
    if len(td.tree_edges) != nodes - 1:
        return Violation(
            "tree", f"{len(td.tree_edges)} edges on {nodes} nodes (need {nodes - 1})"
        )
    seen_pairs = set()
    nbrs = [[] for _ in range(nodes)]
    for a, b in td.tree_edges:
        if not (0 <= a < nodes and 0 <= b < nodes):
            return Violation("tree", f"edge ({a}, {b}) references a missing node")
        if a == b:
            return Violation("tree", f"self-loop on node {a}")
        key = (min(a, b), max(a, b))
        if key in seen_pairs:
            return Violation("tree", f"duplicate edge {key}")
        seen_pairs.add(key)
        nbrs[a].append(b)
        nbrs[b].append(a)
    # Correct edge count + no duplicates, so connectivity implies acyclicity.
    stack = [0]
    reached = {0}
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in reached:
                reached.add(y)
                stack.append(y)
    if len(reached) != nodes:
        missing = min(set(range(nodes)) - reached)
        return Violation("tree", f"node {missing} is disconnected from node 0")
    return None


def validate(graph, td, universe=None):
    """Check the five decomposition clauses; report the first witness of each.

    `universe` restricts the check to a vertex subset: bags must cover exactly
    `universe` and every graph edge inside it. The default is all of V(G).
    Violations are data, not exceptions.
    """
    violations = []
    tree_bad = _tree_violation(td)
    if tree_bad is not None:
        violations.append(tree_bad)

    if universe is None:
        universe = frozenset(range(graph.n))
    else:
        universe = check_vertex_set(graph, universe)

    nodes = td.node_count
    bag_nodes = {}
    coverage_bad = None
    for t in range(nodes):
        for v in td.bags[t]:
            if not (0 <= v < graph.n) or v not in universe:
                if coverage_bad is None:
                    coverage_bad = Violation(
                        "coverage", f"bag {t} contains {v}, outside the vertex universe"
                    )
                continue
            bag_nodes.setdefault(v, []).append(t)
    if coverage_bad is None:
        for v in sorted(universe):
            if v not in bag_nodes:
                coverage_bad = Violation("coverage", f"vertex {v} is in no bag")
                break
    if coverage_bad is not None:
        violations.append(coverage_bad)

    for u in range(graph.n):
        if u not in universe:
            continue
        hit = None
        for v in graph.adj[u]:
            if v < u or v not in universe:
                continue
            tu = bag_nodes.get(u, ())
            tv = set(bag_nodes.get(v, ()))
            if not any(t in tv for t in tu):
                hit = Violation("edges", f"edge ({u}, {v}) is in no bag")
                break
        if hit is not None:
            violations.append(hit)
            break

    if tree_bad is None:
        nbrs = td.node_neighbors()
        for v in sorted(bag_nodes):
            holding = set(bag_nodes[v])
            start = bag_nodes[v][0]
            stack = [start]
            seen = {start}
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if y in holding and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != holding:
                violations.append(
                    Violation(
                        "connectivity",
                        f"nodes holding vertex {v} do not form a subtree",
                    )
                )
                break

    for t in range(nodes):
        if not td.refined[t] <= td.bags[t]:
            extra = min(td.refined[t] - td.bags[t])
            violations.append(
                Violation("refined", f"U_{t} contains {extra}, not in bag {t}")
            )
            break

    return ValidationReport(not violations, tuple(violations))


def require_valid(graph, td, universe=None):
    report = validate(graph, td, universe)
    if not report.ok:
        raise InvalidDecompositionError(report)
    return report


def width(td):
    """Max bag size minus one; a single empty bag has width -1."""
    return max(len(b) for b in td.bags) - 1


def independence_number(graph, td, cap=DEFAULT_ALPHA_CAP):
    """alpha(T): max over bags of the induced subgraph's independence number."""
    return max(alpha_of_subset(graph, b, cap=cap) for b in td.bags)


def residual_independence_number(graph, td, cap=DEFAULT_ALPHA_CAP):
    """Max over bags of alpha(G[X_t - U_t])."""
    return max(
        alpha_of_subset(graph, b - u, cap=cap) for b, u in zip(td.bags, td.refined)
    )


def _is_clique(graph, vertices):
    vs = sorted(vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if not graph.has_edge(u, v):
                return False
    return True


def compose_clique_cutset(graph, a_side, b_side, cutset, td_a, td_b):
    """Join decompositions of G[A u C] and G[B u C] along the clique cutset C.

    The parts must use the host graph's vertex ids. The composed decomposition
    links a bag containing C on each side, so alpha and the residual measure
    of the result equal the max of the two parts.
    """
    a_side = check_vertex_set(graph, a_side)
    b_side = check_vertex_set(graph, b_side)
    cutset = check_vertex_set(graph, cutset)
    if not a_side or not b_side:
        raise GraphError("cut-partition requires nonempty A and B")
    if a_side & b_side or a_side & cutset or b_side & cutset:
        raise GraphError("A, B, C must be pairwise disjoint")
    if a_side | b_side | cutset != frozenset(range(graph.n)):
        raise GraphError("A, B, C must partition the vertex set")
    for u in sorted(a_side):
        for v in graph.adj[u]:
            if v in b_side:
                raise GraphError(f"edge ({u}, {v}) crosses the A-B split")
    if not _is_clique(graph, cutset):
        raise GraphError("C is not a clique")

    require_valid(graph, td_a, universe=a_side | cutset)
    require_valid(graph, td_b, universe=b_side | cutset)

    def bag_containing(td, name):
        for t in range(td.node_count):
            if cutset <= td.bags[t]:
                return t
        raise InvalidDecompositionError(
            validate(graph, td), f"no bag of {name} contains the cutset"
        )

    ta = bag_containing(td_a, "T_A")
    tb = bag_containing(td_b, "T_B")
    offset = td_a.node_count
    edges = list(td_a.tree_edges)
    edges += [(a + offset, b + offset) for a, b in td_b.tree_edges]
    edges.append((ta, tb + offset))
    return make_decomposition(
        graph,
        td_a.bags + td_b.bags,
        edges,
        td_a.refined + td_b.refined,
    )
