"""Immutable simple undirected graphs on dense integer vertex ids.

Vertices are labeled 0..n-1. Adjacency is stored as sorted tuples; a bit-row
view (one Python int per vertex, bit u set iff u is a neighbor) is
materialized on demand and cached, for graphs up to a configurable size cap.
All operations are pure, so shared graphs are safe to use concurrently.
"""

from bisect import bisect_left

from .errors import CapExceededError, GraphError

VertexSet = frozenset

#: Largest n for which the bit-row view is materialized by default.
DEFAULT_MATRIX_CAP = 4096


class Graph:
    """A simple undirected graph. Build instances through :func:`build_graph`."""

    __slots__ = ("n", "adj", "_rows")

    def __init__(self, n, adj):
        self.n = n
        self.adj = adj
        self._rows = None

    @property
    def m(self):
        """Number of edges."""
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        if u == v:
            return False
        rows = self._rows
        if rows is not None:
            return bool(rows[u] >> v & 1)
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self):
        """Yield edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def bit_rows(self, cap=DEFAULT_MATRIX_CAP):
        """Adjacency as one int bit mask per vertex; cached after first call.

        Raises CapExceededError when n exceeds `cap`; callers that can fall
        back to the sorted adjacency lists should do so instead of raising
        the cap blindly.
        """
        if self._rows is None:
            if cap is not None and self.n > cap:
                raise CapExceededError(
                    f"bit-matrix view refused for n={self.n} > cap={cap}"
                )
            rows = []
            for a in self.adj:
                r = 0
                for v in a:
                    r |= 1 << v
                rows.append(r)
            self._rows = tuple(rows)
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n, edges):
    """Canonical graph from a vertex count and an iterable of endpoint pairs.

    Duplicate edges (in either orientation) collapse to one. Self-loops and
    out-of-range endpoints are rejected with the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    neighbor_sets = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in neighbor_sets))


def check_vertex_set(graph, vertices):
    """Return `vertices` as a frozenset after range-checking against `graph`."""
    s = frozenset(vertices)
    for v in s:
        if not (0 <= v < graph.n):
            raise GraphError(f"vertex {v} out of range [0, {graph.n})")
    return s


def induced_subgraph(graph, vertices):
    """Subgraph induced by `vertices`, plus the old->new relabeling map.

    Kept vertices are renumbered 0..|S|-1 in ascending order of old id.
    """
    s = check_vertex_set(graph, vertices)
    old = sorted(s)
    relabel = {v: i for i, v in enumerate(old)}
    edges = [
        (relabel[u], relabel[v])
        for u in old
        for v in graph.adj[u]
        if v in s and v > u
    ]
    return build_graph(len(old), edges), relabel


def contract_edge(graph, edge):
    """Contract an edge: the merged vertex gets the union of both neighborhoods.

    The two endpoints disappear; remaining vertices are renumbered 0..n-3 in
    ascending order of old id and the merged vertex receives the largest id,
    n-2. Parallel edges collapse, so the result is again simple.
    """
    u, v = edge
    if not graph.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    keep = [w for w in range(graph.n) if w != u and w != v]
    relabel = {w: i for i, w in enumerate(keep)}
    merged = graph.n - 2
    edges = set()
    for a in keep:
        for b in graph.adj[a]:
            if b in (u, v):
                edges.add((relabel[a], merged))
            elif b > a:
                edges.add((relabel[a], relabel[b]))
    return build_graph(graph.n - 1, edges)


def is_independent(graph, vertices):
    """True iff no edge of the graph has both endpoints in `vertices`."""
    s = check_vertex_set(graph, vertices)
    if graph.n <= DEFAULT_MATRIX_CAP:
        rows = graph.bit_rows()
        mask = 0
        for v in s:
            mask |= 1 << v
        for v in s:
            if rows[v] & mask:
                return False
        return True
    for v in s:
        for w in graph.adj[v]:
            if w > v and w in s:
                return False
    return True
