"""Conversion of refined tree decompositions to nice form.

A nice decomposition is rooted, has empty root and leaf bags, and every
other node is an introduce, forget, or join node. The conversion keeps, for
every output node, some input node t with X' <= X_t and U' = U_t & X', so
the residual independence number never grows.

Node count of the output is at most NICE_NODE_FACTOR * (width(T) + 2) *
|V(T)| on valid inputs; the constant is asserted by the test suite.
"""

from dataclasses import dataclass

from .decomposition import make_decomposition, require_valid, validate

#: Documented constant C in the node-count bound C * (width + 2) * |V(T)|.
NICE_NODE_FACTOR = 8

LEAF = "leaf"
INTRODUCE = "introduce"
FORGET = "forget"
JOIN = "join"


@dataclass(frozen=True)
class NiceRefinedTreeDecomposition:
    """A refined tree decomposition plus rooted structure and node kinds.

    `vertices[t]` is the vertex introduced or forgotten at node t, None for
    leaf and join nodes. `children[t]` lists children in deterministic order.
    """

    td: object
    root: int
    parent: tuple
    kinds: tuple
    vertices: tuple
    children: tuple

    @property
    def node_count(self):
        return self.td.node_count

    def postorder(self):
        """Node ids, children always before parents."""
        out = []
        stack = [(self.root, False)]
        while stack:
            t, done = stack.pop()
            if done:
                out.append(t)
            else:
                stack.append((t, True))
                for c in self.children[t]:
                    stack.append((c, False))
        return out


class _Arena:
    """Mutable rooted-tree workspace used while the steps rewrite the tree."""

    def __init__(self):
        self.bag = []
        self.ref = []
        self.kids = []
        self.par = []

    def new(self, bag, ref, parent=None):
        i = len(self.bag)
        self.bag.append(frozenset(bag))
        self.ref.append(frozenset(ref))
        self.kids.append([])
        self.par.append(parent)
        if parent is not None:
            self.kids[parent].append(i)
        return i

    def splice_above(self, node, bag, ref):
        """Insert a fresh node between `node` and its parent; return its id."""
        p = self.par[node]
        m = self.new(bag, ref, None)
        self.par[m] = p
        if p is not None:
            self.kids[p][self.kids[p].index(node)] = m
        self.par[node] = m
        self.kids[m].append(node)
        return m


def _contract_comparable(td):
    """Step 1: repeatedly contract tree edges whose bags are nested."""
    n = td.node_count
    bag = list(td.bags)
    ref = list(td.refined)
    nbrs = [set() for _ in range(n)]
    for a, b in td.tree_edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    alive = [True] * n
    changed = True
    while changed:
        changed = False
        for a in range(n):
            if not alive[a]:
                continue
            for b in sorted(nbrs[a]):
                if bag[b] <= bag[a]:
                    keep, drop = a, b
                elif bag[a] < bag[b]:
                    keep, drop = b, a
                else:
                    continue
                nbrs[keep].discard(drop)
                nbrs[drop].discard(keep)
                for c in nbrs[drop]:
                    nbrs[c].discard(drop)
                    nbrs[c].add(keep)
                    nbrs[keep].add(c)
                nbrs[drop].clear()
                alive[drop] = False
                changed = True
                break
            if changed:
                break
    ids = [i for i in range(n) if alive[i]]
    remap = {old: new for new, old in enumerate(ids)}
    bags = [bag[i] for i in ids]
    refs = [ref[i] for i in ids]
    edges = sorted(
        {(min(remap[a], remap[b]), max(remap[a], remap[b])) for a in ids for b in nbrs[a]}
    )
    return bags, refs, edges


def make_nice(graph, td):
    """Rewrite a valid refined tree decomposition into nice form.

    Deterministic everywhere the underlying construction has freedom: the
    root is the lowest-index node of degree at most one after contraction,
    children are ordered by id, and edge expansions forget then introduce
    vertices in ascending id order.
    """
    require_valid(graph, td)
    bags, refs, edges = _contract_comparable(td)
    k = len(bags)

    if k == 1 and not bags[0]:
        # Null graph or an all-empty decomposition: a single empty node is
        # already nice (the root is its own leaf).
        out = make_decomposition(graph, [frozenset()])
        return NiceRefinedTreeDecomposition(
            out, 0, (None,), (LEAF,), (None,), ((),)
        )

    degree = [0] * k
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    root0 = min(t for t in range(k) if degree[t] <= 1)

    arena = _Arena()
    nbrs = [[] for _ in range(k)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    # Root the contracted tree (step 2), copying into the arena.
    old_to_new = {root0: arena.new(bags[root0], refs[root0])}
    queue = [root0]
    seen = {root0}
    while queue:
        x = queue.pop(0)
        for y in sorted(nbrs[x]):
            if y not in seen:
                seen.add(y)
                old_to_new[y] = arena.new(bags[y], refs[y], old_to_new[x])
                queue.append(y)

    # Step 3: binarize nodes with three or more children.
    stack = [old_to_new[root0]]
    while stack:
        t = stack.pop()
        kids = arena.kids[t]
        if len(kids) >= 3:
            first, rest = kids[0], kids[1:]
            arena.kids[t] = [first]
            chain = t
            for i, c in enumerate(rest):
                if i < len(rest) - 1:
                    nxt = arena.new(arena.bag[t], arena.ref[t], None)
                    arena.par[nxt] = chain
                    arena.kids[chain].append(nxt)
                    arena.kids[nxt] = [c]
                    arena.par[c] = nxt
                    chain = nxt
                else:
                    arena.kids[chain].append(c)
                    arena.par[c] = chain
        stack.extend(arena.kids[t])

    # Step 4: give every join node children with identical bags.
    stack = [arena.par.index(None)]
    all_nodes = []
    while stack:
        t = stack.pop()
        all_nodes.append(t)
        stack.extend(arena.kids[t])
    for t in all_nodes:
        if len(arena.kids[t]) == 2:
            for c in list(arena.kids[t]):
                if arena.bag[c] != arena.bag[t] or arena.ref[c] != arena.ref[t]:
                    arena.splice_above(c, arena.bag[t], arena.ref[t])

    # Step 5: pad every leaf with an empty child.
    for t in range(len(arena.bag)):
        if not arena.kids[t]:
            arena.new((), (), t)

    # Step 6: empty node above the root.
    old_root = arena.par.index(None)
    new_root = arena.new((), (), None)
    arena.par[old_root] = new_root
    arena.kids[new_root].append(old_root)

    # Step 7: expand every single-child edge into forget-then-introduce chains.
    for t in list(range(len(arena.bag))):
        kids = arena.kids[t]
        if len(kids) != 1:
            continue
        child = kids[0]
        bx, bc = arena.bag[t], arena.bag[child]
        uc = arena.ref[child]
        ut = arena.ref[t]
        forget = sorted(bc - bx)
        introduce = sorted(bx - bc)
        cur = bc
        below = child
        for v in forget[: len(forget) - (0 if introduce else 1)]:
            cur = cur - {v}
            below = arena.splice_above(below, cur, uc & cur)
        for v in introduce[:-1] if introduce else []:
            cur = cur | {v}
            below = arena.splice_above(below, cur, ut & cur)

    # Assemble, ordering nodes by BFS from the root for stable ids.
    root = arena.par.index(None)
    order = [root]
    head = 0
    while head < len(order):
        order.extend(arena.kids[order[head]])
        head += 1
    new_id = {old: i for i, old in enumerate(order)}
    bags_out = [arena.bag[t] for t in order]
    refs_out = [arena.ref[t] for t in order]
    edges_out = [
        (new_id[t], new_id[c]) for t in order for c in arena.kids[t]
    ]
    out = make_decomposition(graph, bags_out, edges_out, refs_out)

    parent = [None] * len(order)
    children = [tuple(new_id[c] for c in arena.kids[t]) for t in order]
    for t, kids in enumerate(children):
        for c in kids:
            parent[c] = t
    kinds = []
    verts = []
    for t in range(len(order)):
        kids = children[t]
        if not kids:
            kinds.append(LEAF)
            verts.append(None)
        elif len(kids) == 2:
            kinds.append(JOIN)
            verts.append(None)
        else:
            bt, bc = bags_out[t], bags_out[kids[0]]
            if len(bt) == len(bc) + 1 and bc < bt:
                kinds.append(INTRODUCE)
                verts.append(min(bt - bc))
            elif len(bt) == len(bc) - 1 and bt < bc:
                kinds.append(FORGET)
                verts.append(min(bc - bt))
            else:
                raise RuntimeError(
                    f"internal: node {t} is neither introduce, forget, nor join"
                )
    nice = NiceRefinedTreeDecomposition(
        out, 0, tuple(parent), tuple(kinds), tuple(verts), tuple(children)
    )
    return nice


def nice_violations(graph, nice):
    """List the nice-form invariants the given decomposition breaks (tests)."""
    problems = []
    td = nice.td
    report = validate(graph, td)
    if not report.ok:
        problems.append(f"underlying decomposition invalid: {report}")
    if td.bags[nice.root]:
        problems.append("root bag is nonempty")
    for t in range(td.node_count):
        kids = nice.children[t]
        kind = nice.kinds[t]
        if not kids:
            if kind != LEAF:
                problems.append(f"childless node {t} is labeled {kind}")
            if td.bags[t]:
                problems.append(f"leaf {t} has a nonempty bag")
        elif len(kids) == 1:
            c = kids[0]
            v = nice.vertices[t]
            if kind == INTRODUCE:
                if v is None or v in td.bags[c] or td.bags[t] != td.bags[c] | {v}:
                    problems.append(f"introduce node {t} malformed")
            elif kind == FORGET:
                if v is None or v not in td.bags[c] or td.bags[t] != td.bags[c] - {v}:
                    problems.append(f"forget node {t} malformed")
            else:
                problems.append(f"single-child node {t} labeled {kind}")
        elif len(kids) == 2:
            if kind != JOIN:
                problems.append(f"two-child node {t} labeled {kind}")
            if any(td.bags[c] != td.bags[t] for c in kids):
                problems.append(f"join node {t} has a child with a different bag")
        else:
            problems.append(f"node {t} has {len(kids)} children")
        if nice.parent[t] is None and t != nice.root:
            problems.append(f"node {t} has no parent but is not the root")
    return problems
