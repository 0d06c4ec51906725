"""Text file formats. All vertex and bag ids are 1-indexed on disk.

Graph (.gr):   header `p tw <n> <m>`, then m lines `<u> <v>`; `c` comments.
Decomposition (.td): header `s td <#bags> <max-bag-size> <n>`, bag lines
    `b <id> <v...>`, optional `r <id> <u...>` lines declaring the marked
    subset of bag <id>, remaining lines `<i> <j>` are tree edges.
Weights (.w):  lines `<v> <value>` with value a rational `p/q` or a decimal
    literal, parsed exactly; missing vertices default to weight 1.
Family (.fam): header `s fam <count>`, lines `f <id> <weight> <size> <v...>`.
Vertex set (.set): whitespace-separated vertex ids.

Writers emit canonical form (sorted members, sorted edges), so write-read
round trips are identity on canonicalized objects.
"""

from fractions import Fraction

from .decomposition import make_decomposition
from .errors import ParseError
from .graph import build_graph
from .packing import PackingInstance, make_family
from .weights import WeightMap


def _lines(text):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield i, line.split()


def parse_graph(text, source="<graph>"):
    header = None
    edges = []
    n = m = 0
    for no, tok in _lines(text):
        if tok[0] == "p":
            if header is not None:
                raise ParseError(source, no, "duplicate header line")
            if len(tok) != 4 or tok[1] != "tw":
                raise ParseError(source, no, "header must be `p tw <n> <m>`")
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError(source, no, "non-integer header fields") from None
            header = no
        else:
            if header is None:
                raise ParseError(source, no, "edge before header")
            if len(tok) != 2:
                raise ParseError(source, no, "edge line must be `<u> <v>`")
            try:
                u, v = int(tok[0]), int(tok[1])
            except ValueError:
                raise ParseError(source, no, "non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(source, no, f"endpoint outside [1, {n}]")
            if u == v:
                raise ParseError(source, no, f"self-loop at {u}")
            edges.append((u - 1, v - 1))
    if header is None:
        raise ParseError(source, 0, "missing `p tw` header")
    if len(edges) != m:
        raise ParseError(source, 0, f"header announced {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_graph(graph):
    out = [f"p tw {graph.n} {graph.m}"]
    out += [f"{u + 1} {v + 1}" for u, v in graph.edges()]
    return "\n".join(out) + "\n"


def parse_td(text, graph, source="<td>"):
    header = None
    count = 0
    bags = {}
    refined = {}
    edges = []
    for no, tok in _lines(text):
        if tok[0] == "s":
            if header is not None:
                raise ParseError(source, no, "duplicate header line")
            if len(tok) != 5 or tok[1] != "td":
                raise ParseError(
                    source, no, "header must be `s td <#bags> <max-bag-size> <n>`"
                )
            try:
                count, _, n = int(tok[2]), int(tok[3]), int(tok[4])
            except ValueError:
                raise ParseError(source, no, "non-integer header fields") from None
            if n != graph.n:
                raise ParseError(
                    source, no, f"decomposition is over {n} vertices, graph has {graph.n}"
                )
            header = no
        elif tok[0] == "b":
            if header is None:
                raise ParseError(source, no, "bag before header")
            bid = _bag_id(tok, count, source, no)
            if bid in bags:
                raise ParseError(source, no, f"duplicate bag {bid + 1}")
            bags[bid] = _vertices(tok[2:], graph.n, source, no)
        elif tok[0] == "r":
            if header is None:
                raise ParseError(source, no, "refined set before header")
            bid = _bag_id(tok, count, source, no)
            if bid in refined:
                raise ParseError(source, no, f"duplicate refined set for bag {bid + 1}")
            refined[bid] = _vertices(tok[2:], graph.n, source, no)
        else:
            if header is None:
                raise ParseError(source, no, "tree edge before header")
            if len(tok) != 2:
                raise ParseError(source, no, "tree edge line must be `<i> <j>`")
            try:
                a, b = int(tok[0]), int(tok[1])
            except ValueError:
                raise ParseError(source, no, "non-integer bag id") from None
            if not (1 <= a <= count and 1 <= b <= count):
                raise ParseError(source, no, f"bag id outside [1, {count}]")
            edges.append((a - 1, b - 1))
    if header is None:
        raise ParseError(source, 0, "missing `s td` header")
    for bid in range(count):
        bags.setdefault(bid, frozenset())
    for bid, u in refined.items():
        if not u <= bags[bid]:
            extra = min(u - bags[bid])
            raise ParseError(
                source, 0, f"refined vertex {extra + 1} is not in bag {bid + 1}"
            )
    refs = [refined.get(bid, frozenset()) for bid in range(count)]
    return make_decomposition(graph, [bags[b] for b in range(count)], edges, refs)


def _bag_id(tok, count, source, no):
    if len(tok) < 2:
        raise ParseError(source, no, "missing bag id")
    try:
        bid = int(tok[1])
    except ValueError:
        raise ParseError(source, no, "non-integer bag id") from None
    if not (1 <= bid <= count):
        raise ParseError(source, no, f"bag id {bid} outside [1, {count}]")
    return bid - 1


def _vertices(tokens, n, source, no):
    out = set()
    for t in tokens:
        try:
            v = int(t)
        except ValueError:
            raise ParseError(source, no, f"non-integer vertex {t!r}") from None
        if not (1 <= v <= n):
            raise ParseError(source, no, f"vertex {v} outside [1, {n}]")
        out.add(v - 1)
    return frozenset(out)


def format_td(td):
    maxbag = max((len(b) for b in td.bags), default=0)
    out = [f"s td {td.node_count} {maxbag} {td.graph.n}"]
    for i, b in enumerate(td.bags):
        out.append("b " + " ".join([str(i + 1)] + [str(v + 1) for v in sorted(b)]))
    for i, u in enumerate(td.refined):
        if u:
            out.append("r " + " ".join([str(i + 1)] + [str(v + 1) for v in sorted(u)]))
    for a, b in td.tree_edges:
        out.append(f"{a + 1} {b + 1}")
    return "\n".join(out) + "\n"


def parse_weights(text, n, source="<weights>"):
    values = {}
    for no, tok in _lines(text):
        if len(tok) != 2:
            raise ParseError(source, no, "weight line must be `<v> <value>`")
        try:
            v = int(tok[0])
        except ValueError:
            raise ParseError(source, no, "non-integer vertex") from None
        if not (1 <= v <= n):
            raise ParseError(source, no, f"vertex {v} outside [1, {n}]")
        if v - 1 in values:
            raise ParseError(source, no, f"duplicate weight for vertex {v}")
        try:
            f = Fraction(tok[1])
        except (ValueError, ZeroDivisionError):
            raise ParseError(source, no, f"unparsable weight {tok[1]!r}") from None
        if f < 0:
            raise ParseError(source, no, f"negative weight {tok[1]}")
        values[v - 1] = f
    return WeightMap(n, values)


def parse_family(text, graph, source="<family>"):
    header = None
    count = 0
    members = {}
    weights = {}
    for no, tok in _lines(text):
        if tok[0] == "s":
            if header is not None:
                raise ParseError(source, no, "duplicate header line")
            if len(tok) != 3 or tok[1] != "fam":
                raise ParseError(source, no, "header must be `s fam <count>`")
            try:
                count = int(tok[2])
            except ValueError:
                raise ParseError(source, no, "non-integer member count") from None
            header = no
        elif tok[0] == "f":
            if header is None:
                raise ParseError(source, no, "member before header")
            if len(tok) < 4:
                raise ParseError(
                    source, no, "member line must be `f <id> <weight> <size> <v...>`"
                )
            try:
                fid = int(tok[1])
            except ValueError:
                raise ParseError(source, no, "non-integer member id") from None
            if not (1 <= fid <= count):
                raise ParseError(source, no, f"member id {fid} outside [1, {count}]")
            if fid - 1 in members:
                raise ParseError(source, no, f"duplicate member {fid}")
            try:
                w = Fraction(tok[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(source, no, f"unparsable weight {tok[2]!r}") from None
            if w < 0:
                raise ParseError(source, no, f"negative weight {tok[2]}")
            try:
                size = int(tok[3])
            except ValueError:
                raise ParseError(source, no, "non-integer member size") from None
            vs = _vertices(tok[4:], graph.n, source, no)
            if len(vs) != size:
                raise ParseError(
                    source, no, f"member {fid} announced {size} vertices, found {len(vs)}"
                )
            members[fid - 1] = vs
            weights[fid - 1] = w
        else:
            raise ParseError(source, no, f"unexpected line starting with {tok[0]!r}")
    if header is None:
        raise ParseError(source, 0, "missing `s fam` header")
    missing = [i + 1 for i in range(count) if i not in members]
    if missing:
        raise ParseError(source, 0, f"missing member ids {missing}")
    fam = make_family(graph, [members[i] for i in range(count)])
    return PackingInstance(fam, tuple(weights[i] for i in range(count)))


def format_family(instance):
    fam = instance.family
    out = [f"s fam {len(fam)}"]
    for i, (s, w) in enumerate(zip(fam.members, instance.member_weights)):
        vs = " ".join(str(v + 1) for v in sorted(s))
        out.append(f"f {i + 1} {w.numerator}/{w.denominator} {len(s)} {vs}")
    return "\n".join(out) + "\n"


def parse_vertex_set(text, n, source="<set>"):
    out = set()
    for no, tok in _lines(text):
        for t in tok:
            try:
                v = int(t)
            except ValueError:
                raise ParseError(source, no, f"non-integer vertex {t!r}") from None
            if not (1 <= v <= n):
                raise ParseError(source, no, f"vertex {v} outside [1, {n}]")
            out.add(v - 1)
    return frozenset(out)


def read_text(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def write_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_graph(path):
    return parse_graph(read_text(path), source=str(path))


def write_graph(graph, path):
    write_text(path, format_graph(graph))


def read_td(path, graph):
    return parse_td(read_text(path), graph, source=str(path))


def write_td(td, path):
    write_text(path, format_td(td))


def read_weights(path, n):
    return parse_weights(read_text(path), n, source=str(path))


def read_family(path, graph):
    return parse_family(read_text(path), graph, source=str(path))


def read_vertex_set(path, n):
    return parse_vertex_set(read_text(path), n, source=str(path))
