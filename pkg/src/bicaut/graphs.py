"""Undirected simple graphs on vertices 0..n-1, plus the structural
decomposition used everywhere else: cyclomatic number, the pruned core of a
unicyclic or bicyclic graph, its skeleton paths, and the trees hanging off
core vertices.

Graphs are immutable: a sorted tuple of sorted edge pairs plus the vertex
count.  Formats: a plain edge-list text form and graph6.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge %r out of range for n=%d" % (e, self.n))
            if u == v:
                raise ValueError("loop at vertex %d" % u)
            if u > v:
                raise ValueError("edge %r must be sorted" % (e,))
            if e in seen:
                raise ValueError("duplicate edge %r" % (e,))
            seen.add(e)


def make_graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of pairs, sorting as needed."""
    norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
    return Graph(n, tuple(norm))


def adjacency(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_connected(g: Graph) -> bool:
    adj = adjacency(g)
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def cyclomatic_number(g: Graph) -> int:
    """Edges minus vertices plus one, for a connected graph."""
    if not is_connected(g):
        raise ValueError("cyclomatic number needs a connected graph")
    return len(g.edges) - g.n + 1


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components as (subgraph, original vertex list) pairs,
    ordered by smallest member."""
    adj = adjacency(g)
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        sub, _ = induced_subgraph(g, comp)
        out.append((sub, comp))
    return out


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Image of g under the vertex map v -> perm[v]."""
    return make_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """a and b side by side, b's vertices shifted up by a.n."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return make_graph(a.n + b.n, edges)


def induced_subgraph(g: Graph, vertices: list[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on the given vertices; returns it with the old-to-new map."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return make_graph(len(vertices), edges), index


# --- core decomposition ---------------------------------------------------


def core_vertices(g: Graph) -> list[int]:
    """Vertices left after repeatedly deleting degree-1 vertices.

    Empty for a tree; the unique cycle for cyclomatic number 1; the union of
    both cycles and any path joining them for cyclomatic number 2.
    """
    deg = degrees(g)
    adj = adjacency(g)
    alive = [True] * g.n
    queue = [v for v in range(g.n) if deg[v] == 1]
    while queue:
        v = queue.pop()
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return [v for v in range(g.n) if alive[v]]


@dataclass(frozen=True)
class AttachedTree:
    """The tree hanging off one core vertex, rooted there.

    vertices[0] is the root (the core vertex itself); edges are in the
    original graph's labels.
    """

    root: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def attached_trees(g: Graph, core: list[int]) -> dict[int, AttachedTree]:
    """For each core vertex, the pendant tree rooted at it (possibly just the
    root alone)."""
    core_set = set(core)
    adj = adjacency(g)
    out: dict[int, AttachedTree] = {}
    for r in core:
        verts = [r]
        edges: list[tuple[int, int]] = []
        stack = [r]
        seen = {r}
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in core_set or w in seen:
                    continue
                seen.add(w)
                verts.append(w)
                edges.append((min(u, w), max(u, w)))
                stack.append(w)
        out[r] = AttachedTree(r, tuple(verts), tuple(sorted(edges)))
    return out


@dataclass(frozen=True)
class Skeleton:
    """Shape of the core of a bicyclic graph.

    kind is 'theta' (two branch vertices joined by three internally disjoint
    paths), 'shared' (two cycles meeting in exactly one vertex), or
    'dumbbell' (two disjoint cycles joined by a path).

    For theta: anchors = (u, v), paths = three internal-vertex lists sorted
    by (length, vertex labels); lengths = edge counts of the paths.
    For shared: anchors = (c,), paths = the two cycles as vertex lists
    starting and ending next to c, sorted by (length, labels); lengths are
    cycle lengths.
    For dumbbell: anchors = (a, b) the cycle vertices of degree 3 in the
    core, paths = (cycle A minus a, cycle B minus b, bridge interior),
    lengths = (|cycle A|, |cycle B|, bridge edge count).
    """

    kind: str
    anchors: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]


def _core_adjacency(g: Graph, core: list[int]) -> dict[int, list[int]]:
    core_set = set(core)
    adj: dict[int, list[int]] = {v: [] for v in core}
    for u, v in g.edges:
        if u in core_set and v in core_set:
            adj[u].append(v)
            adj[v].append(u)
    for row in adj.values():
        row.sort()
    return adj


def _walk(
    adj: dict[int, list[int]], start: int, first: int, stops: set[int]
) -> tuple[tuple[int, ...], int]:
    """Follow degree-2 vertices from start through first until hitting a stop
    vertex; returns (interior vertices, stop vertex reached)."""
    path: list[int] = []
    prev, cur = start, first
    while cur not in stops:
        path.append(cur)
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
    return tuple(path), cur


def skeleton(g: Graph) -> Skeleton:
    """Classify the core of a graph with cyclomatic number 2."""
    core = core_vertices(g)
    adj = _core_adjacency(g, core)
    branch = sorted(v for v in core if len(adj[v]) >= 3)
    if len(branch) == 1:
        c = branch[0]
        # four core edges at c pair up into two cycles through it
        cycles = []
        seen_first = set()
        for first in adj[c]:
            if first in seen_first:
                continue
            interior, _ = _walk(adj, c, first, {c})
            seen_first.add(first)
            seen_first.add(interior[-1])
            cycles.append(interior)
        cycles.sort(key=lambda p: (len(p), p))
        return Skeleton(
            "shared", (c,), tuple(cycles), tuple(len(p) + 1 for p in cycles)
        )
    u, v = branch
    walks = [(first, *_walk(adj, u, first, {u, v})) for first in adj[u]]
    if all(end == v for _, _, end in walks):
        three = sorted((p for _, p, _ in walks), key=lambda p: (len(p), p))
        return Skeleton(
            "theta", (u, v), tuple(three), tuple(len(p) + 1 for p in three)
        )
    # dumbbell: the walks back to u trace u's cycle, the walk to v the bridge
    cyc_u = next(p for _, p, end in walks if end == u)
    bridge = next(p for _, p, end in walks if end == v)
    cyc_v = next(
        p
        for first in adj[v]
        for p, end in [_walk(adj, v, first, {u, v})]
        if end == v
    )
    a, b, ca, cb = u, v, cyc_u, cyc_v
    if (len(cb), cb) < (len(ca), ca):
        a, b, ca, cb = v, u, cyc_v, cyc_u
        bridge = tuple(reversed(bridge))
    return Skeleton(
        "dumbbell",
        (a, b),
        (ca, cb, bridge),
        (len(ca) + 1, len(cb) + 1, len(bridge) + 1),
    )


@dataclass(frozen=True)
class FamilyTag:
    """Coarse family of a connected graph: name plus bicyclic subtype.

    kind is "tree", "unicyclic", "bicyclic" or "other"; subtype is 1 for a
    theta core, 2 for two cycles joined by a bridge, 3 for two cycles sharing
    a vertex, and 0 otherwise.  extra holds the cyclomatic number for "other".
    """

    kind: str
    subtype: int = 0
    extra: int = 0


_SUBTYPE = {"theta": 1, "dumbbell": 2, "shared": 3}


def classify_family(g: Graph) -> FamilyTag:
    if not is_connected(g):
        raise ValueError("graph is not connected")
    c = len(g.edges) - g.n + 1
    if c == 0:
        return FamilyTag("tree")
    if c == 1:
        return FamilyTag("unicyclic")
    if c == 2:
        return FamilyTag("bicyclic", _SUBTYPE[skeleton(g).kind])
    return FamilyTag("other", 0, c)


def eccentricities(g: Graph) -> list[int]:
    adj = adjacency(g)
    out = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        far = 0
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        far = dist[w]
                        nxt.append(w)
            frontier = nxt
        if min(dist) < 0:
            raise ValueError("graph is not connected")
        out.append(far)
    return out


def center(g: Graph) -> list[int]:
    """Vertices of minimum eccentricity."""
    ecc = eccentricities(g)
    best = min(ecc)
    return [v for v in range(g.n) if ecc[v] == best]


def splice(g1: Graph, v1: int, g2: Graph, w1: int) -> tuple[Graph, list[int]]:
    """Glue g2 onto g1 by identifying w1 with v1.

    Returns the merged graph and the new index of each g2 vertex; g1 keeps
    its indices.
    """
    remap = []
    nxt = g1.n
    for w in range(g2.n):
        if w == w1:
            remap.append(v1)
        else:
            remap.append(nxt)
            nxt += 1
    edges = list(g1.edges) + [(remap[x], remap[y]) for x, y in g2.edges]
    return make_graph(nxt, edges), remap


def link(g1: Graph, v1: int, g2: Graph, w1: int) -> tuple[Graph, list[int]]:
    """Join g2 to g1 by a new edge from v1 to w1.

    Returns the merged graph and the new index of each g2 vertex.
    """
    remap = [g1.n + w for w in range(g2.n)]
    edges = list(g1.edges) + [(remap[x], remap[y]) for x, y in g2.edges]
    edges.append((v1, remap[w1]))
    return make_graph(g1.n + g2.n, edges), remap


# --- formats ---------------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    """First line 'n m', then one 'u v' line per edge."""
    lines = ["%d %d" % (g.n, len(g.edges))]
    lines.extend("%d %d" % e for e in g.edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a 'n m' header line")
    n, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise ValueError("header says %d edges, found %d" % (m, len(rows) - 1))
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError("bad edge line %r" % " ".join(row))
        edges.append((int(row[0]), int(row[1])))
    return make_graph(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 writer here only handles n <= 62")
    bits = []
    present = set(g.edges)
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value * 2 + b
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        raise ValueError("graph6 reader here only handles n <= 62")
    n = data[0]
    if n < 1:
        raise ValueError("graph6 graph must have at least one vertex")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != need:
        raise ValueError(
            "graph6 length mismatch: n=%d needs %d data characters, got %d"
            % (n, need, len(data) - 1)
        )
    bits = []
    for d in data[1:]:
        for shift in range(5, -1, -1):
            bits.append((d >> shift) & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return make_graph(n, edges)
