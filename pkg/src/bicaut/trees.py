"""Tree automorphism engine.

Rooted trees get a canonical shape code (child codes sorted and
concatenated, length-prefixed so distinct shapes never share a prefix).
The automorphism group of a rooted tree is the iterated wreath product over
classes of isomorphic child subtrees; a free tree reduces to the rooted case
by rooting at the center, subdividing the central edge first when there are
two centers.  All expressions come back normalized.
"""
from __future__ import annotations

import struct
from collections import Counter
from dataclasses import dataclass

from .graphs import Graph, adjacency, make_graph
from .groups import GroupExpr, Product, Sym, Trivial, Wreath, normalize
from .oracle import Perm


class RootedTree:
    """Parent/children structure plus shape codes for a tree graph.

    order is a discovery order with parents before children, so iterating it
    reversed visits children first.
    """

    def __init__(self, g: Graph, root: int):
        adj = adjacency(g)
        self.g = g
        self.root = root
        self.parent: dict[int, int] = {root: -1}
        self.children: dict[int, list[int]] = {}
        self.order: list[int] = [root]
        if len(g.edges) != g.n - 1:
            raise ValueError("graph is not a tree")
        stack = [root]
        while stack:
            u = stack.pop()
            kids = []
            for w in adj[u]:
                if w == self.parent[u]:
                    continue
                if w in self.parent:
                    raise ValueError("graph is not a tree")
                self.parent[w] = u
                kids.append(w)
                self.order.append(w)
                stack.append(w)
            self.children[u] = kids
        if len(self.order) != g.n:
            raise ValueError("graph is not a connected tree")
        self.code: dict[int, bytes] = {}
        for u in reversed(self.order):
            kid_codes = sorted(self.code[w] for w in self.children[u])
            self.code[u] = struct.pack(">H", len(self.children[u])) + b"".join(
                kid_codes
            )

    def subtree_vertices(self, v: int) -> list[int]:
        out = [v]
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.children[u]:
                out.append(w)
                stack.append(w)
        return out


def rooted_code(g: Graph, root: int) -> bytes:
    return RootedTree(g, root).code[root]


def _expr_at(t: RootedTree, u: int) -> GroupExpr:
    groups = Counter(t.code[w] for w in t.children[u])
    first: dict[bytes, int] = {}
    for w in t.children[u]:
        first.setdefault(t.code[w], w)
    factors: list[GroupExpr] = []
    for code, k in sorted(groups.items()):
        sub = _expr_at(t, first[code])
        factors.append(sub if k == 1 else Wreath(sub, k))
    if not factors:
        return Trivial()
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def rooted_aut_expr(g: Graph, root: int) -> GroupExpr:
    """Automorphism group of the tree rooted at root.

    This is also the stabilizer of root inside the automorphism group of the
    free tree, since fixing a vertex of a tree fixes distances from it.
    """
    return normalize(_expr_at(RootedTree(g, root), root))


def centers(g: Graph) -> list[int]:
    """The one or two middle vertices of a tree."""
    adj = adjacency(g)
    if g.n == 1:
        return [0]
    deg = [len(row) for row in adj]
    alive = g.n
    layer = [v for v in range(g.n) if deg[v] == 1]
    removed = [False] * g.n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            alive -= 1
            for w in adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(v for v in range(g.n) if not removed[v])


def center_rooted(g: Graph) -> tuple[RootedTree, bool]:
    """Root a free tree at its center.

    With two centers the central edge is subdivided by a virtual vertex
    (index g.n), which every automorphism then fixes; the flag reports
    whether that happened.  Automorphisms of the original tree correspond
    exactly to rooted automorphisms of the result.
    """
    cs = centers(g)
    if len(cs) == 1:
        return RootedTree(g, cs[0]), False
    c1, c2 = cs
    edges = [e for e in g.edges if e != (c1, c2)]
    edges += [(c1, g.n), (c2, g.n)]
    return RootedTree(make_graph(g.n + 1, edges), g.n), True


def tree_code(g: Graph) -> bytes:
    """Canonical shape code of a free tree (equal iff isomorphic)."""
    t, virtual = center_rooted(g)
    # flag byte: an edge-centered n-tree gains a virtual root, so without it
    # the code could equal that of a vertex-centered tree on n + 1 vertices
    return (b"\x01" if virtual else b"\x00") + t.code[t.root]


def tree_aut_expr(g: Graph) -> GroupExpr:
    """Automorphism group of a free tree as a normalized expression."""
    t, _ = center_rooted(g)
    return normalize(_expr_at(t, t.root))


def rooted_orbit_labels(t: RootedTree) -> dict[int, int]:
    """Orbit of each vertex under rooted automorphisms: two vertices are
    equivalent iff their parents are and their subtree codes match."""
    labels: dict[int, int] = {t.root: 0}
    table: dict[tuple[int, bytes], int] = {}
    for u in t.order[1:]:
        key = (labels[t.parent[u]], t.code[u])
        if key not in table:
            table[key] = len(table) + 1
        labels[u] = table[key]
    return labels


def tree_vertex_orbits(g: Graph) -> list[list[int]]:
    """Orbits of the free tree's automorphism group on vertices."""
    t, virtual = center_rooted(g)
    labels = rooted_orbit_labels(t)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(labels[v], []).append(v)
    return sorted(groups.values())


def is_vertex_fixed(g: Graph, v: int) -> bool:
    """True when every automorphism of the free tree fixes v."""
    for orbit in tree_vertex_orbits(g):
        if v in orbit:
            return len(orbit) == 1
    raise ValueError("vertex %d out of range" % v)


def aligned_map(t: RootedTree, a: int, b: int, out: dict[int, int]) -> None:
    """Extend out with the code-aligned isomorphism subtree(a) <-> subtree(b),
    both directions.  Requires equal codes."""
    out[a] = b
    out[b] = a
    ka = sorted(t.children[a], key=lambda w: (t.code[w], w))
    kb = sorted(t.children[b], key=lambda w: (t.code[w], w))
    for x, y in zip(ka, kb):
        aligned_map(t, x, y, out)


def _swap_perm(t: RootedTree, a: int, b: int) -> Perm:
    m: dict[int, int] = {}
    aligned_map(t, a, b, m)
    return tuple(m.get(v, v) for v in range(t.g.n))


def rooted_aut_generators(g: Graph, root: int) -> list[Perm]:
    """Generators of the rooted automorphism group: adjacent swaps of
    isomorphic sibling subtrees, recursing into one representative per class."""
    t = RootedTree(g, root)
    gens: list[Perm] = []

    def rec(u: int) -> None:
        classes: dict[bytes, list[int]] = {}
        for w in t.children[u]:
            classes.setdefault(t.code[w], []).append(w)
        for code, members in sorted(classes.items()):
            rec(members[0])
            for a, b in zip(members, members[1:]):
                gens.append(_swap_perm(t, a, b))

    rec(root)
    return gens


def tree_aut_generators(g: Graph) -> list[Perm]:
    """Generators of the free tree's automorphism group."""
    t, virtual = center_rooted(g)
    gens = rooted_aut_generators(t.g, t.root)
    if virtual:
        return [p[: g.n] for p in gens]
    return gens


def rooted_iso(g1: Graph, r1: int, g2: Graph, r2: int) -> bool:
    """Whether two rooted trees are isomorphic as rooted trees."""
    return rooted_code(g1, r1) == rooted_code(g2, r2)


def aligned_iso(t1: RootedTree, t2: RootedTree) -> dict[int, int]:
    """A concrete isomorphism between two rooted trees with equal codes,
    matching children in sorted code order."""
    if t1.code[t1.root] != t2.code[t2.root]:
        raise ValueError("rooted trees are not isomorphic")
    out: dict[int, int] = {}

    def rec(a: int, b: int) -> None:
        out[a] = b
        ka = sorted(t1.children[a], key=lambda w: (t1.code[w], w))
        kb = sorted(t2.children[b], key=lambda w: (t2.code[w], w))
        for x, y in zip(ka, kb):
            rec(x, y)

    rec(t1.root, t2.root)
    return out


@dataclass(frozen=True)
class FixInfo:
    """Vertices fixed by every automorphism of a tree.

    fixed is empty exactly when the tree has two centers swapped by some
    automorphism; empty_reason then says so.
    """

    fixed: tuple[int, ...]
    empty_reason: str | None = None


def fix_info(g: Graph) -> FixInfo:
    fixed = tuple(o[0] for o in tree_vertex_orbits(g) if len(o) == 1)
    if fixed:
        return FixInfo(fixed)
    return FixInfo((), "edge-center-symmetric")


def bar_construction(g: Graph) -> tuple[Graph, int, int]:
    """Extend a two-center tree so that some vertex becomes fixed.

    The central edge (c1, c2) is subdivided by a new vertex u = g.n, and a
    pendant leaf v = g.n + 1 is hung from u.  The result has the same
    automorphism group order as g, with u and v fixed by every automorphism,
    so v is a safe attachment point.  Needs diameter at least 3: u must end
    up the unique center with the pendant strictly shorter than both sides.
    """
    cs = centers(g)
    if len(cs) != 2:
        raise ValueError("tree has a single center, which is already fixed")
    if g.n == 2:
        raise ValueError("tree diameter must be at least 3")
    c1, c2 = cs
    u, v = g.n, g.n + 1
    edges = [e for e in g.edges if e != (c1, c2)]
    edges += [(c1, u), (c2, u), (u, v)]
    return make_graph(g.n + 2, edges), u, v


def forest_aut_expr(g: Graph) -> GroupExpr:
    """Automorphism group of a disjoint union of trees: isomorphic components
    wreathe with the symmetric group permuting them."""
    from .graphs import components

    groups: dict[bytes, tuple[int, GroupExpr]] = {}
    for sub, _ in components(g):
        code = tree_code(sub)
        if code in groups:
            k, e = groups[code]
            groups[code] = (k + 1, e)
        else:
            groups[code] = (1, tree_aut_expr(sub))
    factors: list[GroupExpr] = []
    for code in sorted(groups):
        k, e = groups[code]
        factors.append(e if k == 1 else Wreath(e, k))
    return normalize(Product(tuple(factors)) if len(factors) > 1 else factors[0])
