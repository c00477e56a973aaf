"""Exhaustive and random generators for trees, unicyclic and bicyclic
graphs, used by the tests and the fuzz command.

Rooted tree shapes are canonical nested tuples with children in
non-increasing order.  Free trees come from deduplicating rooted shapes by
their centered code.  Unicyclic and bicyclic graphs enumerate as a bare core
plus one rooted shape per core vertex, deduplicated by the minimum of the
shape-code tuple over the bare core's symmetries, so each isomorphism class
appears exactly once.
"""
from __future__ import annotations

import random
import struct
from functools import lru_cache
from itertools import permutations, product

from .graphs import Graph, make_graph, splice
from .trees import tree_code

Shape = tuple


@lru_cache(maxsize=None)
def rooted_shapes(n: int) -> tuple[Shape, ...]:
    """All rooted tree shapes with n vertices."""
    if n == 1:
        return ((),)
    out: list[Shape] = []

    def rec(remaining: int, max_size: int, max_shape: Shape | None, acc: list[Shape]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for size in range(min(remaining, max_size), 0, -1):
            for sh in rooted_shapes(size):
                if size == max_size and max_shape is not None and sh > max_shape:
                    continue
                acc.append(sh)
                rec(remaining - size, size, sh, acc)
                acc.pop()

    rec(n - 1, n - 1, None, [])
    return tuple(out)


def shape_size(sh: Shape) -> int:
    return 1 + sum(shape_size(c) for c in sh)


@lru_cache(maxsize=None)
def shape_code(sh: Shape) -> bytes:
    """Same bytes as the rooted code of the realized shape."""
    return struct.pack(">H", len(sh)) + b"".join(sorted(shape_code(c) for c in sh))


def shape_to_graph(sh: Shape) -> Graph:
    """Realize a shape as a tree rooted at 0, parents before children."""
    edges: list[tuple[int, int]] = []
    counter = [0]

    def build(node: Shape, idx: int) -> None:
        for child in node:
            counter[0] += 1
            edges.append((idx, counter[0]))
            build(child, counter[0])

    build(sh, 0)
    return make_graph(counter[0] + 1, edges)


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[Graph, ...]:
    """All free trees with n vertices, one per isomorphism class."""
    seen: dict[bytes, Graph] = {}
    for sh in rooted_shapes(n):
        g = shape_to_graph(sh)
        seen.setdefault(tree_code(g), g)
    return tuple(seen[k] for k in sorted(seen))


def _ring_edges(vs: list[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _chain_edges(vs: list[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def skeleton_core(kind: str, lengths: tuple[int, ...]) -> tuple[Graph, list[int]]:
    """The bare core plus its slot list (anchors first, then the path
    interiors in length order).  Slot indices equal vertex indices."""
    if kind == "cycle":
        (k,) = lengths
        vs = list(range(k))
        return make_graph(k, _ring_edges(vs)), vs
    if kind == "theta":
        edges: list[tuple[int, int]] = []
        slots = [0, 1]
        nxt = 2
        for length in lengths:
            inner = list(range(nxt, nxt + length - 1))
            nxt += length - 1
            edges += _chain_edges([0] + inner + [1])
            slots += inner
        return make_graph(nxt, edges), slots
    if kind == "shared":
        edges = []
        slots = [0]
        nxt = 1
        for length in lengths:
            inner = list(range(nxt, nxt + length - 1))
            nxt += length - 1
            edges += _ring_edges([0] + inner)
            slots += inner
        return make_graph(nxt, edges), slots
    if kind == "dumbbell":
        la, lb, lbr = lengths
        ia = list(range(2, 2 + la - 1))
        ib = list(range(2 + la - 1, 2 + la - 1 + lb - 1))
        ibr = list(range(2 + la + lb - 2, 2 + la + lb - 2 + lbr - 1))
        edges = _ring_edges([0] + ia) + _ring_edges([1] + ib)
        edges += _chain_edges([0] + ibr + [1])
        n = 2 + la + lb + lbr - 3
        return make_graph(n, edges), [0, 1] + ia + ib + ibr
    raise ValueError("unknown core kind %r" % (kind,))


def _slot_perms(kind: str, lengths: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The symmetries of the bare core as permutations of slot indices."""
    if kind == "cycle":
        (k,) = lengths
        out = []
        for j in range(k):
            out.append(tuple((i + j) % k for i in range(k)))
            out.append(tuple((j - i) % k for i in range(k)))
        return out
    if kind == "theta":
        offs = []
        nxt = 2
        for length in lengths:
            offs.append(nxt)
            nxt += length - 1
        out = []
        for pi in permutations(range(3)):
            if any(lengths[pi[i]] != lengths[i] for i in range(3)):
                continue
            for flip in (False, True):
                perm = list(range(nxt))
                if flip:
                    perm[0], perm[1] = 1, 0
                for i in range(3):
                    li = lengths[i]
                    for j in range(li - 1):
                        jj = li - 2 - j if flip else j
                        perm[offs[i] + j] = offs[pi[i]] + jj
                out.append(tuple(perm))
        return out
    if kind == "shared":
        offs = [1, lengths[0]]
        total = lengths[0] + lengths[1] - 1
        swaps = (False, True) if lengths[0] == lengths[1] else (False,)
        out = []
        for sw in swaps:
            for f0 in (False, True):
                for f1 in (False, True):
                    perm = list(range(total))
                    for i, flip in ((0, f0), (1, f1)):
                        li = lengths[i]
                        ti = 1 - i if sw else i
                        for j in range(li - 1):
                            jj = li - 2 - j if flip else j
                            perm[offs[i] + j] = offs[ti] + jj
                    out.append(tuple(perm))
        return out
    if kind == "dumbbell":
        la, lb, lbr = lengths
        offs = [2, 2 + la - 1, 2 + la + lb - 2]
        total = 2 + la + lb + lbr - 3
        swaps = (False, True) if la == lb else (False,)
        out = []
        for sw in swaps:
            for f0 in (False, True):
                for f1 in (False, True):
                    perm = list(range(total))
                    if sw:
                        perm[0], perm[1] = 1, 0
                        for j in range(lbr - 1):
                            perm[offs[2] + j] = offs[2] + (lbr - 2 - j)
                    for i, flip in ((0, f0), (1, f1)):
                        li = (la, lb)[i]
                        ti = 1 - i if sw else i
                        for j in range(li - 1):
                            jj = li - 2 - j if flip else j
                            perm[offs[i] + j] = offs[ti] + jj
                    out.append(tuple(perm))
        return out
    raise ValueError("unknown core kind %r" % (kind,))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def decorate(core: Graph, slots: list[int], shapes) -> Graph:
    """Splice one rooted shape onto each slot (a bare slot is `()`)."""
    g = core
    for v, sh in zip(slots, shapes):
        if sh != ():
            g, _ = splice(g, v, shape_to_graph(sh), 0)
    return g


def _decorated(kind: str, lengths: tuple[int, ...], n: int) -> list[Graph]:
    core, slots = skeleton_core(kind, lengths)
    extra = n - core.n
    if extra < 0:
        return []
    perms = _slot_perms(kind, lengths)
    seen: set[tuple[bytes, ...]] = set()
    out: list[Graph] = []
    for comp in _compositions(extra, len(slots)):
        pools = [rooted_shapes(c + 1) for c in comp]
        for combo in product(*pools):
            codes = tuple(shape_code(sh) for sh in combo)
            key = min(tuple(codes[p[i]] for i in range(len(slots))) for p in perms)
            if key in seen:
                continue
            seen.add(key)
            out.append(decorate(core, slots, combo))
    return out


def bicyclic_skeletons(n: int):
    """All bicyclic cores with at most n vertices, as (kind, lengths)."""
    for l1 in range(1, n):
        for l2 in range(max(l1, 2), n):
            for l3 in range(l2, n):
                if l1 + l2 + l3 - 1 <= n:
                    yield "theta", (l1, l2, l3)
    for m1 in range(3, n):
        for m2 in range(m1, n):
            if m1 + m2 - 1 <= n:
                yield "shared", (m1, m2)
    for m1 in range(3, n):
        for m2 in range(m1, n):
            for b in range(1, n):
                if m1 + m2 + b - 1 <= n:
                    yield "dumbbell", (m1, m2, b)


def all_bicyclic(n: int) -> list[Graph]:
    """All connected bicyclic graphs with exactly n vertices, one per
    isomorphism class."""
    out: list[Graph] = []
    for kind, lengths in bicyclic_skeletons(n):
        out.extend(_decorated(kind, lengths, n))
    return out


def all_unicyclic(n: int) -> list[Graph]:
    """All connected unicyclic graphs with exactly n vertices, one per
    isomorphism class."""
    out: list[Graph] = []
    for k in range(3, n + 1):
        out.extend(_decorated("cycle", (k,), n))
    return out


def random_attached_tree(rng: random.Random, size: int) -> Graph:
    """A random tree rooted at 0, grown by random parent attachment."""
    edges = [(rng.randrange(i), i) for i in range(1, size)]
    return make_graph(size, edges)


def _random_decorate(rng: random.Random, core: Graph, slots: list[int], extra: int) -> Graph:
    counts = [0] * len(slots)
    for _ in range(extra):
        counts[rng.randrange(len(slots))] += 1
    g = core
    for v, c in zip(slots, counts):
        if c:
            g, _ = splice(g, v, random_attached_tree(rng, c + 1), 0)
    return g


def random_tree(rng: random.Random, n: int) -> Graph:
    return random_attached_tree(rng, n)


def random_unicyclic(rng: random.Random, n: int) -> Graph:
    k = rng.randint(3, n)
    core, slots = skeleton_core("cycle", (k,))
    return _random_decorate(rng, core, slots, n - k)


def random_bicyclic(rng: random.Random, n: int) -> Graph:
    while True:
        kind = rng.choice(("theta", "shared", "dumbbell"))
        if kind == "theta":
            lengths = tuple(sorted(rng.randint(1, n - 1) for _ in range(3)))
            if lengths[1] < 2:
                continue
        elif kind == "shared":
            lengths = tuple(sorted(rng.randint(3, n) for _ in range(2)))
        else:
            m1, m2 = sorted(rng.randint(3, n) for _ in range(2))
            lengths = (m1, m2, rng.randint(1, n))
        core, slots = skeleton_core(kind, lengths)
        if core.n <= n:
            return _random_decorate(rng, core, slots, n - core.n)


CASE_LABELS = (
    "M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8",
    "N1", "N2", "N3", "lem2", "generic",
)


def case_instance(label: str, rng: random.Random) -> Graph:
    """A graph hitting the given case label, with small random decorations
    where the case allows them."""

    def shp(size: int) -> Graph:
        return random_attached_tree(rng, size)

    def put(g: Graph, v: int, t: Graph) -> Graph:
        out, _ = splice(g, v, t, 0)
        return out

    if label == "M1":
        m = rng.randint(3, 5)
        return skeleton_core("shared", (m, m))[0]
    if label == "M2":
        g, slots = skeleton_core("shared", (3, 3))
        t = shp(rng.randint(2, 3))
        for v in slots[1:]:
            g = put(g, v, t)
        return g
    if label == "M3":
        g, slots = skeleton_core("shared", (4, 4))
        t = shp(rng.randint(2, 3))
        return put(put(g, slots[2], t), slots[5], t)
    if label == "M4":
        g, slots = skeleton_core("shared", (3, 3))
        t = shp(rng.randint(2, 3))
        return put(put(g, slots[1], t), slots[3], t)
    if label == "M5":
        g, slots = skeleton_core("shared", (3, 4))
        return put(put(g, slots[1], shp(2)), slots[3], shp(rng.randint(2, 3)))
    if label == "M6":
        return skeleton_core("shared", (3, rng.randint(4, 5)))[0]
    if label == "M7":
        g, slots = skeleton_core("shared", (3, 4))
        t = shp(rng.randint(2, 3))
        return put(put(g, slots[1], t), slots[2], t)
    if label == "M8":
        g, slots = skeleton_core("shared", (3, 4))
        t = shp(2)
        return put(put(put(g, slots[1], t), slots[2], t), slots[3], shp(3))
    if label == "N1":
        m = rng.randint(3, 4)
        return skeleton_core("dumbbell", (m, m, rng.randint(1, 2)))[0]
    if label == "N2":
        return skeleton_core("dumbbell", (3, 4, rng.randint(1, 2)))[0]
    if label == "N3":
        g, slots = skeleton_core("dumbbell", (3, 3, 1))
        t = shp(rng.randint(2, 3))
        return put(put(g, slots[2], t), slots[4], t)
    if label == "lem2":
        tail = rng.choice((1, 3, 4))
        lengths = tuple(sorted((2, 2, tail)))
        return skeleton_core("theta", lengths)[0]
    if label == "generic":
        pick = rng.randrange(3)
        if pick == 0:
            return skeleton_core("theta", (1, 2, 3))[0]
        if pick == 1:
            return skeleton_core("theta", (2, 2, 2))[0]
        g, slots = skeleton_core("dumbbell", (3, 4, 1))
        t = shp(2)
        return put(put(put(g, slots[2], t), slots[3], t), slots[4], shp(3))
    raise ValueError("unknown case label %r" % (label,))
