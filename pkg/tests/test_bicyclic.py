"""Engine for unicyclic and bicyclic automorphism groups."""
import random

import pytest

from bicaut.bicyclic import (
    UnsupportedFamilyError,
    analyze,
    candidate_symmetries,
    core_symmetries,
    decompose,
    emit_generators,
    graph_aut_expr,
    reconstruct,
)
from bicaut.generate import (
    CASE_LABELS,
    all_bicyclic,
    all_unicyclic,
    case_instance,
    random_bicyclic,
    skeleton_core,
)
from bicaut.graphs import make_graph, splice
from bicaut.groups import (
    Dihedral,
    KleinWreath,
    Product,
    Sym,
    Trivial,
    Wreath,
    classify,
    order,
    print_expr,
)
from bicaut.oracle import automorphism_count, close_generators, is_automorphism

DIAMOND = make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
K23 = make_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
FIG8_33 = skeleton_core("shared", (3, 3))[0]
FIG8_34 = skeleton_core("shared", (3, 4))[0]
THETA333 = skeleton_core("theta", (3, 3, 3))[0]
DUMB331 = skeleton_core("dumbbell", (3, 3, 1))[0]
C5 = skeleton_core("cycle", (5,))[0]
C6 = skeleton_core("cycle", (6,))[0]


def test_decompose_round_trip():
    for n in range(4, 8):
        for g in all_bicyclic(n):
            assert reconstruct(decompose(g)) == g
    for n in range(3, 8):
        for g in all_unicyclic(n):
            assert reconstruct(decompose(g)) == g


def test_decompose_rejects_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        decompose(make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    k4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(UnsupportedFamilyError):
        decompose(k4)
    with pytest.raises(UnsupportedFamilyError):
        decompose(make_graph(3, [(0, 1), (1, 2)]))  # tree
    with pytest.raises(UnsupportedFamilyError):
        analyze(k4)


def test_analyze_handles_trees():
    a = analyze(make_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert a.family == "tree" and a.case == "-" and a.expr == Sym(3)


def test_candidate_group_sizes():
    assert len(candidate_symmetries(decompose(THETA333))) == 12
    assert len(candidate_symmetries(decompose(DIAMOND))) == 4
    assert len(candidate_symmetries(decompose(FIG8_33))) == 8
    assert len(candidate_symmetries(decompose(FIG8_34))) == 4
    assert len(candidate_symmetries(decompose(DUMB331))) == 8
    assert len(candidate_symmetries(decompose(C5))) == 10


def test_filtered_symmetries_form_a_group():
    rng = random.Random(5)
    for _ in range(40):
        g = random_bicyclic(rng, rng.randint(6, 12))
        dec = decompose(g)
        Q = core_symmetries(dec)
        keys = {tuple(sorted(q.items())) for q in Q}
        for a in Q:
            for b in Q:
                comp = {x: a[b[x]] for x in b}
                assert tuple(sorted(comp.items())) in keys
        assert len(candidate_symmetries(dec)) % len(Q) == 0


def test_frozen_expressions():
    # orders confirmed against the brute-force count in test_matches_oracle
    assert graph_aut_expr(FIG8_33) == Wreath(Sym(2), 2)
    assert graph_aut_expr(FIG8_34) == Product((Sym(2), Sym(2)))
    assert graph_aut_expr(DIAMOND) == Product((Sym(2), Sym(2)))
    assert graph_aut_expr(K23) == Product((Sym(2), Sym(3)))
    assert graph_aut_expr(THETA333) == Product((Sym(2), Sym(3)))
    assert graph_aut_expr(DUMB331) == Wreath(Sym(2), 2)
    assert graph_aut_expr(C5) == Dihedral(5)
    assert graph_aut_expr(C6) == Product((Sym(2), Sym(3)))
    assert graph_aut_expr(skeleton_core("cycle", (3,))[0]) == Sym(3)
    assert graph_aut_expr(skeleton_core("cycle", (4,))[0]) == Wreath(Sym(2), 2)
    tadpole = splice(skeleton_core("cycle", (3,))[0], 0, make_graph(2, [(0, 1)]), 0)[0]
    assert graph_aut_expr(tadpole) == Sym(2)


def test_case_labels_on_deterministic_instances():
    rng = random.Random(0)
    for label in CASE_LABELS:
        for _ in range(4):
            g = case_instance(label, rng)
            a = analyze(g)
            assert a.case == label, (label, a.case, g.edges)
            assert order(a.expr) == automorphism_count(g), (label, g.edges)


def test_case_label_orders():
    assert order(analyze(FIG8_33).expr) == 8
    assert analyze(FIG8_33).case == "M1"
    assert order(analyze(FIG8_34).expr) == 4
    assert analyze(FIG8_34).case == "M6"
    assert analyze(DIAMOND).case == "lem2"
    assert analyze(DUMB331).case == "N1"
    assert analyze(K23).case == "generic"


def test_klein_expression_shape():
    # theta with one pendant per branch-vertex keeps the Klein top
    g = skeleton_core("theta", (2, 4, 4))[0]
    a = analyze(g)
    assert a.case == "lem2"
    assert classify(a.expr) == "T"  # bare core folds into plain wreaths
    t = make_graph(3, [(0, 1), (0, 2)])
    decorated = g
    for v in (3, 5, 6, 8):
        decorated = splice(decorated, v, t, 0)[0]
    a = analyze(decorated)
    assert a.expr == KleinWreath(Sym(2))
    assert order(a.expr) == automorphism_count(decorated) == 64


def test_matches_oracle_small():
    for n in range(4, 8):
        for g in all_bicyclic(n):
            a = analyze(g)
            assert order(a.expr) == automorphism_count(g), g.edges
            assert classify(a.expr) in ("T", "B1", "B2"), (g.edges, print_expr(a.expr))


def test_unicyclic_orders_exhaustive():
    for n in range(3, 11):
        for g in all_unicyclic(n):
            assert order(analyze(g).expr) == automorphism_count(g), g.edges


def test_unicyclic_antipodal_rotation():
    # two distinct pendants repeated antipodally on a 6-cycle: the only
    # nontrivial symmetry is the half-turn, with no reflections
    g = skeleton_core("cycle", (6,))[0]
    p1 = make_graph(2, [(0, 1)])
    p2 = make_graph(3, [(0, 1), (1, 2)])
    for v, t in ((0, p1), (3, p1), (1, p2), (4, p2)):
        g = splice(g, v, t, 0)[0]
    a = analyze(g)
    assert order(a.expr) == automorphism_count(g) == 2


def test_emit_generators():
    rng = random.Random(11)
    graphs = [case_instance(label, rng) for label in CASE_LABELS]
    graphs += [random_bicyclic(rng, rng.randint(6, 11)) for _ in range(25)]
    graphs += all_unicyclic(7)
    for g in graphs:
        a = analyze(g)
        want = order(a.expr)
        gens = emit_generators(g, a)
        for p in gens:
            assert is_automorphism(g, p), (g.edges, p)
        if want <= 100_000:
            assert len(close_generators(g.n, gens, want)) == want, g.edges
