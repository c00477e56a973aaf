"""Brute-force automorphism oracle."""
import pytest

from bicaut.graphs import make_graph
from bicaut.oracle import (
    all_automorphisms,
    are_isomorphic,
    automorphism_count,
    automorphism_count_and_generators,
    automorphism_generators,
    close_generators,
    compose,
    identity_perm,
    invert,
    is_automorphism,
    oracle_bound,
    vertex_orbits,
)

P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
C5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
C6 = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
STAR = make_graph(4, [(0, 1), (0, 2), (0, 3)])
K4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
PETERSEN = make_graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
)


def test_known_counts():
    assert automorphism_count(make_graph(1, [])) == 1
    assert automorphism_count(P4) == 2
    assert automorphism_count(STAR) == 6
    assert automorphism_count(C5) == 10
    assert automorphism_count(C6) == 12
    assert automorphism_count(K4) == 24
    assert automorphism_count(PETERSEN) == 120
    diamond = make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    assert automorphism_count(diamond) == 4
    k23 = make_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert automorphism_count(k23) == 12


def test_counts_with_pinned_vertices():
    assert automorphism_count(C6, fixed=(0,)) == 2
    assert automorphism_count(C6, fixed=(0, 1)) == 1
    assert automorphism_count(STAR, fixed=(1,)) == 2
    assert automorphism_count(STAR, fixed=(0,)) == 6


def test_generators_generate_the_group():
    for g in (P4, STAR, C5, C6, K4):
        count, gens = automorphism_count_and_generators(g)
        assert count == automorphism_count(g)
        for p in gens:
            assert is_automorphism(g, p)
        assert len(close_generators(g.n, gens, 1000)) == count


def test_all_automorphisms():
    auts = all_automorphisms(C5)
    assert len(auts) == 10
    assert identity_perm(5) in auts
    for p in auts:
        assert is_automorphism(C5, p)
        assert compose(p, invert(p)) == identity_perm(5)


def test_close_generators_cap():
    gens = automorphism_generators(K4)
    with pytest.raises(ValueError):
        close_generators(4, gens, 10)


def test_vertex_orbits():
    assert vertex_orbits(C6) == [[0, 1, 2, 3, 4, 5]]
    assert vertex_orbits(STAR) == [[0], [1, 2, 3]]
    assert vertex_orbits(P4) == [[0, 3], [1, 2]]


def test_are_isomorphic():
    other = make_graph(4, [(3, 2), (2, 1), (1, 0)])
    assert are_isomorphic(P4, other)
    assert not are_isomorphic(P4, STAR)
    assert not are_isomorphic(P4, make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
    # same degree sequence, different structure
    a = make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    b = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    assert not are_isomorphic(a, b)


def test_oracle_bound_env(monkeypatch):
    assert oracle_bound() == 64
    monkeypatch.setenv("BICAUT_ORACLE_BOUND", "8")
    assert oracle_bound() == 8
    monkeypatch.setenv("BICAUT_ORACLE_BOUND", "not a number")
    assert oracle_bound() == 64


def test_bound_enforced(monkeypatch):
    monkeypatch.setenv("BICAUT_ORACLE_BOUND", "3")
    with pytest.raises(ValueError):
        automorphism_count(P4)
