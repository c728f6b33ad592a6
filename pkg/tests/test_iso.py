import math
import random

import pytest

from graphdot import GuardExceeded, automorphism_count, canonical_form, enumerate_iso_classes, is_isomorphic
from graphdot.graph import Graph, complete, cycle, path

import oracles
from conftest import C4, C5, K3, K3_K1, K4, P3, P4, TWO_K2, random_graph, shuffled


def test_canonical_form_examples():
    assert canonical_form(Graph.from_edges(3, [(0, 2), (2, 1)])) == canonical_form(P3)
    assert canonical_form(K4) == K4
    relabeled_c4 = Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(relabeled_c4) == canonical_form(C4)


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_form_invariant_under_relabeling(n):
    rng = random.Random(n)
    for g in enumerate_iso_classes(n):
        c = canonical_form(g)
        assert oracles.nx_isomorphic(c, g)
        for _ in range(50):
            assert canonical_form(shuffled(rng, g)) == c


def test_is_isomorphic_examples():
    from graphdot import complement

    assert is_isomorphic(C5, complement(C5))
    assert not is_isomorphic(P4, K3_K1)
    assert is_isomorphic(TWO_K2, Graph.from_edges(4, [(0, 3), (1, 2)]))
    assert not is_isomorphic(K3, K4)  # order mismatch is just False


def test_is_isomorphic_agrees_with_networkx(rng):
    for _ in range(300):
        n = rng.randint(2, 8)
        g = random_graph(rng, n)
        h = shuffled(rng, g) if rng.random() < 0.5 else random_graph(rng, n)
        assert is_isomorphic(g, h) == oracles.nx_isomorphic(g, h)


@pytest.mark.parametrize("g, count", [(K3, 6), (P3, 2), (C4, 8), (complete(5), 120), (cycle(6), 12)])
def test_automorphism_count_examples(g, count):
    assert automorphism_count(g) == count


@pytest.mark.parametrize("n", range(1, 6))
def test_automorphism_count_matches_brute_force_and_divides(n):
    for g in enumerate_iso_classes(n):
        a = automorphism_count(g)
        assert a == oracles.aut_count(g)
        assert math.factorial(n) % a == 0


def test_guards():
    big = path(11)
    with pytest.raises(GuardExceeded):
        canonical_form(big)
    with pytest.raises(GuardExceeded):
        automorphism_count(big)
    with pytest.raises(GuardExceeded):
        enumerate_iso_classes(8)
    with pytest.raises(GuardExceeded):
        enumerate_iso_classes(0)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_catalog_sizes(n, count):
    assert len(enumerate_iso_classes(n)) == count


@pytest.mark.parametrize("n", range(1, 6))
def test_catalog_matches_labeled_recount(n):
    labeled = {canonical_form(g) for g in oracles.all_labeled(n)}
    cat = enumerate_iso_classes(n)
    assert set(cat) == labeled
    assert len(cat) == len(labeled)


def test_catalog_is_deterministic_and_indexable():
    a = enumerate_iso_classes(5)
    b = enumerate_iso_classes(5)
    assert list(a) == list(b)
    sizes = [g.size for g in a]
    assert sizes == sorted(sizes)
    for i, g in enumerate(a):
        assert a.index(g.relabel(list(reversed(range(5))))) == i
