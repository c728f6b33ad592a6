import pytest

from graphdot import GuardExceeded, dot_bounded_order, dot_clique_split, dot_exhaustive, dot_star, enumerate_iso_classes
from graphdot.engine import dot_cross_order
from graphdot.graph import clique_split, complete, cycle, disjoint_union, empty, star
from graphdot.special import recognise_split, recognise_star, special_dot

import oracles
from conftest import C4, C5, K4, E4, TWO_K2, random_graph, shuffled


def value_at(g, h, witness):
    a, b = oracles.signed(g), oracles.signed(h)
    return sum(int(a[i, j] * b[witness[i], witness[j]]) for i in range(g.n) for j in range(g.n))


def test_star_examples():
    res = dot_star(K4, 3)
    assert (res.value, res.phase) == (0, 24)
    res = dot_star(E4, 3)
    assert (res.value, res.phase) == (0, 24)
    res = dot_star(star(5, 4), 4)
    assert res.value == 20


def test_split_examples():
    res = dot_clique_split(C4, 2, False)
    assert (res.value, res.phase) == (0, 16)
    assert dot_clique_split(TWO_K2, 2, True).value == 12
    assert dot_clique_split(complete(6), 6, True).value == 30
    assert dot_clique_split(empty(5), 1, False).value == 20
    with pytest.raises(GuardExceeded):
        dot_clique_split(complete(10), 5, False)


@pytest.mark.parametrize("n", range(2, 7))
def test_star_matches_general_solver(n):
    for g in enumerate_iso_classes(n):
        for k in range(n):
            ref = dot_exhaustive(g, star(n, k))
            res = dot_star(g, k)
            assert (res.value, res.phase) == (ref.value, ref.phase)
            assert value_at(g, star(n, k), res.witness) == res.value


@pytest.mark.parametrize("n", range(2, 7))
def test_split_matches_general_solver(n):
    for g in enumerate_iso_classes(n):
        for r in range(1, n + 1):
            if min(r, n - r) > 4:
                continue
            for clique_rest in (False, True):
                h = clique_split(n, r, clique_rest)
                ref = dot_exhaustive(g, h)
                res = dot_clique_split(g, r, clique_rest)
                assert (res.value, res.phase) == (ref.value, ref.phase)
                assert value_at(g, h, res.witness) == res.value


@pytest.mark.parametrize("n", range(3, 7))
def test_bounded_order_matches_oracle(n):
    for k in range(1, min(n, 5)):
        for h in enumerate_iso_classes(k):
            for g in enumerate_iso_classes(n):
                res = dot_bounded_order(g, h)
                assert (res.value, res.phase) == oracles.cross_dot_and_phase(g, h)
                ref = dot_cross_order(g, h)
                assert (ref.value, ref.phase, ref.witness) == (res.value, res.phase, res.witness)


def test_bounded_order_guard():
    with pytest.raises(GuardExceeded):
        dot_bounded_order(complete(8), complete(6))


def _growth(work):
    # log-log slope between successive sizes
    import math

    sizes = [8, 12, 16, 20]
    return [math.log(work[i + 1] / work[i]) / math.log(sizes[i + 1] / sizes[i]) for i in range(3)]


def test_work_grows_polynomially(rng):
    sizes = [8, 12, 16, 20]
    star_work = [dot_star(random_graph(rng, n), n // 2).work for n in sizes]
    split_work = [dot_clique_split(random_graph(rng, n), 3, True).work for n in sizes]
    bounded_work = [dot_bounded_order(random_graph(rng, n), cycle(4)).work for n in sizes]
    assert max(_growth(star_work)) < 2.5
    assert max(_growth(split_work)) < 3 + 2.5
    assert max(_growth(bounded_work)) < 4 + 1


def test_recognition(rng):
    for n in range(2, 8):
        for k in range(n):
            h = shuffled(rng, star(n, k))
            found = recognise_star(h)
            assert found is not None and found[0] == k
            assert star(n, k).relabel(found[1]) == h
    assert recognise_star(C5) is None
    for n in range(2, 8):
        for r in range(1, n + 1):
            for rest in (False, True):
                h = shuffled(rng, clique_split(n, r, rest))
                found = recognise_split(h)
                assert found is not None
                assert clique_split(n, found[0], found[1]).relabel(found[2]) == h
    assert recognise_split(C5) is None
    assert recognise_split(disjoint_union(complete(2), disjoint_union(complete(2), complete(2)))) is None


def test_special_dot_witness_is_valid(rng):
    for _ in range(40):
        n = rng.randint(3, 9)
        g = random_graph(rng, n)
        h = shuffled(rng, star(n, rng.randint(0, n - 1)) if rng.random() < 0.5 else clique_split(n, rng.randint(1, 3), rng.random() < 0.5))
        for x, y in ((g, h), (h, g)):
            res = special_dot(x, y)
            ref = dot_exhaustive(x, y)
            assert (res.value, res.phase) == (ref.value, ref.phase)
            assert value_at(x, y, res.witness) == res.value
    assert special_dot(C5, cycle(5)) is None


def test_special_solvers_scale_past_exhaustive(rng):
    g = random_graph(rng, 40)
    assert dot_star(g, 10).value % 4 == (40 * 39) % 4
    assert dot_clique_split(g, 4, False).value % 4 == (40 * 39) % 4
