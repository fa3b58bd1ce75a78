import random

import pytest
from hypothesis import given, settings, strategies as st

from coxex import checks, lp
from coxex.combinatorics import SetSystem, masks_of_size, size
from coxex.errors import EmptySystem, GroundSetError, RankMismatch
from coxex.polytopes import build


def sets(n, *ss):
    return SetSystem.from_sets(n, ss)


def test_matroid_examples():
    U24 = SetSystem(4, frozenset(masks_of_size(4, 2)))
    assert checks.is_matroid(U24, 2) and checks.is_strong_matroid_A(U24, 2)
    bad = sets(4, [1, 2], [3, 4])
    assert not checks.is_matroid(bad, 2) and not checks.is_strong_matroid_A(bad, 2)
    assert checks.is_matroid(sets(4, [1, 3]), 2)
    with pytest.raises(RankMismatch):
        checks.is_matroid(sets(4, [1], [1, 2]), 2)


def test_matroid_iff_strong_A_exhaustive():
    for n in (3, 4, 5):
        for k in range(1, n):
            universe = masks_of_size(n, k)
            if len(universe) > 10:
                continue
            for code in range(1 << len(universe)):
                M = SetSystem(n, frozenset(universe[p] for p in range(len(universe)) if code >> p & 1))
                assert checks.is_matroid(M, k) == checks.is_strong_matroid_A(M, k)


def test_delta_examples():
    M = sets(3, [], [1], [2], [3], [1, 2, 3])
    assert checks.is_delta_matroid(M)
    assert not checks.is_strong_delta(M)
    no_p42 = SetSystem(4, frozenset(m for m in range(16) if size(m) != 2))
    assert checks.is_delta_matroid(no_p42)
    # {0, 12}: a = 1 needs {1} or {1,2} reachable from 0; {1,2} works, so this one is a delta-matroid,
    # whereas {0, 123} is not (no 2-step move from 0 lands in the system)
    assert checks.is_delta_matroid(sets(2, [], [1, 2]))
    assert not checks.is_delta_matroid(sets(3, [], [1, 2, 3]))
    assert checks.is_strong_delta(sets(1, [], [1]))
    with pytest.raises(EmptySystem):
        checks.is_delta_matroid(SetSystem(3, frozenset()))


def test_wenzel_examples():
    assert not checks.is_wenzel(sets(1, [], [1]))
    assert checks.is_wenzel(sets(4, [], [1, 2], [3, 4], [1, 2, 3, 4]))
    # non-even delta-matroids never satisfy it
    M = sets(3, [], [1], [2], [3], [1, 2, 3])
    assert checks.is_delta_matroid(M) and not checks.is_wenzel(M)
    with pytest.raises(EmptySystem):
        checks.is_wenzel(SetSystem(2, frozenset()))


def test_even_delta_are_strong_and_wenzel_n4():
    for parity in (0, 1):
        universe = [m for m in range(16) if size(m) % 2 == parity]
        for code in range(1, 1 << len(universe)):
            M = SetSystem(4, frozenset(universe[p] for p in range(8) if code >> p & 1))
            d = checks.is_delta_matroid(M)
            assert d == checks.is_strong_delta(M) == checks.is_wenzel(M) == checks.is_even_strong_delta(M)


def test_strong_delta_restrictions_are_even_delta():
    for code in range(1, 1 << 16):
        M = SetSystem(4, frozenset(m for m in range(16) if code >> m & 1))
        if checks.strong_delta_violation(M) is None:
            for parity in (0, 1):
                R = M.restrict_parity(parity)
                if R.members:
                    assert checks.is_delta_matroid(R)


def test_counterexample_on_cube():
    M = sets(3, [], [1], [2], [3], [1, 2, 3])
    V = checks.VertexSubset.from_set_system(M)
    assert checks.is_coxeter_matroid(V)
    assert not checks.coxeter_strong_exchange(V)
    assert checks.coxeter_violation(V) == (0, 7)


def test_coxeter_on_cube_matches_delta_axioms():
    for code in range(1, 256):
        M = SetSystem(3, frozenset(m for m in range(8) if code >> m & 1))
        V = checks.VertexSubset.from_set_system(M)
        assert checks.coxeter_strong_exchange(V) == checks.is_strong_delta(M)
        assert checks.is_coxeter_matroid(V) == checks.is_delta_matroid(M)


def test_coxeter_on_demicube_matches_even_strong():
    p = build("demicube", 4, sign=1)
    labels = p.labels
    for code in range(1, 256):
        chosen = frozenset(labels[t] for t in range(8) if code >> t & 1)
        V = checks.VertexSubset(p, chosen)
        M = SetSystem(4, chosen)
        assert checks.coxeter_strong_exchange(V) == checks.is_even_strong_delta(M)


def test_cross_polytope_examples():
    pC = build("cross_C", 3)
    rng = random.Random(1)
    for _ in range(30):
        chosen = frozenset(rng.sample(pC.labels, rng.randint(1, 6)))
        assert checks.coxeter_strong_exchange(checks.VertexSubset(pC, chosen))
    pD = build("cross_D", 3)
    pair = checks.VertexSubset(pD, {1, -1})
    assert not checks.is_coxeter_matroid(pair)
    assert checks.coxeter_strong_exchange(checks.VertexSubset(pD, {2}))


def test_full_cube_is_coxeter_matroid():
    V = checks.VertexSubset(build("cube", 3), frozenset(range(8)))
    assert checks.is_coxeter_matroid(V)
    assert len(checks.polytope_edges(V)) == 12


def test_vertex_subset_validation_and_json():
    p = build("2_21")
    with pytest.raises(GroundSetError):
        checks.VertexSubset(p, {"z9"})
    V = checks.VertexSubset(p, {"a1", "c12"})
    assert checks.VertexSubset.from_json(V.to_json()) == V
    W = checks.VertexSubset(build("demicube", 4, sign=-1), {1, 7})
    assert checks.VertexSubset.from_json(W.to_json()) == W


def test_edges_of_simple_shapes():
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert lp.edges(square) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert lp.edges([(0, 0, 0), (1, 1, 1)]) == [(0, 1)]
    assert lp.parallel((2, -2, 0), (1, -1, 0)) and not lp.parallel((2, 0), (0, 2))


def test_feasible_examples():
    assert lp.feasible([(1, 0), (-1, 0)], [1, -2])
    assert not lp.feasible([(1, 0), (-1, 0)], [2, -1])
    assert lp.feasible([], [])


CIRCLE = [(5, 0), (4, 3), (3, 4), (0, 5), (-3, 4), (-4, 3), (-5, 0), (-4, -3), (-3, -4), (0, -5), (3, -4), (4, -3)]


@settings(max_examples=80, deadline=None)
@given(st.sets(st.integers(0, 11), min_size=3, max_size=12))
def test_edges_against_angular_order(picked):
    # independent oracle: points on a circle, listed by angle, have consecutive pairs as edges
    order = sorted(picked)
    points = [CIRCLE[t] for t in order]
    expected = {tuple(sorted((a, (a + 1) % len(order)))) for a in range(len(order))}
    assert set(lp.edges(points)) == expected
