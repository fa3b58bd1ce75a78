import itertools
import random
from collections import Counter

import pytest

from coxex.errors import BadParams, NonIntegralPairing, UnsupportedPolytope
from coxex.polytopes import (
    adjacency_profile,
    antipodes_321,
    build,
    cross_facets,
    distance_table,
    dot,
    from_params,
    reflect,
    root_system,
    separating_roots,
    weyl_orbit,
)


def test_reflect_examples():
    # scaled coordinates: e_1 -> (2, 0), e_1 - e_2 -> (2, -2)
    assert reflect((2, 0), (2, -2)) == (0, 2)
    n = 4
    delta_empty = (-1,) * n
    e_n = (0,) * (n - 1) + (2,)
    assert reflect(delta_empty, e_n) == (-1, -1, -1, 1)
    with pytest.raises(NonIntegralPairing):
        reflect((1, 0), (2, 2))


def test_reflection_is_involution():
    rs = root_system("E7")
    p = build("3_21")
    for a in rs.roots[::7]:
        for _, v in p.vertices:
            assert reflect(reflect(v, a), a) == v


@pytest.mark.parametrize(
    "kind,n,count",
    [("A", 5, 20), ("B", 4, 32), ("C", 4, 32), ("D", 4, 24), ("D", 5, 40), ("E6", 0, 72), ("E7", 0, 126)],
)
def test_root_counts_and_closure(kind, n, count):
    rs = root_system(kind, n)
    assert len(rs) == count
    roots = rs.root_set
    assert all(tuple(-x for x in a) in roots for a in rs.roots)
    for a in rs.roots:
        for b in rs.roots:
            assert (2 * dot(a, b)) % dot(b, b) == 0
            assert reflect(a, b) in roots


def test_simple_roots_generate_and_have_right_rank():
    expected = {"A": 4, "B": 4, "C": 4, "D": 4, "E6": 6, "E7": 7}
    for kind, r in expected.items():
        rs = root_system(kind, 5 if kind == "A" else 4)
        assert len(rs.simple_roots) == r
    # every E7 root is reached from the simple roots by simple reflections
    rs = root_system("E7")
    seen = set(rs.simple_roots)
    frontier = list(seen)
    while frontier:
        a = frontier.pop()
        for s in rs.simple_roots:
            b = reflect(a, s)
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    assert seen == rs.root_set


def test_E6_inside_E7():
    e78 = (0,) * 6 + (2, 2)
    assert root_system("E6").root_set == {a for a in root_system("E7").roots if dot(a, e78) == 0}


@pytest.mark.parametrize(
    "args,size",
    [(("hypersimplex", 5, 2), 10), (("cube", 3), 8), (("cross_D", 4), 8), (("cross_C", 3), 6), (("2_21",), 27), (("3_21",), 56)],
)
def test_single_orbit(args, size):
    p = build(*args)
    assert len(p) == size
    assert weyl_orbit(p) == set(p.labels)
    assert len(set(p.labels)) == len(p)


def test_demicubes():
    plus = build("demicube", 4, sign=1)
    minus = build("demicube", 4, sign=-1)
    assert len(plus) == len(minus) == 8
    assert all(bin(m).count("1") % 2 == 0 for m in plus.labels)
    assert weyl_orbit(plus) == set(plus.labels)
    assert from_params("demicube", [4, -1]) == minus
    with pytest.raises(BadParams):
        build("demicube", 4, sign=2)


def test_build_errors():
    with pytest.raises(BadParams):
        build("hypersimplex", 4, 4)
    with pytest.raises(BadParams):
        build("dodecahedron")
    with pytest.raises(BadParams):
        build("cube", 17)


def test_exceptional_coordinates():
    for _, x in build("2_21").vertices:
        assert sum(x[:6]) == 4 and x[6] + x[7] == 4
    assert all(sum(x) == 0 for _, x in build("3_21").vertices)


def test_adjacency_2_21():
    p = build("2_21")
    prof = adjacency_profile(p)
    assert len(prof) == 27 * 26 // 2
    for lab in p.labels:
        ds = Counter(d for pair, d in prof.items() if lab in pair)
        assert ds == {1: 16, 2: 10}
    for i in range(1, 7):
        for j in range(1, 7):
            if i != j:
                a, c = f"a{i}", f"c{min(i, j)}{max(i, j)}"
                key = (a, c) if (a, c) in prof else (c, a)
                assert prof[key] == 2


def test_adjacency_3_21():
    p = build("3_21")
    dist = distance_table(p)
    for a, row in enumerate(dist):
        assert (row.count(1), row.count(2), row.count(3)) == (27, 27, 1)
        far = p.labels[row.index(3)]
        lab = p.labels[a]
        assert far == (lab[1:] if lab.startswith("-") else "-" + lab)
    with pytest.raises(UnsupportedPolytope):
        adjacency_profile(build("cube", 3))


def test_cross_facets_2_21():
    p = build("2_21")
    facets = cross_facets(p)
    assert len(facets) == 27
    assert all(len(v) == 10 and len(pr) == 5 for v, pr in facets)
    by_vertex = dict(zip(p.labels, facets))
    for i in range(1, 7):
        _, pairs = by_vertex[f"a{i}"]
        expected = {frozenset({f"b{j}", f"c{min(i, j)}{max(i, j)}"}) for j in range(1, 7) if j != i}
        assert {frozenset(x) for x in pairs} == expected
        _, pairs = by_vertex[f"b{i}"]
        expected = {frozenset({f"a{j}", f"c{min(i, j)}{max(i, j)}"}) for j in range(1, 7) if j != i}
        assert {frozenset(x) for x in pairs} == expected


def test_cross_facets_3_21_and_pair_multiplicity():
    for name, nf, fsize, npairs in (("2_21", 27, 10, 5), ("3_21", 126, 12, 6)):
        p = build(name)
        facets = cross_facets(p)
        assert len(facets) == nf and {len(v) for v, _ in facets} == {fsize}
        assert {len(pr) for _, pr in facets} == {npairs}
        # brute-forced: each distance-2 pair is an antipode of exactly one facet
        cover = Counter(frozenset(x) for _, pr in facets for x in pr)
        dist = distance_table(p)
        far = {frozenset({p.labels[a], p.labels[b]}) for a in range(len(p)) for b in range(a) if dist[a][b] == 2}
        assert set(cover) == far and set(cover.values()) == {1}


def test_antipodes_321():
    p = build("3_21")
    pairs = antipodes_321(p)
    assert len(pairs) == 28
    assert ("a12", "-a12") in pairs
    m = min(dot(x, y) for (_, x), (_, y) in itertools.combinations(p.vertices, 2))
    assert all(dot(p.vector(a), p.vector(b)) == m for a, b in pairs)
    with pytest.raises(UnsupportedPolytope):
        antipodes_321(build("2_21"))


def test_separating_roots():
    e1, m1 = (2, 0), (-2, 0)
    sep = separating_roots(e1, m1, root_system("D", 2))
    assert sorted(sep) == sorted([(2, 2), (2, -2), (-2, 2), (-2, -2)])
    sepC = separating_roots((2, 0, 0), (-2, 0, 0), root_system("C", 3))
    assert (4, 0, 0) in sepC and (-4, 0, 0) in sepC
    assert (4, 0, 0) not in separating_roots((2, 0, 0), (-2, 0, 0), root_system("D", 3))
    with pytest.raises(BadParams):
        separating_roots(e1, e1, root_system("D", 2))


def test_face_reflection_smoke():
    rng = random.Random(5)
    for name in ("2_21", "3_21"):
        p = build(name)
        facets = [set(v) for v, _ in cross_facets(p)]
        roots = p.root_system.reflections()
        for _ in range(4):
            M = set(rng.sample(p.labels, rng.randint(2, 14)))
            for F in facets:
                inside = sorted(M & F)
                for u, v in itertools.combinations(inside, 2):
                    x, y = p.vector(u), p.vector(v)
                    for a in roots:
                        if dot(x, a) * dot(y, a) >= 0:
                            continue
                        su, sv = p.reflect_label(u, a), p.reflect_label(v, a)
                        if su in M and sv in M:
                            assert su in F and sv in F
