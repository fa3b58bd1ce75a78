import itertools

import pytest

from coxex.combinatorics import elements, mask_of, size
from coxex.equations import (
    gen_cross_C,
    gen_cross_D,
    gen_E6,
    gen_E7,
    gen_type_A,
    gen_type_B,
    gen_type_D,
    generate,
    support_parity,
)
from coxex.errors import BadParams, BadRank
from coxex.polytopes import build, reflect
from coxex.tropical import BoolQuadric, Var
from coxex.verify import explicit_E6

S = lambda *xs: Var.subset(mask_of(xs))


def oracle_B(n, min_size=3, odd_term=True, parity_filter=None):
    """Independent enumeration: frozensets of frozenset pairs."""
    out = set()
    for I in range(1 << n):
        for J in range(1 << n):
            D = I ^ J
            if bin(D).count("1") < min_size:
                continue
            if parity_filter is not None and bin(D).count("1") % 2:
                continue
            monos = {frozenset({I ^ (1 << (i - 1)), J ^ (1 << (i - 1))}) for i in range(1, n + 1) if D >> (i - 1) & 1}
            if odd_term and bin(D).count("1") % 2:
                monos.add(frozenset({I, J}))
            if parity_filter is not None and (bin(I).count("1") + 1) % 2 != parity_filter:
                continue
            out.add(frozenset(monos))
    return out


def as_oracle(fam):
    return {frozenset(frozenset({u.key, v.key}) for u, v in f.monomials) for f in fam.quadrics()}


def test_type_A_examples():
    fam = gen_type_A(4, 2)
    assert len(fam) == 1
    labels, f = fam.equations[0]
    # the four generators (i, [4] - i) all give the same element of B[X]
    assert {"I": [1], "J": [2, 3, 4]} in labels and len(labels) == 4
    assert f == BoolQuadric.of([(S(1, 2), S(3, 4)), (S(1, 3), S(2, 4)), (S(1, 4), S(2, 3))])
    # with |J| = k + 1 and |I| = k - 1 no pair reaches |J \ I| >= 3 when n = 3
    assert len(gen_type_A(3, 1)) == 0
    assert len(gen_type_A(3, 2)) == 0
    with pytest.raises(BadRank):
        gen_type_A(4, 4)
    with pytest.raises(BadRank):
        gen_type_A(4, 0)


def test_type_A_counts_against_enumeration():
    for n in range(3, 7):
        for k in range(1, n):
            expected = set()
            for I in itertools.combinations(range(1, n + 1), k - 1):
                for J in itertools.combinations(range(1, n + 1), k + 1):
                    free = set(J) - set(I)
                    if len(free) >= 3:
                        expected.add(frozenset(frozenset({mask_of(set(I) | {i}), mask_of(set(J) - {i})}) for i in free))
            assert as_oracle(gen_type_A(n, k)) == expected


def test_type_B_counts_and_example():
    assert len(gen_type_B(3)) == 1
    fam4 = gen_type_B(4)
    assert len(fam4) == 10
    f = BoolQuadric.of([(S(), S(1, 2, 3, 4)), (S(1, 2), S(3, 4)), (S(1, 3), S(2, 4)), (S(1, 4), S(2, 3))])
    assert f in fam4.quadrics()
    for n in (3, 4, 5):
        assert as_oracle(gen_type_B(n)) == oracle_B(n)
    # merged generators keep all their labels: all 8 (I, J) with |I delta J| = 3 give one equation
    assert len(gen_type_B(3).equations[0][0]) == 8


def test_type_D_split_and_counts():
    assert len(gen_type_D(3)) == 0
    for n in (4, 5, 6):
        even, odd = gen_type_D(n, 0), gen_type_D(n, 1)
        assert as_oracle(even) == oracle_B(n, 4, False, 0)
        assert as_oracle(odd) == oracle_B(n, 4, False, 1)
        assert all(support_parity(f) == 0 for f in even.quadrics())
        assert all(support_parity(f) == 1 for f in odd.quadrics())
        assert even.monomial_sets() | odd.monomial_sets() == gen_type_D(n).monomial_sets()
    # frozen from the enumeration oracle above
    assert (len(gen_type_D(4, 0)), len(gen_type_D(5, 0)), len(gen_type_D(6, 0))) == (1, 10, 76)
    f = BoolQuadric.of([(S(), S(1, 2, 3, 4)), (S(1, 2), S(3, 4)), (S(1, 3), S(2, 4)), (S(1, 4), S(2, 3))])
    assert gen_type_D(4, 0).quadrics() == [f]


def test_type_D_is_the_parity_pure_part_of_type_B():
    for n in range(4, 7):
        b = gen_type_B(n)
        expected = set()
        for labels, f in b:
            even_big = any(size(mask_of(l["I"]) ^ mask_of(l["J"])) >= 4 and size(mask_of(l["I"]) ^ mask_of(l["J"])) % 2 == 0 for l in labels)
            if even_big and support_parity(f) is not None:
                expected.add(f.monomials)
        assert gen_type_D(n).monomial_sets() == expected


def _permute(f, perm):
    def relabel(v):
        return Var.subset(mask_of(perm[i - 1] for i in elements(v.key)))

    return f.relabel(relabel).monomials


@pytest.mark.parametrize("make", [lambda n: gen_type_B(n), lambda n: gen_type_D(n), lambda n: gen_type_A(n, 2)])
def test_symmetric_group_equivariance(make):
    for n in (4, 5):
        fam = make(n)
        sets = fam.monomial_sets()
        for i, j in itertools.combinations(range(1, n + 1), 2):
            perm = list(range(1, n + 1))
            perm[i - 1], perm[j - 1] = j, i
            assert {_permute(f, perm) for f in fam.quadrics()} == sets


def test_cross_families():
    f2 = gen_cross_D(2).quadrics()
    assert f2 == [BoolQuadric.of([(Var.axis(1), Var.axis(-1)), (Var.axis(2), Var.axis(-2))])]
    assert len(gen_cross_D(5).quadrics()[0]) == 5
    assert all(len(gen_cross_D(n)) == 1 for n in range(2, 8))
    assert len(gen_cross_C(3)) == 0 and len(gen_cross_C(7)) == 0
    assert gen_cross_C(3).tag == "C-cross"
    with pytest.raises(BadParams):
        gen_cross_D(1)


def test_E6_family():
    fam = gen_E6()
    assert len(fam) == 27
    assert all(len(f) == 5 for f in fam.quadrics())
    assert fam.monomial_sets() == explicit_E6()
    v = Var.vertex
    f_c12 = dict((l[0]["vertex"], f) for l, f in fam)["c12"]
    assert f_c12 == BoolQuadric.of([
        (v("a1"), v("b2")), (v("a2"), v("b1")),
        (v("c34"), v("c56")), (v("c36"), v("c45")), (v("c35"), v("c46")),
    ])


def test_E6_equations_permuted_transitively_by_reflections():
    p = build("2_21")
    fam = gen_E6(p)
    sets = fam.monomial_sets()

    def act(monos, a):
        def img(lab):
            return p.by_vector[reflect(p.vector(lab), a)]

        return frozenset(tuple(sorted((Var.vertex(img(u.key)), Var.vertex(img(w.key))))) for u, w in monos)

    # every root reflection maps the family to itself
    for a in p.root_system.roots:
        assert {act(m, a) for m in sets} == sets
    # simple reflections alone reach all 27 equations
    seen = {next(iter(sets))}
    frontier = list(seen)
    while frontier:
        m = frontier.pop()
        for a in p.root_system.simple_roots:
            m2 = act(m, a)
            if m2 not in seen:
                seen.add(m2)
                frontier.append(m2)
    assert seen == sets


def test_E7_family():
    fam = gen_E7()
    assert len(fam) == 127
    sizes = sorted(len(f) for f in fam.quadrics())
    assert sizes == [6] * 126 + [28]
    big = max(fam.quadrics(), key=len)
    expected = {frozenset({f"a{i}{j}", f"-a{i}{j}"}) for i, j in itertools.combinations(range(1, 9), 2)}
    assert {frozenset({u.key, w.key}) for u, w in big.monomials} == expected


def test_no_degenerate_equations():
    fams = [gen_type_B(n) for n in (3, 4, 5)] + [gen_type_D(n) for n in (4, 5)]
    fams += [gen_type_A(n, k) for n in (4, 5, 6) for k in range(1, n)]
    fams += [gen_E6(), gen_E7(), gen_cross_D(3)]
    for fam in fams:
        assert all(len(f) >= 2 for f in fam.quadrics())


def test_json_shape():
    item = generate("B", 4).to_json()[0]
    assert set(item) == {"family", "n", "label", "monomials"}
    (I_J,) = [x for x in generate("B", 4).to_json() if x["monomials"][0] == [[], [1, 2, 3, 4]]]
    assert [[1, 2], [3, 4]] in I_J["monomials"]
    with pytest.raises(BadParams):
        generate("A", 4)
