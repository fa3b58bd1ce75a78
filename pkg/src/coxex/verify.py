"""Machine verification suites.

Each suite returns a :class:`SuiteResult`.  Bounds (largest n, number of
random trials, seed) are parameters so the same code runs at desk scale
from the command line and at full scale in the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import checks, equations, quadrics, realization, sweep
from .combinatorics import SetSystem, elements, full_mask, mask_of, size, subsets_of
from .polytopes import (
    adjacency_profile,
    antipodes_321,
    build,
    cross_facets,
    distance_table,
    dot,
    reflect,
)
from .tropical import BoolQuadric, Var, assignment, satisfies_all, tropicalize


@dataclass
class SuiteResult:
    id: str
    title: str
    instances: int = 0
    failures: int = 0
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
            "details": self.details,
        }


class _Tally:
    def __init__(self, res: SuiteResult):
        self.res = res

    def check(self, key: str, ok: bool, count: int = 1):
        self.res.instances += count
        if not ok:
            self.res.failures += 1
            self.res.details.setdefault("failed", []).append(key)


def _compare(res: SuiteResult, key: str, a: np.ndarray, b: np.ndarray) -> None:
    mismatch = int((a != b).sum())
    res.instances += len(a)
    res.failures += mismatch
    res.details[key] = {"systems": int(len(a)), "positive": int(a.sum()), "discrepancies": mismatch}


# ---------------------------------------------------------------------------

def suite_counts(**_) -> SuiteResult:
    res = SuiteResult("counts", "equation family sizes")
    t = _Tally(res)
    b3, b4 = equations.gen_type_B(3), equations.gen_type_B(4)
    e6, e7 = equations.gen_E6(), equations.gen_E7()
    e7_sizes = sorted(len(f) for f in e7.quadrics())
    res.details.update(B3=len(b3), B4=len(b4), E6=len(e6), E7=len(e7))
    t.check("B3 == 1", len(b3) == 1)
    t.check("B4 == 10", len(b4) == 10)
    t.check("E6 == 27 x 5", len(e6) == 27 and all(len(f) == 5 for f in e6.quadrics()))
    t.check("E7 == 126 x 6 + 28", e7_sizes == [6] * 126 + [28])
    return res


def suite_type_B(max_n: int = 6, trials: int = 100000, seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("B-strong", "strong delta-matroid iff type B tropical equations")
    for n in range(3, min(max_n, 6) + 1):
        U = sweep.subsets_universe(n)
        ax = sweep.strong_delta_axiom(U)
        tr = sweep.tropical_table(equations.gen_type_B(n), U, sweep.subset_item)
        if n <= 4:
            words, key = sweep.all_words(len(U)), f"n={n} exhaustive"
        else:
            words, key = sweep.sample_words(len(U), trials, seed + n), f"n={n} random"
        _compare(res, key, ax.evaluate(words), tr.evaluate(words))
    return res


def suite_type_D(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("D-even", "even delta-matroid iff type D tropical equations")
    for n in range(2, min(max_n, 5) + 1):
        for parity in (0, 1):
            U = sweep.subsets_universe(n, parity=parity)
            ax = sweep.delta_axiom(U)
            fam = equations.gen_type_D(n, parity) if n >= 4 else equations.EquationFamily("D", n)
            tr = sweep.tropical_table(fam, U, sweep.subset_item)
            words = sweep.all_words(len(U))
            _compare(res, f"n={n} parity={parity}", ax.evaluate(words), tr.evaluate(words))
    return res


def suite_even_strong(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("even-strong", "even delta-matroid iff strong iff Wenzel")
    for n in range(1, min(max_n, 5) + 1):
        for parity in (0, 1):
            U = sweep.subsets_universe(n, parity=parity)
            words = sweep.all_words(len(U))
            d = sweep.delta_axiom(U).evaluate(words)
            s = sweep.strong_delta_axiom(U).evaluate(words)
            es = sweep.strong_delta_axiom(U, distinct=True).evaluate(words)
            w = sweep.wenzel_axiom(U).evaluate(words)
            bad = int(((d != s) | (d != w) | (d != es)).sum())
            res.instances += len(words)
            res.failures += bad
            res.details[f"n={n} parity={parity}"] = {"systems": len(words), "positive": int(d.sum()), "discrepancies": bad}
    return res


def suite_type_A(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("A-matroid", "matroid iff type A tropical equations iff strong exchange")
    for n, k in ((4, 2), (5, 2), (5, 3)):
        if n > max_n:
            continue
        U = sweep.subsets_universe(n, rank=k)
        words = sweep.all_words(len(U))
        m = sweep.matroid_axiom(U).evaluate(words)
        s = sweep.strong_matroid_axiom(U).evaluate(words)
        tr = sweep.tropical_table(equations.gen_type_A(n, k), U, sweep.subset_item).evaluate(words)
        bad = int(((m != s) | (m != tr)).sum())
        res.instances += len(words)
        res.failures += bad
        res.details[f"n={n} k={k}"] = {"systems": len(words), "positive": int(m.sum()), "discrepancies": bad}
    return res


def suite_counterexamples(**_) -> SuiteResult:
    res = SuiteResult("counterexamples", "worked non-strong delta-matroids")
    t = _Tally(res)
    M = SetSystem.from_sets(3, [[], [1], [2], [3], [1, 2, 3]])
    V = checks.VertexSubset.from_set_system(M)
    fam = equations.gen_type_B(3)
    failing = [i for i, f in enumerate(fam.quadrics()) if not satisfies_all(assignment(M), [f])[0]]
    t.check("delta", checks.is_delta_matroid(M))
    t.check("coxeter matroid", checks.is_coxeter_matroid(V))
    t.check("not strong", not checks.is_strong_delta(M))
    t.check("not strong (reflections)", not checks.coxeter_strong_exchange(V))
    t.check("exactly one failing B equation", len(failing) == 1)
    M2 = SetSystem(4, frozenset(m for m in range(16) if size(m) != 2))
    even = M2.restrict_parity(0)
    t.check("minus P42 delta", checks.is_delta_matroid(M2))
    t.check("minus P42 not strong", not checks.is_strong_delta(M2))
    t.check("even restriction", even.members == {0, 15})
    t.check("even restriction not delta", not checks.is_delta_matroid(even))
    return res


def explicit_E6() -> set:
    """The 27 equations written out by hand in vertex labels."""
    out = set()
    c = lambda i, j: f"c{min(i, j)}{max(i, j)}"
    v = Var.vertex
    for i in range(1, 7):
        out.add(BoolQuadric.of((v(f"b{j}"), v(c(i, j))) for j in range(1, 7) if j != i).monomials)
        out.add(BoolQuadric.of((v(f"a{j}"), v(c(i, j))) for j in range(1, 7) if j != i).monomials)
    for i, j in itertools.combinations(range(1, 7), 2):
        k, kk, l, ll = [x for x in range(1, 7) if x not in (i, j)]
        pairs = [
            (v(f"a{i}"), v(f"b{j}")),
            (v(f"a{j}"), v(f"b{i}")),
            (v(c(k, l)), v(c(kk, ll))),
            (v(c(k, ll)), v(c(kk, l))),
            (v(c(k, kk)), v(c(l, ll))),
        ]
        out.add(BoolQuadric.of(pairs).monomials)
    return out


def suite_polytopes(**_) -> SuiteResult:
    res = SuiteResult("polytopes", "2_21 and 3_21 structure")
    t = _Tally(res)
    p6, p7 = build("2_21"), build("3_21")
    d6, d7 = distance_table(p6), distance_table(p7)
    t.check("2_21 has 27 vertices", len(p6) == 27)
    t.check("2_21 16-regular", all(row.count(1) == 16 and row.count(2) == 10 for row in d6))
    f6 = cross_facets(p6)
    t.check("27 facets of 10 with 5 pairs", len(f6) == 27 and all(len(v) == 10 and len(pr) == 5 for v, pr in f6))
    t.check("E6 antipodes match explicit lists", equations.gen_E6(p6).monomial_sets() == explicit_E6())
    t.check("2_21 coordinate sums", all(sum(x[:6]) == 4 and x[6] + x[7] == 4 for _, x in p6.vertices))
    t.check("3_21 has 56 vertices", len(p7) == 56)
    t.check("3_21 profile 27/27/1", all((row.count(1), row.count(2), row.count(3)) == (27, 27, 1) for row in d7))
    t.check("3_21 coordinate sums", all(sum(x) == 0 for _, x in p7.vertices))
    f7 = cross_facets(p7)
    t.check("126 facets of 12 with 6 pairs", len(f7) == 126 and all(len(v) == 12 and len(pr) == 6 for v, pr in f7))
    anti = antipodes_321(p7)
    t.check("28 antipodes a_ij / -a_ij", len(anti) == 28 and all(b == "-" + a for a, b in anti))
    for p, count in ((p6, 72), (p7, 126)):
        rs = p.root_system
        t.check(f"{rs.type_tag} has {count} roots", len(rs) == count)
        perm_ok = all(
            sorted(reflect(x, a) for _, x in p.vertices) == sorted(x for _, x in p.vertices) for a in rs.roots
        )
        t.check(f"{rs.type_tag} reflections permute vertices", perm_ok, count)
    res.details.update(
        e6_inner_products=sorted({dot(a, b) for _, a in p6.vertices for _, b in p6.vertices}, reverse=True),
        e7_inner_products=sorted({dot(a, b) for _, a in p7.vertices for _, b in p7.vertices}, reverse=True),
    )
    return res


def suite_exceptional(trials: int = 100000, seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("E-props", "E6/E7 strong exchange iff tropical equations")
    for name, gen in (("2_21", equations.gen_E6), ("3_21", equations.gen_E7)):
        p = build(name)
        ax = sweep.coxeter_axiom(p)
        tr = sweep.tropical_table(gen(p), ax.universe, lambda v: v.key)
        words = sweep.sample_words(len(p), trials, seed + len(p))
        _compare(res, f"{name} random", ax.evaluate(words), tr.evaluate(words))
    return res


def suite_cross(max_n: int = 4, **_) -> SuiteResult:
    res = SuiteResult("cross", "cross polytopes of types D and C")
    for n in range(2, min(max_n, 4) + 1):
        pD = build("cross_D", n)
        ax = sweep.coxeter_axiom(pD)
        tr = sweep.tropical_table(equations.gen_cross_D(n), ax.universe, lambda v: v.key)
        words = sweep.all_words(len(pD))
        strong = ax.evaluate(words)
        _compare(res, f"D{n} strong iff f", strong, tr.evaluate(words))
        # Coxeter matroid implies strong, by exact edge computation
        bad = 0
        cox = 0
        for w, s in zip(words, strong):
            V = checks.VertexSubset(pD, frozenset(ax.universe.decode(int(w))))
            if checks.is_coxeter_matroid(V):
                cox += 1
                bad += not s
        res.instances += len(words)
        res.failures += bad
        res.details[f"D{n} coxeter implies strong"] = {"systems": len(words), "coxeter": cox, "discrepancies": bad}
        pC = build("cross_C", n)
        axC = sweep.coxeter_axiom(pC)
        wordsC = sweep.all_words(len(pC))
        okC = axC.evaluate(wordsC)
        nbad = int((~okC).sum())
        res.instances += len(wordsC)
        res.failures += nbad
        res.details[f"C{n} all strong"] = {"systems": len(wordsC), "discrepancies": nbad}
    return res


def suite_spin_quadrics(max_n: int = 6, **_) -> SuiteResult:
    res = SuiteResult("spin-quadrics", "exact identities for the spin variety quadrics")
    t = _Tally(res)
    for n in range(3, min(max_n, 5) + 1):
        A, B = quadrics.ex_family(n), quadrics.lichtenstein_family(n)
        ra, rb = quadrics.span_rank(A), quadrics.span_rank(B)
        res.details[f"span n={n}"] = {"ex_rank": ra, "basis_size": len(B), "basis_rank": rb}
        t.check(f"span n={n}", quadrics.span_equal(A, B) and rb == len(B))
    if max_n >= 5:
        n, full = 5, full_mask(5)
        weight_zero = [quadrics.ex(K, full) for K in range(1 << n)]
        gens = {frozenset(q.terms) for q in weight_zero}
        frame = quadrics.AntipodeFrame(n)
        basis = [quadrics.lichtenstein_B(M, frame) for M in range(1 << n) if size(M) in quadrics.admissible_M_sizes(frame)]
        res.details["weight zero n=5"] = {
            "generators": len(gens),
            "generator_rank": quadrics.span_rank(weight_zero),
            "basis": len(basis),
        }
        t.check("weight zero dims", len(gens) == 16 and len(basis) == 6 and quadrics.span_rank(weight_zero) == 6
                and quadrics.span_equal(weight_zero, basis))
        t.check("66 basis elements at n=5", len(quadrics.lichtenstein_family(5)) == 66)
    bad = total = 0
    for n in range(1, min(max_n, 6) + 1):
        for fr in quadrics.all_frames(n):
            for K in fr.members():
                for i in elements(fr.S):
                    total += 1
                    bad += not quadrics.antipode_difference_holds(K, i, fr)
    t.check("antipode sign difference", bad == 0, total)
    bad = total = 0
    for n in range(1, min(max_n, 6) + 1):
        for fr in quadrics.all_frames(n):
            if fr.m < 3:
                continue
            for K in fr.members():
                total += 1
                bad += not quadrics.equal_up_to_sign(quadrics.sign_verification_quadric(K, fr), quadrics.ex(K, fr.S))
    t.check("sign verification", bad == 0, total)
    bad = total = 0
    for n in range(3, min(max_n, 6) + 1):
        for S in range(1 << n):
            if 3 <= size(S) <= 6:
                total += 1
                bad += not quadrics.chi_identity_check(n, S)
    t.check("chi identity", bad == 0, total)
    bad = total = literal_ok = literal_ok_nontrivial = 0
    for n in range(1, min(max_n, 5) + 1):
        for fr in quadrics.all_frames(n):
            sizes = quadrics.admissible_M_sizes(fr)
            for M in subsets_of(fr.S):
                if size(M) in sizes:
                    total += 1
                    bad += not quadrics.p_from_ex_check(M, fr)
                    lit = quadrics.p_from_ex_check(M, fr, reading="complement")
                    literal_ok += lit
                    literal_ok_nontrivial += lit and bool(fr.N | fr.L)
    t.check("p from ex", bad == 0, total)
    res.details["p from ex"] = {
        "triples": total,
        "frame_reading_failures": bad,
        "complement_reading_passes": literal_ok,
        "complement_reading_passes_with_N_or_L": literal_ok_nontrivial,
    }
    return res


def _dedup(qs):
    return list({q: None for q in qs})


def suite_realization(max_n: int = 6, samples: int = 100, seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("realization", "realizations annihilate quadrics and have strong supports")
    t = _Tally(res)
    for n in range(4, min(max_n, 6) + 1):
        fam = _dedup(quadrics.family_D(n, parity=0))
        trop = equations.gen_type_D(n, 0).quadrics()
        bad = 0
        for s in range(samples):
            rng = random.Random(seed * 1000003 + 7919 * n + s)
            x = realization.spinor_vector(realization.random_skew(n, rng))
            pt = realization.as_point(x)
            M = SetSystem(n, realization.support(x))
            ok = all(q.evaluate(pt) == 0 for q in fam)
            ok &= checks.is_delta_matroid(M) and checks.is_strong_delta(M) and M.is_even()
            ok &= satisfies_all(assignment(M), trop)[0]
            bad += not ok
        t.check(f"spinor n={n}", bad == 0, samples)
    for n, k in ((4, 2), (5, 2), (5, 3), (6, 2), (6, 3)):
        if n > max_n:
            continue
        fam = quadrics.family_A(n, k)
        trop = equations.gen_type_A(n, k).quadrics()
        bad = 0
        for s in range(samples):
            rng = random.Random(seed * 1000003 + 104729 * n + 31 * k + s)
            x = realization.plucker_vector(realization.random_matrix(k, n, rng))
            pt = realization.as_point(x)
            M = SetSystem(n, realization.support(x))
            ok = all(q.evaluate(pt) == 0 for q in fam)
            ok &= checks.is_matroid(M, k) and satisfies_all(assignment(M), trop)[0]
            bad += not ok
        t.check(f"plucker n={n} k={k}", bad == 0, samples)
    for n in range(2, min(max_n, 6) + 1):
        q = quadrics.cross_D_quadric(n)
        f = equations.gen_cross_D(n).quadrics()
        bad = 0
        for s in range(samples):
            x = realization.cross_vector_D(n, seed * 1000003 + 97 * n + s)
            ok = q.evaluate(x) == 0 and satisfies_all(frozenset(x), f)[0]
            bad += not ok
        t.check(f"cross D n={n}", bad == 0, samples)
    return res


def suite_tropicalization(max_n: int = 5, **_) -> SuiteResult:
    res = SuiteResult("tropicalisation", "tropicalised quadric families equal the tropical families")
    t = _Tally(res)

    def same(qs, fam):
        return {tropicalize(q).monomials for q in qs} == fam.monomial_sets()

    for n in range(3, min(max_n, 5) + 1):
        for k in range(1, n):
            t.check(f"A n={n} k={k}", same(quadrics.family_A(n, k), equations.gen_type_A(n, k)))
        t.check(f"B n={n}", same(quadrics.family_B(n), equations.gen_type_B(n)))
        if n >= 4:
            for parity in (None, 0, 1):
                t.check(f"D n={n} parity={parity}", same(quadrics.family_D(n, parity), equations.gen_type_D(n, parity)))
    for n in range(2, min(max_n, 5) + 1):
        t.check(f"D-cross n={n}", same([quadrics.cross_D_quadric(n)], equations.gen_cross_D(n)))
    return res


SUITES = {
    "counts": suite_counts,
    "B-strong": suite_type_B,
    "D-even": suite_type_D,
    "even-strong": suite_even_strong,
    "A-matroid": suite_type_A,
    "counterexamples": suite_counterexamples,
    "polytopes": suite_polytopes,
    "E-props": suite_exceptional,
    "cross": suite_cross,
    "spin-quadrics": suite_spin_quadrics,
    "realization": suite_realization,
    "tropicalisation": suite_tropicalization,
}


def run_suite(name: str, **kw) -> SuiteResult:
    t0 = time.perf_counter()
    res = SUITES[name](**kw)
    res.elapsed = time.perf_counter() - t0
    return res
