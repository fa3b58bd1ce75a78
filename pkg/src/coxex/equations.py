"""Generators for the tropical strong exchange equation families.

Equations are collected as elements of B[X]: generators producing the same
monomial set are merged and their labels concatenated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import bit, check_ground, elements, size
from .errors import BadParams, BadRank, UnsupportedPolytope
from .polytopes import AmbientPolytope, antipodes_321, build, cross_facets
from .tropical import BoolQuadric, Var


@dataclass
class EquationFamily:
    tag: str
    n: int | None
    equations: list = field(default_factory=list)  # [(labels, BoolQuadric)]

    def __len__(self):
        return len(self.equations)

    def __iter__(self):
        return iter(self.equations)

    def quadrics(self) -> list[BoolQuadric]:
        return [f for _, f in self.equations]

    def monomial_sets(self) -> set:
        return {f.monomials for _, f in self.equations}

    def to_json(self) -> list:
        out = []
        for labels, f in self.equations:
            item = {"family": self.tag}
            if self.n is not None:
                item["n"] = self.n
            item["label"] = labels[0] if len(labels) == 1 else labels
            item["monomials"] = f.to_json()
            out.append(item)
        return out


def _collect(tag: str, n, generated) -> EquationFamily:
    merged: dict = {}
    for label, f in generated:
        merged.setdefault(f, []).append(label)
    return EquationFamily(tag, n, [(labels, f) for f, labels in merged.items()])


def _S(mask: int) -> Var:
    return Var.subset(mask)


def _lab(I: int, J: int) -> dict:
    return {"I": list(elements(I)), "J": list(elements(J))}


def gen_type_A(n: int, k: int) -> EquationFamily:
    check_ground(n)
    if not 1 <= k <= n - 1:
        raise BadRank(f"rank must satisfy 1 <= k <= n-1, got k={k}, n={n}")

    def gen():
        for I in range(1 << n):
            if size(I) != k - 1:
                continue
            for J in range(1 << n):
                if size(J) != k + 1 or size(J & ~I) < 3:
                    continue
                f = BoolQuadric.of((_S(I | bit(i)), _S(J & ~bit(i))) for i in elements(J & ~I))
                yield _lab(I, J), f

    return _collect("A", n, gen())


def _exchange(I: int, J: int, odd: bool) -> BoolQuadric:
    S = I ^ J
    pairs = [(_S(I ^ bit(i)), _S(J ^ bit(i))) for i in elements(S)]
    if odd and size(S) % 2:
        pairs.append((_S(I), _S(J)))
    return BoolQuadric.of(pairs)


def gen_type_B(n: int) -> EquationFamily:
    check_ground(n)
    if n < 3:
        raise BadParams("type B equations need n >= 3")

    def gen():
        for I in range(1 << n):
            for J in range(1 << n):
                if size(I ^ J) >= 3:
                    yield _lab(I, J), _exchange(I, J, True)

    return _collect("B", n, gen())


def support_parity(f: BoolQuadric) -> int | None:
    """Common parity of all subset variables in ``f``; None if mixed."""
    ps = {size(v.key) % 2 for v in f.variables()}
    return ps.pop() if len(ps) == 1 else None


def gen_type_D(n: int, parity: int | None = None) -> EquationFamily:
    """Type D equations; ``parity`` 0 keeps the even-support list (D_{n,+}),
    1 the odd-support list (D_{n,-}), None both."""
    check_ground(n)

    def gen():
        for I in range(1 << n):
            for J in range(1 << n):
                S = I ^ J
                if size(S) >= 4 and size(S) % 2 == 0:
                    f = _exchange(I, J, False)
                    if parity is None or support_parity(f) == parity:
                        yield _lab(I, J), f

    tag = "D" if parity is None else ("D+" if parity == 0 else "D-")
    return _collect(tag, n, gen())


def gen_cross_D(n: int) -> EquationFamily:
    if n < 2:
        raise BadParams("cross polytope needs n >= 2")
    f = BoolQuadric.of((Var.axis(i), Var.axis(-i)) for i in range(1, n + 1))
    return EquationFamily("D-cross", n, [([{"cross": n}], f)])


def gen_cross_C(n: int) -> EquationFamily:
    if n < 2:
        raise BadParams("cross polytope needs n >= 2")
    return EquationFamily("C-cross", n, [])


def _vertex_pairs(pairs) -> BoolQuadric:
    return BoolQuadric.of((Var.vertex(a), Var.vertex(b)) for a, b in pairs)


def gen_E6(p: AmbientPolytope | None = None) -> EquationFamily:
    p = build("2_21") if p is None else p
    if p.name != "2_21":
        raise UnsupportedPolytope("gen_E6 needs the 2_21 polytope")
    # the facet list is indexed by vertex: facet t = non-neighbours of vertex t
    gen = ((({"vertex": lab}), _vertex_pairs(pairs)) for lab, (_, pairs) in zip(p.labels, cross_facets(p)))
    return _collect("E6", None, gen)


def gen_E7(p: AmbientPolytope | None = None) -> EquationFamily:
    p = build("3_21") if p is None else p
    if p.name != "3_21":
        raise UnsupportedPolytope("gen_E7 needs the 3_21 polytope")

    def gen():
        for verts, pairs in cross_facets(p):
            yield {"facet": list(verts)}, _vertex_pairs(pairs)
        yield {"polytope": "3_21"}, _vertex_pairs(antipodes_321(p))

    return _collect("E7", None, gen())


FAMILIES = ("A", "B", "D", "D-cross", "C-cross", "E6", "E7")


def generate(family: str, n: int | None = None, k: int | None = None) -> EquationFamily:
    if family == "A":
        if n is None or k is None:
            raise BadParams("family A needs --n and --k")
        return gen_type_A(n, k)
    if family in ("B", "D", "D-cross", "C-cross") and n is None:
        raise BadParams(f"family {family} needs --n")
    if family == "B":
        return gen_type_B(n)
    if family == "D":
        return gen_type_D(n)
    if family == "D-cross":
        return gen_cross_D(n)
    if family == "C-cross":
        return gen_cross_C(n)
    if family == "E6":
        return gen_E6()
    if family == "E7":
        return gen_E7()
    raise BadParams(f"unknown family {family!r}")
