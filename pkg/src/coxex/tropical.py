"""Quadrics over the Boolean semifield and their satisfaction predicate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Union

from .combinatorics import SetSystem, elements


class Var(NamedTuple):
    """A variable tag: ``("S", mask)``, ``("X", +-i)`` or ``("V", label)``."""

    kind: str
    key: Union[int, str]

    @classmethod
    def subset(cls, mask: int) -> "Var":
        return cls("S", mask)

    @classmethod
    def axis(cls, i: int) -> "Var":
        if i == 0:
            raise ValueError("signed axis index cannot be 0")
        return cls("X", i)

    @classmethod
    def vertex(cls, label: str) -> "Var":
        return cls("V", label)

    def to_json(self):
        if self.kind == "S":
            return list(elements(self.key))
        return self.key

    def __str__(self):
        if self.kind == "S":
            return "x_" + ("".join(map(str, elements(self.key))) or "0")
        return f"x_{self.key}"


def _sort_key(v: Var):
    if v.kind == "X":
        return (v.kind, abs(v.key), v.key < 0)
    return (v.kind, v.key)


def monomial(u: Var, v: Var) -> tuple[Var, Var]:
    """Canonical unordered pair."""
    return (u, v) if _sort_key(u) <= _sort_key(v) else (v, u)


@dataclass(frozen=True)
class BoolQuadric:
    """A degree-2 element of B[X]: a set of monomials {u, v}.

    Set storage collapses duplicate monomials, which is exactly the
    simplification B[X] performs before satisfaction is decided.
    """

    monomials: frozenset = field(default_factory=frozenset)

    @classmethod
    def of(cls, pairs: Iterable[tuple[Var, Var]]) -> "BoolQuadric":
        return cls(frozenset(monomial(u, v) for u, v in pairs))

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.sorted_monomials())

    def sorted_monomials(self) -> list[tuple[Var, Var]]:
        return sorted(self.monomials, key=lambda m: (_sort_key(m[0]), _sort_key(m[1])))

    def key(self) -> tuple:
        return tuple((_sort_key(u), _sort_key(v)) for u, v in self.sorted_monomials())

    def variables(self) -> set:
        return {x for m in self.monomials for x in m}

    def relabel(self, f) -> "BoolQuadric":
        return BoolQuadric.of((f(u), f(v)) for u, v in self.monomials)

    def __str__(self):
        parts = []
        for u, v in self.sorted_monomials():
            parts.append(f"{u}⊙{v}" if u != v else f"{u}⊙{u}")
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self) -> list:
        return [[u.to_json(), v.to_json()] for u, v in self.sorted_monomials()]


def firing_count(ones, f: BoolQuadric) -> int:
    return sum(1 for u, v in f.monomials if u in ones and v in ones)


def satisfies(ones, f: BoolQuadric) -> bool:
    """True unless exactly one monomial of ``f`` evaluates to 1.

    ``ones`` is the set of variables assigned 1 (anything supporting ``in``).
    A square ``u⊙u`` fires iff ``u`` is 1.
    """
    return firing_count(ones, f) != 1


def satisfies_all(ones, family) -> tuple[bool, int | None]:
    """``(True, None)`` or ``(False, index of first violated equation)``."""
    for idx, f in enumerate(family):
        if not satisfies(ones, f):
            return False, idx
    return True, None


def assignment(system: SetSystem) -> frozenset:
    """nu_M: the subset variables of the members of ``system``."""
    return frozenset(Var.subset(m) for m in system.members)


def tropicalize(q) -> BoolQuadric:
    """Support of a collected rational quadric (see :mod:`coxex.quadrics`)."""
    return BoolQuadric.of(pair for pair, c in q.terms.items() if c != 0)
