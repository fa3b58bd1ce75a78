"""Exchange-property checkers.

These are the scalar reference predicates: direct transcriptions of the
axioms over Python sets.  The batch engine in :mod:`coxex.sweep` compiles
the same axioms to bit tables and is tested against these.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from . import lp
from .combinatorics import SetSystem, bit, elements, size
from .errors import EmptySystem, GroundSetError, RankMismatch
from .polytopes import AmbientPolytope, build, dot, from_params, reflect


def _rank_check(M: SetSystem, k: int) -> None:
    for A in M.members:
        if size(A) != k:
            raise RankMismatch(f"member {list(elements(A))} does not have size {k}")


def _nonempty(M: SetSystem) -> None:
    if not M.members:
        raise EmptySystem("the axiom needs a nonempty set system")


# ---------------------------------------------------------------------------
# ordinary matroids

def matroid_violation(M: SetSystem, k: int):
    """First (A, B, a) with no b in B minus A such that A - a + b is in M."""
    _rank_check(M, k)
    S = M.members
    for A in sorted(S):
        for B in sorted(S):
            for a in elements(A & ~B):
                if not any((A ^ bit(a) ^ bit(b)) in S for b in elements(B & ~A)):
                    return A, B, a
    return None


def is_matroid(M: SetSystem, k: int) -> bool:
    """Basis exchange.  The empty system passes vacuously."""
    return matroid_violation(M, k) is None


def is_strong_matroid_A(M: SetSystem, k: int) -> bool:
    _rank_check(M, k)
    S = M.members
    for A, B in itertools.combinations(sorted(S), 2):
        ok = any(
            (A ^ bit(a) ^ bit(b)) in S and (B ^ bit(a) ^ bit(b)) in S
            for a in elements(A & ~B)
            for b in elements(B & ~A)
        )
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# delta-matroids

def delta_violation(M: SetSystem):
    S = M.members
    for A in sorted(S):
        for B in sorted(S):
            D = A ^ B
            for a in elements(D):
                # {a, b} is a set: a == b toggles a single element
                if not any((A ^ (bit(a) | bit(b))) in S for b in elements(D)):
                    return A, B, a
    return None


def is_delta_matroid(M: SetSystem) -> bool:
    _nonempty(M)
    return delta_violation(M) is None


def strong_delta_violation(M: SetSystem, distinct: bool = False):
    """First pair (A, B), A != B, with no a, b in A delta B such that both
    A delta {a,b} and B delta {a,b} lie in M.  ``distinct`` forces a != b."""
    S = M.members
    for A, B in itertools.combinations(sorted(S), 2):
        D = elements(A ^ B)
        pairs = itertools.combinations(D, 2) if distinct else itertools.combinations_with_replacement(D, 2)
        ok = False
        for a, b in pairs:
            t = bit(a) | bit(b)
            if (A ^ t) in S and (B ^ t) in S:
                ok = True
                break
        if not ok:
            return A, B
    return None


def is_strong_delta(M: SetSystem) -> bool:
    _nonempty(M)
    return strong_delta_violation(M) is None


def is_even_strong_delta(M: SetSystem) -> bool:
    _nonempty(M)
    return strong_delta_violation(M, distinct=True) is None


def wenzel_violation(M: SetSystem):
    S = M.members
    for A in sorted(S):
        for B in sorted(S):
            D = A ^ B
            for a in elements(D):
                ok = any(
                    (A ^ bit(a) ^ bit(b)) in S and (B ^ bit(a) ^ bit(b)) in S
                    for b in elements(D)
                    if b != a
                )
                if not ok:
                    return A, B, a
    return None


def is_wenzel(M: SetSystem) -> bool:
    _nonempty(M)
    return wenzel_violation(M) is None


def is_even_delta_matroid(M: SetSystem) -> bool:
    return M.is_even() and is_delta_matroid(M)


# ---------------------------------------------------------------------------
# Coxeter matroids on ambient polytopes

@dataclass(frozen=True)
class VertexSubset:
    polytope: AmbientPolytope
    chosen: frozenset

    def __post_init__(self):
        chosen = frozenset(self.chosen)
        missing = [c for c in chosen if c not in self.polytope.index]
        if missing:
            raise GroundSetError(f"labels not in {self.polytope.name}: {missing[:5]}")
        object.__setattr__(self, "chosen", chosen)

    def __len__(self):
        return len(self.chosen)

    def __iter__(self):
        return iter(sorted(self.chosen, key=self.polytope.index.__getitem__))

    @classmethod
    def from_set_system(cls, M: SetSystem, polytope: AmbientPolytope | None = None) -> "VertexSubset":
        p = build("cube", M.n) if polytope is None else polytope
        return cls(p, M.members)

    def to_json(self) -> dict:
        p = self.polytope
        return {
            "polytope": p.name,
            "params": list(p.params),
            "vertices": [p.label_json(lab) for lab in self],
        }

    @classmethod
    def from_json(cls, data) -> "VertexSubset":
        if isinstance(data, str):
            data = json.loads(data)
        p = from_params(data["polytope"], data.get("params", []))
        return cls(p, frozenset(p.label_from_json(v) for v in data["vertices"]))


@lru_cache(maxsize=None)
def _hyperplanes(p: AmbientPolytope) -> tuple:
    return tuple(p.root_system.reflections())


@lru_cache(maxsize=None)
def exchange_options(p: AmbientPolytope, u, v) -> tuple:
    """For the pair (u, v): the images (s u, s v) over every reflecting
    hyperplane strictly separating them."""
    x, y = p.vector(u), p.vector(v)
    out = []
    for a in _hyperplanes(p):
        if dot(x, a) * dot(y, a) < 0:
            out.append((p.by_vector[reflect(x, a)], p.by_vector[reflect(y, a)]))
    return tuple(out)


def coxeter_violation(M: VertexSubset):
    p = M.polytope
    chosen = M.chosen
    for u, v in itertools.combinations(list(M), 2):
        if not any(su in chosen and sv in chosen for su, sv in exchange_options(p, u, v)):
            return u, v
    return None


def coxeter_strong_exchange(M: VertexSubset) -> bool:
    return coxeter_violation(M) is None


def polytope_edges(M: VertexSubset) -> list:
    labs = list(M)
    pts = [M.polytope.vector(lab) for lab in labs]
    return [(labs[a], labs[b]) for a, b in lp.edges(pts)]


def non_root_edge(M: VertexSubset):
    """An edge of P(M) not parallel to any root, or None."""
    p = M.polytope
    roots = _hyperplanes(p)
    for u, v in polytope_edges(M):
        d = [a - b for a, b in zip(p.vector(u), p.vector(v))]
        if not any(lp.parallel(d, r) for r in roots):
            return u, v
    return None


def is_coxeter_matroid(M: VertexSubset) -> bool:
    """Every edge of conv(M) parallel to a root.  Sets with fewer than two
    vertices have no edges and pass."""
    return non_root_edge(M) is None


def subset_verdict(M: SetSystem) -> dict:
    """Verdict object for a set system (type B view)."""
    out = {"n": M.n, "size": len(M), "even": M.is_even()}
    if not M.members:
        out.update(delta=None, strong=None, wenzel=None, witness_pair=None)
        return out
    out["delta"] = is_delta_matroid(M)
    out["strong"] = is_strong_delta(M)
    out["wenzel"] = is_wenzel(M)
    w = strong_delta_violation(M)
    out["witness_pair"] = None if w is None else [list(elements(x)) for x in w]
    return out
