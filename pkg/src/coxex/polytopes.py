"""Root systems and minuscule orbit polytopes in exact integer coordinates.

Every vector here is twice its textbook value, so spin weights such as
(-1/2, ..., -1/2) and the E7 roots (+-1/2, ..., +-1/2) become integer
vectors.  Reflections are invariant under this global scale.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable

from .combinatorics import elements, mask_of, mask_str, size
from .errors import BadParams, NonIntegralPairing, UnsupportedPolytope
from .tropical import Var

Vector = tuple


def dot(u: Vector, v: Vector) -> int:
    return sum(a * b for a, b in zip(u, v))


def pairing(v: Vector, alpha: Vector) -> int:
    """<v, alpha> = 2 (v, alpha) / (alpha, alpha), required integral."""
    num = 2 * dot(v, alpha)
    den = dot(alpha, alpha)
    if num % den:
        raise NonIntegralPairing(f"<{v}, {alpha}> = {num}/{den}")
    return num // den


def reflect(v: Vector, alpha: Vector) -> Vector:
    c = pairing(v, alpha)
    return tuple(a - c * b for a, b in zip(v, alpha))


def _unit(n: int, i: int, scale: int = 2) -> list[int]:
    v = [0] * n
    v[i - 1] = scale
    return v


def _vec(*parts) -> Vector:
    return tuple(sum(x) for x in zip(*parts))


# ---------------------------------------------------------------------------
# root systems

@dataclass(frozen=True)
class RootSystem:
    type_tag: str
    dim: int
    roots: tuple
    simple_roots: tuple

    def __len__(self):
        return len(self.roots)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    def reflections(self) -> list[Vector]:
        """One root per reflecting hyperplane (the positive ones)."""
        rho = _generic_functional(self.dim)
        return [a for a in self.roots if dot(a, rho) > 0]


def _generic_functional(dim: int) -> Vector:
    # powers of 2 make every signed sum of distinct coordinates nonzero
    return tuple(4 ** k for k in range(dim))


def _simple_from_positive(roots) -> tuple:
    rho = _generic_functional(len(roots[0]))
    pos = [a for a in roots if dot(a, rho) > 0]
    pos_set = set(pos)
    simple = []
    for a in pos:
        decomposable = any(
            tuple(x - y for x, y in zip(a, b)) in pos_set for b in pos if b != a
        )
        if not decomposable:
            simple.append(a)
    return tuple(sorted(simple, key=lambda a: -dot(a, rho)))


def _pm_pairs(n: int, short: bool, long: bool) -> list[Vector]:
    roots = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            roots.append(_vec([si * x for x in _unit(n, i)], [sj * x for x in _unit(n, j)]))
    for i in range(1, n + 1):
        if short:
            roots.extend([tuple(_unit(n, i)), tuple(-x for x in _unit(n, i))])
        if long:
            roots.extend([tuple(_unit(n, i, 4)), tuple(-x for x in _unit(n, i, 4))])
    return roots


@lru_cache(maxsize=None)
def root_system(kind: str, n: int = 0) -> RootSystem:
    """``kind`` in A, B, C, D (with ``n``), E6 or E7.

    ``A`` with ``n`` means A_{n-1} acting on R^n.
    """
    kind = kind.upper()
    if kind == "A":
        if n < 2:
            raise BadParams("A_{n-1} needs n >= 2")
        roots = [
            _vec(_unit(n, i), [-x for x in _unit(n, j)])
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j
        ]
        simple = [_vec(_unit(n, i + 1), [-x for x in _unit(n, i)]) for i in range(1, n)]
        return RootSystem(f"A{n - 1}", n, tuple(roots), tuple(simple))
    if kind in ("B", "C", "D"):
        if n < 2:
            raise BadParams(f"{kind}_n needs n >= 2")
        roots = _pm_pairs(n, short=kind == "B", long=kind == "C")
        simple = [_vec(_unit(n, i), [-x for x in _unit(n, i + 1)]) for i in range(1, n)]
        if kind == "B":
            simple.append(tuple(_unit(n, n)))
        elif kind == "C":
            simple.append(tuple(_unit(n, n, 4)))
        else:
            simple.append(_vec(_unit(n, n - 1), _unit(n, n)))
        return RootSystem(f"{kind}{n}", n, tuple(roots), tuple(simple))
    if kind in ("E6", "E7"):
        roots = []
        for i in range(1, 9):
            for j in range(1, 9):
                if i != j:
                    roots.append(_vec(_unit(8, i), [-x for x in _unit(8, j)]))
        for quad in itertools.combinations(range(1, 9), 4):
            roots.append(tuple(1 if k in quad else -1 for k in range(1, 9)))
        if kind == "E6":
            e78 = tuple([0] * 6 + [2, 2])
            roots = [a for a in roots if dot(a, e78) == 0]
        return RootSystem(kind, 8, tuple(roots), _simple_from_positive(roots))
    raise BadParams(f"unknown root system {kind!r}")


# ---------------------------------------------------------------------------
# polytopes

@dataclass(frozen=True)
class AmbientPolytope:
    name: str
    vertices: tuple  # ((label, vector), ...)
    root_system: RootSystem
    params: tuple = field(default=())

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def labels(self) -> tuple:
        return tuple(lab for lab, _ in self.vertices)

    @cached_property
    def index(self) -> dict:
        return {lab: p for p, (lab, _) in enumerate(self.vertices)}

    @cached_property
    def by_vector(self) -> dict:
        return {vec: lab for lab, vec in self.vertices}

    def vector(self, label) -> Vector:
        return self.vertices[self.index[label]][1]

    def var(self, label) -> Var:
        if self.name in ("cube", "demicube", "hypersimplex"):
            return Var.subset(label)
        if self.name in ("cross_D", "cross_C"):
            return Var.axis(label)
        return Var.vertex(label)

    def label_json(self, label):
        if self.name in ("cube", "demicube", "hypersimplex"):
            return list(elements(label))
        return label

    def label_from_json(self, item) -> Hashable:
        if self.name in ("cube", "demicube", "hypersimplex"):
            return mask_of(item)
        if self.name in ("cross_D", "cross_C"):
            return int(item)
        return str(item)

    def label_str(self, label) -> str:
        if self.name in ("cube", "demicube", "hypersimplex"):
            return mask_str(label)
        if self.name in ("cross_D", "cross_C"):
            return f"{label:+d}"
        return str(label)

    def reflect_label(self, label, alpha: Vector):
        return self.by_vector[reflect(self.vector(label), alpha)]

    def __repr__(self):
        return f"AmbientPolytope({self.name}{self.params}, {len(self)} vertices, {self.root_system.type_tag})"


def _cube_vertex(mask: int, n: int) -> Vector:
    return tuple(1 if mask >> (i - 1) & 1 else -1 for i in range(1, n + 1))


_ALIASES = {
    "221": "2_21", "2_21": "2_21", "e6": "2_21", "e6_221": "2_21",
    "321": "3_21", "3_21": "3_21", "e7": "3_21", "e7_321": "3_21",
    "cube": "cube", "hypersimplex": "hypersimplex", "demicube": "demicube",
    "cross_d": "cross_D", "d-cross": "cross_D", "cross_c": "cross_C", "c-cross": "cross_C",
}


@lru_cache(maxsize=None)
def build(name: str, n: int = 0, k: int = 0, sign: int = 1) -> AmbientPolytope:
    """Construct an ambient polytope.

    ``hypersimplex`` uses (n, k); ``cube``, ``cross_D``, ``cross_C`` use n;
    ``demicube`` uses n and ``sign`` (+1 even subsets, -1 odd subsets).
    """
    key = _ALIASES.get(name.lower())
    if key is None:
        raise BadParams(f"unknown polytope {name!r}")
    if key == "hypersimplex":
        if not 1 <= k <= n - 1:
            raise BadParams(f"hypersimplex needs 1 <= k <= n-1, got n={n}, k={k}")
        verts = []
        for combo in itertools.combinations(range(1, n + 1), k):
            m = mask_of(combo)
            verts.append((m, tuple(2 if i in combo else 0 for i in range(1, n + 1))))
        return AmbientPolytope("hypersimplex", tuple(verts), root_system("A", n), (n, k))
    if key in ("cube", "demicube"):
        if n < 2 or n > 16:
            raise BadParams(f"cube dimension must be in 2..16, got {n}")
        masks = range(1 << n)
        if key == "demicube":
            if sign not in (1, -1):
                raise BadParams("demicube sign must be +1 or -1")
            parity = 0 if sign == 1 else 1
            masks = [m for m in masks if size(m) % 2 == parity]
            rs = root_system("D", n)
            params = (n, sign)
        else:
            rs = root_system("B", n)
            params = (n,)
        verts = tuple((m, _cube_vertex(m, n)) for m in masks)
        return AmbientPolytope(key, verts, rs, params)
    if key in ("cross_D", "cross_C"):
        if n < 2:
            raise BadParams("cross polytope needs n >= 2")
        verts = []
        for i in range(1, n + 1):
            verts.append((i, tuple(_unit(n, i))))
            verts.append((-i, tuple(-x for x in _unit(n, i))))
        rs = root_system("D" if key == "cross_D" else "C", n)
        return AmbientPolytope(key, tuple(verts), rs, (n,))
    if key == "2_21":
        verts = []
        for i in range(1, 7):
            verts.append((f"a{i}", _vec(_unit(8, i, 4), _unit(8, 7, 4))))
        for i in range(1, 7):
            verts.append((f"b{i}", _vec(_unit(8, i, 4), _unit(8, 8, 4))))
        for i, j in itertools.combinations(range(1, 7), 2):
            ones = [2] * 8
            verts.append((f"c{i}{j}", _vec(ones, _unit(8, i, -4), _unit(8, j, -4))))
        return AmbientPolytope("2_21", tuple(verts), root_system("E6"), ())
    if key == "3_21":
        verts = []
        for sgn in (1, -1):
            for i, j in itertools.combinations(range(1, 9), 2):
                v = [-2] * 8
                v[i - 1] = v[j - 1] = 6
                lab = f"a{i}{j}" if sgn == 1 else f"-a{i}{j}"
                verts.append((lab, tuple(sgn * x for x in v)))
        return AmbientPolytope("3_21", tuple(verts), root_system("E7"), ())
    raise BadParams(name)  # pragma: no cover


def weyl_orbit(p: AmbientPolytope, start=None, roots=None) -> set:
    """Labels reachable from ``start`` by repeated reflections (simple roots by default)."""
    roots = p.root_system.simple_roots if roots is None else roots
    start = p.labels[0] if start is None else start
    seen = {start}
    queue = deque([start])
    while queue:
        lab = queue.popleft()
        v = p.vector(lab)
        for a in roots:
            w = reflect(v, a)
            if w not in p.by_vector:
                raise AssertionError(f"{p!r} not closed under reflection in {a}")
            nxt = p.by_vector[w]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def separating_roots(u: Vector, v: Vector, rs: RootSystem) -> list[Vector]:
    """Roots whose pairings with ``u`` and ``v`` are nonzero of opposite sign."""
    if tuple(u) == tuple(v):
        raise BadParams("separating_roots needs distinct vectors")
    return [a for a in rs.roots if dot(u, a) * dot(v, a) < 0]


# ---------------------------------------------------------------------------
# exceptional structure: distances, cross facets, antipodes

_REGULARITY = {"2_21": (16, 10), "3_21": (27, 27, 1)}


def _require_exceptional(p: AmbientPolytope) -> None:
    if p.name not in _REGULARITY:
        raise UnsupportedPolytope(f"{p.name} has no distance profile here")


@lru_cache(maxsize=None)
def distance_table(p: AmbientPolytope) -> tuple:
    """Graph distance matrix of the 1-skeleton, read off inner products.

    Distinct vertex pairs take exactly len(profile) inner-product values; the
    largest is adjacency, then distance 2, 3.  The thresholds are derived
    here and validated against the known vertex regularity.
    """
    _require_exceptional(p)
    vecs = [v for _, v in p.vertices]
    values = sorted({dot(vecs[a], vecs[b]) for a in range(len(vecs)) for b in range(len(vecs)) if a != b}, reverse=True)
    expected = _REGULARITY[p.name]
    if len(values) != len(expected):
        raise AssertionError(f"{p.name}: {len(values)} inner-product classes, expected {len(expected)}")
    rank = {val: d for d, val in enumerate(values, 1)}
    dist = tuple(
        tuple(0 if a == b else rank[dot(vecs[a], vecs[b])] for b in range(len(vecs))) for a in range(len(vecs))
    )
    for row in dist:
        counts = Counter(row)
        got = tuple(counts[d] for d in range(1, len(expected) + 1))
        if got != expected:
            raise AssertionError(f"{p.name}: distance profile {got}, expected {expected}")
    return dist


def inner_product_classes(p: AmbientPolytope) -> dict:
    """Map distance -> inner product (scaled coordinates)."""
    dist = distance_table(p)
    out = {}
    for a in range(len(p)):
        for b in range(len(p)):
            if a != b:
                out[dist[a][b]] = dot(p.vertices[a][1], p.vertices[b][1])
    return dict(sorted(out.items()))


def adjacency_profile(p: AmbientPolytope) -> dict:
    """{(label_u, label_v): graph distance} over unordered pairs (u before v)."""
    dist = distance_table(p)
    labs = p.labels
    return {
        (labs[a], labs[b]): dist[a][b]
        for a in range(len(labs))
        for b in range(a + 1, len(labs))
    }


@lru_cache(maxsize=None)
def cross_facets(p: AmbientPolytope) -> tuple:
    """Cross-polytope facets and their antipodal pairs.

    2_21: the non-neighbours of each vertex (27 facets, 10 vertices, 5 pairs).
    3_21: {u, v} plus common neighbours for each distance-2 pair (126 facets,
    12 vertices, 6 pairs).  Antipodal pairs are the pairs at distance 2 inside
    the facet.
    """
    dist = distance_table(p)
    labs = p.labels
    V = range(len(labs))
    facet_sets = []
    if p.name == "2_21":
        for a in V:
            facet_sets.append(frozenset(b for b in V if dist[a][b] == 2))
    else:
        for a in V:
            for b in V:
                if a < b and dist[a][b] == 2:
                    common = {c for c in V if dist[a][c] == 1 and dist[b][c] == 1}
                    facet_sets.append(frozenset({a, b} | common))
    unique = []
    seen = set()
    for f in facet_sets:
        if f not in seen:
            seen.add(f)
            unique.append(f)
    out = []
    for f in unique:
        members = sorted(f)
        pairs = [
            (labs[a], labs[b])
            for a, b in itertools.combinations(members, 2)
            if dist[a][b] == 2
        ]
        out.append((tuple(labs[a] for a in members), tuple(pairs)))
    return tuple(out)


def antipodes_321(p: AmbientPolytope) -> list[tuple[str, str]]:
    """The 28 pairs of vertices at graph distance 3 in 3_21."""
    if p.name != "3_21":
        raise UnsupportedPolytope("antipodes_321 needs the 3_21 polytope")
    dist = distance_table(p)
    labs = p.labels
    return [
        (labs[a], labs[b])
        for a in range(len(labs))
        for b in range(a + 1, len(labs))
        if dist[a][b] == 3
    ]


def from_params(name: str, params=()) -> AmbientPolytope:
    """Inverse of ``(p.name, p.params)``."""
    params = list(params)
    if name == "demicube":
        return build("demicube", params[0], sign=params[1] if len(params) > 1 else 1)
    return build(name, *params)
