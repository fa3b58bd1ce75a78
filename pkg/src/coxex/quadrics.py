"""Exact rational quadrics: Plücker relations, quadratic embedding
equations, antipode signs and the Lichtenstein basis of the spin variety.

Variables are subset variables ``Var.subset(mask)`` (and signed axis
variables for the cross polytope quadric).  Every sign goes through
:func:`coxex.combinatorics.ell_pair` on explicit sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import linalg
from .combinatorics import (
    elements,
    ell_pair,
    full_mask,
    reverse,
    size,
    sort_length,
    subsets_of,
    bit,
)
from .errors import (
    BadParity,
    BadShape,
    NotAdmissible,
    NotDisjoint,
    NotInFace,
    SNotLargeEnough,
    TooSmall,
)
from .tropical import Var, monomial


class RationalQuadric:
    """Sparse quadratic form ``sum c * u * v`` in collected form."""

    __slots__ = ("terms", "label")

    def __init__(self, terms: Mapping | None = None, label=None):
        collected: dict = {}
        for pair, c in (terms or {}).items():
            key = monomial(*pair)
            collected[key] = collected.get(key, 0) + Fraction(c)
        self.terms = {k: v for k, v in collected.items() if v != 0}
        self.label = label

    @classmethod
    def from_list(cls, items: Iterable, label=None) -> "RationalQuadric":
        acc: dict = {}
        for u, v, c in items:
            key = monomial(u, v)
            acc[key] = acc.get(key, 0) + Fraction(c)
        return cls(acc, label)

    def __eq__(self, other):
        return isinstance(other, RationalQuadric) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "RationalQuadric") -> "RationalQuadric":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return RationalQuadric(acc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RationalQuadric":
        c = Fraction(c)
        return RationalQuadric({k: v * c for k, v in self.terms.items()}, self.label)

    def evaluate(self, values: Mapping) -> Fraction:
        """Value at a point given as ``{Var: number}``; missing variables are 0."""
        total = Fraction(0)
        for (u, v), c in self.terms.items():
            a = values.get(u, 0)
            if a:
                b = values.get(v, 0)
                if b:
                    total += c * a * b
        return total

    def coefficients(self) -> set:
        return set(self.terms.values())

    def sorted_terms(self):
        from .tropical import _sort_key

        return sorted(self.terms.items(), key=lambda kv: (_sort_key(kv[0][0]), _sort_key(kv[0][1])))

    def to_json(self) -> list:
        out = []
        for (u, v), c in self.sorted_terms():
            coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append({"vars": [u.to_json(), v.to_json()], "coeff": coeff})
        return out

    def __repr__(self):
        parts = []
        for (u, v), c in self.sorted_terms():
            parts.append(f"{'-' if c < 0 else '+'}{abs(c)} {u}{v}")
        return "RationalQuadric(" + (" ".join(parts) or "0") + ")"


def _x(mask: int) -> Var:
    return Var.subset(mask)


def _sign(*lengths: int) -> int:
    return -1 if sum(lengths) % 2 else 1


def _ell_i(i: int, mask: int) -> int:
    return ell_pair((i,), mask)


# ---------------------------------------------------------------------------
# type A, B, D generators

def plucker_A(I: int, J: int) -> RationalQuadric:
    """sum over i in J minus I of (-1)^(l(i,I)+l(i,J)) x_{I+i} x_{J-i}."""
    if size(J) != size(I) + 2 or size(J & ~I) < 3:
        raise BadShape("need |J| = |I| + 2 and |J \\ I| >= 3")
    q = {}
    for i in elements(J & ~I):
        b = bit(i)
        q[(_x(I | b), _x(J & ~b))] = _sign(_ell_i(i, I), _ell_i(i, J))
    return RationalQuadric(q, {"I": I, "J": J})


def _exchange_sum(I: int, J: int, odd_term: bool) -> dict:
    S = I ^ J
    acc: dict = {}
    for i in elements(S):
        b = bit(i)
        key = monomial(_x(I ^ b), _x(J ^ b))
        acc[key] = acc.get(key, 0) + _sign(_ell_i(i, I), _ell_i(i, J))
    if odd_term and size(S) % 2:
        key = monomial(_x(I), _x(J))
        acc[key] = acc.get(key, 0) - 1
    return acc


def embed_B(I: int, J: int) -> RationalQuadric:
    if size(I ^ J) < 3:
        raise TooSmall("type B equations need |I delta J| >= 3")
    return RationalQuadric(_exchange_sum(I, J, True), {"I": I, "J": J})


def ex(K: int, S: int) -> RationalQuadric:
    """ex_(K, K delta S); the zero quadric when |S| <= 2."""
    if size(S) <= 2:
        return RationalQuadric({}, {"K": K, "S": S})
    return RationalQuadric(_exchange_sum(K, K ^ S, True), {"K": K, "S": S})


def embed_D(I: int, J: int) -> RationalQuadric:
    S = I ^ J
    if size(S) % 2:
        raise BadParity("type D equations need |I| and |J| of equal parity")
    if size(S) < 4:
        raise TooSmall("type D equations need |I delta J| >= 4")
    return RationalQuadric(_exchange_sum(I, J, False), {"I": I, "J": J})


def cross_D_quadric(n: int) -> RationalQuadric:
    return RationalQuadric({(Var.axis(i), Var.axis(-i)): 1 for i in range(1, n + 1)}, {"n": n})


def family_A(n: int, k: int) -> list[RationalQuadric]:
    out = []
    for I in range(1 << n):
        if size(I) != k - 1:
            continue
        for J in range(1 << n):
            if size(J) == k + 1 and size(J & ~I) >= 3:
                out.append(plucker_A(I, J))
    return out


def family_B(n: int) -> list[RationalQuadric]:
    return [embed_B(I, J) for I in range(1 << n) for J in range(1 << n) if size(I ^ J) >= 3]


def family_D(n: int, parity: int | None = None) -> list[RationalQuadric]:
    """Type D equations; ``parity`` selects the support class (0 even, 1 odd)."""
    out = []
    for I in range(1 << n):
        for J in range(1 << n):
            S = I ^ J
            if size(S) >= 4 and size(S) % 2 == 0:
                supp = (size(I) + 1) % 2
                if parity is None or supp == parity:
                    out.append(embed_D(I, J))
    return out


# ---------------------------------------------------------------------------
# antipodes in faces of the cube

@dataclass(frozen=True)
class AntipodeFrame:
    """The face Q_{N,L} = {K : N subset K, K disjoint from L} of the n-cube."""

    n: int
    N: int = 0
    L: int = 0

    def __post_init__(self):
        if self.N & self.L:
            raise NotDisjoint("N and L must be disjoint")
        if (self.N | self.L) >> self.n:
            raise NotDisjoint("N and L must lie in [n]")

    @property
    def S(self) -> int:
        return full_mask(self.n) & ~(self.N | self.L)

    @property
    def m(self) -> int:
        return size(self.S)

    def contains(self, K: int) -> bool:
        return K & self.N == self.N and not K & self.L and K >> self.n == 0

    def bar(self, K: int) -> int:
        return K ^ self.S

    def members(self):
        for sub in subsets_of(self.S):
            yield self.N | sub

    def antipodes(self):
        """Unordered antipodes (K, K bar) with K the smaller mask."""
        for K in self.members():
            Kb = K ^ self.S
            if K <= Kb:
                yield K, Kb


def all_frames(n: int):
    for N in range(1 << n):
        rest = full_mask(n) & ~N
        for L in subsets_of(rest):
            yield AntipodeFrame(n, N, L)


def bracket(K: int, frame: AntipodeFrame) -> int:
    """The antipode sign [K, K bar] in Q_{N,L}, as a parity bit."""
    if not frame.contains(K):
        raise NotInFace(f"{elements(K)} is not in the face")
    return _bracket(K, frame.n, frame.N, frame.L)


@lru_cache(maxsize=None)
def _bracket(K: int, n: int, N: int, L: int) -> int:
    S = full_mask(n) & ~(N | L)
    Kb = K ^ S
    Kbc = full_mask(n) & ~Kb
    KN = elements(K & ~N)
    t = size(Kbc) * (size(N) + size(L))
    t += sort_length(reverse(elements(Kbc)) + elements(Kb))
    t += n * size(Kb)
    t += sort_length(elements(L) + KN)
    t += sort_length(reverse(elements(N)) + KN)
    return t % 2


def gamma(n: int, m: int) -> int:
    return math.ceil(n / 2) + (m - n) // 2


def admissible_M_sizes(frame: AntipodeFrame, form: str = "direct") -> set:
    """Sizes t = |M| with 2t in M_{N,L}.

    ``direct`` tests 2t = 4k + 2ceil(n/2) - |N| - |L| - eps with eps in {0, 1}
    and 2t outside [m-2, m+2]; ``gamma`` uses the equivalent description
    t != gamma, t = gamma mod 2.
    """
    n, m = frame.n, frame.m
    if form == "gamma":
        g = gamma(n, m)
        return {t for t in range(m + 1) if t != g and (t - g) % 2 == 0}
    c = 2 * math.ceil(n / 2) - size(frame.N) - size(frame.L)
    out = set()
    for t in range(m + 1):
        v = 2 * t
        if m - 2 <= v <= m + 2:
            continue
        if (v - c) % 4 in (0, 3):
            out.add(t)
    return out


def _lichtenstein_terms(M: int, frame: AntipodeFrame, check_symmetry: bool) -> dict:
    full = full_mask(frame.n)
    q = {}
    for K, Kb in frame.antipodes():
        s = size(~K & full & M) + bracket(K, frame)
        if check_symmetry:
            t = size(~Kb & full & M) + bracket(Kb, frame)
            if (s - t) % 2:
                raise AssertionError(f"antipode sign not symmetric at K={elements(K)}")
        key = monomial(_x(K), _x(Kb))
        q[key] = q.get(key, 0) + _sign(s)
    return q


def lichtenstein_B(M: int, frame: AntipodeFrame, check_symmetry: bool = True) -> RationalQuadric:
    """p^M_{N,L}: one term per unordered antipode of the face."""
    if M & (frame.N | frame.L) or M >> frame.n:
        raise NotDisjoint("M must be disjoint from N and L")
    if size(M) not in admissible_M_sizes(frame):
        raise NotAdmissible(f"|M| = {size(M)} is not admissible for this face")
    return RationalQuadric(
        _lichtenstein_terms(M, frame, check_symmetry),
        {"M": M, "N": frame.N, "L": frame.L},
    )


def lichtenstein_family(n: int) -> list[RationalQuadric]:
    out = []
    for fr in all_frames(n):
        sizes = admissible_M_sizes(fr)
        for M in subsets_of(fr.S):
            if size(M) in sizes:
                out.append(lichtenstein_B(M, fr))
    return out


def ex_family(n: int) -> list[RationalQuadric]:
    """ex over all (K, S) with |S| >= 3, i.e. the type B embedding equations."""
    return [ex(K, S) for K in range(1 << n) for S in range(1 << n) if size(S) >= 3]


def span_equal(a: Iterable[RationalQuadric], b: Iterable[RationalQuadric]) -> bool:
    return linalg.span_equal((q.terms for q in a), (q.terms for q in b))


def span_rank(qs: Iterable[RationalQuadric]) -> int:
    return linalg.rank(q.terms for q in qs)


# ---------------------------------------------------------------------------
# identities

def sign_verification_quadric(K: int, frame: AntipodeFrame) -> RationalQuadric:
    """sum_i (-1)^[K+i, Kbar+i] x_{K+i} x_{Kbar+i} + [m odd] (-1)^(n-1+[K,Kbar]) x_K x_Kbar."""
    n, S = frame.n, frame.S
    Kb = K ^ S
    acc: dict = {}
    for i in elements(S):
        b = bit(i)
        key = monomial(_x(K ^ b), _x(Kb ^ b))
        acc[key] = acc.get(key, 0) + _sign(bracket(K ^ b, frame))
    if frame.m % 2:
        key = monomial(_x(K), _x(Kb))
        acc[key] = acc.get(key, 0) + _sign(n - 1, bracket(K, frame))
    return RationalQuadric(acc)


def equal_up_to_sign(a: RationalQuadric, b: RationalQuadric) -> bool:
    """a = b or a = -b, the sign read off the first nonzero coefficient."""
    if not a.terms or not b.terms:
        return a.terms == b.terms
    first = a.sorted_terms()[0][0]
    if first not in b.terms:
        return False
    s = 1 if a.terms[first] == b.terms[first] else -1
    return a == b.scale(s)


def antipode_difference_holds(K: int, i: int, frame: AntipodeFrame) -> bool:
    """[K,Kb] = [K+i, Kb+i] + l(i, K+i) + l(i, Kb+i) + n (mod 2)."""
    b = bit(i)
    Kb = K ^ frame.S
    lhs = bracket(K, frame)
    rhs = bracket(K ^ b, frame) + _ell_i(i, K ^ b) + _ell_i(i, Kb ^ b) + frame.n
    return (lhs - rhs) % 2 == 0


def gamma_M(M_size: int, frame: AntipodeFrame, printed: bool = False) -> int:
    """The scalar relating p^M_{N,L} to its ex-expansion.

    ``printed=True`` gives the variant with the opposite sign on the first
    summand, which does not satisfy the identity (kept as a control).
    """
    n, m = frame.n, frame.m
    lead = (-1) ** n * (m - 2 * M_size)
    if printed:
        lead = -lead
    return lead - (m % 2)


def p_from_ex_check(M: int, frame: AntipodeFrame, reading: str = "frame", printed_gamma: bool = False) -> bool:
    """p^M_{N,L} = (1/gamma_|M|) sum over its terms c x_K x_Kb of c * ex_(K, .).

    ``reading="frame"`` uses the face antipode ex(K, S); ``"complement"``
    uses ex(K, K^c) literally.
    """
    p = lichtenstein_B(M, frame)
    g = gamma_M(size(M), frame, printed_gamma)
    if g == 0:
        raise NotAdmissible("gamma vanishes")
    # ex_(K, K^c) has symmetric difference [n] whatever K is
    S = frame.S if reading == "frame" else full_mask(frame.n)
    rhs = RationalQuadric()
    for (u, v), c in p.terms.items():
        K = u.key
        rhs = rhs + ex(K, S).scale(c)
    return rhs.scale(Fraction(1, g)) == p


def chi(b: int, n: int, S: int) -> RationalQuadric:
    """chi_b = sum over M subset S with |M| = b of p^M_{0, S^c} (no admissibility filter)."""
    frame = AntipodeFrame(n, 0, full_mask(n) & ~S)
    acc = RationalQuadric()
    for M in subsets_of(S):
        if size(M) == b:
            acc = acc + RationalQuadric(_lichtenstein_terms(M, frame, False))
    return acc


def chi_combination(n: int, S: int) -> RationalQuadric:
    m = size(S)
    g = gamma(n, m)
    acc = RationalQuadric()
    for b in range(m + 1):
        if (b - g) % 2 == 0 and b != g:
            acc = acc + chi(b, n, S).scale(g - b)
    return acc.scale(Fraction(1, 2 ** (m - 2)))


def chi_identity_check(n: int, S: int) -> bool:
    """ex_(0, S) = 2^-(m-2) sum_b (gamma - b) chi_b, up to a global sign."""
    if size(S) < 3:
        raise SNotLargeEnough("need |S| >= 3")
    return equal_up_to_sign(chi_combination(n, S), ex(0, S))


# ---------------------------------------------------------------------------
# the g_H action

def g_var(i: int, A: int) -> tuple[int, int]:
    """g_i(x_A) = (-1)^(|A| + l(i, A)) x_{i delta A}; returns (sign, mask)."""
    return _sign(size(A), _ell_i(i, A)), A ^ bit(i)


def g_H_var(H: int, A: int) -> tuple[int, int]:
    """g_H = g_{h1} ... g_{hk} with h increasing; the rightmost factor acts first."""
    sign = 1
    for h in reversed(elements(H)):
        s, A = g_var(h, A)
        sign *= s
    return sign, A


def apply_g(H: int, q: RationalQuadric) -> RationalQuadric:
    acc: dict = {}
    for (u, v), c in q.terms.items():
        su, a = g_H_var(H, u.key)
        sv, b = g_H_var(H, v.key)
        key = monomial(_x(a), _x(b))
        acc[key] = acc.get(key, 0) + c * su * sv
    return RationalQuadric(acc)
