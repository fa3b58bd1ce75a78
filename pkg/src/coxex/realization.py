"""Points of the Grassmannian and the spinor variety with exact coordinates."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .combinatorics import elements, mask_of, size
from .errors import BadShape, NotSkew
from .tropical import Var


def det(rows) -> Fraction:
    """Exact determinant by Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return d


def plucker_vector(A) -> dict:
    """Maximal minors of a k x n matrix, keyed by column-subset mask."""
    k = len(A)
    if k == 0 or any(len(r) != len(A[0]) for r in A):
        raise BadShape("need a nonempty rectangular matrix")
    n = len(A[0])
    if k > n:
        raise BadShape(f"k = {k} exceeds n = {n}")
    out = {}
    for cols in itertools.combinations(range(n), k):
        out[mask_of(c + 1 for c in cols)] = det([[r[c] for c in cols] for r in A])
    return out


def pfaffian(A, idx: tuple) -> Fraction:
    """Pfaffian of the principal submatrix on 0-based indices ``idx``
    (first-row expansion)."""
    if not idx:
        return Fraction(1)
    if len(idx) % 2:
        return Fraction(0)
    i = idx[0]
    total = Fraction(0)
    for t in range(1, len(idx)):
        j = idx[t]
        if A[i][j]:
            rest = idx[1:t] + idx[t + 1:]
            total += (-1) ** (t - 1) * Fraction(A[i][j]) * pfaffian(A, rest)
    return total


def check_skew(A) -> None:
    n = len(A)
    if any(len(r) != n for r in A):
        raise NotSkew("matrix is not square")
    for i in range(n):
        if A[i][i] != 0:
            raise NotSkew("nonzero diagonal entry")
        for j in range(i + 1, n):
            if A[i][j] != -A[j][i]:
                raise NotSkew(f"A[{i}][{j}] != -A[{j}][{i}]")


def spinor_vector(A) -> dict:
    """Sub-Pfaffians of a skew matrix, keyed by even-size masks; Pf(empty) = 1."""
    check_skew(A)
    n = len(A)
    out = {}
    for m in range(1 << n):
        if size(m) % 2 == 0:
            out[m] = pfaffian(A, tuple(i - 1 for i in elements(m)))
    return out


def random_matrix(rows: int, cols: int, rng: random.Random, bound: int = 9) -> list:
    return [[Fraction(rng.randint(-bound, bound)) for _ in range(cols)] for _ in range(rows)]


def random_skew(n: int, rng: random.Random, bound: int = 9) -> list:
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-bound, bound))
            A[i][j], A[j][i] = v, -v
    return A


def cross_vector_D(n: int, seed: int = 0) -> dict:
    """Random nonzero x_{+-i} with sum x_i x_{-i} = 0 (x_{-n} solved for)."""
    rng = random.Random(seed)

    def nz():
        v = 0
        while v == 0:
            v = rng.randint(-9, 9)
        return Fraction(v)

    while True:
        x = {}
        for i in range(1, n + 1):
            x[Var.axis(i)] = nz()
        for i in range(1, n):
            x[Var.axis(-i)] = nz()
        rest = sum(x[Var.axis(i)] * x[Var.axis(-i)] for i in range(1, n))
        last = -rest / x[Var.axis(n)]
        if last != 0:
            x[Var.axis(-n)] = last
            return x


def as_point(coords: dict) -> dict:
    """Subset-mask coordinates to a ``{Var: value}`` point."""
    return {Var.subset(m): v for m, v in coords.items() if v != 0}


def support(coords: dict) -> frozenset:
    return frozenset(k for k, v in coords.items() if v != 0)
