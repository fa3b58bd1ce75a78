"""Exact feasibility of small linear systems by Fourier-Motzkin elimination,
and edge detection for convex hulls of integer point sets."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _normalize(a: tuple, b: Fraction):
    """Scale a >= constraint so its first nonzero coefficient is +-1."""
    for x in a:
        if x:
            s = abs(x)
            return tuple(y / s for y in a), b / s
    return a, b


def feasible(rows: Sequence[tuple], rhs: Sequence) -> bool:
    """Is there x with rows[t] . x >= rhs[t] for all t?  Exact."""
    cons = {}
    for a, b in zip(rows, rhs):
        a, b = _normalize(tuple(Fraction(x) for x in a), Fraction(b))
        # keep only the tightest bound per direction
        if a not in cons or b > cons[a]:
            cons[a] = b
    if not cons:
        return True
    dim = len(next(iter(cons)))
    for j in range(dim):
        pos, neg, rest = [], [], {}
        for a, b in cons.items():
            if a[j] > 0:
                pos.append((a, b))
            elif a[j] < 0:
                neg.append((a, b))
            else:
                rest[a] = b
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = -an[j], ap[j]
                a = tuple(cp * x + cn * y for x, y in zip(ap, an))
                b = cp * bp + cn * bn
                a, b = _normalize(a, b)
                if a not in rest or b > rest[a]:
                    rest[a] = b
        cons = rest
        for a, b in cons.items():
            if not any(a) and b > 0:
                return False
    return all(b <= 0 for a, b in cons.items() if not any(a))


def is_edge(points: Sequence[Sequence[int]], p: int, q: int) -> bool:
    """Is conv(points[p], points[q]) an edge of conv(points)?

    Feasibility of c.(u - v) = 0 and c.(u - w) >= 1 for all other w: the
    functional c is then maximised exactly on {u, v}.  The equality is used
    to eliminate one coordinate before Fourier-Motzkin.  The points are
    assumed to be in convex position, which holds for any subset of a
    single orbit since those lie on a sphere.
    """
    u, v = points[p], points[q]
    d = [a - b for a, b in zip(u, v)]
    piv = next((j for j, x in enumerate(d) if x), None)
    if piv is None:
        raise ValueError("is_edge needs distinct points")
    rows, rhs = [], []
    for t, w in enumerate(points):
        if t in (p, q):
            continue
        g = [Fraction(a - b) for a, b in zip(u, w)]
        # substitute c_piv = -sum_{j != piv} d_j c_j / d_piv
        row = [g[j] - g[piv] * Fraction(d[j], d[piv]) for j in range(len(d)) if j != piv]
        rows.append(row)
        rhs.append(1)
    return feasible(rows, rhs)


def edges(points: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    pts = [tuple(x) for x in points]
    return [(p, q) for p in range(len(pts)) for q in range(p + 1, len(pts)) if is_edge(pts, p, q)]


def parallel(d: Sequence[int], r: Sequence[int]) -> bool:
    """d and r are nonzero multiples of each other."""
    # all 2x2 minors vanish
    n = len(d)
    if not any(d) or not any(r):
        return False
    return all(d[i] * r[j] == d[j] * r[i] for i in range(n) for j in range(i + 1, n))
