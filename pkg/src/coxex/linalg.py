"""Exact sparse row reduction over the rationals.

Rows are mappings ``column_key -> number``.  Each row is scaled to a
primitive integer vector and eliminated against integer pivots (no
division ever leaves the integers), so the reduction is fraction-free.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping


def _primitive(row: dict) -> dict:
    """Scale an integer row so that its content is 1 and its lead is positive."""
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def integer_row(row: Mapping, order: dict) -> dict:
    """Clear denominators; keys are replaced by their column index."""
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    out = {}
    for k, v in row.items():
        f = Fraction(v) * den
        if f:
            out[order.setdefault(k, len(order))] = int(f)
    return _primitive(out)


class RowSpace:
    """Incrementally maintained echelon basis of a row space."""

    def __init__(self):
        self.order: dict[Hashable, int] = {}
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = min(row)
            prow = self.pivots.get(lead)
            if prow is None:
                return row
            a, b = row[lead], prow[lead]
            # row <- b*row - a*prow, then strip the content
            new = {k: b * v for k, v in row.items()}
            for k, v in prow.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row

    def add(self, row: Mapping) -> bool:
        """Insert a row; True if it enlarged the space."""
        r = self.reduce(integer_row(row, self.order))
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def contains(self, row: Mapping) -> bool:
        order = dict(self.order)
        r = integer_row(row, order)
        if any(k >= len(self.order) for k in r):
            return False
        return not self.reduce(r)


def rank(rows: Iterable[Mapping]) -> int:
    space = RowSpace()
    for r in rows:
        space.add(r)
    return len(space)


def span_equal(a: Iterable[Mapping], b: Iterable[Mapping]) -> bool:
    sa = RowSpace()
    for r in a:
        sa.add(r)
    b = list(b)
    sb = RowSpace()
    for r in b:
        sb.add(r)
    if len(sa) != len(sb):
        return False
    return all(sa.contains(r) for r in b)
