"""Ordered multisets, stable-sort lengths and bitmask set systems.

Elements are named 1..n.  A subset I of [n] is stored as an int whose bit
``i - 1`` is set iff ``i`` is in I.  Ordered multisets are plain tuples.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    Ambiguous,
    GroundSetError,
    NotPresent,
    RepeatedElements,
    UniverseTooLarge,
)

MAX_EXHAUSTIVE_N = 16
MAX_N = 24
MAX_UNIVERSE = 25


# ---------------------------------------------------------------------------
# ordered multisets

def sort_length(seq: Sequence[int]) -> int:
    """Number of ordering transpositions a stable bubble sort performs.

    This is the trusted reference: it literally bubble-sorts a copy and counts
    swaps of strictly decreasing neighbours.
    """
    a = list(seq)
    swaps = 0
    for end in range(len(a) - 1, 0, -1):
        for p in range(end):
            if a[p] > a[p + 1]:
                a[p], a[p + 1] = a[p + 1], a[p]
                swaps += 1
    return swaps


def inversion_count(seq: Sequence[int]) -> int:
    """Strict inversions via merge sort; equals :func:`sort_length`."""

    def merge_count(a):
        if len(a) <= 1:
            return a, 0
        mid = len(a) // 2
        left, x = merge_count(a[:mid])
        right, y = merge_count(a[mid:])
        out = []
        count = x + y
        i = j = 0
        while i < len(left) and j < len(right):
            if right[j] < left[i]:
                out.append(right[j])
                count += len(left) - i
                j += 1
            else:
                out.append(left[i])
                i += 1
        out.extend(left[i:])
        out.extend(right[j:])
        return out, count

    return merge_count(list(seq))[1]


def concat(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(a) + tuple(b)


def reverse(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(a))


def ordered(x) -> tuple[int, ...]:
    """Increasing ordering of a mask or an iterable of elements."""
    if isinstance(x, int):
        return elements(x)
    return tuple(sorted(x))


def ell_pair(a, b) -> int:
    """Length of the stable sort of ``a + b``.

    Masks and Python sets are increasingly ordered first; explicit
    sequences (tuples, lists) keep their order.
    """
    return sort_length(concat(_as_seq(a), _as_seq(b)))


def _as_seq(x) -> tuple[int, ...]:
    if isinstance(x, int):
        return elements(x)
    if isinstance(x, (set, frozenset)):
        return tuple(sorted(x))
    return tuple(x)


def remove_ordered(a: Sequence[int], b) -> tuple[int, ...]:
    """Delete the elements of ``b`` from the ordered set ``a``, keeping order."""
    if len(set(a)) != len(a):
        raise RepeatedElements(f"{tuple(a)} is not an ordered set")
    drop = set(elements(b)) if isinstance(b, int) else set(b)
    return tuple(x for x in a if x not in drop)


def index_of(a: Sequence[int], i: int) -> int:
    """1-based position of ``i`` in ``a``."""
    hits = [p for p, x in enumerate(a, 1) if x == i]
    if not hits:
        raise NotPresent(f"{i} does not occur in {tuple(a)}")
    if len(hits) > 1:
        raise Ambiguous(f"{i} occurs {len(hits)} times in {tuple(a)}")
    return hits[0]


# ---------------------------------------------------------------------------
# subset masks

def bit(i: int) -> int:
    return 1 << (i - 1)


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        if i < 1:
            raise GroundSetError(f"elements are 1-based, got {i}")
        m |= bit(i)
    return m


def elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def sym_diff(a: int, b: int) -> int:
    return a ^ b


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) & ~mask


def count_below(mask: int, i: int) -> int:
    """#{j in mask : j < i}."""
    return size(mask & (bit(i) - 1))


def subsets_of(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def masks_of_size(n: int, k: int) -> list[int]:
    return [mask_of(c) for c in itertools.combinations(range(1, n + 1), k)]


def mask_str(mask: int) -> str:
    """Compact display: ``12`` for {1,2}, ``0`` for the empty set."""
    e = elements(mask)
    if not e:
        return "0"
    if max(e) < 10:
        return "".join(map(str, e))
    return "{" + ",".join(map(str, e)) + "}"


def check_ground(n: int, cap: int = MAX_N) -> None:
    if not isinstance(n, int) or n < 1:
        raise GroundSetError(f"ground set size must be >= 1, got {n!r}")
    if n > cap:
        raise GroundSetError(f"ground set size {n} exceeds cap {cap}")


# ---------------------------------------------------------------------------
# set systems

@dataclass(frozen=True)
class SetSystem:
    n: int
    members: frozenset

    def __post_init__(self):
        check_ground(self.n)
        members = frozenset(self.members)
        limit = 1 << self.n
        for m in members:
            if not 0 <= m < limit:
                raise GroundSetError(f"mask {m} is not a subset of [{self.n}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        return cls(n, frozenset(mask_of(s) for s in sets))

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def is_even(self) -> bool:
        """All members share one parity (the empty system counts as even)."""
        return len({size(m) % 2 for m in self.members}) <= 1

    def restrict_parity(self, parity: int) -> "SetSystem":
        return SetSystem(self.n, frozenset(m for m in self.members if size(m) % 2 == parity))

    def to_json(self) -> dict:
        sets = sorted((list(elements(m)) for m in self.members), key=lambda s: (len(s), s))
        return {"n": self.n, "sets": sets}

    @classmethod
    def from_json(cls, data) -> "SetSystem":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_sets(int(data["n"]), data["sets"])

    def __str__(self):
        return "{" + ", ".join(mask_str(m) for m in sorted(self.members, key=lambda m: (size(m), m))) + "}"


def enumerate_set_systems(n: int, universe: Iterable[int]) -> Iterator[SetSystem]:
    """Every subset of ``universe`` as a SetSystem, the empty system first."""
    check_ground(n, MAX_EXHAUSTIVE_N)
    items = sorted(set(universe))
    if len(items) > MAX_UNIVERSE:
        raise UniverseTooLarge(f"|universe| = {len(items)} > {MAX_UNIVERSE}")
    for code in range(1 << len(items)):
        yield SetSystem(n, frozenset(items[p] for p in range(len(items)) if code >> p & 1))
