"""Batch evaluation of exchange axioms and tropical equations on bitsets.

A candidate set system over a universe U (|U| <= 64) is one uint64 whose
bit p says whether U[p] is chosen.  Every axiom used here has the shape

    for every condition c: if all of req_c are chosen, then some
    alternative alt_{c,j} is fully chosen,

so an axiom compiles to a list of (req mask, [alt masks]) pairs and a
whole batch of systems is decided with a handful of vectorised ops per
condition.  The scalar predicates in :mod:`coxex.checks` stay the
reference; the tests compare both on random samples.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .combinatorics import bit, elements, size
from .errors import UniverseTooLarge
from .tropical import Var

MAX_BITS = 64


@dataclass
class Universe:
    items: tuple
    index: dict

    @classmethod
    def of(cls, items) -> "Universe":
        items = tuple(items)
        if len(items) > MAX_BITS:
            raise UniverseTooLarge(f"{len(items)} items do not fit one word")
        return cls(items, {x: p for p, x in enumerate(items)})

    def __len__(self):
        return len(self.items)

    def mask(self, xs) -> int | None:
        """Bit mask of ``xs``; None if some element is outside the universe."""
        m = 0
        for x in xs:
            p = self.index.get(x)
            if p is None:
                return None
            m |= 1 << p
        return m

    def decode(self, word: int) -> list:
        return [self.items[p] for p in range(len(self.items)) if int(word) >> p & 1]

    def encode(self, xs) -> int:
        m = self.mask(xs)
        if m is None:
            raise KeyError("element outside the universe")
        return m


@dataclass
class Axiom:
    """Compiled axiom: conditions (req, alts) over a universe."""

    universe: Universe
    conditions: list  # [(req:int, alts:tuple[int,...])]

    def holds_scalar(self, word: int) -> bool:
        for req, alts in self.conditions:
            if word & req == req and not any(word & a == a for a in alts):
                return False
        return True

    def evaluate(self, words: np.ndarray) -> np.ndarray:
        return _parallel(words, self._evaluate)

    def _evaluate(self, words: np.ndarray) -> np.ndarray:
        ok = np.ones(len(words), dtype=bool)
        for req, alts in self.conditions:
            r = np.uint64(req)
            active = ((words & r) == r) & ok
            if not active.any():
                continue
            idx = np.nonzero(active)[0]
            if not alts:
                ok[idx] = False
                continue
            sub = words[idx][:, None]
            a = np.array(alts, dtype=np.uint64)[None, :]
            ok[idx] = ((sub & a) == a).any(axis=1)
        return ok


@dataclass
class TropicalTable:
    """Equations as lists of monomial masks; satisfied iff no equation has
    exactly one fully chosen monomial."""

    universe: Universe
    equations: list  # [tuple[int, ...]]

    def holds_scalar(self, word: int) -> bool:
        for monos in self.equations:
            if sum(1 for m in monos if word & m == m) == 1:
                return False
        return True

    def evaluate(self, words: np.ndarray) -> np.ndarray:
        return _parallel(words, self._evaluate)

    def _evaluate(self, words: np.ndarray) -> np.ndarray:
        ok = np.ones(len(words), dtype=bool)
        for monos in self.equations:
            if not monos:
                continue
            a = np.array(monos, dtype=np.uint64)[None, :]
            count = ((words[:, None] & a) == a).sum(axis=1)
            ok &= count != 1
        return ok


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("COXEX_THREADS", "1")))
    except ValueError:
        return 1


def _parallel(words: np.ndarray, fn) -> np.ndarray:
    words = np.asarray(words, dtype=np.uint64)
    t = _threads()
    if t == 1 or len(words) < 4096:
        return fn(words)
    parts = np.array_split(words, t)
    with ThreadPoolExecutor(max_workers=t) as pool:
        return np.concatenate(list(pool.map(fn, parts)))


# ---------------------------------------------------------------------------
# compilers for set systems (universe items are subset masks)

def _alt(U: Universe, *sets) -> int | None:
    return U.mask(sets)


def _cond(U: Universe, req_sets, alt_lists) -> tuple:
    alts = []
    for sets in alt_lists:
        m = U.mask(sets)
        if m is not None and m not in alts:
            alts.append(m)
    return U.encode(req_sets), tuple(alts)


def delta_axiom(U: Universe) -> Axiom:
    conds = []
    for A, B in itertools.permutations(U.items, 2):
        D = elements(A ^ B)
        for a in D:
            conds.append(_cond(U, (A, B), [(A ^ (bit(a) | bit(b)),) for b in D]))
    return Axiom(U, conds)


def strong_delta_axiom(U: Universe, distinct: bool = False) -> Axiom:
    conds = []
    for A, B in itertools.combinations(U.items, 2):
        D = elements(A ^ B)
        pairs = itertools.combinations(D, 2) if distinct else itertools.combinations_with_replacement(D, 2)
        alts = []
        for a, b in pairs:
            t = bit(a) | bit(b)
            alts.append((A ^ t, B ^ t))
        conds.append(_cond(U, (A, B), alts))
    return Axiom(U, conds)


def wenzel_axiom(U: Universe) -> Axiom:
    conds = []
    for A, B in itertools.permutations(U.items, 2):
        D = elements(A ^ B)
        for a in D:
            alts = [(A ^ bit(a) ^ bit(b), B ^ bit(a) ^ bit(b)) for b in D if b != a]
            conds.append(_cond(U, (A, B), alts))
    return Axiom(U, conds)


def matroid_axiom(U: Universe) -> Axiom:
    conds = []
    for A, B in itertools.permutations(U.items, 2):
        for a in elements(A & ~B):
            alts = [(A ^ bit(a) ^ bit(b),) for b in elements(B & ~A)]
            conds.append(_cond(U, (A, B), alts))
    return Axiom(U, conds)


def strong_matroid_axiom(U: Universe) -> Axiom:
    conds = []
    for A, B in itertools.combinations(U.items, 2):
        alts = [
            (A ^ bit(a) ^ bit(b), B ^ bit(a) ^ bit(b))
            for a in elements(A & ~B)
            for b in elements(B & ~A)
        ]
        conds.append(_cond(U, (A, B), alts))
    return Axiom(U, conds)


def coxeter_axiom(p) -> Axiom:
    """Strong exchange on the vertex labels of an ambient polytope."""
    from .checks import exchange_options

    U = Universe.of(p.labels)
    conds = []
    for u, v in itertools.combinations(p.labels, 2):
        conds.append(_cond(U, (u, v), list(exchange_options(p, u, v))))
    return Axiom(U, conds)


def tropical_table(family, U: Universe, var_to_item) -> TropicalTable:
    """Compile an equation family; monomials touching variables outside the
    universe can never fire and are dropped."""
    eqs = []
    for f in family.quadrics():
        monos = []
        for u, v in f.monomials:
            m = U.mask((var_to_item(u), var_to_item(v)))
            if m is not None:
                monos.append(m)
        eqs.append(tuple(monos))
    return TropicalTable(U, eqs)


def subset_item(v: Var):
    return v.key


# ---------------------------------------------------------------------------
# batches

def all_words(nbits: int) -> np.ndarray:
    if nbits > 26:
        raise UniverseTooLarge("exhaustive batches are capped at 2^26 words")
    return np.arange(1 << nbits, dtype=np.uint64)


def sample_words(nbits: int, trials: int, seed: int, small: int = 12) -> np.ndarray:
    """Random subsets of an nbits universe.

    Half the samples have a size drawn from 0..min(small, nbits), the other
    half a size uniform in 0..nbits; each is then a uniform subset of that
    size.  Small systems are where the axioms are most often satisfied.
    """
    rng = np.random.default_rng(seed)
    half = trials // 2
    sizes = np.concatenate([
        rng.integers(0, min(small, nbits) + 1, size=half),
        rng.integers(0, nbits + 1, size=trials - half),
    ])
    keys = rng.random((trials, nbits))
    rank = np.argsort(np.argsort(keys, axis=1), axis=1)
    chosen = rank < sizes[:, None]
    weights = np.left_shift(np.uint64(1), np.arange(nbits, dtype=np.uint64))
    words = np.bitwise_or.reduce(np.where(chosen, weights[None, :], np.uint64(0)), axis=1)
    return words.astype(np.uint64)


def word_size(words: np.ndarray) -> np.ndarray:
    w = words.copy()
    out = np.zeros(len(w), dtype=np.int64)
    while w.any():
        out += (w & np.uint64(1)).astype(np.int64)
        w >>= np.uint64(1)
    return out


def subsets_universe(n: int, parity: int | None = None, rank: int | None = None) -> Universe:
    items = [m for m in range(1 << n) if (parity is None or size(m) % 2 == parity) and (rank is None or size(m) == rank)]
    return Universe.of(items)
