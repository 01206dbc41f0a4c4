"""Partition enumeration and the rank/crank statistics.

Brute-force tables come from enumerating every partition. The count series
``sum_n N(m,n) q^n`` and ``sum_n M(m,n) q^n`` come from the single-sum formulas
with prefactor 1/(q)_inf; the two routes are cross-checked in the tests.

The crank at n = 1 follows the product generating function: M(1,1) = M(-1,1) = 1
and M(0,1) = -1, so sum_m M(m,1) = p(1) still holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kernels
from .series import QSeries, partition_numbers

RANK = "rank"
CRANK = "crank"
_KINDS = (RANK, CRANK)

# crank values at n = 1 forced by the product form of the generating function
AMENDED_CRANK_1 = {-1: 1, 0: -1, 1: 1}


class EmptyPartition(ValueError):
    """rank and crank are undefined for the empty partition."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        ps = self.parts
        if any(p < 1 for p in ps) or any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be positive and weakly decreasing: {ps}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts)) or "()"


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    # a holds the current partition; k indexes its last part
    a = [n]
    while True:
        yield Partition(tuple(a))
        # strip trailing ones, then decrement the last part > 1
        rem = 0
        while a and a[-1] == 1:
            a.pop()
            rem += 1
        if not a:
            return
        a[-1] -= 1
        rem += 1
        x = a[-1]
        while rem > x:
            a.append(x)
            rem -= x
        a.append(rem)


def rank(p: Partition) -> int:
    """Largest part minus the number of parts."""
    if not p.parts:
        raise EmptyPartition("rank of the empty partition")
    return p.parts[0] - len(p.parts)


def crank(p: Partition) -> int:
    if not p.parts:
        raise EmptyPartition("crank of the empty partition")
    ones = p.parts.count(1)
    if ones == 0:
        return p.parts[0]
    return sum(1 for x in p.parts if x > ones) - ones


@dataclass(frozen=True)
class StatTable:
    n: int
    kind: str
    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def is_symmetric(self) -> bool:
        return all(self[-m] == c for m, c in self.counts.items())

    def moment(self, j: int) -> int:
        return sum(m**j * c for m, c in self.counts.items())

    def to_dict(self) -> dict:
        return {"n": self.n, "kind": self.kind,
                "counts": [[m, self.counts[m]] for m in sorted(self.counts)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> StatTable:
        return cls(int(data["n"]), data["kind"], {int(m): int(c) for m, c in data["counts"]})


def _table_from_array(arr, n: int, kind: str) -> StatTable:
    return StatTable(n, kind, {i - n: int(c) for i, c in enumerate(arr) if c})


@lru_cache(maxsize=None)
def _enumerated(n: int):
    return kernels.enumerate_stats(n)


def rank_table(n: int) -> StatTable:
    """N(m, n) for all m, by enumerating the partitions of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _table_from_array(_enumerated(n)[0], n, RANK)


def crank_table(n: int) -> StatTable:
    """M(m, n) for all m, by enumeration (amended at n = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 1:
        return StatTable(1, CRANK, dict(AMENDED_CRANK_1))
    return _table_from_array(_enumerated(n)[1], n, CRANK)


def stat_table(kind: str, n: int) -> StatTable:
    return {RANK: rank_table, CRANK: crank_table}[_check_kind(kind)](n)


# --------------------------------------------------------------------------
# single-sum count series
# --------------------------------------------------------------------------

@lru_cache(maxsize=16)
def count_matrix(kind: str, order: int) -> np.ndarray:
    """Array T with T[m, n] = N(m, n) (or M(m, n)) for 0 <= m, n <= order."""
    _check_kind(kind)
    p = np.array(partition_numbers(order), dtype=object)
    t = kernels.stat_table(p, 3 if kind == RANK else 1, order)
    if kind == RANK:
        # the single-sum formula omits the empty partition (rank 0)
        t[0, 0] += 1
    t.setflags(write=False)
    return t


def rank_count_series(m: int, order: int) -> QSeries:
    """sum_n N(m, n) q^n."""
    return QSeries.from_ints(count_matrix(RANK, order)[abs(m)].tolist(), order)


def crank_count_series(m: int, order: int) -> QSeries:
    """sum_n M(m, n) q^n (amended at n = 1)."""
    return QSeries.from_ints(count_matrix(CRANK, order)[abs(m)].tolist(), order)


def series_table(kind: str, n: int) -> StatTable:
    """Stat table for n read off the count series rather than enumeration."""
    t = count_matrix(kind, _bucket(n))
    counts = {}
    for m in range(-n, n + 1):
        c = int(t[abs(m), n])
        if c:
            counts[m] = c
    return StatTable(n, _check_kind(kind), counts)


def residue_count(kind: str, k: int, t: int, n: int) -> int:
    """Number of partitions of n whose statistic is congruent to k mod t.

    Counts are taken from the single-sum series (exact for every n); the
    enumeration oracle agrees wherever it is feasible.
    """
    if t < 1:
        raise ValueError("modulus t must be positive")
    k %= t
    table = series_table(kind, n)
    return sum(c for m, c in table.counts.items() if m % t == k)


def _bucket(n: int) -> int:
    # share count matrices between nearby n
    b = 50
    while b < n:
        b *= 2
    return b


def _check_kind(kind: str) -> str:
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    return kind


def partition_count(n: int) -> int:
    return partition_numbers(max(n, 0))[n] if n >= 0 else 0
