"""Brute-force enumeration of partitions, overpartitions and colored partitions.

Everything in this module is deliberately independent of the generating
function machinery: objects are generated one by one and their statistics are
read straight off the definitions.  The resulting tables are the ground truth
that the series-built tables are checked against.

Representations:

* a partition is a weakly decreasing tuple of positive ints;
* an overpartition is a weakly decreasing tuple of ``(value, overlined)``
  pairs where at most one copy of each value is overlined and, among equal
  values, the overlined copy comes first;
* a k-colored partition is a k-tuple of partitions.

Signed counting convention: a bare ``(1,)`` (as a partition, or as the
relevant subpartition of an overpartition) contributes weight -1 at crank 0
and +1 at cranks -1 and +1, so that the tables match the generating
functions' signed counts at n = 1.  The empty (sub)partition counts +1 at
crank 0.  Every object's weights sum to +1, so row sums still count objects.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence, Tuple

Partition = Tuple[int, ...]
Overpartition = Tuple[Tuple[int, bool], ...]

ORACLE_CEILINGS = {
    "crank": 60,
    "rank": 60,
    "ocrank": 25,
    "m2crank": 25,
    "kcrank": 25,  # with k <= 4
}


# -- generation --------------------------------------------------------------


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of n (parts <= largest), weakly decreasing tuples.

    Deterministic order: descending lexicographic by part tuple.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield ()
        return
    top = n if largest is None or largest > n else largest
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def overpartitions(n: int) -> Iterator[Overpartition]:
    """All overpartitions of n, in canonical representation.

    For each base partition, every subset of its distinct part values may be
    overlined (on the first occurrence of the value).
    """
    for base in partitions(n):
        distinct = sorted(set(base), reverse=True)
        for mask in range(1 << len(distinct)):
            overlined = {v for i, v in enumerate(distinct) if mask >> i & 1}
            out = []
            seen: set[int] = set()
            for v in base:
                if v in overlined and v not in seen:
                    out.append((v, True))
                    seen.add(v)
                else:
                    out.append((v, False))
            yield tuple(out)


def colored_partitions(n: int, k: int) -> Iterator[Tuple[Partition, ...]]:
    """All k-tuples of partitions with total size n.

    Fine for small n; the k-crank oracle table below counts by part-number
    histograms instead of materializing these tuples.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        if n == 0:
            yield ()
        return
    for size in range(n, -1, -1):
        for head in partitions(size):
            for rest in colored_partitions(n - size, k - 1):
                yield (head,) + rest


# -- statistics --------------------------------------------------------------


def rank(parts: Sequence[int]) -> int:
    """Dyson rank: largest part minus the number of parts."""
    if not parts:
        raise ValueError("rank of the empty partition is undefined")
    return parts[0] - len(parts)


def crank(parts: Sequence[int]) -> int:
    """Andrews-Garvan crank.

    The largest part when there are no ones; otherwise the number of parts
    larger than the number of ones, minus the number of ones.
    """
    if not parts:
        raise ValueError("crank of the empty partition is undefined")
    ones = sum(1 for p in parts if p == 1)
    if ones == 0:
        return parts[0]
    larger = sum(1 for p in parts if p > ones)
    return larger - ones


def kcrank(components: Sequence[Partition]) -> int:
    """k-crank of a k-colored partition: len(first) - len(second)."""
    if len(components) < 2:
        raise ValueError("k-crank needs at least 2 components")
    return len(components[0]) - len(components[1])


def crank_contributions(parts: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    """Weighted crank contributions of a partition, as (m, weight) pairs.

    Implements the signed convention at n = 1; see the module docstring.
    """
    parts = tuple(parts)
    if parts == ():
        return ((0, 1),)
    if parts == (1,):
        return ((0, -1), (-1, 1), (1, 1))
    return ((crank(parts), 1),)


def nonoverlined_subpartition(op: Overpartition) -> Partition:
    return tuple(v for v, over in op if not over)


def halved_even_subpartition(op: Overpartition) -> Partition:
    """Even non-overlined parts divided by two, as a partition."""
    return tuple(sorted((v // 2 for v, over in op if not over and v % 2 == 0), reverse=True))


def first_residual_contributions(op: Overpartition) -> Tuple[Tuple[int, int], ...]:
    """First residual crank weights: crank of the non-overlined subpartition."""
    return crank_contributions(nonoverlined_subpartition(op))


def second_residual_contributions(op: Overpartition) -> Tuple[Tuple[int, int], ...]:
    """Second residual crank weights: crank of the halved even non-overlined parts."""
    return crank_contributions(halved_even_subpartition(op))


# -- oracle tables ------------------------------------------------------------


def _rows_from_partitions(n_max: int, statistic: str) -> list[Counter]:
    rows = []
    for n in range(n_max + 1):
        row: Counter = Counter()
        for p in partitions(n):
            if statistic == "crank":
                for m, w in crank_contributions(p):
                    row[m] += w
            else:  # rank; the empty partition is assigned rank 0 at n = 0
                row[0 if not p else rank(p)] += 1
        rows.append(row)
    return rows


def _rows_from_overpartitions(n_max: int, statistic: str) -> list[Counter]:
    contrib = (
        first_residual_contributions
        if statistic == "ocrank"
        else second_residual_contributions
    )
    rows = []
    for n in range(n_max + 1):
        row: Counter = Counter()
        for op in overpartitions(n):
            for m, w in contrib(op):
                row[m] += w
        rows.append(row)
    return rows


def part_count_histograms(n_max: int) -> list[Counter]:
    """hist[n][length] = number of partitions of n with that many parts."""
    return [Counter(len(p) for p in partitions(n)) for n in range(n_max + 1)]


def _rows_kcrank(n_max: int, k: int) -> list[Counter]:
    """k-crank oracle rows via part-number histograms.

    The k-crank depends only on the part counts of the first two components,
    so the table is assembled from enumerated histograms: pair_diff[s][m]
    counts (first, second) component pairs of total size s with part-count
    difference m, and the remaining k-2 components contribute a tuple count
    per leftover size.  Materializing all k-tuples would be hopeless already
    at k = 4, n = 25.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    hist = part_count_histograms(n_max)
    p_count = [sum(h.values()) for h in hist]

    pair_diff: list[Counter] = []
    for s in range(n_max + 1):
        row: Counter = Counter()
        for a in range(s + 1):
            for l1, c1 in hist[a].items():
                for l2, c2 in hist[s - a].items():
                    row[l1 - l2] += c1 * c2
        pair_diff.append(row)

    tuples = [1] + [0] * n_max  # number of (k-2)-tuples of partitions per size
    for _ in range(k - 2):
        tuples = [
            sum(p_count[a] * tuples[r - a] for a in range(r + 1))
            for r in range(n_max + 1)
        ]

    rows = []
    for n in range(n_max + 1):
        row = Counter()
        for s in range(n + 1):
            w = tuples[n - s]
            if w:
                for m, c in pair_diff[s].items():
                    row[m] += c * w
        rows.append(row)
    return rows


def oracle_rows(statistic: str, n_max: int, k: int | None = None) -> list[dict]:
    """Weighted count rows ``{m: count}`` for n = 0..n_max, by enumeration."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if statistic in ("crank", "rank"):
        rows = _rows_from_partitions(n_max, statistic)
    elif statistic in ("ocrank", "m2crank"):
        rows = _rows_from_overpartitions(n_max, statistic)
    elif statistic == "kcrank":
        if k is None:
            raise ValueError("kcrank needs k")
        rows = _rows_kcrank(n_max, k)
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    return [{m: c for m, c in sorted(row.items()) if c} for row in rows]
