"""Two-variable crank generating functions, truncated in the q direction.

The coefficient of ``q**n`` is a Laurent polynomial in ``z`` stored as a
centered integer vector over exponents ``-B..B`` (``B`` = truncation order,
which keeps the convolutions index-only).  Four generating functions are
built here:

* ``crank_gf``          -- Andrews-Garvan crank of ordinary partitions,
  ``(q;q)_inf / ((zq;q)_inf (q/z;q)_inf)``;
* ``overline_crank_gf`` -- first residual crank of overpartitions,
  the crank GF times ``(-q;q)_inf``;
* ``m2_crank_gf``       -- second residual crank of overpartitions,
  the crank GF with ``q -> q**2`` times ``(-q;q)_inf / (q;q**2)_inf``;
* ``kcrank_gf``         -- k-crank of k-colored partitions,
  the crank GF times ``(q;q)_inf**(1-k)``.

Each geometric factor ``1/(1 - z**(+-1) q**k)`` is folded in for k = 1..N in
increasing k, so construction is deterministic.  The row for ``q**1`` comes
out as ``z - 1 + 1/z``: the crank GF itself encodes the conventional signed
counts at n = 1 and no special-casing is needed downstream.

Builders are memoized; the returned objects are shared and must be treated
as immutable.
"""

from __future__ import annotations

from functools import lru_cache

from cranktab import kernels
from cranktab.series import (
    Series,
    distinct_series,
    euler_product,
    partition_series,
    qpoch_inf,
)


class LaurentPoly:
    """Laurent polynomial in z on the symmetric exponent range -bound..bound."""

    __slots__ = ("bound", "coeffs")

    def __init__(self, bound: int, coeffs):
        if bound < 0:
            raise ValueError(f"bound must be >= 0, got {bound}")
        coeffs = list(coeffs)
        if len(coeffs) != 2 * bound + 1:
            raise ValueError(
                f"expected {2 * bound + 1} coefficients for bound {bound}, got {len(coeffs)}"
            )
        self.bound = bound
        self.coeffs = coeffs

    def __getitem__(self, m: int) -> int:
        if abs(m) > self.bound:
            return 0
        return self.coeffs[self.bound + m]

    def as_dict(self) -> dict:
        return {m - self.bound: c for m, c in enumerate(self.coeffs) if c}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LaurentPoly({self.as_dict()})"


class BivariateSeries:
    """Series in q whose coefficients are Laurent polynomials in z."""

    __slots__ = ("order", "bound", "rows")

    def __init__(self, order: int, bound: int, rows):
        self.order = order
        self.bound = bound
        self.rows = rows

    def row(self, n: int) -> LaurentPoly:
        return LaurentPoly(self.bound, self.rows[n])

    def coeff(self, n: int, m: int) -> int:
        """Coefficient of ``z**m q**n``; zero whenever ``|m|`` exceeds the bound."""
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside truncation order {self.order}")
        if abs(m) > self.bound:
            return 0
        return self.rows[n][self.bound + m]

    def column(self, m: int) -> Series:
        """Fixed-z-power slice: the series ``n -> [z**m] rows[n]``."""
        if abs(m) > self.bound:
            return Series.zero(self.order)
        i = self.bound + m
        return Series(self.order, [r[i] for r in self.rows])

    def row_sum_series(self) -> Series:
        """Specialization z = 1: the series of row sums."""
        return Series(self.order, [sum(r) for r in self.rows])


def column(g: BivariateSeries, m: int) -> Series:
    return g.column(m)


def _seed_rows(order: int, seed: Series):
    """Rows of a z-free series, centered at z**0, with bound = order."""
    width = 2 * order + 1
    rows = [[0] * width for _ in range(order + 1)]
    for n in range(order + 1):
        rows[n][order] = seed.coeffs[n]
    return rows


@lru_cache(maxsize=None)
def crank_gf(order: int) -> BivariateSeries:
    """Crank generating function ``(q;q)_inf / ((zq;q)_inf (q/z;q)_inf)``."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    rows = _seed_rows(order, euler_product(order))
    for k in range(1, order + 1):
        kernels.geom_fold(rows, k, +1, order)
        kernels.geom_fold(rows, k, -1, order)
    return BivariateSeries(order, order, rows)


@lru_cache(maxsize=None)
def overline_crank_gf(order: int) -> BivariateSeries:
    """First-residual-crank GF: the crank GF times ``(-q;q)_inf``."""
    base = crank_gf(order)
    rows = kernels.zfree_mul(base.rows, distinct_series(order).coeffs, order)
    return BivariateSeries(order, order, rows)


@lru_cache(maxsize=None)
def m2_crank_gf(order: int) -> BivariateSeries:
    """Second-residual-crank GF.

    Substitutes ``q -> q**2`` into the crank GF (index doubling; odd rows are
    identically zero) and multiplies by ``(-q;q)_inf / (q;q**2)_inf``.
    """
    half = crank_gf(order // 2)
    width = 2 * order + 1
    rows = [[0] * width for _ in range(order + 1)]
    for j in range(order // 2 + 1):
        src = half.rows[j]
        tgt = rows[2 * j]
        for m in range(-j, j + 1):
            tgt[order + m] = src[half.bound + m]
    multiplier = distinct_series(order) * qpoch_inf(1, 2, order, invert=True)
    rows = kernels.zfree_mul(rows, multiplier.coeffs, order)
    return BivariateSeries(order, order, rows)


@lru_cache(maxsize=None)
def kcrank_gf(k: int, order: int) -> BivariateSeries:
    """k-crank GF for k-colored partitions: crank GF times ``(q;q)_inf**(1-k)``."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    base = crank_gf(order)
    multiplier = partition_series(order).pow(k - 1)
    rows = kernels.zfree_mul(base.rows, multiplier.coeffs, order)
    return BivariateSeries(order, order, rows)


def check_gf_invariants(g: BivariateSeries) -> None:
    """Raise if a crank-type GF violates z <-> 1/z symmetry or |m| <= n support."""
    b = g.bound
    for n in range(g.order + 1):
        row = g.rows[n]
        for m in range(1, b + 1):
            if row[b + m] != row[b - m]:
                raise ValueError(f"symmetry violated at n={n}, m={m}")
        for m in range(n + 1, b + 1):
            if row[b + m] or row[b - m]:
                raise ValueError(f"support violated at n={n}, m={m}")
