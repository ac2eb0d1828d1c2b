"""Exact truncated formal power series and q-Pochhammer products.

A :class:`Series` of order N stores the integer coefficients of
``c0 + c1*q + ... + cN*q**N``; every operation is exact modulo ``q**(N+1)``.
Coefficients are plain Python ints, so nothing overflows and nothing is
rounded.  Values are treated as immutable after construction: all operations
return fresh objects and never mutate their inputs.

Combining series of different orders is an error rather than a silent
truncation; mixed orders in this codebase almost always indicate a bug in a
caller, and quietly dropping coefficients would hide it.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from cranktab import kernels


class OrderMismatch(ValueError):
    """Two series of different truncation orders were combined."""


class Series:
    """Truncated power series in q with exact integer coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int]):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients for order {order}, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls(order, [0] * (order + 1))

    @classmethod
    def constant(cls, order: int, value: int = 1) -> "Series":
        c = [0] * (order + 1)
        c[0] = value
        return cls(order, c)

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, int]) -> "Series":
        """Series from an {exponent: coefficient} map.

        Terms beyond the truncation order are dropped, consistent with the
        everything-mod-q^(N+1) semantics.
        """
        c = [0] * (order + 1)
        for e, v in terms.items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e <= order:
                c[e] += v
        return cls(order, c)

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        shown = []
        for e, v in enumerate(self.coeffs):
            if v:
                shown.append(f"{v}*q^{e}" if e else str(v))
            if len(shown) == 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"Series(order={self.order}: {body})"

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def coeff(self, n: int) -> int:
        return self[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _check_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "Series") -> "Series":
        self._check_order(other)
        return Series(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._check_order(other)
        return Series(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Series":
        return Series(self.order, [-a for a in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        self._check_order(other)
        return Series(self.order, kernels.cauchy_mul(self.coeffs, other.coeffs))

    def pow(self, exponent: int) -> "Series":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        out = Series.constant(self.order)
        for _ in range(exponent):
            out = out * self
        return out

    def times_monomial(self, scalar: int, shift: int = 0) -> "Series":
        """Return ``scalar * q**shift * self`` truncated at the same order."""
        if shift < 0:
            raise ValueError(f"shift must be >= 0, got {shift}")
        c = [0] * (self.order + 1)
        if scalar:
            for i in range(self.order + 1 - shift):
                v = self.coeffs[i]
                if v:
                    c[i + shift] = scalar * v
        return Series(self.order, c)

    def div_one_minus(self, exponent: int) -> "Series":
        """Divide by ``1 - q**exponent`` (multiply by the geometric series)."""
        if exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {exponent}")
        c = list(self.coeffs)
        for i in range(exponent, self.order + 1):
            c[i] += c[i - exponent]
        return Series(self.order, c)

    # -- reshaping ---------------------------------------------------------

    def truncated(self, new_order: int) -> "Series":
        if not 0 <= new_order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {new_order}")
        return Series(new_order, self.coeffs[: new_order + 1])

    def stretched(self, factor: int) -> "Series":
        """Substitute q -> q**factor, keeping the truncation order."""
        if factor < 1:
            raise ValueError(f"factor must be >= 1, got {factor}")
        c = [0] * (self.order + 1)
        for i in range(self.order // factor + 1):
            c[i * factor] = self.coeffs[i]
        return Series(self.order, c)


# -- in-place helpers on raw coefficient lists ------------------------------


def _mul_factor(c: list, exponent: int, sign: int) -> None:
    # multiply by (1 - sign*q^exponent); descending scan keeps reads pristine
    for i in range(len(c) - 1, exponent - 1, -1):
        v = c[i - exponent]
        if v:
            c[i] -= sign * v


def _div_factor(c: list, exponent: int, sign: int) -> None:
    # divide by (1 - sign*q^exponent) via the geometric recurrence
    for i in range(exponent, len(c)):
        v = c[i - exponent]
        if v:
            c[i] += sign * v


def qpoch_inf(a: int, d: int, order: int, sign: int = 1, invert: bool = False) -> Series:
    """Infinite q-Pochhammer product ``(sign*q**a; q**d)_inf`` truncated.

    Builds ``prod_{k>=0} (1 - sign*q**(a + k*d))``, or its reciprocal when
    ``invert`` is set.  ``sign=+1`` gives products like ``(q; q)_inf`` and
    ``sign=-1`` gives ``(-q; q)_inf``.  Factors are applied in increasing
    exponent order and the product stops once the exponent passes the
    truncation order, after which further factors cannot change anything.
    """
    if a < 1:
        raise ValueError(f"first exponent must be >= 1, got {a}")
    if d < 1:
        raise ValueError(f"exponent step must be >= 1, got {d}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    c = [0] * (order + 1)
    c[0] = 1
    e = a
    while e <= order:
        if invert:
            _div_factor(c, e, sign)
        else:
            _mul_factor(c, e, sign)
        e += d
    return Series(order, c)


def qpoch_fin(
    a: int, d: int, terms: int, order: int, sign: int = 1, invert: bool = False
) -> Series:
    """Finite q-Pochhammer product ``(sign*q**a; q**d)_terms`` truncated.

    The empty product (``terms=0``) is the constant series 1.  Factors whose
    exponent exceeds the truncation order are skipped; they are congruent to
    1 modulo ``q**(order+1)``.
    """
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    if a < 1 or d < 1:
        raise ValueError("exponents must be >= 1")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(terms):
        e = a + k * d
        if e > order:
            break
        if invert:
            _div_factor(c, e, sign)
        else:
            _mul_factor(c, e, sign)
    return Series(order, c)


# -- named series used throughout -------------------------------------------


def euler_product(order: int) -> Series:
    """``(q; q)_inf``: the Euler product, by the generic factor-by-factor path."""
    return qpoch_inf(1, 1, order)


def partition_series(order: int) -> Series:
    """``1/(q; q)_inf``: coefficients count the partitions of n."""
    return qpoch_inf(1, 1, order, invert=True)


def distinct_series(order: int) -> Series:
    """``(-q; q)_inf``: coefficients count partitions into distinct parts."""
    return qpoch_inf(1, 1, order, sign=-1)


def overpartition_series(order: int) -> Series:
    """``(-q; q)_inf / (q; q)_inf``: coefficients count overpartitions."""
    return distinct_series(order) * partition_series(order)


def pentagonal_numbers(limit: int):
    """Yield (generalized pentagonal number, sign) pairs up to ``limit``."""
    k = 1
    while True:
        g = k * (3 * k - 1) // 2
        if g > limit:
            return
        sign = -1 if k % 2 else 1
        yield g, sign
        g = k * (3 * k + 1) // 2
        if g <= limit:
            yield g, sign
        k += 1


def euler_product_pentagonal(order: int) -> Series:
    """``(q; q)_inf`` via the pentagonal number theorem.

    Optional fast path; must agree with :func:`euler_product` exactly.
    """
    c = [0] * (order + 1)
    c[0] = 1
    for g, sign in pentagonal_numbers(order):
        c[g] = sign
    return Series(order, c)


def partition_series_pentagonal(order: int) -> Series:
    """``1/(q; q)_inf`` via the pentagonal recurrence for p(n).

    Optional fast path; must agree with :func:`partition_series` exactly.
    """
    p = [0] * (order + 1)
    p[0] = 1
    pents = list(pentagonal_numbers(order))
    for n in range(1, order + 1):
        total = 0
        for g, sign in pents:
            if g > n:
                break
            total -= sign * p[n - g]
        p[n] = total
    return Series(order, p)
