"""Exact truncated formal power series over the rationals.

Everything here is order-bounded and exact: a series knows a fixed truncation
order N and carries Fraction coefficients for x^0 .. x^N.  Mid-computation
values may be non-integer (cycle-index averages divide by group orders), so
integrality is only asserted by callers at the very end, via
:meth:`TruncatedSeries.integer_coefficient`.

The one domain-specific constructor is :func:`single_class_gf`, the series
x^2/(1-x)^2 = 0,0,1,2,3,4,...  whose n-th coefficient counts the quota choices
1 <= m <= n-1 for a single voter class of size n with no null and no veto
members.  All multi-class counting series are built from it by products and
x -> x^k substitutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConsistencyError, UsageError


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficient vector of a formal power series, exact up to x**order."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise UsageError(f"series order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise UsageError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise UsageError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return multiply(self, other)

    def integer_coefficient(self, n: int) -> int:
        """Coefficient at x**n, which must be a whole number."""
        c = self[n]
        if c.denominator != 1:
            raise ConsistencyError(f"coefficient at x^{n} is {c}, not an integer")
        return c.numerator


def from_coeffs(values: Iterable[int | Fraction], order: int) -> TruncatedSeries:
    """Build a series from leading coefficients, zero-padding or truncating to order."""
    coeffs = [Fraction(v) for v in values][: order + 1]
    coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
    return TruncatedSeries(order, tuple(coeffs))


def one(order: int) -> TruncatedSeries:
    """The multiplicative unit 1, 0, 0, ..."""
    return from_coeffs([1], order)


def single_class_gf(order: int) -> TruncatedSeries:
    """x^2/(1-x)^2: coefficient n-1 at x^n for n >= 2, else 0."""
    return from_coeffs([0 if n <= 1 else n - 1 for n in range(order + 1)], order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise UsageError(f"order mismatch: {a.order} != {b.order}")
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def scale(s: TruncatedSeries, c: int | Fraction) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(s.order, tuple(c * x for x in s.coeffs))


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product: c_n = sum_{k<=n} a_k * b_{n-k}, truncated at the shared order."""
    if a.order != b.order:
        raise UsageError(f"order mismatch: {a.order} != {b.order}")
    av, bv = a.coeffs, b.coeffs
    coeffs = tuple(
        sum((av[k] * bv[n - k] for k in range(n + 1)), Fraction(0))
        for n in range(a.order + 1)
    )
    return TruncatedSeries(a.order, coeffs)


def power(s: TruncatedSeries, b: int) -> TruncatedSeries:
    """b-fold product of s with itself; power(s, 0) is the unit series."""
    if b < 0:
        raise UsageError(f"exponent must be >= 0, got {b}")
    result = one(s.order)
    for _ in range(b):
        result = multiply(result, s)
    return result


def substitute_power(s: TruncatedSeries, a: int) -> TruncatedSeries:
    """Replace x by x**a: coefficient at n is s[n/a] when a | n, else 0."""
    if a < 1:
        raise UsageError(f"substitution power must be >= 1, got {a}")
    coeffs = tuple(
        s.coeffs[n // a] if n % a == 0 else Fraction(0) for n in range(s.order + 1)
    )
    return TruncatedSeries(s.order, coeffs)


def expand_rational(
    numerator: Sequence[int | Fraction],
    denominator_factors: Sequence[tuple[int, int]],
    order: int,
) -> TruncatedSeries:
    """Expand numerator / prod (1-x^k)^e as a power series up to the given order.

    Each (k, e) pair stands for a factor (1-x^k)^e in the denominator.  Division
    by (1-x^k) is the stride-k prefix sum c_n += c_{n-k}, applied e times: the
    exact geometric-series expansion, no long division.
    """
    coeffs = list(from_coeffs(numerator, order).coeffs)
    for k, e in denominator_factors:
        if k < 1 or e < 1:
            raise UsageError(f"denominator factor ({k},{e}) must be positive")
        for _ in range(e):
            for n in range(k, order + 1):
                coeffs[n] += coeffs[n - k]
    return TruncatedSeries(order, tuple(coeffs))
