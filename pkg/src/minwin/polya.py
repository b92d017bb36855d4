"""Integer partitions, cycle indices of symmetric groups, and series substitution.

The cycle index Z(S_t) is kept exactly: a list of (partition, Fraction) terms
where each partition of t is encoded by cycle-count multiplicities j_1..j_t
(j_k cycles of length k, sum k*j_k = t) and the coefficient of its monomial
prod a_k^{j_k} is 1/prod(k^{j_k} j_k!).  Substituting a base series f(x) for
the variables, a_k -> f(x^k), turns Z(S_t) into the orbit-counting generating
function Z_{S_t}(f(x), f(x^2), ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import series
from .errors import UsageError
from .series import TruncatedSeries


@dataclass(frozen=True)
class IntegerPartition:
    """Partition of t as cycle-count multiplicities (j_1, ..., j_t)."""

    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(j < 0 for j in self.multiplicities):
            raise UsageError("cycle multiplicities must be non-negative")

    @property
    def total(self) -> int:
        return sum(k * j for k, j in self.items())

    def items(self) -> list[tuple[int, int]]:
        """(cycle length k, multiplicity j_k) pairs with j_k > 0."""
        return [(k, j) for k, j in enumerate(self.multiplicities, start=1) if j > 0]


@dataclass(frozen=True)
class CycleIndex:
    """Cycle index of a permutation group of the given degree, as exact terms."""

    degree: int
    terms: tuple[tuple[IntegerPartition, Fraction], ...]

    def __post_init__(self) -> None:
        seen = set()
        total = Fraction(0)
        for part, coeff in self.terms:
            if part.multiplicities in seen:
                raise UsageError(f"duplicate partition {part.multiplicities}")
            seen.add(part.multiplicities)
            if part.total != self.degree:
                raise UsageError(
                    f"partition {part.multiplicities} does not sum to {self.degree}"
                )
            if coeff <= 0:
                raise UsageError(f"non-positive coefficient {coeff}")
            total += coeff
        if total != 1:
            raise UsageError(f"cycle index coefficients sum to {total}, not 1")


def _partition_lists(remaining: int, max_part: int) -> Iterator[list[int]]:
    if remaining == 0:
        yield []
        return
    for k in range(min(remaining, max_part), 0, -1):
        for rest in _partition_lists(remaining - k, k):
            yield [k] + rest


def partitions(t: int) -> list[IntegerPartition]:
    """All partitions of t, in lexicographic order of their multiplicity vectors."""
    if t < 0:
        raise UsageError(f"partition target must be >= 0, got {t}")
    found = []
    for parts in _partition_lists(t, t if t else 1):
        mult = [0] * t
        for k in parts:
            mult[k - 1] += 1
        found.append(tuple(mult))
    found.sort()
    return [IntegerPartition(m) for m in found]


@lru_cache(maxsize=None)
def _symmetric_terms(t: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    # Z(S_t) = (1/t) * sum_{k=1..t} a_k * Z(S_{t-k}); lru_cache keeps the memo
    # observationally pure and synchronised.
    if t == 0:
        return (((), Fraction(1)),)
    acc: dict[tuple[int, ...], Fraction] = {}
    for k in range(1, t + 1):
        for mult, coeff in _symmetric_terms(t - k):
            lifted = list(mult) + [0] * k
            lifted[k - 1] += 1
            key = tuple(lifted)
            acc[key] = acc.get(key, Fraction(0)) + coeff / t
    return tuple(sorted(acc.items()))


def cycle_index_symmetric(t: int) -> CycleIndex:
    """Cycle index of the symmetric group S_t."""
    if t < 0:
        raise UsageError(f"degree must be >= 0, got {t}")
    terms = tuple(
        (IntegerPartition(mult), coeff) for mult, coeff in _symmetric_terms(t)
    )
    return CycleIndex(t, terms)


def substitute_series(z: CycleIndex, base: TruncatedSeries) -> TruncatedSeries:
    """Evaluate z at a_k = base(x^k), truncated at base.order.

    Factors with j_k = 0 are skipped outright; the empty product (degree 0)
    is the unit series.
    """
    total = series.from_coeffs([], base.order)
    for part, coeff in z.terms:
        prod = series.one(base.order)
        for k, j_k in part.items():
            prod = series.multiply(
                prod, series.power(series.substitute_power(base, k), j_k)
            )
        total = series.add(total, series.scale(prod, coeff))
    return total
