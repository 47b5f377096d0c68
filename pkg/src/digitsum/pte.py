"""Equal-power-sum partitions built from digit-sum residue classes.

Sampling s(n)*x + n*y over a full base-b block and splitting the values by
digit sum mod b yields b multisets whose k-th power sums all agree for
k < N.  Values can repeat both inside a class and across classes; whatever
appears in every class can be cancelled, which is how partitions smaller
than the classical b^N arise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cost import charge
from .digits import iter_digit_sums

__all__ = [
    "PtePartition",
    "ReducedPartition",
    "PteCertificate",
    "SearchResult",
    "prouhet_partition",
    "generalized_partition",
    "verify_power_sums",
    "cancel_common",
    "search_small_solutions",
]

# A multiset of exact rationals: sorted (value, multiplicity) pairs.
Multiset = tuple[tuple[Fraction, int], ...]


def _freeze(counter: dict[Fraction, int]) -> Multiset:
    return tuple(sorted((v, m) for v, m in counter.items() if m))


def _expand(multiset: Multiset) -> list[Fraction]:
    out: list[Fraction] = []
    for value, mult in multiset:
        out.extend([value] * mult)
    return out


def _total_size(classes: Sequence[Multiset]) -> int:
    return sum(m for cls in classes for _, m in cls)


@dataclass(frozen=True)
class PtePartition:
    """The b digit-sum residue classes of the multiset {s(n) x + n y}."""

    b: int
    N: int
    x: Fraction
    y: Fraction
    classes: tuple[Multiset, ...]

    @property
    def size(self) -> int:
        return _total_size(self.classes)

    def expanded(self) -> list[list[Fraction]]:
        """Classes as sorted value lists with repeats written out."""
        return [_expand(cls) for cls in self.classes]


@dataclass(frozen=True)
class ReducedPartition:
    """A partition after cross-class cancellation of shared values."""

    b: int
    N: int
    x: Fraction
    y: Fraction
    classes: tuple[Multiset, ...]
    reduced_size: int

    def expanded(self) -> list[list[Fraction]]:
        return [_expand(cls) for cls in self.classes]


@dataclass(frozen=True)
class PteCertificate:
    """Per-class power sums for k = 0..max_degree; valid iff they all agree."""

    partition: object
    max_degree: int
    power_sums: tuple[tuple[Fraction, ...], ...]
    valid: bool


def generalized_partition(b: int, N: int, x, y, max_cost: int | None = None) -> PtePartition:
    """Split the values s(n) x + n y, n < b^N, by digit sum mod b."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if N < 1:
        raise ValueError(f"order must be >= 1, got {N}")
    charge(b**N, max_cost)
    x = Fraction(x)
    y = Fraction(y)
    counters: list[dict[Fraction, int]] = [{} for _ in range(b)]
    for n, s in enumerate(iter_digit_sums(b, b**N)):
        value = s * x + n * y
        bucket = counters[s % b]
        bucket[value] = bucket.get(value, 0) + 1
    return PtePartition(b, N, x, y, tuple(_freeze(c) for c in counters))


def prouhet_partition(b: int, N: int, max_cost: int | None = None) -> PtePartition:
    """The classical partition of {0, ..., b^N - 1} by digit sum mod b."""
    return generalized_partition(b, N, 0, 1, max_cost)


def verify_power_sums(partition, max_degree: int) -> PteCertificate:
    """Exact per-class power sums up to max_degree; k = 0 counts multiplicity."""
    if max_degree < 0:
        raise ValueError(f"max degree must be >= 0, got {max_degree}")
    sums = []
    for cls in partition.classes:
        sums.append(
            tuple(
                sum((mult * value**k for value, mult in cls), start=Fraction(0))
                for k in range(max_degree + 1)
            )
        )
    valid = all(row == sums[0] for row in sums[1:])
    return PteCertificate(partition, max_degree, tuple(sums), valid)


def cancel_common(partition: PtePartition) -> ReducedPartition:
    """Subtract from every class the minimum multiplicity each value attains
    across all classes.  Identical amounts leave every power sum difference
    unchanged, so validity is preserved."""
    counters = [dict(cls) for cls in partition.classes]
    shared = set(counters[0])
    for counter in counters[1:]:
        shared &= set(counter)
    for value in shared:
        low = min(counter[value] for counter in counters)
        if low:
            for counter in counters:
                counter[value] -= low
    classes = tuple(_freeze(c) for c in counters)
    return ReducedPartition(
        partition.b,
        partition.N,
        partition.x,
        partition.y,
        classes,
        _total_size(classes),
    )


@dataclass(frozen=True)
class SearchResult:
    x: Fraction
    y: Fraction
    reduced: ReducedPartition
    certificate: PteCertificate


def search_small_solutions(
    b: int,
    N: int,
    x_grid: Iterable,
    y_grid: Iterable,
    k_max: int | None = None,
    min_size: int = 0,
    max_cost: int | None = None,
) -> list[SearchResult]:
    """Scan a grid of (x, y), cancel shared values, keep valid certificates.

    Results are ranked by reduced size, then by denominator height and
    |x| + |y|, with (x, y) as the final deterministic tiebreak.
    """
    degree = N - 1 if k_max is None else k_max
    xs = sorted({Fraction(v) for v in x_grid})
    ys = sorted({Fraction(v) for v in y_grid})
    if not xs or not ys:
        raise ValueError("grids must be nonempty")
    results = []
    for x in xs:
        for y in ys:
            partition = generalized_partition(b, N, x, y, max_cost)
            reduced = cancel_common(partition)
            certificate = verify_power_sums(reduced, degree)
            if not certificate.valid:
                continue
            if reduced.reduced_size < min_size:
                continue
            results.append(SearchResult(x, y, reduced, certificate))
    results.sort(
        key=lambda res: (
            res.reduced.reduced_size,
            math.lcm(res.x.denominator, res.y.denominator),
            abs(res.x) + abs(res.y),
            res.x,
            res.y,
        )
    )
    return results
