"""Base-b digit sums and the root-of-unity weights built on them."""

from __future__ import annotations

from typing import Iterator

from .arith import CycloNum, xi_power_table

__all__ = [
    "digit_sum",
    "thue_morse_class",
    "xi_digit_weight",
    "iter_digit_sums",
    "digit_sums",
]


def _check_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


def digit_sum(n: int, b: int) -> int:
    """Sum of the base-b digits of n."""
    _check_base(b)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = 0
    while n:
        n, d = divmod(n, b)
        total += d
    return total


def thue_morse_class(n: int, b: int) -> int:
    """Residue class of the digit sum mod b (base 2 gives the Thue-Morse sequence)."""
    return digit_sum(n, b) % b


def xi_digit_weight(n: int, b: int) -> CycloNum:
    """xi raised to the base-b digit sum of n (exponent reduced mod b)."""
    return xi_power_table(b)[thue_morse_class(n, b)]


def iter_digit_sums(b: int, limit: int) -> Iterator[int]:
    """Yield digit_sum(n, b) for n = 0 .. limit-1.

    Maintains the digit string across increments so the whole range costs
    O(limit) amortized instead of O(limit * log limit); this is the loop
    the brute-force verifiers spend their time in.
    """
    _check_base(b)
    digits: list[int] = []
    s = 0
    for n in range(limit):
        if n:
            i = 0
            while i < len(digits) and digits[i] == b - 1:
                digits[i] = 0
                s -= b - 1
                i += 1
            if i == len(digits):
                digits.append(0)
            digits[i] += 1
            s += 1
        yield s


def digit_sums(b: int, limit: int) -> list[int]:
    """Digit sums of 0 .. limit-1 as a list (precomputed table form)."""
    return list(iter_digit_sums(b, limit))
