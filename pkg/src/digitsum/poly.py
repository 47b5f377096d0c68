"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

__all__ = ["RationalPoly"]


class RationalPoly:
    """Polynomial over Q, coefficients indexed by degree (constant first).

    Instances are callables: ``p(value)`` evaluates by Horner's rule and
    stays exact for Fraction (or CycloNum) arguments.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        vec = [Fraction(c) for c in coeffs]
        while vec and not vec[-1]:
            vec.pop()
        self.coeffs = tuple(vec)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> RationalPoly:
        if degree < 0:
            raise ValueError("degree must be >= 0")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __call__(self, value):
        result = _FRACTION_ZERO
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __add__(self, other):
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        n = max(len(self.coeffs), len(rhs.coeffs))
        return RationalPoly(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (rhs.coeffs[i] if i < len(rhs.coeffs) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other):
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = _as_poly(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __neg__(self) -> RationalPoly:
        return RationalPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(c * other for c in self.coeffs)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [_FRACTION_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, c in enumerate(other.coeffs):
                    if c:
                        out[i + j] += a * c
        return RationalPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (RationalPoly((other,))).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({list(map(str, self.coeffs))})"


def _as_poly(value):
    if isinstance(value, RationalPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPoly((value,))
    return None


_FRACTION_ZERO = Fraction(0)
