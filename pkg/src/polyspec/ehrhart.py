"""Counting polynomials from delta-vectors, in the binomial basis.

A delta-vector (d_0, ..., d_n) determines the lattice-point counting
polynomial L(z) = sum_j d_j * C(z + n - j, n), expanded here into the
monomial basis with exact rational coefficients. The same expansion applied
to a weighted class gives the weighted counting polynomial, which may have
negative coefficients. Series coefficients of d(z) / (1 - z)^(n+1) recover
the counts L(0), L(1), ... directly.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ExponentOutOfRange, InvalidInput
from .exact import FracPoly, RatPoly


@dataclass(frozen=True)
class DeltaVector:
    """The delta-vector of a polytope with the origin interior.

    Such vectors always start with 1 (the m = 0 count); weighted classes are
    exempt from this and are passed around as plain sequences instead.
    """

    n: int
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", operator.index(self.n))
        object.__setattr__(
            self, "delta", tuple(operator.index(x) for x in self.delta)
        )
        if self.n < 1:
            raise InvalidInput("dimension must be positive")
        if len(self.delta) != self.n + 1:
            raise InvalidInput(
                f"delta-vector needs {self.n + 1} entries, got {len(self.delta)}"
            )
        if any(x < 0 for x in self.delta):
            raise InvalidInput(f"delta entries must be nonnegative: {self.delta}")
        if self.delta[0] != 1:
            raise InvalidInput(
                f"delta_0 must be 1 for a polytope delta-vector, got {self.delta[0]}"
            )

    @property
    def total(self) -> int:
        return sum(self.delta)


def _binomial_poly(shift: int, n: int) -> RatPoly:
    """C(z + shift, n) as an exact polynomial in z."""
    if n == 0:
        return RatPoly([1])
    poly = RatPoly([1])
    for i in range(n):
        poly = poly * RatPoly([shift - i, 1])
    return poly * Fraction(1, math.factorial(n))


def delta_to_ehrhart(delta: Sequence[int], n: int) -> RatPoly:
    """Expand a delta-vector into its counting polynomial.

    L(z) = sum_j delta_j * C(z + n - j, n); the leading coefficient equals
    (sum of the entries) / n!.
    """
    n = operator.index(n)
    coeffs = [operator.index(x) for x in delta]
    if len(coeffs) != n + 1:
        raise ValueError(f"delta-vector needs {n + 1} entries, got {len(coeffs)}")
    result = RatPoly.zero()
    for j, dj in enumerate(coeffs):
        if dj:
            result = result + _binomial_poly(n - j, n) * dj
    return result


def weighted_ehrhart(delta_class: FracPoly, n: int) -> RatPoly:
    """Counting polynomial of a weighted delta-vector class.

    The class must have integer exponents within [0, n]; an all-zero class
    yields the zero polynomial. Coefficients may be negative.
    """
    n = operator.index(n)
    coeffs = [0] * (n + 1)
    for e, c in delta_class.terms():
        if e.denominator != 1 or e < 0 or e > n:
            raise ExponentOutOfRange(
                f"class exponent {e} is not an integer in [0, {n}]"
            )
        coeffs[int(e)] = c
    result = RatPoly.zero()
    for j, dj in enumerate(coeffs):
        if dj:
            result = result + _binomial_poly(n - j, n) * dj
    return result


def ehrhart_series_truncated(
    delta: Sequence[int], n: int, terms: int
) -> list[int]:
    """First ``terms`` coefficients of delta(z) / (1 - z)^(n+1).

    Coefficient m equals the counting polynomial evaluated at m.
    """
    n = operator.index(n)
    terms = operator.index(terms)
    if terms < 1:
        raise ValueError(f"need at least one term, got {terms}")
    coeffs = [operator.index(x) for x in delta]
    if len(coeffs) != n + 1:
        raise ValueError(f"delta-vector needs {n + 1} entries, got {len(coeffs)}")
    out = []
    for m in range(terms):
        out.append(
            sum(
                coeffs[j] * math.comb(m - j + n, n)
                for j in range(min(m, n) + 1)
            )
        )
    return out
