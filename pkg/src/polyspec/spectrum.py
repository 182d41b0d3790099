"""Spectra of lattice simplices and their delta-vector refinements.

The centerpiece is the closed-form spectrum of a reduced simplex, computed
directly from its weight vector. The spectrum is a multiset of mu rationals
in [0, n] stored as a ``FracPoly``; binning it over the intervals (k-1, k]
yields the delta-vector, and grouping by fractional part yields the weighted
delta-vector classes. Two families with known closed-form spectra (products
of one-variable powers, and a one-parameter tetrahedron family) are included
for cross-checking growth behavior of their counting polynomials.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ExponentOutOfRange, NotReduced
from .exact import FracPoly
from .geometry import WeightVector


def _as_weights(weights: WeightVector | Sequence[int]) -> tuple[int, ...]:
    if isinstance(weights, WeightVector):
        return weights.q
    return WeightVector(tuple(weights)).q


def spectrum_reduced_simplex(weights: WeightVector | Sequence[int]) -> FracPoly:
    """Closed-form spectrum of a reduced simplex from its weight vector.

    Let F be the distinct fractions l/q_i with 0 <= l < q_i, sorted
    increasing, and let d(f) count the weights q_j with q_j * f integral.
    Repeating each f exactly d(f) times gives a sequence c_0 .. c_{mu-1},
    and the spectrum is the multiset {k - mu * c_k}. Requires gcd(q) = 1;
    the formula is provably wrong otherwise, so non-reduced input raises
    NotReduced instead of returning garbage.
    """
    q = _as_weights(weights)
    g = math.gcd(*q)
    if g != 1:
        raise NotReduced(
            f"weights {q} have gcd {g}; the closed form needs coprime weights"
        )
    mu = sum(q)
    fractions = sorted({Fraction(l, qi) for qi in q for l in range(qi)})
    steps: list[Fraction] = []
    for f in fractions:
        d = sum(1 for qi in q if (qi * f).denominator == 1)
        steps.extend([f] * d)
    assert len(steps) == mu
    return FracPoly.from_exponents(k - mu * steps[k] for k in range(mu))


def _checked_terms(spec: FracPoly, n: int) -> list[tuple[Fraction, int]]:
    terms = spec.terms()
    for e, _ in terms:
        if e < 0 or e > n:
            raise ExponentOutOfRange(
                f"exponent {e} outside [0, {n}]"
            )
    return terms


def spectrum_to_delta(spec: FracPoly, n: int) -> tuple[int, ...]:
    """Bin a spectrum into its delta-vector.

    delta_k is the total coefficient mass on the half-open interval
    (k-1, k]; since spectra are nonnegative, delta_0 counts exponent 0 only.
    """
    n = operator.index(n)
    delta = [0] * (n + 1)
    for e, c in _checked_terms(spec, n):
        delta[math.ceil(e)] += c
    return tuple(delta)


def weighted_delta_decomposition(
    spec: FracPoly, n: int
) -> dict[Fraction, FracPoly]:
    """Split a spectrum into weighted delta-vector classes.

    Each term z**beta contributes z**ceil(beta) to the class
    alpha = beta - ceil(beta) in (-1, 0]. Keys are ordered descending
    (class 0 first), matching how the classes are usually displayed.
    """
    n = operator.index(n)
    classes: dict[Fraction, dict[Fraction, int]] = {}
    for e, c in _checked_terms(spec, n):
        k = math.ceil(e)
        alpha = e - k
        bucket = classes.setdefault(alpha, {})
        bucket[Fraction(k)] = bucket.get(Fraction(k), 0) + c
    return {
        alpha: FracPoly(classes[alpha])
        for alpha in sorted(classes, reverse=True)
    }


def spectrum_is_integral(spec: FracPoly) -> bool:
    """True iff every exponent is an integer.

    For the spectrum of a polytope this is equivalent to the polytope being
    reflexive, and to the spectrum coinciding with the delta-vector.
    """
    return spec.is_integral()


def is_unimodal(sequence: Sequence[int]) -> bool:
    """True iff the sequence rises (weakly) to a peak and then falls."""
    seen_decrease = False
    for a, b in zip(sequence, sequence[1:]):
        if b < a:
            seen_decrease = True
        elif b > a and seen_decrease:
            return False
    return True


@dataclass(frozen=True)
class SpectrumReport:
    """Summary statistics of a spectrum supported in [0, n].

    ``unimodal_integer_part`` is None when the spectrum is not integral,
    since unimodality is only meaningful for a genuine coefficient sequence.
    ``variance_at_least_n_over_12`` reports a conjectured lower bound as
    data; nothing in the package asserts it.
    """

    spec: FracPoly
    mu: int
    mean: Fraction
    variance: Fraction
    unimodal_integer_part: bool | None
    is_integral: bool
    variance_at_least_n_over_12: bool

    def __post_init__(self) -> None:
        if self.mu != self.spec.total():
            raise ValueError("mu must equal the coefficient total of spec")


def spectrum_stats(spec: FracPoly, n: int) -> SpectrumReport:
    """Mean, variance and unimodality report for a spectrum in [0, n].

    Mean and variance are taken over the multiset of exponents, the variance
    being centered at n/2 (the symmetry center of polytope spectra).
    """
    n = operator.index(n)
    terms = _checked_terms(spec, n)
    mu = spec.total()
    if mu == 0:
        raise ValueError("cannot summarize an empty spectrum")
    center = Fraction(n, 2)
    mean = sum((c * e for e, c in terms), Fraction(0)) / mu
    variance = sum((c * (e - center) ** 2 for e, c in terms), Fraction(0)) / mu
    integral = spec.is_integral()
    unimodal = None
    if integral:
        unimodal = is_unimodal([spec.coefficient(i) for i in range(n + 1)])
    return SpectrumReport(
        spec=spec,
        mu=mu,
        mean=mean,
        variance=variance,
        unimodal_integer_part=unimodal,
        is_integral=integral,
        variance_at_least_n_over_12=variance >= Fraction(n, 12),
    )


def toric_spectrum_box(exponents: Sequence[int]) -> FracPoly:
    """Spectrum of a coordinate-power sum in one variable per entry.

    For entries (a_1, ..., a_r) this is the product over k of
    1 + z^(1/a_k) + ... + z^((a_k - 1)/a_k); its total is the product of the
    entries."""
    exps = [operator.index(a) for a in exponents]
    if not exps or any(a < 1 for a in exps):
        raise ValueError(f"entries must be positive integers: {exponents}")
    result = FracPoly.single(0)
    for a in exps:
        factor = FracPoly.from_exponents(Fraction(i, a) for i in range(a))
        result = result * factor
    return result


def toric_spectrum_reeve(h: int) -> FracPoly:
    """Spectrum of the twisted tetrahedron family with height parameter h.

    Equals 1 + z + z^2 plus z^(1 + i/h) for i = 1 .. h-1; its delta-vector
    is (1, 1, h, 0), which makes the linear coefficient of the counting
    polynomial (13 - h)/6, negative once h >= 14.
    """
    h = operator.index(h)
    if h < 2:
        raise ValueError(f"height parameter must be at least 2, got {h}")
    terms = [Fraction(0), Fraction(1), Fraction(2)]
    terms.extend(1 + Fraction(i, h) for i in range(1, h))
    return FracPoly.from_exponents(terms)
