"""Exact arithmetic containers used by every other module.

Two polynomial-like values cover all outputs of the package: ``FracPoly`` is
a finite sum of integer multiples of z**e with rational exponents e (spectra
and weighted delta-vectors live here), and ``RatPoly`` is a dense univariate
polynomial with rational coefficients (lattice-point counting polynomials).
All scalars are ``fractions.Fraction``: arbitrary precision, always stored
reduced, denominator positive. There is no floating-point mode anywhere.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

# Alias used in signatures throughout the package.
Rat = Fraction

RatLike = Union[Fraction, int, str]


def _exponent_text(e: Fraction) -> str:
    """Render z**e canonically: z, z^3, z^(1/2), z^(-2). Empty for e == 0."""
    if e == 0:
        return ""
    if e == 1:
        return "z"
    if e.denominator == 1 and e > 0:
        return f"z^{e}"
    return f"z^({e})"


class FracPoly:
    """Finite map from rational exponents to nonzero integer coefficients.

    Represents sums like ``1 + 3*z^(1/2) - z^2``. The zero polynomial is the
    empty map. Instances are immutable and hashable; every operation returns
    a new object. Zero coefficients are dropped eagerly, so equality is plain
    map equality and serialization is canonical (terms ascend by exponent).
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[RatLike, int] | Iterable[tuple[RatLike, int]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, int] = {}
        for exp, coeff in items:
            c = operator.index(coeff)
            if c == 0:
                continue
            e = Fraction(exp)
            total = acc.get(e, 0) + c
            if total:
                acc[e] = total
            else:
                del acc[e]
        self._terms = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "FracPoly":
        return cls()

    @classmethod
    def single(cls, exponent: RatLike, coeff: int = 1) -> "FracPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[RatLike]) -> "FracPoly":
        """Sum of z**e over a multiset of exponents (repeats accumulate)."""
        return cls((e, 1) for e in exponents)

    # -- inspection --------------------------------------------------------

    def terms(self) -> list[tuple[Fraction, int]]:
        """All (exponent, coefficient) pairs, ascending by exponent."""
        return sorted(self._terms.items())

    def exponents(self) -> list[Fraction]:
        return sorted(self._terms)

    def coefficient(self, exponent: RatLike) -> int:
        return self._terms.get(Fraction(exponent), 0)

    def total(self) -> int:
        """Sum of all coefficients, i.e. the value at z = 1."""
        return sum(self._terms.values())

    def is_integral(self) -> bool:
        """True iff every exponent is an integer."""
        return all(e.denominator == 1 for e in self._terms)

    def __iter__(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"FracPoly({dict(self.terms())!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "FracPoly") -> "FracPoly":
        if not isinstance(other, FracPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            total = acc.get(e, 0) + c
            if total:
                acc[e] = total
            else:
                del acc[e]
        out = FracPoly()
        out._terms = acc
        return out

    def __neg__(self) -> "FracPoly":
        out = FracPoly()
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "FracPoly") -> "FracPoly":
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "FracPoly") -> "FracPoly":
        if not isinstance(other, FracPoly):
            return NotImplemented
        acc: dict[Fraction, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                total = acc.get(e, 0) + c1 * c2
                if total:
                    acc[e] = total
                else:
                    del acc[e]
        out = FracPoly()
        out._terms = acc
        return out

    def mul_one_minus_z_pow(self, k: int) -> "FracPoly":
        """Multiply by (1 - z)**k, expanded exactly.

        Returns sum over j = 0..k of (-1)**j * C(k, j) * shift(self, j) where
        shift adds j to every exponent.
        """
        k = operator.index(k)
        if k < 0:
            raise ValueError(f"power must be nonnegative, got {k}")
        acc: dict[Fraction, int] = {}
        for j in range(k + 1):
            factor = (-1) ** j * math.comb(k, j)
            for e, c in self._terms.items():
                key = e + j
                total = acc.get(key, 0) + factor * c
                if total:
                    acc[key] = total
                else:
                    del acc[key]
        out = FracPoly()
        out._terms = acc
        return out

    def reflect(self, n: int) -> "FracPoly":
        """Map each term (e, c) to (n - e, c); an involution."""
        n = operator.index(n)
        if n < 0:
            raise ValueError(f"reflection degree must be nonnegative, got {n}")
        out = FracPoly()
        out._terms = {n - e: c for e, c in self._terms.items()}
        return out

    def restrict(
        self,
        lo: RatLike,
        hi: RatLike,
        include_lo: bool = True,
        include_hi: bool = True,
    ) -> "FracPoly":
        """Keep exactly the terms whose exponent lies in the given interval."""
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval: lo={lo} > hi={hi}")
        acc = {}
        for e, c in self._terms.items():
            if e < lo or e > hi:
                continue
            if e == lo and not include_lo:
                continue
            if e == hi and not include_hi:
                continue
            acc[e] = c
        out = FracPoly()
        out._terms = acc
        return out

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms ascending by exponent.

        Each term renders as ``coeff*z^(p/q)`` with the exponent reduced,
        ``/1`` omitted, unit coefficients omitted, and negative coefficients
        rendered with `` - `` separators. The zero polynomial renders as "0".
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            mag = abs(c)
            zpart = _exponent_text(e)
            if not zpart:
                body = str(mag)
            elif mag == 1:
                body = zpart
            else:
                body = f"{mag}*{zpart}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficient i is the coefficient of z**i; trailing zeros are trimmed, so
    equality is coefficient-tuple equality. The zero polynomial has no
    coefficients and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RatLike] = ()) -> None:
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls()

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x: RatLike) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self._coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RatPoly | RatLike") -> "RatPoly":
        if isinstance(other, RatPoly):
            if not self._coeffs or not other._coeffs:
                return RatPoly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        scalar = Fraction(other)
        return RatPoly([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"RatPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render with one common denominator factored out.

        Examples: ``1/24*(9z^4 + 10z^3 + 75z^2 + 50z + 24)`` or
        ``(z^2 + 2z + 1)``. The zero polynomial renders as ``(0)``.
        """
        if not self._coeffs:
            return "(0)"
        den = math.lcm(*(c.denominator for c in self._coeffs))
        nums = [int(c * den) for c in self._coeffs]
        parts: list[str] = []
        for k in range(len(nums) - 1, -1, -1):
            c = nums[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                zpart = "z" if k == 1 else f"z^{k}"
                body = zpart if mag == 1 else f"{mag}{zpart}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        inner = "".join(parts)
        if den == 1:
            return f"({inner})"
        return f"1/{den}*({inner})"
