"""Exact arithmetic for Hilbert series of graded rings.

Everything in the engine is exact: rationals are `fractions.Fraction`,
polynomials are dense lists of Python ints (index = exponent), and Hilbert
series are stored as rational functions in *factored* shape

    extra(t) * prod (1 - t^d)  /  prod (1 - t^a)

so that truncated expansion, full cancellation and evaluation after
removing the pole at t = 1 can all be done without ever leaving ZZ/QQ.
A series is expanded by polynomial multiplication and by the recurrence
c[m] += c[m - a] for each denominator factor (1 - t^a).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

# ---------------------------------------------------------------------------
# dense integer polynomials (index = exponent)


def poly_trim(p: list[int]) -> list[int]:
    """Drop trailing zeros; the zero polynomial is []."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, ci in enumerate(p):
        if ci:
            for j, cj in enumerate(q):
                if cj:
                    out[i + j] += ci * cj
    return poly_trim(out)


def poly_add(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_one_minus_t_pow(d: int) -> list[int]:
    """The factor 1 - t^d."""
    if d <= 0:
        raise ValueError("factor exponent must be >= 1")
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return out


def poly_eval_at_one(p: Sequence[int]) -> int:
    return sum(p)


def poly_is_palindromic(p: Sequence[int]) -> bool:
    """True if p(t) = +- t^deg p(1/t)."""
    q = poly_trim(list(p))
    if not q:
        return False
    rev = q[::-1]
    return q == rev or q == [-c for c in rev]


def poly_divide_by_one_minus_t(p: Sequence[int]) -> list[int]:
    """Exact quotient p / (1 - t); raises if (1 - t) does not divide p."""
    q = poly_trim(list(p))
    if not q:
        return []
    if sum(q) != 0:
        raise ValueError("polynomial not divisible by (1 - t)")
    # p = (1 - t) * r  =>  r[k] = p[k] + r[k-1]
    out = [0] * (len(q) - 1)
    acc = 0
    for k in range(len(q) - 1):
        acc += q[k]
        out[k] = acc
    return poly_trim(out)


# ---------------------------------------------------------------------------
# Hilbert series data


@dataclass(frozen=True)
class HilbertData:
    """A rational function prod(1-t^d) * extra(t) / prod(1-t^a).

    numerator_factors / denominator_factors are multisets of exponents,
    extra_numerator is an integer polynomial (default 1).  The represented
    function must have a power-series expansion at t = 0 (denominator
    factors all have positive exponent, so it always does).
    """

    numerator_factors: tuple[int, ...] = ()
    denominator_factors: tuple[int, ...] = ()
    extra_numerator: tuple[int, ...] = (1,)

    def __post_init__(self) -> None:
        if any(d < 1 for d in self.numerator_factors):
            raise ValueError("numerator factor exponents must be >= 1")
        if any(a < 1 for a in self.denominator_factors):
            raise ValueError("denominator factor exponents must be >= 1")

    @staticmethod
    def make(
        numerator_factors: Iterable[int] = (),
        denominator_factors: Iterable[int] = (),
        extra_numerator: Sequence[int] = (1,),
    ) -> "HilbertData":
        return HilbertData(
            tuple(sorted(numerator_factors)),
            tuple(sorted(denominator_factors)),
            tuple(poly_trim(list(extra_numerator))),
        )


def expand_series(h: HilbertData, order: int) -> list[int]:
    """Exact coefficients [c_0 .. c_order] of the power series of h."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [0] * (order + 1)
    for i, c in enumerate(h.extra_numerator[: order + 1]):
        coeffs[i] = c
    for d in h.numerator_factors:
        # multiply by (1 - t^d), truncated
        if d <= order:
            for m in range(order, d - 1, -1):
                coeffs[m] -= coeffs[m - d]
    for a in h.denominator_factors:
        # divide by (1 - t^a): c[m] += c[m - a]
        if a <= order:
            for m in range(a, order + 1):
                coeffs[m] += coeffs[m - a]
    return coeffs


def numerator_normal_form(h: HilbertData, ambient_weights: Sequence[int]) -> tuple[list[int], int]:
    """Numerator N with h = N / prod(1 - t^a) over the given weights, and q = deg N.

    N is recovered by truncated multiplication of the series of h by
    prod(1 - t^a); it must come out to an honest palindromic polynomial,
    otherwise the input was not a projectively Gorenstein presentation.
    """
    weights = sorted(ambient_weights)
    if not weights or any(a < 1 for a in weights):
        raise ValueError("ambient weights must be positive")
    # deg N cannot exceed the degree visible in the factored presentation
    guess = sum(h.numerator_factors) + len(h.extra_numerator) + sum(weights)
    order = guess + 1
    series = expand_series(h, order)
    n_poly = list(series)
    for a in weights:
        for m in range(order, a - 1, -1):
            n_poly[m] -= n_poly[m - a]
    n_trim = poly_trim(n_poly)
    # beyond deg N the product must be identically zero up to the truncation
    if len(n_trim) > order - max(weights):
        raise CandidateIntegrityError("series times denominator is not a polynomial")
    q = len(n_trim) - 1
    if not poly_is_palindromic(n_trim):
        raise CandidateIntegrityError("Hilbert numerator is not palindromic")
    return n_trim, q


class CandidateIntegrityError(Exception):
    """A structural promise about a candidate failed (signals a bug or bad input)."""


class DimensionMismatchError(Exception):
    """Pole order at t = 1 is not the one required for a polarized surface."""


def evaluate_H_at_1(h: HilbertData) -> Fraction:
    """H(1) where h(t) = H(t) / (1-t)^3, by exact cancellation of (1-t) factors.

    Requires the fully cancelled pole order at t = 1 to be exactly 3.
    """
    num = list(h.extra_numerator)
    for d in h.numerator_factors:
        num = poly_mul(num, poly_one_minus_t_pow(d))
    if not num:
        raise DimensionMismatchError("zero numerator")
    # each denominator factor (1-t^a) contributes one (1-t) and sigma_a(1) = a
    pole = len(h.denominator_factors)
    denom_at_one = 1
    for a in h.denominator_factors:
        denom_at_one *= a
    # cancel (1-t) zeros of the numerator against the pole
    while poly_eval_at_one(num) == 0:
        num = poly_divide_by_one_minus_t(num)
        pole -= 1
    if pole != 3:
        raise DimensionMismatchError(f"pole order at t=1 is {pole}, expected 3")
    return Fraction(poly_eval_at_one(num), denom_at_one)
