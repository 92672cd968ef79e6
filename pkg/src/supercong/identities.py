"""Exact verification of the partial-fraction and binomial-transform identities.

Everything here is characteristic-zero rational arithmetic: both sides of
each identity are evaluated exactly and compared for equality, with no
tolerance.  The single exception is the floating-point desk check of the
central-binomial series for 8G/pi, G being Catalan's constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import PoleAtX
from .exact import Rational
from .sums import (
    SequenceLike,
    as_sequence_fn,
    harmonic,
    mhs_exact,
    pochhammer,
    transform_A,
    transform_T,
)

_VARIANTS = ("one", "two")


def _check_variant(variant: str) -> str:
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    return variant


@dataclass(frozen=True)
class SeriesAux:
    """Parameters of the auxiliary partial sums G and F.

    variant "one" uses weight-1 sums with a single Pochhammer ratio,
    variant "two" weight-2 sums with a product of two Pochhammer ratios.
    """

    n: int
    r: int
    x: Rational
    variant: str = "one"

    def G(self) -> Fraction:
        return aux_G(self.n, self.r, self.x, self.variant)

    def F(self) -> Fraction:
        return aux_F(self.n, self.r, self.x, self.variant)


def aux_G(n: int, r: int, x, variant: str = "one") -> Fraction:
    """G_n^(r)(x): partial sums of Pochhammer ratios times S_k.

    variant "one": sum_{k<=n} (x)_k/(1)_k * S_k({1}^r)
    variant "two": sum_{k<=n} (x)_k(-x)_k/(1)_k**2 * S_k({2}^r)
    """
    _check_variant(variant)
    x = Fraction(x)
    t = 1 if variant == "one" else 2
    total = Fraction(0)
    num = Fraction(1)
    num2 = Fraction(1)
    for k in range(1, n + 1):
        num *= x + k - 1
        if variant == "one":
            ratio = num / factorial(k)
        else:
            num2 *= -x + k - 1
            ratio = num * num2 / factorial(k) ** 2
        total += ratio * mhs_exact(k, (t,) * r)
    return total


def aux_F(n: int, r: int, x, variant: str = "one") -> Fraction:
    """F_n^(r)(x): like aux_G but with S_k/k, and (1-x)_k in variant "two".

    variant "one": sum_{k<=n} (x)_k/(1)_k * S_k({1}^r)/k
    variant "two": sum_{k<=n} (x)_k(1-x)_k/(1)_k**2 * S_k({2}^r)/k
    """
    _check_variant(variant)
    x = Fraction(x)
    t = 1 if variant == "one" else 2
    total = Fraction(0)
    num = Fraction(1)
    num2 = Fraction(1)
    for k in range(1, n + 1):
        num *= x + k - 1
        if variant == "one":
            ratio = num / factorial(k)
        else:
            num2 *= 1 - x + k - 1
            ratio = num * num2 / factorial(k) ** 2
        total += ratio * mhs_exact(k, (t,) * r) / k
    return total


def verify_pdf1(n: int, x, a: SequenceLike) -> bool:
    """Partial-fraction expansion with one Pochhammer ratio.

    Checks, exactly:
      sum_{k=0}^{n-1} (x)_k/(1)_k a_k
        = (x)_n * sum_{j=0}^{n-1} (-1)**j T_j / (j! (n-1-j)!) / (x+j).
    """
    x = Fraction(x)
    if any(x + j == 0 for j in range(n)):
        raise PoleAtX(f"x={x} is a pole of the n={n} expansion")
    fn = as_sequence_fn(a)
    lhs = Fraction(0)
    num = Fraction(1)
    for k in range(n):
        lhs += num / factorial(k) * fn(k)
        num *= x + k
    rhs = Fraction(0)
    for j in range(n):
        term = transform_T(j, fn) / (factorial(j) * factorial(n - 1 - j)) / (x + j)
        rhs += -term if j % 2 else term
    rhs *= pochhammer(x, n)
    return lhs == rhs


def verify_pdf2(n: int, x, a: SequenceLike) -> bool:
    """Partial-fraction expansion with two Pochhammer ratios.

    Checks, exactly:
      sum_{k=0}^{n-1} (x)_k(1-x)_k/(1)_k**2 a_k
        = (x)_n(1-x)_n * sum_{j=0}^{n-1} (-1)**j A_j / ((n+j)! (n-1-j)!)
                                 * (1/(x+j) + 1/(1-x+j)).
    """
    x = Fraction(x)
    if any(x + j == 0 or 1 - x + j == 0 for j in range(n)):
        raise PoleAtX(f"x={x} is a pole of the n={n} expansion")
    fn = as_sequence_fn(a)
    lhs = Fraction(0)
    num = Fraction(1)
    num2 = Fraction(1)
    for k in range(n):
        lhs += num * num2 / factorial(k) ** 2 * fn(k)
        num *= x + k
        num2 *= 1 - x + k
    rhs = Fraction(0)
    for j in range(n):
        term = (
            transform_A(j, fn)
            / (factorial(n + j) * factorial(n - 1 - j))
            * (1 / (x + j) + 1 / (1 - x + j))
        )
        rhs += -term if j % 2 else term
    rhs *= pochhammer(x, n) * pochhammer(1 - x, n)
    return lhs == rhs


def verify_he(n: int, r: int) -> bool:
    """sum_{k=1}^n (-1)**k C(n,k) S_k({1}^r)/k == -H_n^(r+1), exactly."""
    total = Fraction(0)
    for k in range(1, n + 1):
        term = Fraction(comb(n, k)) * mhs_exact(k, (1,) * r) / k
        total += -term if k % 2 else term
    return total == -harmonic(n, r + 1)


def verify_ta(n: int, r: int) -> bool:
    """sum_{k=1}^n (-1)**k C(n,k) C(n+k,k) S_k({2}^r)/k == -2 H_n^(2r+1), exactly."""
    total = Fraction(0)
    for k in range(1, n + 1):
        term = Fraction(comb(n, k) * comb(n + k, k)) * mhs_exact(k, (2,) * r) / k
        total += -term if k % 2 else term
    return total == -2 * harmonic(n, 2 * r + 1)


def catalan_constant(levels: int = 48) -> float:
    """G = sum_j (-1)**j/(2j+1)**2 via repeatedly averaged partial sums.

    Averaging adjacent partial sums of an alternating series halves the
    envelope each level; `levels` rounds reach ~1e-14, well past the 12
    significant digits needed here.
    """
    partial = []
    s = 0.0
    for j in range(levels + 1):
        term = 1.0 / (2 * j + 1) ** 2
        s += -term if j % 2 else term
        partial.append(s)
    while len(partial) > 1:
        partial = [(a + b) / 2 for a, b in zip(partial, partial[1:])]
    return partial[0]


def catalan_series(terms: int) -> tuple[float, float]:
    """Partial sum of sum_k C(2k,k)**2 / ((2k+1) 16**k) and its limit 8G/pi.

    The k-th term is built iteratively from the ratio
    C(2k,k)/4**k = prod_{i<=k} (2i-1)/(2i); everything is double precision.
    """
    if terms < 1:
        raise ValueError("need at least one term")
    c = 1.0  # C(2k,k)/4**k
    total = 0.0
    for k in range(terms):
        total += c * c / (2 * k + 1)
        c *= (2 * k + 1) / (2 * k + 2)
    target = 8.0 * catalan_constant() / math.pi
    return total, target
