"""Bernoulli numbers and Bernoulli polynomials, exact and modulo p.

Numbers follow the B_1 = -1/2 convention and are generated by the
defining recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0.  They are computed
exactly once and reduced mod p on demand; indices are restricted to
n <= p-2 so that every B_m involved is p-integral (von Staudt-Clausen),
which is re-checked at reduction time rather than assumed.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import IndexTooLarge, NotPAdicInteger, PreconditionViolated
from .exact import Residue, mod_reduce

_NUMBERS: list[Fraction] = [Fraction(1)]


class BernoulliTable:
    """Immutable table of exact Bernoulli numbers B_0 ... B_N."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(values)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __repr__(self):
        return f"BernoulliTable(N={len(self.values) - 1})"


def _number(n: int) -> Fraction:
    global _NUMBERS
    if n >= len(_NUMBERS):
        table = list(_NUMBERS)
        for k in range(len(table), n + 1):
            acc = sum(comb(k + 1, j) * table[j] for j in range(k))
            table.append(Fraction(-acc, k + 1))
        _NUMBERS = table
    return _NUMBERS[n]


def bernoulli_numbers(N: int) -> BernoulliTable:
    """Exact values B_0, ..., B_N."""
    if N < 0:
        raise ValueError("N must be non-negative")
    _number(N)
    return BernoulliTable(_NUMBERS[: N + 1])


def bernoulli_number(n: int) -> Fraction:
    """B_n, exact."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _number(n)


# p -> [B_0 mod p, ..., B_{p-2} mod p]
_MOD_NUMBERS: dict[int, list[int]] = {}


def _numbers_mod(p: int) -> list[int]:
    table = _MOD_NUMBERS.get(p)
    if table is None:
        _number(p - 2)
        table = []
        for m in range(p - 1):
            b = _NUMBERS[m]
            if b.denominator % p == 0:  # von Staudt-Clausen safety net
                raise NotPAdicInteger(f"B_{m} is not p-integral for p={p}")
            table.append(b.numerator * pow(b.denominator, -1, p) % p)
        _MOD_NUMBERS[p] = table
    return table


def bernoulli_poly_mod(n: int, x, p: int) -> Residue:
    """B_n(x) = sum_m C(n,m) B_m x**(n-m), reduced mod p.  Needs n <= p-2."""
    if n > p - 2:
        raise IndexTooLarge(f"B_{n} mod {p} needs n <= p-2")
    if n < 0:
        raise ValueError("n must be non-negative")
    bmod = _numbers_mod(p)
    xv = mod_reduce(x, p, 1).value
    acc = 0
    xpow = 1  # x**(n-m), built from m = n downward
    for m in range(n, -1, -1):
        acc = (acc + comb(n, m) * bmod[m] % p * xpow) % p
        xpow = xpow * xv % p
    return Residue(acc, p, 1)


def power_sum_H_mod(x, t: int, p: int) -> Residue:
    """(-1)**t (B_{p-t}(x) - B_{p-t}) / t mod p, for 2 <= t < p-1.

    This residue equals both H^(t) at <-x>_p and the power sum
    sum_{j<=<-x>_p} j**(p-1-t) mod p.
    """
    if not 2 <= t < p - 1:
        raise PreconditionViolated(f"power sum congruence needs 2 <= t < p-1, got t={t}")
    bx = bernoulli_poly_mod(p - t, x, p).value
    b0 = _numbers_mod(p)[p - t]
    sign = -1 if t % 2 else 1
    value = sign * (bx - b0) * pow(t % p, -1, p) % p
    return Residue(value, p, 1)


def half_harmonic_mod(t: int, p: int) -> Residue:
    """H^(t) at (p-1)/2 from Bernoulli numbers; mod p**2 for even t, mod p for odd.

    Even t:  t (2**(t+1) - 1) / (2 (t+1)) * p * B_{p-t-1}   (mod p**2)
    Odd t:   -(2**t - 2) / t * B_{p-t}                      (mod p)

    Valid for 1 < t < p-4.
    """
    if not 1 < t < p - 4:
        raise PreconditionViolated(f"half-range harmonic formula needs 1 < t < p-4, got t={t}")
    if t % 2 == 0:
        value = Fraction(t * (2 ** (t + 1) - 1), 2 * (t + 1)) * _number(p - t - 1) * p
        return mod_reduce(value, p, 2)
    value = -Fraction(2**t - 2, t) * _number(p - t)
    return mod_reduce(value, p, 1)
