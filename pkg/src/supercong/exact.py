"""Exact rational numbers and residue arithmetic modulo prime powers.

Every quantity in this package is either a `Rational` (an exact,
arbitrary-precision fraction in lowest terms) or a `Residue` (an integer
modulo p**k that remembers its modulus).  Nothing is ever rounded.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertible, NotPAdicInteger

# Canonical reduced form and exact arithmetic come with the stdlib type.
Rational = Fraction


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an exact rational or integer, got {type(x).__name__}")


class Residue:
    """An integer modulo p**k.

    Instances are immutable by convention.  Binary operations require both
    operands to share the same (prime, exponent); plain integers and
    p-integral rationals are coerced to the left operand's modulus.
    """

    __slots__ = ("value", "prime", "exponent", "modulus")

    def __init__(self, value: int, prime: int, exponent: int = 1):
        if exponent < 1:
            raise ValueError("modulus exponent must be >= 1")
        self.prime = prime
        self.exponent = exponent
        self.modulus = prime**exponent
        self.value = value % self.modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            if (other.prime, other.exponent) != (self.prime, self.exponent):
                raise ValueError(
                    f"modulus mismatch: {self.modulus_str()} vs {other.modulus_str()}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Residue(other, self.prime, self.exponent)
        if isinstance(other, Fraction):
            return mod_reduce(other, self.prime, self.exponent)
        return None

    def modulus_str(self) -> str:
        return f"{self.prime}^{self.exponent}"

    def __repr__(self):
        return f"Residue({self.value}, mod {self.modulus_str()})"

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.value, self.prime, self.exponent))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o.value, self.prime, self.exponent)

    __radd__ = __add__

    def __neg__(self):
        return Residue(-self.value, self.prime, self.exponent)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o.value, self.prime, self.exponent)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o.value - self.value, self.prime, self.exponent)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o.value, self.prime, self.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * mod_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * mod_inv(self)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return mod_inv(self) ** (-e)
        return Residue(pow(self.value, e, self.modulus), self.prime, self.exponent)

    def __int__(self):
        return self.value


def mod_inv(a: Residue) -> Residue:
    """Multiplicative inverse of `a` modulo p**k.

    Raises NotInvertible when p divides a.value.
    """
    try:
        inv = pow(a.value, -1, a.modulus)
    except ValueError:
        raise NotInvertible(f"{a.value} is divisible by {a.prime}") from None
    return Residue(inv, a.prime, a.exponent)


def mod_reduce(x, p: int, k: int = 1) -> Residue:
    """The residue of a p-integral rational x modulo p**k.

    Returns the unique r with r * x.denominator == x.numerator (mod p**k).
    Raises NotPAdicInteger when p divides the denominator.
    """
    x = _as_rational(x)
    if x.denominator % p == 0:
        raise NotPAdicInteger(f"{x} has {p} in its denominator")
    m = p**k
    value = x.numerator * pow(x.denominator, -1, m) % m
    return Residue(value, p, k)


def least_residue(x, p: int) -> int:
    """<x>_p: the least non-negative residue mod p of a p-integral rational."""
    return mod_reduce(x, p, 1).value


def residue_and_s(x, p: int, k: int = 1) -> tuple[int, Residue]:
    """The pair (m, s) with m = <-x>_p and s = (x + m) / p mod p**k.

    x + m is divisible by p by construction, so the division is exact in
    the p-adic sense.  One digit of precision is spent on it: x is reduced
    mod p**(k+1) so that s comes out correct mod p**k.
    """
    x = _as_rational(x)
    m = least_residue(-x, p)
    lift = mod_reduce(x, p, k + 1).value
    total = (lift + m) % p ** (k + 1)
    assert total % p == 0, "x + <-x>_p must be divisible by p"
    return m, Residue(total // p, p, k)
