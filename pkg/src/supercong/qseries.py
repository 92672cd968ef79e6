"""Dense polynomials and rational functions in q, and the q-identities.

Coefficients are exact rationals (plain ints where possible).  Rational
functions never reduce to lowest terms: equality is decided by
cross-multiplication, and denominators built by q_mhs keep a record of
their factorization into powers of (1 - q**j) so that sums can use the
cheap max-multiplicity common denominator.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import ResidualPoleAtOne
from .sums import mhs_exact


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Dense polynomial in q, lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "QPoly":
        if exp < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls([0] * exp + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (_trim([other]))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "QPoly(0)"
        parts = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        return "QPoly(" + " + ".join(parts) + ")"

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def shifted(self, exp: int) -> "QPoly":
        """Multiply by q**exp."""
        if not self.coeffs:
            return self
        if exp < 0:
            raise ValueError("negative shift")
        return QPoly([0] * exp + list(self.coeffs))

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def div_one_minus_q(self) -> tuple["QPoly", Fraction]:
        """Quotient and remainder of division by (1 - q).

        The quotient coefficients are the prefix sums of the input; the
        remainder equals the value at q = 1.
        """
        if not self.coeffs:
            return QPoly.zero(), 0
        acc = 0
        prefix = []
        for c in self.coeffs:
            acc += c
            prefix.append(acc)
        return QPoly(prefix[:-1]), prefix[-1]


_ONE = QPoly.one()

# (j, m) -> (1 - q**j)**m
_FACTOR_POWERS: dict[tuple[int, int], QPoly] = {(0, 0): _ONE}


def _factor_power(j: int, m: int) -> QPoly:
    key = (j, m)
    out = _FACTOR_POWERS.get(key)
    if out is None:
        if m == 0:
            out = _ONE
        else:
            out = _factor_power(j, m - 1) * QPoly([1] + [0] * (j - 1) + [-1])
        _FACTOR_POWERS[key] = out
    return out


def _den_from_factors(factors: dict[int, int]) -> QPoly:
    out = _ONE
    for j in sorted(factors):
        out = out * _factor_power(j, factors[j])
    return out


class QRatFunc:
    """Quotient of two QPoly values; equality by cross-multiplication.

    When the denominator is known to be a product of factors (1 - q**j),
    the multiplicity map is kept alongside so that sums and products can
    form common denominators without polynomial gcd.
    """

    __slots__ = ("num", "den", "factors")

    def __init__(self, num: QPoly, den: QPoly = _ONE, factors: dict[int, int] | None = None):
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        self.factors = factors

    @classmethod
    def from_factors(cls, num: QPoly, factors: dict[int, int]) -> "QRatFunc":
        factors = {j: m for j, m in factors.items() if m}
        return cls(num, _den_from_factors(factors), factors)

    @classmethod
    def zero(cls) -> "QRatFunc":
        return cls.from_factors(QPoly.zero(), {})

    def is_zero(self) -> bool:
        return not self.num

    def __repr__(self):
        return f"QRatFunc({self.num!r} / {self.den!r})"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QRatFunc(QPoly([other]))
        if not isinstance(other, QRatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __neg__(self):
        return QRatFunc(-self.num, self.den, self.factors)

    def __add__(self, other):
        if not isinstance(other, QRatFunc):
            return NotImplemented
        if self.factors is not None and other.factors is not None:
            common = dict(self.factors)
            for j, m in other.factors.items():
                common[j] = max(common.get(j, 0), m)
            left = {j: m - self.factors.get(j, 0) for j, m in common.items()}
            right = {j: m - other.factors.get(j, 0) for j, m in common.items()}
            num = self.num * _den_from_factors(left) + other.num * _den_from_factors(right)
            return QRatFunc.from_factors(num, common)
        return QRatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, QRatFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            return QRatFunc(self.num * other, self.den, self.factors)
        if not isinstance(other, QRatFunc):
            return NotImplemented
        if self.factors is not None and other.factors is not None:
            merged = dict(self.factors)
            for j, m in other.factors.items():
                merged[j] = merged.get(j, 0) + m
            return QRatFunc.from_factors(self.num * other.num, merged)
        return QRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={value}")
        return self.num(value) / d


# ---------------------------------------------------------------------------
# Gaussian binomials

_GAUSS: dict[tuple[int, int], QPoly] = {}


def gauss_binom(m: int, k: int) -> QPoly:
    """The Gaussian binomial [m, k] as a polynomial in q.

    Pascal recurrence [m,k] = [m-1,k-1] + q**k [m-1,k]; the zero
    polynomial when k > m.
    """
    if m < 0 or k < 0:
        raise ValueError("m and k must be non-negative")
    if k > m:
        return QPoly.zero()
    if k == 0 or k == m:
        return _ONE
    key = (m, k)
    out = _GAUSS.get(key)
    if out is None:
        out = gauss_binom(m - 1, k - 1) + gauss_binom(m - 1, k).shifted(k)
        _GAUSS[key] = out
    return out


# ---------------------------------------------------------------------------
# q-deformed multiple harmonic sums

def q_mhs(n: int, t: int, r: int) -> QRatFunc:
    """S_n({t}^r; q) = sum over 1 <= j_1 <= ... <= j_r <= n of
    q**(j_1+...+j_r) / prod (1 - q**(j_i))**t, for t in {1, 2}.

    Built by the same prefix recurrence as the ordinary sums:
    S_k = S_{k-1} + q**k/(1-q**k)**t * S_k(prefix).
    """
    return _q_mhs_row(n, t, r)[n]


_QMHS_ROWS: dict[tuple[int, int, int], tuple[QRatFunc, ...]] = {}


def _q_mhs_row(n: int, t: int, r: int) -> tuple[QRatFunc, ...]:
    """(S_0({t}^r;q), ..., S_n({t}^r;q))."""
    if t not in (1, 2):
        raise ValueError("t must be 1 or 2")
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    key = (n, t, r)
    row = _QMHS_ROWS.get(key)
    if row is None:
        if r == 0:
            row = tuple(QRatFunc.from_factors(_ONE, {}) for _ in range(n + 1))
        else:
            prefix = _q_mhs_row(n, t, r - 1)
            values = [QRatFunc.zero()]
            for k in range(1, n + 1):
                step = prefix[k] * QRatFunc.from_factors(QPoly.monomial(k), {k: t})
                values.append(values[k - 1] + step)
            row = tuple(values)
        _QMHS_ROWS[key] = row
    return row


# ---------------------------------------------------------------------------
# the two q-identities

def _clearing_exponent(n: int, k: int) -> int:
    # C(k,2) - (n-1)k is bounded below by -n(n-1) on 0 <= k <= n; adding
    # n(n-1) keeps every exponent non-negative.
    return n * (n - 1) + comb(k, 2) - (n - 1) * k


def verify_heq(n: int, r: int) -> bool:
    """q-analog of the weight-1 transform identity, checked exactly.

    sum_{k=1}^n (-1)**k [n,k] q**(C(k,2)-(n-1)k) S_k({1}^r;q)/(1-q**k)
      == - sum_{k=1}^n q**(rk) / (1-q**k)**(r+1)

    Both sides are multiplied by q**(n(n-1)) to clear negative exponents
    and compared by cross-multiplication of exact polynomials.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = _q_mhs_row(n, 1, r)
    lhs = QRatFunc.zero()
    rhs = QRatFunc.zero()
    for k in range(1, n + 1):
        coeff = gauss_binom(n, k).shifted(_clearing_exponent(n, k))
        if k % 2:
            coeff = -coeff
        sk = rows[k]
        factors = dict(sk.factors)
        factors[k] = factors.get(k, 0) + 1
        lhs = lhs + QRatFunc.from_factors(coeff * sk.num, factors)
        rhs_num = QPoly.monomial(n * (n - 1) + r * k, -1)
        rhs = rhs + QRatFunc.from_factors(rhs_num, {k: r + 1})
    return lhs == rhs


def verify_taq(n: int, r: int) -> bool:
    """q-analog of the weight-2 transform identity, checked exactly.

    sum_{k=1}^n (-1)**k [n,k][n+k,k] q**(C(k,2)-(n-1)k) S_k({2}^r;q)/(1-q**k)
      == - sum_{k=1}^n (1+q**k) q**(rk) / (1-q**k)**(2r+1)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = _q_mhs_row(n, 2, r)
    lhs = QRatFunc.zero()
    rhs = QRatFunc.zero()
    for k in range(1, n + 1):
        coeff = gauss_binom(n, k) * gauss_binom(n + k, k)
        coeff = coeff.shifted(_clearing_exponent(n, k))
        if k % 2:
            coeff = -coeff
        sk = rows[k]
        factors = dict(sk.factors)
        factors[k] = factors.get(k, 0) + 1
        lhs = lhs + QRatFunc.from_factors(coeff * sk.num, factors)
        rhs_num = QPoly.monomial(n * (n - 1) + r * k, -1) * QPoly([1] + [0] * (k - 1) + [1])
        rhs = rhs + QRatFunc.from_factors(rhs_num, {k: 2 * r + 1})
    return lhs == rhs


# ---------------------------------------------------------------------------
# classical limit

def q_limit_check(n: int, r: int, t: int) -> bool:
    """True iff (1-q)**(t*r) * q_mhs(n, t, r) -> mhs_exact(n, {t}^r) at q = 1.

    Every factor (1-q) is cancelled exactly by synthetic division before
    evaluating; a factor that fails to cancel raises ResidualPoleAtOne.
    """
    if t not in (1, 2):
        raise ValueError("t must be 1 or 2")
    s = q_mhs(n, t, r)
    num = s.num * _factor_power(1, t * r)
    den = s.den
    # strip (1-q)**v out of the denominator
    stripped = den
    v = 0
    while True:
        quotient, remainder = stripped.div_one_minus_q()
        if remainder != 0 or not stripped:
            break
        stripped = quotient
        v += 1
    for _ in range(v):
        num, remainder = num.div_one_minus_q()
        if remainder != 0:
            raise ResidualPoleAtOne(
                f"(1-q)**{v} does not divide the numerator for n={n}, r={r}, t={t}"
            )
    value = num(1) / stripped(1)
    return value == mhs_exact(n, (t,) * r)
