"""Checkers for the supercongruences and their auxiliary statements.

Every checker computes the two sides of a congruence through independent
code paths (left side by direct summation, right side from harmonic /
Bernoulli primitives) and compares them in the stated residue ring.  For
p <= EXACT_LHS_LIMIT the left side is additionally evaluated in exact
rational arithmetic and must agree with the term-by-term modular
accumulation; a disagreement is an internal error, never a report.

Statement ids:
  si1     mod p**2:  sum (x)_k/(1)_k S_k({1}^r)/k
                       == -H^(r+1) at <-x>_p - (-1)**r s p B_{p-r-2}(x)
  si2     mod p**3:  sum (x)_k(1-x)_k/(1)_k**2 S_k({2}^r)/k
                       == -2 H^(2r+1) - 2(2r+1) s p H^(2r+2)
                          + 2s(1+3sr+2sr**2)/(2r+3) p**2 B_{p-2r-3}(x)
  ci1/ci2 the x = 1/2 specializations with central binomial coefficients
  a1      mod p:     sum (x)_k/(1)_k a_k == T at <-x>_p
  a2      mod p**2:  sum (x)_k(1-x)_k/(1)_k**2 a_k
                       == A_m + s (A_{p-1-m} - A_m),  m = <-x>_p
  aux-*   the harmonic-sum / binomial congruences used to prove them
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .bernoulli import bernoulli_number, bernoulli_poly_mod, power_sum_H_mod
from .errors import PreconditionViolated
from .exact import Rational, Residue, least_residue, mod_reduce, residue_and_s
from .sums import (
    SequenceLike,
    as_sequence_fn,
    central_binom_term,
    harmonic,
    mhs_exact,
    mhs_mod,
    pochhammer,
    transform_A,
    transform_T,
)

# Above this prime the exact-rational double check of the left side is
# skipped and only the modular accumulation runs.
EXACT_LHS_LIMIT = 50

# Default x sweep: integers, half-integers, and generic p-adic rationals.
X_SWEEP = (
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2, 3),
    Fraction(1, 4),
    Fraction(3, 4),
    Fraction(1, 6),
    Fraction(5),
    Fraction(-7, 5),
)


@dataclass(frozen=True)
class CongruenceReport:
    """One verification record: both sides of one statement instance."""

    statement: str
    p: int | None = None
    r: int | None = None
    x: Rational | None = None
    n: int | None = None
    modulus: str | None = None
    lhs: Residue | None = None
    rhs: Residue | None = None
    status: str = "pass"
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _report(statement, p, prec, lhs, rhs, r=None, x=None, n=None) -> CongruenceReport:
    left = Residue(lhs, p, prec)
    right = Residue(rhs, p, prec)
    return CongruenceReport(
        statement,
        p=p,
        r=r,
        x=x,
        n=n,
        modulus=f"{p}^{prec}",
        lhs=left,
        rhs=right,
        status="pass" if left == right else "fail",
    )


def _skip(statement, reason, p=None, r=None, x=None, n=None) -> CongruenceReport:
    return CongruenceReport(statement, p=p, r=r, x=x, n=n, status="skip", reason=reason)


def _require_prime(p: int):
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise PreconditionViolated(f"p={p} is not prime")


def _require_p_integral(x: Fraction, p: int):
    if x.denominator % p == 0:
        raise PreconditionViolated(f"x={x} is not p-integral for p={p}")


# ---------------------------------------------------------------------------
# left sides

def _lhs_one(p: int, x: Fraction, r: int, prec: int) -> int:
    """sum_{k=1}^{p-1} (x)_k/(1)_k * S_k({1}^r)/k  mod p**prec."""
    mod = p**prec
    xv = mod_reduce(x, p, prec).value
    tvec = (1,) * r
    mhs_mod(p - 1, tvec, p, prec)
    poch = 1
    acc = 0
    for k in range(1, p):
        inv_k = pow(k, -1, mod)
        poch = poch * ((xv + k - 1) % mod) % mod * inv_k % mod
        acc = (acc + poch * mhs_mod(k, tvec, p, prec).value % mod * inv_k) % mod
    if p <= EXACT_LHS_LIMIT:
        exact = Fraction(0)
        rising = Fraction(1)
        for k in range(1, p):
            rising = rising * (x + k - 1) / k
            exact += rising * mhs_exact(k, tvec) / k
        if mod_reduce(exact, p, prec).value != acc:
            raise RuntimeError(f"exact and modular sums disagree (one-ratio, p={p}, x={x}, r={r})")
    return acc


def _lhs_two(p: int, x: Fraction, r: int, prec: int) -> int:
    """sum_{k=1}^{p-1} (x)_k(1-x)_k/(1)_k**2 * S_k({2}^r)/k  mod p**prec."""
    mod = p**prec
    xv = mod_reduce(x, p, prec).value
    yv = mod_reduce(1 - x, p, prec).value
    tvec = (2,) * r
    mhs_mod(p - 1, tvec, p, prec)
    poch = 1
    acc = 0
    for k in range(1, p):
        inv_k = pow(k, -1, mod)
        poch = poch * ((xv + k - 1) % mod) % mod * ((yv + k - 1) % mod) % mod
        poch = poch * inv_k % mod * inv_k % mod
        acc = (acc + poch * mhs_mod(k, tvec, p, prec).value % mod * inv_k) % mod
    if p <= EXACT_LHS_LIMIT:
        exact = Fraction(0)
        rising = Fraction(1)
        for k in range(1, p):
            rising = rising * (x + k - 1) * (1 - x + k - 1) / k**2
            exact += rising * mhs_exact(k, tvec) / k
        if mod_reduce(exact, p, prec).value != acc:
            raise RuntimeError(f"exact and modular sums disagree (two-ratio, p={p}, x={x}, r={r})")
    return acc


# ---------------------------------------------------------------------------
# main congruences

def check_si1(p: int, x, r: int, perturb_rhs: int = 0) -> CongruenceReport:
    """mod p**2 congruence for the weight-1 sum; needs p > r+3.

    perturb_rhs is a self-test hook: it is added to the right side so a
    sweep can demonstrate that the comparator catches a one-unit error.
    """
    x = Fraction(x)
    _require_prime(p)
    if p <= r + 3:
        raise PreconditionViolated(f"si1 needs p > r+3, got p={p}, r={r}")
    _require_p_integral(x, p)
    mod = p * p
    lhs = _lhs_one(p, x, r, 2)
    m, s = residue_and_s(x, p, 1)
    h = mod_reduce(harmonic(m, r + 1), p, 2).value
    b = bernoulli_poly_mod(p - r - 2, x, p).value
    sign = -1 if r % 2 else 1
    rhs = (-h - sign * s.value * p * b + perturb_rhs) % mod
    return _report("si1", p, 2, lhs, rhs, r=r, x=x)


def check_si2(p: int, x, r: int) -> CongruenceReport:
    """mod p**3 congruence for the weight-2 sum; needs p > 2r+3."""
    x = Fraction(x)
    _require_prime(p)
    if p <= 2 * r + 3:
        raise PreconditionViolated(f"si2 needs p > 2r+3, got p={p}, r={r}")
    _require_p_integral(x, p)
    mod = p**3
    lhs = _lhs_two(p, x, r, 3)
    m, s2 = residue_and_s(x, p, 2)
    s = s2.value
    h1 = mod_reduce(harmonic(m, 2 * r + 1), p, 3).value
    h2 = mod_reduce(harmonic(m, 2 * r + 2), p, 2).value
    b = bernoulli_poly_mod(p - 2 * r - 3, x, p).value
    sp = s % p
    coeff = 2 * sp * (1 + 3 * sp * r + 2 * sp * r * r) % p
    coeff = coeff * pow(2 * r + 3, -1, p) % p
    rhs = (-2 * h1 - 2 * (2 * r + 1) * s * p * h2 + coeff * p * p * b) % mod
    return _report("si2", p, 3, lhs, rhs, r=r, x=x)


def check_ci1(p: int, r: int) -> CongruenceReport:
    """mod p**2 congruence for sum C(2k,k)/(k 4**k) S_k({1}^r).

    The right side branches on the parity of r: -H^(r+1) at (p-1)/2 for
    even r, (2**(r+2)-1)/(2(r+2)) p B_{p-r-2} for odd r.
    """
    _require_prime(p)
    if p == 2 or p <= r + 3:
        raise PreconditionViolated(f"ci1 needs an odd prime p > r+3, got p={p}, r={r}")
    mod = p * p
    tvec = (1,) * r
    mhs_mod(p - 1, tvec, p, 2)
    acc = 0
    for k in range(1, p):
        c = central_binom_term(k, p, 2).value
        acc = (acc + c * mhs_mod(k, tvec, p, 2).value % mod * pow(k, -1, mod)) % mod
    if r % 2 == 0:
        rhs = mod_reduce(-harmonic((p - 1) // 2, r + 1), p, 2).value
    else:
        value = Fraction(2 ** (r + 2) - 1, 2 * (r + 2)) * p * bernoulli_number(p - r - 2)
        rhs = mod_reduce(value, p, 2).value
    return _report("ci1", p, 2, acc, rhs, r=r, x=Fraction(1, 2))


def check_ci2(p: int, r: int) -> CongruenceReport:
    """mod p**3 congruence for sum C(2k,k)**2/(k 16**k) S_k({2}^r).

    Right side: -2 H^(2r+1) at (p-1)/2 - r(2**(2r+3)-1)/2 p**2 B_{p-2r-3}.
    """
    _require_prime(p)
    if p == 2 or p <= 2 * r + 3:
        raise PreconditionViolated(f"ci2 needs an odd prime p > 2r+3, got p={p}, r={r}")
    mod = p**3
    tvec = (2,) * r
    mhs_mod(p - 1, tvec, p, 3)
    acc = 0
    for k in range(1, p):
        c = central_binom_term(k, p, 3, squared=True).value
        acc = (acc + c * mhs_mod(k, tvec, p, 3).value % mod * pow(k, -1, mod)) % mod
    value = -2 * harmonic((p - 1) // 2, 2 * r + 1)
    value -= Fraction(r * (2 ** (2 * r + 3) - 1), 2) * p * p * bernoulli_number(p - 2 * r - 3)
    rhs = mod_reduce(value, p, 3).value
    return _report("ci2", p, 3, acc, rhs, r=r, x=Fraction(1, 2))


# ---------------------------------------------------------------------------
# transform congruences for arbitrary p-integral sequences

def _p_integral_values(a: SequenceLike, p: int, count: int) -> list[Fraction]:
    fn = as_sequence_fn(a)
    values = []
    for k in range(count):
        v = fn(k)
        if v.denominator % p == 0:
            raise PreconditionViolated(f"a_{k}={v} is not p-integral for p={p}")
        values.append(v)
    return values


def check_a1(p: int, x, a: SequenceLike, seq_id: int | None = None) -> CongruenceReport:
    """mod p:  sum_{k=0}^{p-1} (x)_k/(1)_k a_k == T at <-x>_p."""
    x = Fraction(x)
    _require_prime(p)
    _require_p_integral(x, p)
    values = _p_integral_values(a, p, p)
    xv = mod_reduce(x, p, 1).value
    acc = mod_reduce(values[0], p, 1).value
    poch = 1
    for k in range(1, p):
        poch = poch * ((xv + k - 1) % p) % p * pow(k, -1, p) % p
        acc = (acc + poch * mod_reduce(values[k], p, 1).value) % p
    m = least_residue(-x, p)
    rhs = mod_reduce(transform_T(m, values), p, 1).value
    return _report("a1", p, 1, acc, rhs, x=x, n=seq_id)


def check_a2(p: int, x, a: SequenceLike, seq_id: int | None = None) -> CongruenceReport:
    """mod p**2:  sum (x)_k(1-x)_k/(1)_k**2 a_k == A_m + s(A_{p-1-m} - A_m).

    At x = 1/2 the bracket vanishes (m = p-1-m) and the right side is
    just A_{(p-1)/2}; this simplification is asserted.
    """
    x = Fraction(x)
    _require_prime(p)
    _require_p_integral(x, p)
    values = _p_integral_values(a, p, p)
    mod = p * p
    xv = mod_reduce(x, p, 2).value
    yv = mod_reduce(1 - x, p, 2).value
    acc = mod_reduce(values[0], p, 2).value
    poch = 1
    for k in range(1, p):
        inv_k = pow(k, -1, mod)
        poch = poch * ((xv + k - 1) % mod) % mod * ((yv + k - 1) % mod) % mod
        poch = poch * inv_k % mod * inv_k % mod
        acc = (acc + poch * mod_reduce(values[k], p, 2).value) % mod
    m, s2 = residue_and_s(x, p, 2)
    a_m = mod_reduce(transform_A(m, values), p, 2).value
    a_mirror = mod_reduce(transform_A(p - 1 - m, values), p, 2).value
    rhs = (a_m + s2.value * (a_mirror - a_m)) % mod
    if x == Fraction(1, 2):
        assert rhs == a_m % mod, "x=1/2 must reduce to the plain transform value"
    return _report("a2", p, 2, acc, rhs, x=x, n=seq_id)


# ---------------------------------------------------------------------------
# auxiliary congruence suite

def check_aux_suite(p: int, r_max: int, x_list=X_SWEEP) -> list[CongruenceReport]:
    """All auxiliary congruences at one prime, one report per instance.

    Statements (r below is the report's r field, j the n field):
      aux-a   S_{p-1}({1}^r)   == 0                        (mod p),   r >= 1
      aux-b   S_{p-1}({1}^r,2) == B_{p-r-2}                (mod p)
      aux-c1  S_{p-1}({2}^r)   == 2p B_{p-2r-1}/(2r+1)     (mod p**2), r >= 1
      aux-c2  S_{p-1}({2}^r,3) == -2r B_{p-2r-3}           (mod p)
      aux-d1  C(2p-1, p-1)     == 1                        (mod p**3)
      aux-d2  C(2p-1, p+j)     == (-1)**j (1 - 2p H_j)     (mod p**2)
      aux-d3  (x)_p(1-x)_p/(1)_p**2 == s(1-s)(1+2p H_m)    (mod p**2)
      aux-e   H^(t) at <-x>_p  == (-1)**t (B_{p-t}(x)-B_{p-t})/t  (mod p),
              with t ranging over 2..min(p-2, 2 r_max + 3)

    Out-of-range (p, r) pairs are reported as skipped, not errors.
    """
    _require_prime(p)
    reports = []

    for r in range(1, r_max + 1):
        if p > r + 3:
            lhs = mhs_mod(p - 1, (1,) * r, p, 1).value
            reports.append(_report("aux-a", p, 1, lhs, 0, r=r))
        else:
            reports.append(_skip("aux-a", "needs p > r+3", p=p, r=r))

    for r in range(0, r_max + 1):
        if p > r + 3:
            lhs = mhs_mod(p - 1, (1,) * r + (2,), p, 1).value
            rhs = mod_reduce(bernoulli_number(p - r - 2), p, 1).value
            reports.append(_report("aux-b", p, 1, lhs, rhs, r=r))
        else:
            reports.append(_skip("aux-b", "needs p > r+3", p=p, r=r))

    for r in range(0, r_max + 1):
        if r == 0:
            reports.append(_skip("aux-c1", "degenerate for r=0", p=p, r=r))
        elif p >= 2 * r + 3:
            lhs = mhs_mod(p - 1, (2,) * r, p, 2).value
            rhs = mod_reduce(Fraction(2 * p, 2 * r + 1) * bernoulli_number(p - 2 * r - 1), p, 2).value
            reports.append(_report("aux-c1", p, 2, lhs, rhs, r=r))
        else:
            reports.append(_skip("aux-c1", "needs p >= 2r+3", p=p, r=r))

    for r in range(0, r_max + 1):
        if p > 2 * r + 3:
            lhs = mhs_mod(p - 1, (2,) * r + (3,), p, 1).value
            rhs = mod_reduce(Fraction(-2 * r) * bernoulli_number(p - 2 * r - 3), p, 1).value
            reports.append(_report("aux-c2", p, 1, lhs, rhs, r=r))
        else:
            reports.append(_skip("aux-c2", "needs p > 2r+3", p=p, r=r))

    if p >= 5:
        reports.append(_report("aux-d1", p, 3, comb(2 * p - 1, p - 1) % p**3, 1))
    else:
        reports.append(_skip("aux-d1", "needs p >= 5", p=p))

    mod2 = p * p
    for j in range(p):
        lhs = comb(2 * p - 1, p + j) % mod2
        sign = -1 if j % 2 else 1
        rhs = mod_reduce(sign * (1 - 2 * p * harmonic(j)), p, 2).value
        reports.append(_report("aux-d2", p, 2, lhs, rhs, n=j))

    for x in x_list:
        x = Fraction(x)
        if x.denominator % p == 0:
            reports.append(_skip("aux-d3", "x not p-integral", p=p, x=x))
            continue
        ratio = pochhammer(x, p) * pochhammer(1 - x, p) / Fraction(factorial(p)) ** 2
        lhs = mod_reduce(ratio, p, 2).value
        m, s2 = residue_and_s(x, p, 2)
        h = mod_reduce(harmonic(m), p, 2).value
        rhs = s2.value * (1 - s2.value) % mod2 * (1 + 2 * p * h) % mod2
        reports.append(_report("aux-d3", p, 2, lhs, rhs, x=x))

    for t in range(2, min(p - 2, 2 * r_max + 3) + 1):
        for x in x_list:
            x = Fraction(x)
            if x.denominator % p == 0:
                reports.append(_skip("aux-e", "x not p-integral", p=p, r=t, x=x))
                continue
            m = least_residue(-x, p)
            lhs = mod_reduce(harmonic(m, t), p, 1).value
            rhs = power_sum_H_mod(x, t, p).value
            reports.append(_report("aux-e", p, 1, lhs, rhs, r=t, x=x))

    return reports
