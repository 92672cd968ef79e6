"""Multiple harmonic sums, Pochhammer ratios, and binomial transforms.

The central object is the non-strict multiple harmonic sum

    S_n(t_1,...,t_r) = sum over 1 <= j_1 <= ... <= j_r <= n
                       of 1 / (j_1**t_1 * ... * j_r**t_r),

with S_n() = 1 (empty product) and S_0(t) = 0 for r >= 1.  Sums are
computed by the prefix recurrence

    S_k(t_1,...,t_r) = S_{k-1}(t_1,...,t_r) + S_k(t_1,...,t_{r-1}) / k**t_r

in O(n*r) exact rational operations; the naive enumeration over index
tuples is kept in the test suite as an oracle.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence, Union

from .errors import PreconditionViolated
from .exact import Rational, Residue, mod_inv, mod_reduce

# A composition (t_1, ..., t_r) of positive integers; () is allowed.
ExponentVector = tuple[int, ...]

SequenceLike = Union[Callable[[int], Rational], Sequence]


def _check_exponents(t) -> ExponentVector:
    t = tuple(t)
    if any((not isinstance(e, int)) or e < 1 for e in t):
        raise ValueError(f"exponents must be positive integers, got {t}")
    return t


def as_sequence_fn(a: SequenceLike) -> Callable[[int], Fraction]:
    """Normalize a sequence of rationals to a callable k -> a_k."""
    if callable(a):
        return lambda k: Fraction(a(k))
    values = [Fraction(v) for v in a]
    return lambda k: values[k]


# ---------------------------------------------------------------------------
# exact sums

# t -> [S_0(t), S_1(t), ...]; tables grow on demand and are replaced
# wholesale so concurrent readers never observe a partial row.
_EXACT_TABLES: dict[ExponentVector, list[Fraction]] = {}


def _exact_table(t: ExponentVector, n: int) -> list[Fraction]:
    table = _EXACT_TABLES.get(t, None)
    if table is not None and len(table) > n:
        return table
    if not t:
        table = [Fraction(1)] * (n + 1)
    else:
        prefix = _exact_table(t[:-1], n)
        te = t[-1]
        table = list(table) if table else [Fraction(0)]
        for k in range(len(table), n + 1):
            table.append(table[k - 1] + prefix[k] / Fraction(k**te))
    _EXACT_TABLES[t] = table
    return table


def mhs_exact(n: int, t) -> Fraction:
    """S_n(t_1,...,t_r) as an exact rational."""
    if n < 0:
        raise ValueError("n must be non-negative")
    t = _check_exponents(t)
    return _exact_table(t, n)[n]


# (t, p, k) -> [S_0 mod p**k, S_1 mod p**k, ...] as plain ints.
_MOD_TABLES: dict[tuple[ExponentVector, int, int], list[int]] = {}


def mhs_mod(n: int, t, p: int, k: int = 1) -> Residue:
    """S_n(t_1,...,t_r) reduced mod p**k, for n < p.

    Computed natively in residue arithmetic via the same prefix
    recurrence; agrees with mod_reduce(mhs_exact(n, t), p, k) because
    reduction mod p**k is a ring homomorphism on p-integral rationals.
    """
    if n >= p:
        raise PreconditionViolated(f"mhs_mod requires n < p, got n={n}, p={p}")
    t = _check_exponents(t)
    key = (t, p, k)
    table = _MOD_TABLES.get(key, None)
    if table is None or len(table) <= n:
        m = p**k
        if not t:
            table = [1] * (n + 1)
        else:
            mhs_mod(n, t[:-1], p, k)  # make sure the prefix table is long enough
            prefix = _MOD_TABLES[(t[:-1], p, k)]
            te = t[-1]
            table = list(table) if table else [0]
            for j in range(len(table), n + 1):
                step = prefix[j] * pow(pow(j, te, m), -1, m) % m
                table.append((table[j - 1] + step) % m)
        _MOD_TABLES[key] = table
    return Residue(table[n], p, k)


_H_TABLES: dict[int, list[Fraction]] = {}


def harmonic(n: int, t: int = 1) -> Fraction:
    """Harmonic number of order t: H_n^(t) = sum_{j<=n} 1/j**t, H_0 = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if t < 1:
        raise ValueError("order t must be positive")
    table = _H_TABLES.get(t, None)
    if table is None or len(table) <= n:
        table = list(table) if table else [Fraction(0)]
        for j in range(len(table), n + 1):
            table.append(table[j - 1] + Fraction(1, j**t))
        _H_TABLES[t] = table
    return table[n]


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1."""
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def pochhammer_ratio_mod(x, n: int, p: int, k: int = 1) -> Residue:
    """(x)_n / n! reduced mod p**k, for n < p.

    n < p keeps n! invertible, so the ratio is a residue whenever x is
    p-integral.
    """
    if n >= p:
        raise PreconditionViolated(f"pochhammer ratio requires n < p, got n={n}, p={p}")
    xr = mod_reduce(x, p, k)
    m = xr.modulus
    acc = 1
    v = xr.value
    for i in range(n):
        acc = acc * ((v + i) % m) % m
    acc = acc * pow(factorial(n) % m, -1, m) % m
    return Residue(acc, p, k)


def central_binom_term(k: int, p: int, kprec: int = 1, squared: bool = False) -> Residue:
    """C(2k,k)/4**k (or its square, C(2k,k)**2/16**k) mod p**kprec.

    Uses the identity C(2k,k)/4**k = (1/2)_k / (1)_k.
    """
    r = pochhammer_ratio_mod(Fraction(1, 2), k, p, kprec)
    return r * r if squared else r


# ---------------------------------------------------------------------------
# binomial transforms

def transform_T(j: int, a: SequenceLike) -> Fraction:
    """First binomial transform: T_j = sum_k (-1)**k C(j,k) a_k."""
    fn = as_sequence_fn(a)
    total = Fraction(0)
    c = 1
    for k in range(j + 1):
        term = c * fn(k)
        total += -term if k % 2 else term
        c = c * (j - k) // (k + 1)
    return total


def transform_A(j: int, a: SequenceLike) -> Fraction:
    """Second-kind transform: A_j = sum_k (-1)**k C(j,k) C(j+k,k) a_k."""
    fn = as_sequence_fn(a)
    total = Fraction(0)
    for k in range(j + 1):
        term = comb(j, k) * comb(j + k, k) * fn(k)
        total += -term if k % 2 else term
    return total


def _odd_partitions(total: int, max_part: int):
    """Partitions of `total` into odd parts, as ((part, mult), ...) tuples.

    Parts are listed in decreasing order, each with its multiplicity, so
    every partition is produced exactly once.
    """
    if total == 0:
        yield ()
        return
    part = max_part if max_part % 2 else max_part - 1
    while part >= 1:
        for mult in range(total // part, 0, -1):
            for rest in _odd_partitions(total - mult * part, part - 2):
                yield ((part, mult),) + rest
        part -= 2


def prodinger_A(j: int, r: int) -> Fraction:
    """Closed form of transform_A applied to a_k = 1/k**r (a_0 = 0).

    A_j = - sum over partitions of r into odd parts i with multiplicities
    k_i of  2**(sum k_i) * prod H_j^(i)**k_i / prod(i**k_i * k_i!).
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    total = Fraction(0)
    for partition in _odd_partitions(r, r):
        term = Fraction(1)
        nparts = 0
        for part, mult in partition:
            nparts += mult
            term *= harmonic(j, part) ** mult
            term /= Fraction(part**mult * factorial(mult))
        total += 2**nparts * term
    return -total
