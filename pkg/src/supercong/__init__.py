"""Exact-arithmetic verification of supercongruences for central binomial
sums over multiple harmonic sums, with their q-analogs.

The package is organized as:
  exact       rationals and residues mod p**k (the substrate)
  sums        multiple harmonic sums, Pochhammer ratios, transforms
  bernoulli   Bernoulli numbers/polynomials, exact and mod p
  congruence  the congruence checkers (independent left/right evaluation)
  identities  exact characteristic-zero identity checks
  qseries     polynomials/rational functions in q and the q-identities
  cli         sweep harness: `supercong verify|selftest|catalan`
"""
from . import errors
from .bernoulli import (
    BernoulliTable,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_poly_mod,
    half_harmonic_mod,
    power_sum_H_mod,
)
from .congruence import (
    EXACT_LHS_LIMIT,
    X_SWEEP,
    CongruenceReport,
    check_a1,
    check_a2,
    check_aux_suite,
    check_ci1,
    check_ci2,
    check_si1,
    check_si2,
)
from .exact import Rational, Residue, least_residue, mod_inv, mod_reduce, residue_and_s
from .identities import (
    SeriesAux,
    aux_F,
    aux_G,
    catalan_constant,
    catalan_series,
    verify_he,
    verify_pdf1,
    verify_pdf2,
    verify_ta,
)
from .qseries import (
    QPoly,
    QRatFunc,
    gauss_binom,
    q_limit_check,
    q_mhs,
    verify_heq,
    verify_taq,
)
from .sums import (
    ExponentVector,
    central_binom_term,
    harmonic,
    mhs_exact,
    mhs_mod,
    pochhammer,
    pochhammer_ratio_mod,
    prodinger_A,
    transform_A,
    transform_T,
)

__version__ = "0.1.0"

__all__ = [
    "BernoulliTable",
    "CongruenceReport",
    "EXACT_LHS_LIMIT",
    "ExponentVector",
    "QPoly",
    "QRatFunc",
    "Rational",
    "Residue",
    "SeriesAux",
    "X_SWEEP",
    "aux_F",
    "aux_G",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly_mod",
    "catalan_constant",
    "catalan_series",
    "central_binom_term",
    "check_a1",
    "check_a2",
    "check_aux_suite",
    "check_ci1",
    "check_ci2",
    "check_si1",
    "check_si2",
    "errors",
    "gauss_binom",
    "half_harmonic_mod",
    "harmonic",
    "least_residue",
    "mhs_exact",
    "mhs_mod",
    "mod_inv",
    "mod_reduce",
    "pochhammer",
    "pochhammer_ratio_mod",
    "power_sum_H_mod",
    "prodinger_A",
    "q_limit_check",
    "q_mhs",
    "residue_and_s",
    "transform_A",
    "transform_T",
    "verify_he",
    "verify_heq",
    "verify_pdf1",
    "verify_pdf2",
    "verify_ta",
    "verify_taq",
]
