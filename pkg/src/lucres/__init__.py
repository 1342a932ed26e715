"""Exact arithmetic for residue-class binomial sums, Lucas sequence
quotients, and machine verification of the congruences connecting them."""

from .combsum import (DeltaValue, SumSpec, delta3_a2, delta_all, delta_closed3,
                      delta_closed4, delta_closed6, delta_direct, delta_recur, delta_recur_chain,
                      delta_value, residue_sum, residue_sum_direct, residue_sums_all)
from .errors import (HypothesisViolation, InexactDivision, InternalDivisibilityFailure,
                     LucresError, NotInvertible, UnsatisfiableHypothesis,
                     UnsupportedModulus, ZeroA)
from .lucas import (LucasPair, LucasParams, lucas_epsilon, lucas_pair, lucas_pair_mod,
                    lucas_quotient_mod_p, lucas_u_window, lucas_v_window)
from .modular import Residue, fermat_quotient, inv_mod, k_sum, legendre
from .polyseq import IntPoly, check_G_coeffs, check_Q_coeffs, poly_G, poly_Q
from .reports import CheckReport
from .scanner import (ScanJob, ScanResult, is_prime, prime_stream, verify_sweep,
                      wall_scan)
from .verify import (CHECK_IDS, check_corollary, check_fermat_props,
                     check_legendre_m3, check_lemma_binom_p, check_lemma_vp,
                     check_quotient_v, check_thm_3lucas, check_thm_3lucas_plus,
                     check_thm_4lucas, check_thm_4lucas_plus, run_check)

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "CHECK_IDS", "DeltaValue", "HypothesisViolation", "InexactDivision",
    "InternalDivisibilityFailure", "IntPoly", "LucasPair", "LucasParams", "LucresError",
    "NotInvertible", "Residue", "ScanJob", "ScanResult", "SumSpec",
    "UnsatisfiableHypothesis", "UnsupportedModulus", "ZeroA",
    "check_G_coeffs", "check_Q_coeffs", "check_corollary", "check_fermat_props",
    "check_legendre_m3", "check_lemma_binom_p", "check_lemma_vp", "check_quotient_v",
    "check_thm_3lucas", "check_thm_3lucas_plus", "check_thm_4lucas",
    "check_thm_4lucas_plus", "delta3_a2", "delta_all", "delta_closed3", "delta_closed4",
    "delta_closed6", "delta_direct", "delta_recur", "delta_recur_chain", "delta_value",
    "fermat_quotient",
    "inv_mod", "is_prime", "k_sum", "legendre", "lucas_epsilon", "lucas_pair",
    "lucas_pair_mod", "lucas_quotient_mod_p", "lucas_u_window", "lucas_v_window",
    "poly_G", "poly_Q", "prime_stream", "residue_sum", "residue_sum_direct",
    "residue_sums_all", "run_check", "verify_sweep", "wall_scan",
]
