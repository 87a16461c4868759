"""Verification lab for additive permutation maps over binary extension fields."""

from .field import FieldCtx, load_modulus_file
from .linearized import LinearizedPoly, format_linpoly, parse_linpoly, permutes, s_polynomial
from .maps import FieldMap, linearized_map, parse_table_file
from .constructions import (build_g_thm1, build_g_thm3, build_L_note,
                            check_condition_ii, search_L_candidates)
from .pptest import (PPVerdict, char_sum, find_case1_witness,
                     is_permutation_exhaustive, pp_verdict_charsum, shift_check)
from .proofchecks import (CheckResult, VerificationReport, check_case2_factorization,
                          check_eq22, check_eq23, check_kernel_image, decompose_a,
                          tracezero_basis, verify_thm1, verify_thm3)

__all__ = [
    "FieldCtx", "load_modulus_file",
    "LinearizedPoly", "format_linpoly", "parse_linpoly", "permutes", "s_polynomial",
    "FieldMap", "linearized_map", "parse_table_file",
    "build_g_thm1", "build_g_thm3", "build_L_note", "check_condition_ii",
    "search_L_candidates",
    "PPVerdict", "char_sum", "find_case1_witness", "is_permutation_exhaustive",
    "pp_verdict_charsum", "shift_check",
    "CheckResult", "VerificationReport", "check_case2_factorization", "check_eq22",
    "check_eq23", "check_kernel_image", "decompose_a", "tracezero_basis",
    "verify_thm1", "verify_thm3",
]
