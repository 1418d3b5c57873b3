"""Exact arithmetic for restricted colored base-3 partitions.

The package computes the 4-variable counting polynomials of partitions
into powers of 3 (at most one overlined, one tilde'd and two unmarked
copies of each power), the derived polynomial subsequences and their
single-variable specializations, verifies the identities connecting them
against a brute-force enumeration oracle, and computes the explicit
complex zero loci of the specialized families.
"""

from .chebyshev import ChebKind, chebyshev, dickson_D, dickson_E, verify_prop35
from .identities import (IdentityReport, verify_divisibility, verify_prop61,
                         verify_surprising, verify_telescoping)
from .oracle import (CapExceeded, ColoredPartition, PartitionStats,
                     count_partitions, enumerate_partitions, oracle_poly)
from .polyring import (DivisionByZeroPolynomial, Monomial4, MultiPoly,
                       NotDivisible, SpecMap, UniPoly, is_palindromic,
                       mp_divide_exact, poly_mul, poly_substitute,
                       up_divide_exact, up_eval_complex, up_gcd, up_square_free)
from .sequences import (W1, W2, closed_form_k3n, gf_check, q_poly, r_poly,
                        s_poly, s_poly_product, scalar_qr)
from .specialize import (CoefficientProfile, SpecId, partition_statistic,
                         profile, profile_from_oracle, q1_r1_closed,
                         q1_r1_shifted, reduced_q2, spec_family, spec_images,
                         structural_check)
from .zeros import (DomainError, NoConvergence, ZeroReport, chebyshev_zeros,
                    match_multisets, verify_locus, zeros_explicit, zeros_general)

__version__ = "0.1.0"

__all__ = [
    "ChebKind", "chebyshev", "dickson_D", "dickson_E", "verify_prop35",
    "IdentityReport", "verify_divisibility", "verify_prop61",
    "verify_surprising", "verify_telescoping",
    "CapExceeded", "ColoredPartition", "PartitionStats",
    "count_partitions", "enumerate_partitions", "oracle_poly",
    "DivisionByZeroPolynomial", "Monomial4", "MultiPoly", "NotDivisible",
    "SpecMap", "UniPoly", "is_palindromic", "mp_divide_exact", "poly_mul",
    "poly_substitute", "up_divide_exact", "up_eval_complex", "up_gcd",
    "up_square_free",
    "W1", "W2", "closed_form_k3n", "gf_check", "q_poly", "r_poly",
    "s_poly", "s_poly_product", "scalar_qr",
    "CoefficientProfile", "SpecId", "partition_statistic", "profile",
    "profile_from_oracle", "q1_r1_closed", "q1_r1_shifted", "reduced_q2",
    "spec_family", "spec_images", "structural_check",
    "DomainError", "NoConvergence", "ZeroReport", "chebyshev_zeros",
    "match_multisets", "verify_locus", "zeros_explicit", "zeros_general",
    "__version__",
]
