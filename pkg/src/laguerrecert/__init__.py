"""Exact-arithmetic irreducibility certificates for Laguerre-type
polynomials over a monic base, via prime-valuation polygons."""

from .certify import (Certificate, ExclusionWitness, FailureReport,
                      NoSmallDegreePrime, certificate_from_json,
                      certificate_to_json, certify, coverage_complete,
                      exclude_small_degrees, find_prime_for_k,
                      lemma_exclusion_check, verify_certificate)
from .laguerre import (Alpha, HypothesisViolation, LaguerreInstance,
                       build_instance, coefficient_ratio, laguerre_coefficients,
                       valuation_vector)
from .oracle import (DegreePattern, DegreeSet, FactorWitness, Verdict,
                     degree_pattern, oracle_verdict, possible_degrees,
                     search_reducible_witness, verify_witness)
from .polygon import (NewtonPolygon, bruteforce_lower_hull, build_polygon,
                      polygon_from_points, rightmost_slope)
from .polyring import (PhiExpansion, Poly, X, check_phi, construct_phi, content,
                       format_poly, gauss_valuation, is_irreducible_mod_p,
                       parse_poly, phi_expand, primitive_part, reduce_mod_p)
from .primes import (INFINITY, factorial_valuation, factorize, is_prime,
                     largest_prime_factor, prime_in_ap, product_lpf,
                     sieve_primes, vp_int, vp_rat)
from .tables import (EXPECTED_EQUATION_SOLUTIONS, EXPECTED_PAIR_SETS,
                     K1_QUOTED_SETS, Report, k1_no_good_prime_set,
                     product_lpf_pairs, solve_power_equation,
                     verify_k1_subcases, verify_nonconstant_leading_counterexample,
                     verify_reference_tables)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
