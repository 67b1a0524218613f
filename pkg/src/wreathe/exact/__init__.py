"""Exact arithmetic: Q, F_q, p-adic valuations, polynomials, dense linear algebra."""
from .fields import (QQ, FiniteField, RationalField, RingMismatch, is_p_integral, is_prime,
                     parse_rational, rational_str, reduce_mod_p, valuation)
from .linalg import Matrix, linear_solve
from .poly import Poly, factor_poly_fq, poly_gcd
from .smith import INF, saturate, smith_valuations

__all__ = [
    "QQ", "FiniteField", "RationalField", "RingMismatch", "is_p_integral", "is_prime",
    "parse_rational", "rational_str", "reduce_mod_p", "valuation", "Matrix", "linear_solve",
    "Poly", "factor_poly_fq", "poly_gcd", "INF", "saturate", "smith_valuations",
]
