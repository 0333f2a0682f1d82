"""Exact arithmetic substrate: integers, rational polynomials, prime-field
polynomials, matrices, and rational irreducibility."""

from .intmath import (
    divisors,
    euler_phi,
    factorize,
    is_prime,
    legendre_symbol,
    next_prime,
    primes_above,
    squarefree_part,
    valuation,
)
from .irreducibility import is_irreducible_over_rationals, mignotte_bound
from .matrix import (
    Matrix,
    SingularKrylov,
    charpoly,
    congruence_diagonalize,
    krylov_matrix,
    solve_linear,
)
from .modpoly import BadPrime, ModPoly, cycle_type_mod_p, factor_mod_p, mod_gcd
from .poly import (
    RationalPoly,
    discriminant,
    is_separable,
    poly_gcd,
    power_traces,
    primitive_integer_coeffs,
    resultant,
    trace_of_element,
)

__all__ = [
    "BadPrime",
    "Matrix",
    "ModPoly",
    "RationalPoly",
    "SingularKrylov",
    "charpoly",
    "congruence_diagonalize",
    "cycle_type_mod_p",
    "discriminant",
    "divisors",
    "euler_phi",
    "factor_mod_p",
    "factorize",
    "is_irreducible_over_rationals",
    "is_prime",
    "is_separable",
    "krylov_matrix",
    "legendre_symbol",
    "mignotte_bound",
    "mod_gcd",
    "next_prime",
    "poly_gcd",
    "power_traces",
    "primes_above",
    "primitive_integer_coeffs",
    "resultant",
    "solve_linear",
    "squarefree_part",
    "trace_of_element",
    "valuation",
]
