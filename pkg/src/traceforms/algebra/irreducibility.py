"""Complete irreducibility decision for rational polynomials.

Pipeline: clear denominators, force the polynomial monic by the root-scaling
substitution, rule out repeated factors, factor modulo a handful of good
primes (keeping the one with the fewest modular factors), Hensel-lift that
factorization past twice the Landau-Mignotte coefficient bound, and search
subset recombinations of the lifted factors for a true integer divisor.

Degrees in this package stay small, so the exponential recombination step is
a few dozen candidates at worst.
"""

from __future__ import annotations

import math
from itertools import combinations, islice

from .intmath import primes_above
from .modpoly import ModPoly, factor_mod_p, mod_xgcd, _integer_discriminant
from .poly import RationalPoly, is_separable, primitive_integer_coeffs

_CANDIDATE_PRIMES = 5


def mignotte_bound(coeffs: list[int]) -> int:
    """Upper bound on |coefficients| of any monic divisor of the monic input."""
    n = len(coeffs) - 1
    norm = math.isqrt(sum(c * c for c in coeffs)) + 1
    return (1 << n) * norm


def _monicize(coeffs: list[int]) -> list[int]:
    """Monic integer polynomial b^(n-1) f(x/b); same irreducibility over Q."""
    b = coeffs[-1]
    if b == 1:
        return list(coeffs)
    n = len(coeffs) - 1
    return [c * b ** (n - 1 - i) for i, c in enumerate(coeffs[:-1])] + [1]


# -- integer polynomial helpers (lists, lowest degree first) --


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % q for c in out])


def _padd(a: list[int], b: list[int], q: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % q
    return _trim(out)


def _psub(a: list[int], b: list[int], q: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % q
    return _trim(out)


def _pdivmod_monic(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int]]:
    # b must be monic mod q
    assert b and b[-1] == 1
    rem = [c % q for c in a]
    dd = len(b) - 1
    if len(rem) <= dd:
        return [], _trim(rem)
    quo = [0] * (len(rem) - dd)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + dd]
        quo[i] = c
        if c:
            for j in range(dd + 1):
                rem[i + j] = (rem[i + j] - c * b[j]) % q
    return _trim(quo), _trim(rem)


def _hensel_step(f, g, h, s, t, q):
    """One quadratic lifting step: factorization and Bezout data mod q -> mod q**2.

    Requires f = g h (mod q), s g + t h = 1 (mod q), g and h monic.
    """
    q2 = q * q
    e = _psub([c % q2 for c in f], _pmul(g, h, q2), q2)
    qq, r = _pdivmod_monic(_pmul(s, e, q2), h, q2)
    g1 = _padd(_padd(g, _pmul(t, e, q2), q2), _pmul(qq, g, q2), q2)
    h1 = _padd(h, r, q2)
    b = _psub(_padd(_pmul(s, g1, q2), _pmul(t, h1, q2), q2), [1], q2)
    c, d = _pdivmod_monic(_pmul(s, b, q2), h1, q2)
    s1 = _psub(s, d, q2)
    t1 = _psub(_psub(t, _pmul(t, b, q2), q2), _pmul(c, g1, q2), q2)
    return g1, h1, s1, t1


def _lift_factors(f: list[int], factors: list[list[int]], p: int, target: int) -> tuple[list[list[int]], int]:
    """Hensel-lift monic factors of monic f from mod p to mod p^(2^j) >= target.

    `factors` are monic mod p with product f mod p, pairwise coprime
    (guaranteed by f squarefree mod p).  Returns (lifted factors, modulus).
    """
    modulus = p
    while modulus < target:
        modulus *= modulus

    def lift(poly: list[int], parts: list[list[int]]) -> list[list[int]]:
        if len(parts) == 1:
            return [[c % modulus for c in poly]]
        half = len(parts) // 2
        g = [1]
        for part in parts[:half]:
            g = _pmul(g, part, p)
        h = [1]
        for part in parts[half:]:
            h = _pmul(h, part, p)
        s_mp, t_mp, d = mod_xgcd(ModPoly(p, g), ModPoly(p, h))
        assert d.degree == 0, "modular factors are not coprime"
        s, t = list(s_mp.coeffs), list(t_mp.coeffs)
        q = p
        while q < modulus:
            g, h, s, t = _hensel_step(poly, g, h, s, t, q)
            q *= q
        return lift(g, parts[:half]) + lift(h, parts[half:])

    lifted = lift(f, factors)
    prod = [1]
    for part in lifted:
        prod = _pmul(prod, part, modulus)
    assert prod == _trim([c % modulus for c in f]), "lifted product mismatch"
    return lifted, modulus


def _symmetric(c: int, q: int) -> int:
    c %= q
    return c - q if c > q // 2 else c


def _divides_exactly(f: list[int], g: list[int]) -> bool:
    """Does the monic integer g divide f over Z?"""
    rem = list(f)
    dd = len(g) - 1
    if len(rem) <= dd:
        return False
    for i in range(len(rem) - dd - 1, -1, -1):
        c = rem[i + dd]
        if c:
            for j in range(dd + 1):
                rem[i + j] -= c * g[j]
    return all(c == 0 for c in rem)


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def is_irreducible_over_rationals(f: RationalPoly) -> bool:
    """Complete decision of irreducibility in Q[x]."""
    if f.degree < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    if f.degree == 1:
        return True
    if not is_separable(f):
        return False  # a repeated factor, so certainly reducible at degree >= 2
    work = _monicize(primitive_integer_coeffs(f))
    n = len(work) - 1
    disc = _integer_discriminant(tuple(work))

    candidates: list[tuple[int, list[list[int]]]] = []
    for p in islice((p for p in primes_above(1) if disc % p), _CANDIDATE_PRIMES):
        factors = [list(g.coeffs) for g, _ in factor_mod_p(ModPoly(p, work))]
        if len(factors) == 1:
            return True  # irreducible mod p certifies irreducibility over Q
        candidates.append((p, factors))

    # a true factor's degree must be a subset sum of the modular degrees at
    # every good prime; an empty intersection certifies irreducibility
    possible = set(range(1, n))
    for _, factors in candidates:
        possible &= _subset_sums([len(g) - 1 for g in factors])
    if not possible:
        return True

    p, factors = min(candidates, key=lambda c: (len(c[1]), c[0]))
    lifted, modulus = _lift_factors(work, factors, p, 2 * mignotte_bound(work) + 1)

    r = len(lifted)
    for size in range(1, r // 2 + 1):
        for subset in combinations(range(r), size):
            if 2 * size == r and 0 not in subset:
                continue  # complement already covered
            degree = sum(len(lifted[i]) - 1 for i in subset)
            if degree not in possible:
                continue
            candidate = [1]
            for i in subset:
                candidate = _pmul(candidate, lifted[i], modulus)
            candidate = [_symmetric(c, modulus) for c in candidate]
            if _divides_exactly(work, candidate):
                return False
    return True
