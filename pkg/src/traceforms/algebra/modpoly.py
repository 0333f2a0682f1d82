"""Univariate polynomials over a prime field GF(p), plus full factorization.

Coefficients are integers in [0, p) stored lowest degree first; the zero
polynomial is the empty tuple.  Factorization is squarefree decomposition,
then distinct-degree splitting, then Cantor-Zassenhaus equal-degree
splitting.  The randomness inside equal-degree splitting is drawn from a
PRNG seeded by the input polynomial, so results are reproducible and the
returned factor list is sorted canonically.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .intmath import is_prime
from .poly import RationalPoly, discriminant, primitive_integer_coeffs


class BadPrime(ValueError):
    """The prime divides the leading coefficient or the discriminant."""


class ModPoly:
    """Immutable polynomial over GF(p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"ModPoly(p={self.p}, coeffs={list(self.coeffs)})"

    def _check(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return ModPoly(self.p, out)

    def __sub__(self, other):
        self._check(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % self.p
        return ModPoly(self.p, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return ModPoly(self.p, tuple(c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero or other.is_zero:
            return ModPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ModPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv = pow(other.coeffs[-1], -1, p)
        rem = list(self.coeffs)
        dd = other.degree
        if len(rem) <= dd:
            return ModPoly(p), self
        quo = [0] * (len(rem) - dd)
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + dd] * inv % p
            quo[i] = c
            if c:
                for j in range(dd + 1):
                    rem[i + j] = (rem[i + j] - c * other.coeffs[j]) % p
        return ModPoly(p, quo), ModPoly(p, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "ModPoly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        if self.coeffs[-1] == 1:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return ModPoly(self.p, tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "ModPoly":
        return ModPoly(self.p, tuple(i * c for i, c in enumerate(self.coeffs) if i))


def mod_gcd(f: ModPoly, g: ModPoly) -> ModPoly:
    """Monic gcd over GF(p)."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def mod_xgcd(f: ModPoly, g: ModPoly) -> tuple[ModPoly, ModPoly, ModPoly]:
    """(s, t, d) with s f + t g = d, d the monic gcd."""
    p = f.p
    a, b = f, g
    sa, sb = ModPoly(p, (1,)), ModPoly(p)
    ta, tb = ModPoly(p), ModPoly(p, (1,))
    while not b.is_zero:
        q, r = divmod(a, b)
        a, b = b, r
        sa, sb = sb, sa - q * sb
        ta, tb = tb, ta - q * tb
    if a.is_zero:
        return sa, ta, a
    inv = pow(a.coeffs[-1], -1, p)
    return sa * inv, ta * inv, a.monic()


def mod_pow(base: ModPoly, e: int, modulus: ModPoly) -> ModPoly:
    """base**e reduced mod modulus."""
    result = ModPoly(base.p, (1,))
    base = base % modulus
    while e:
        if e & 1:
            result = result * base % modulus
        base = base * base % modulus
        e >>= 1
    return result


def _pth_root(f: ModPoly) -> ModPoly:
    # over GF(p) the Frobenius fixes coefficients, so g(x^p) -> g(x) directly
    return ModPoly(f.p, tuple(f.coeffs[i] for i in range(0, len(f.coeffs), f.p)))


def _squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic f as a list of (squarefree factor, multiplicity)."""
    p = f.p
    out: list[tuple[ModPoly, int]] = []
    e = 1
    while f.degree > 0:
        df = f.derivative()
        if df.is_zero:
            f = _pth_root(f)
            e *= p
            continue
        c = mod_gcd(f, df)
        w = f // c
        i = 1
        while w.degree > 0:
            y = mod_gcd(w, c)
            z = w // y
            if z.degree > 0:
                out.append((z, i * e))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            f = _pth_root(c)
            e *= p
        else:
            break
    return out


def _distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Squarefree monic f as (product of irreducibles of degree d, d) pairs."""
    p = f.p
    out = []
    x = ModPoly(p, (0, 1))
    h = x % f
    d = 0
    rest = f
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = mod_pow(h, p, rest)
        g = mod_gcd(h - x, rest)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _poly_seed(f: ModPoly) -> int:
    acc = f.p
    for c in f.coeffs:
        acc = (acc * 1000003 + c) & 0xFFFFFFFFFFFFFFFF
    return acc


def _equal_degree_split(f: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Cantor-Zassenhaus split of a monic squarefree f with all factors of degree d."""
    if f.degree == d:
        return [f]
    p = f.p
    while True:
        a = ModPoly(p, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = mod_gcd(a, f)
        if 0 < g.degree < f.degree:
            pass  # lucky split by a shared factor
        elif p == 2:
            t = a
            b = a
            for _ in range(d - 1):
                b = b * b % f
                t = t + b
            g = mod_gcd(t, f)
        else:
            b = mod_pow(a, (p**d - 1) // 2, f)
            g = mod_gcd(b - ModPoly(p, (1,)), f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor_mod_p(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Factor f into monic irreducibles; returns sorted (factor, exponent) pairs.

    The leading coefficient of f is the implicit unit:
    f = lc * prod(factor**exponent).
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if not is_prime(f.p):
        raise ValueError(f"modulus {f.p} is not prime")
    if f.degree == 0:
        return []
    rng = random.Random(_poly_seed(f))
    result: list[tuple[ModPoly, int]] = []
    for squarefree, mult in _squarefree_decomposition(f.monic()):
        for product, d in _distinct_degree(squarefree):
            for irreducible in _equal_degree_split(product, d, rng):
                result.append((irreducible, mult))
    result.sort(key=lambda pair: (pair[0].degree, pair[0].coeffs))
    return result


@lru_cache(maxsize=4096)
def _integer_discriminant(int_coeffs: tuple[int, ...]) -> int:
    disc = discriminant(RationalPoly(int_coeffs))
    assert disc.denominator == 1
    return disc.numerator


def cycle_type_mod_p(f: RationalPoly, p: int) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors of f mod p.

    Raises BadPrime when p divides the leading coefficient or the
    discriminant of the cleared-denominator form of f (the factorization
    pattern mod such p does not reflect a Frobenius cycle type).
    """
    if f.degree < 1:
        raise ValueError("cycle type requires degree >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ints = primitive_integer_coeffs(f)
    if ints[-1] % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient")
    if _integer_discriminant(tuple(ints)) % p == 0:
        raise BadPrime(f"{p} divides the discriminant")
    factors = factor_mod_p(ModPoly(p, ints))
    assert all(e == 1 for _, e in factors)
    degrees = tuple(sorted(g.degree for g, _ in factors))
    assert sum(degrees) == f.degree
    return degrees
