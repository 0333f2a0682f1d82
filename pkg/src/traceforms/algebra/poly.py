"""Dense univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored lowest degree first;
the zero polynomial is the empty tuple and has degree -1.  Degrees in this
package stay small (<= 8 or so), so the dense representation and the
quadratic-time classical algorithms cost nothing.

Alongside the arithmetic this module provides the trace machinery for
quotient rings Q[x]/(f): power sums of the roots of a monic f via Newton's
identities, and traces of arbitrary ring elements.
"""

from __future__ import annotations

import math
from fractions import Fraction


class RationalPoly:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "RationalPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = RationalPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= dd:
            return RationalPoly(()), self
        quo = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + dd] / lead
            quo[i] = c
            if c:
                for j in range(dd + 1):
                    rem[i + j] -= c * other.coeffs[j]
        return RationalPoly(quo), RationalPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "RationalPoly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return RationalPoly(tuple(c / lead for c in self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "RationalPoly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"{'-' if c < 0 else '+'} {body}")
        return f"RationalPoly({' '.join(terms)})"


def _coerce(value):
    if isinstance(value, RationalPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPoly((value,))
    return NotImplemented


def poly_gcd(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """Monic gcd in Q[x] (a nonzero constant gcd is returned as 1)."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def is_separable(f: RationalPoly) -> bool:
    """True iff f has no repeated roots, i.e. gcd(f, f') is constant."""
    if f.degree < 1:
        raise ValueError("separability is only defined for degree >= 1")
    return poly_gcd(f, f.derivative()).degree == 0


def power_traces(f: RationalPoly, m: int) -> tuple[Fraction, ...]:
    """Traces of multiplication by x**k on Q[x]/(f), k = 0..m.

    Entry k is the k-th power sum of the roots of the monic f, obtained from
    the coefficients by Newton's identities; entry 0 is deg f.
    """
    if not f.is_monic or f.degree < 1:
        raise ValueError("power traces require a monic polynomial of degree >= 1")
    n = f.degree
    a = f.coeffs
    tr = [Fraction(n)]
    for k in range(1, m + 1):
        s = -k * a[n - k] if k <= n else Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            s -= a[n - i] * tr[k - i]
        tr.append(s)
    return tuple(tr)


def trace_of_element(f: RationalPoly, g: RationalPoly) -> Fraction:
    """Trace of (g mod f) acting by multiplication on Q[x]/(f)."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("trace requires a monic modulus of degree >= 1")
    gbar = g % f
    if gbar.is_zero:
        return Fraction(0)
    tr = power_traces(f, gbar.degree)
    return sum((c * tr[k] for k, c in enumerate(gbar.coeffs)), Fraction(0))


def resultant(f: RationalPoly, g: RationalPoly) -> Fraction:
    """Resultant of f and g via the classical Euclidean recursion."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    a, b = f, g
    res = Fraction(1)
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            res = -res
        a, b = b, a
    while b.degree > 0:
        r = a % b
        if r.is_zero:
            return Fraction(0) if a.degree > 0 and b.degree > 0 else res
        res *= b.leading ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2:
            res = -res
        a, b = b, r
    return res * b.coeffs[0] ** a.degree


def discriminant(f: RationalPoly) -> Fraction:
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.leading


def primitive_integer_coeffs(f: RationalPoly) -> list[int]:
    """Integer coefficient list of the primitive part of f, positive leading."""
    if f.is_zero:
        raise ValueError("zero polynomial has no primitive part")
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints
