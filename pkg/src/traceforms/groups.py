"""Finite semidirect products Z/m x| Z/p^k and exhaustive property checks.

Elements are pairs (a, x) with a mod m, x mod p^k, multiplied by
(a, x)(b, y) = (a + alpha^x b, x + y) for a unit alpha of multiplicative
order p.  Three structural properties are machine-verified over parameter
sweeps: (a) the group is generated by its p-Sylow subgroups, (b) its only
quotient of order prime to p is trivial, and (c) for every n | m there are
subgroups of indices p^k n and n.

Validity of parameters: besides p prime, p not dividing m, and p | phi(m),
construction requires every prime factor q of m to satisfy q = 1 (mod p).
That is exactly the condition under which a unit alpha of order p with
alpha - 1 invertible mod m exists, and the unit condition is what makes
(1,1) a p-element (its p^k-th power is (a (1-alpha^(p^k))/(1-alpha), 0),
a quotient that only collapses when 1-alpha is a unit).  Without it the
generation property (a) genuinely fails, e.g. m=15, p=2, alpha=4 fixes the
residues mod 3 and the p-elements generate a subgroup of order 10, not 30.

Powers are computed by iterated multiplication and cross-checked against the
closed form (a (1 + alpha^x + ... + alpha^((n-1)x)), n x) on every call; a
divergence would be a bug and raises immediately.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .algebra import divisors, euler_phi, factorize, is_prime


class InvalidParams(ValueError):
    """Parameters do not admit the semidirect construction."""


class NonDivisor(ValueError):
    """The requested index parameter does not divide m."""


class Element(NamedTuple):
    a: int
    x: int


class SemidirectGroup:
    """Z/m x| Z/p^k with a fixed twisting unit alpha of order p mod m."""

    def __init__(self, p: int, k: int, m: int, alpha: int):
        self.p = p
        self.k = k
        self.m = m
        self.alpha = alpha % m if m > 1 else 0
        self.pk = p**k
        self.order = m * self.pk
        # alpha^x for x mod p^k; the exponent only matters mod p
        cycle = [1]
        for _ in range(p - 1):
            cycle.append(cycle[-1] * alpha % m if m > 1 else 0)
        self._alpha_pow = [cycle[x % p] for x in range(self.pk)]

    def __repr__(self):
        return f"SemidirectGroup(p={self.p}, k={self.k}, m={self.m}, alpha={self.alpha})"

    @property
    def identity(self) -> Element:
        return Element(0, 0)

    def elements(self):
        for a in range(self.m):
            for x in range(self.pk):
                yield Element(a, x)

    def multiply(self, g: Element, h: Element) -> Element:
        return Element(
            (g.a + self._alpha_pow[g.x] * h.a) % self.m, (g.x + h.x) % self.pk
        )

    def inverse(self, g: Element) -> Element:
        xinv = (-g.x) % self.pk
        return Element((-self._alpha_pow[xinv] * g.a) % self.m, xinv)

    def conjugate(self, h: Element, g: Element) -> Element:
        return self.multiply(self.multiply(h, g), self.inverse(h))

    def _geometric_sum(self, beta: int, n: int) -> int:
        # 1 + beta + ... + beta^(n-1) mod m, by binary splitting
        if n == 0:
            return 0
        half = self._geometric_sum(beta, n // 2)
        total = (half + pow(beta, n // 2, self.m) * half) % self.m if self.m > 1 else 0
        if n % 2:
            total = (total + pow(beta, n - 1, self.m)) % self.m if self.m > 1 else 0
        return total

    def power(self, g: Element, n: int) -> Element:
        """g**n for n >= 0, with the closed form checked against iteration."""
        if n < 0:
            raise ValueError("negative exponents are not needed here")
        result = self.identity
        base = g
        e = n
        while e:
            if e & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            e >>= 1
        closed = Element(
            g.a * self._geometric_sum(self._alpha_pow[g.x], n) % self.m
            if self.m > 1
            else 0,
            n * g.x % self.pk,
        )
        if closed != result:
            raise ArithmeticError(
                f"closed-form power diverged from iteration for {g}^{n}: "
                f"{closed} vs {result}"
            )
        return result

    def element_order(self, g: Element) -> int:
        # order of the Z/p^k coordinate, then the additive order of what the
        # corresponding power leaves in the Z/m coordinate
        ox = self.pk // math.gcd(g.x, self.pk) if g.x else 1
        c = (
            g.a * self._geometric_sum(self._alpha_pow[g.x], ox) % self.m
            if self.m > 1
            else 0
        )
        return ox * (self.m // math.gcd(c, self.m))

    def subgroup_closure(self, gens) -> frozenset:
        """Subgroup generated by `gens` (BFS over an effective generator list)."""
        effective: list[Element] = []
        current = {self.identity}
        for g in gens:
            if g in current:
                continue
            effective.append(g)
            frontier = list(current)
            while frontier:
                nxt = []
                for h in frontier:
                    for gen in effective:
                        prod = self.multiply(h, gen)
                        if prod not in current:
                            current.add(prod)
                            nxt.append(prod)
                frontier = nxt
        return frozenset(current)

    def normal_closure(self, gens) -> frozenset:
        """Smallest normal subgroup containing `gens`.

        Closing under conjugation by the two group generators (1, 0) and
        (0, 1) suffices, since they generate everything."""
        translators = [Element(1 % self.m, 0), Element(0, 1 % self.pk)]
        current = set(self.subgroup_closure(gens))
        while True:
            new = [
                c
                for t in translators
                for g in current
                if (c := self.conjugate(t, g)) not in current
            ]
            if not new:
                return frozenset(current)
            current = set(self.subgroup_closure(list(current) + new))

    def conjugacy_classes(self) -> list[frozenset]:
        """Conjugation acts by (b, y)(a, x)(b, y)^-1 = (alpha^y a + (1 - alpha^x) b, x),
        so the class of (a, x) is the alpha-orbit of a shifted by the subgroup
        gcd(1 - alpha^x, m) Z/m."""
        classes = []
        seen: set[Element] = set()
        for x in range(self.pk):
            step = math.gcd(1 - self._alpha_pow[x], self.m)
            for a in range(self.m):
                if Element(a, x) in seen:
                    continue
                cls = set()
                for y in range(self.p):
                    base = self._alpha_pow[y] * a
                    for t in range(0, self.m, step):
                        cls.add(Element((base + t) % self.m, x))
                seen |= cls
                classes.append(frozenset(cls))
        return classes


def _order_p_units(m: int, p: int):
    for a in range(2, m):
        if math.gcd(a, m) == 1 and pow(a, p, m) == 1 and a % m != 1:
            yield a


def qualifying_alphas(p: int, k: int, m: int) -> list[int]:
    """Units of order exactly p with alpha - 1 also a unit mod m."""
    return [a for a in _order_p_units(m, p) if math.gcd(a - 1, m) == 1]


def construct_group(p: int, k: int, m: int) -> SemidirectGroup:
    """Validated construction with the smallest qualifying alpha.

    Rejects p | m and p not dividing phi(m) outright; additionally rejects m
    with a prime factor q != 1 (mod p), because then no unit of order p with
    alpha - 1 invertible exists and the Sylow generation property fails.
    """
    if not is_prime(p):
        raise InvalidParams(f"p = {p} is not prime")
    if k < 1 or m < 1:
        raise InvalidParams("k and m must be positive")
    if m % p == 0:
        raise InvalidParams(f"p = {p} divides m = {m}")
    if m == 1 or euler_phi(m) % p != 0:
        raise InvalidParams(f"p = {p} does not divide phi({m})")
    bad = [q for q in factorize(m) if q % p != 1]
    if bad:
        raise InvalidParams(
            f"prime factors {bad} of m are not 1 mod p; no twisting unit of "
            f"order {p} with alpha - 1 invertible exists"
        )
    alpha = min(qualifying_alphas(p, k, m))
    return SemidirectGroup(p, k, m, alpha)


def p_elements(group: SemidirectGroup) -> list[Element]:
    """All elements of p-power order (the union of the Sylow p-subgroups)."""
    out = []
    for g in group.elements():
        order = group.element_order(g)
        while order % group.p == 0:
            order //= group.p
        if order == 1:
            out.append(g)
    return out


def p_generated_subgroup(group: SemidirectGroup) -> frozenset:
    """Closure of all p-power-order elements; compare against the full group."""
    return group.subgroup_closure(p_elements(group))


def quotient_check_derived(group: SemidirectGroup) -> bool:
    """Any quotient of order prime to p kills every p-element, so the normal
    closure of the p-elements must be everything for such quotients to be
    trivial."""
    return len(group.normal_closure(p_elements(group))) == group.order


def _normal_subgroups(group: SemidirectGroup) -> list[frozenset]:
    classes = group.conjugacy_classes()
    trivial = frozenset({group.identity})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        base = frontier.pop()
        for cls in classes:
            if cls <= base:
                continue
            # class-closed generating set, so the closure is normal
            candidate = group.subgroup_closure(set(base) | set(cls))
            if candidate not in found:
                found.add(candidate)
                frontier.append(candidate)
    return sorted(found, key=len)


def quotient_check_exhaustive(group: SemidirectGroup) -> bool:
    """Enumerate every normal subgroup (closures of unions of conjugacy
    classes) and test the indices directly."""
    for normal in _normal_subgroups(group):
        index = group.order // len(normal)
        if index > 1 and index % group.p != 0:
            return False
    return True


def prime_to_p_quotient_check(group: SemidirectGroup, exhaustive: "bool | None" = None) -> bool:
    """True iff the only quotient of order prime to p is trivial.

    Runs the derived check always and the exhaustive enumeration when the
    group is small (order <= 300) or when forced; the two paths must agree.
    """
    derived = quotient_check_derived(group)
    if exhaustive is None:
        exhaustive = group.order <= 300
    if exhaustive:
        enumerated = quotient_check_exhaustive(group)
        if enumerated != derived:
            raise ArithmeticError(
                f"quotient check paths disagree on {group}: "
                f"derived={derived} exhaustive={enumerated}"
            )
    return derived


def index_subgroups(group: SemidirectGroup, n: int) -> tuple[frozenset, frozenset]:
    """(H0, H1): the kernel of Z/m -> Z/n inside the group, and its extension
    by the full Z/p^k factor; indices p^k n and n, verified by counting."""
    if group.m % n != 0:
        raise NonDivisor(f"{n} does not divide m = {group.m}")
    h0 = frozenset(Element(a, 0) for a in range(0, group.m, n))
    h1 = frozenset(Element(a, x) for a in range(0, group.m, n) for x in range(group.pk))
    if any((group.alpha * g.a) % group.m % n != 0 for g in h0):
        raise ArithmeticError("H0 is not invariant under the twisting action")
    if group.subgroup_closure(h0) != h0 or group.subgroup_closure(h1) != h1:
        raise ArithmeticError("index subgroup is not closed")
    if group.order // len(h0) != group.pk * n or group.order // len(h1) != n:
        raise ArithmeticError("index count mismatch")
    return h0, h1


def verify_group(
    group: SemidirectGroup,
    index_divisors: "list[int] | None" = None,
    exhaustive: "bool | None" = None,
) -> dict:
    """Check all three structural properties; returns a JSON-ready report."""
    lemma_a = p_generated_subgroup(group) == frozenset(group.elements())
    derived = quotient_check_derived(group)
    run_exhaustive = exhaustive if exhaustive is not None else group.order <= 300
    enumerated = quotient_check_exhaustive(group) if run_exhaustive else None
    if enumerated is not None and enumerated != derived:
        raise ArithmeticError(f"quotient check paths disagree on {group}")
    part_c = []
    for n in index_divisors if index_divisors is not None else divisors(group.m):
        h0, h1 = index_subgroups(group, n)
        part_c.append(
            {
                "n": n,
                "index_H0": group.order // len(h0),
                "index_H1": group.order // len(h1),
                "ok": group.order // len(h0) == group.pk * n
                and group.order // len(h1) == n,
            }
        )
    report = {
        "params": {"p": group.p, "k": group.k, "m": group.m, "alpha": group.alpha},
        "order": group.order,
        "lemma_a": lemma_a,
        "lemma_b": {"derived": derived, "exhaustive": enumerated},
        "lemma_c": part_c,
    }
    report["all_pass"] = (
        lemma_a
        and derived
        and (enumerated is None or enumerated)
        and all(entry["ok"] for entry in part_c)
    )
    return report


def sweep_parameters(max_order: int, primes=(2, 3, 5)) -> list[tuple[int, int, int]]:
    """All (p, k, m) accepted by construct_group with m * p^k <= max_order."""
    out = []
    for p in primes:
        k = 1
        while p**k * 2 <= max_order:
            for m in range(2, max_order // p**k + 1):
                try:
                    construct_group(p, k, m)
                except InvalidParams:
                    continue
                out.append((p, k, m))
            k += 1
    return out
