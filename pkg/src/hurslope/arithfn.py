"""Exact arithmetic functions on the positive integers.

Everything here works on Python ints, so values never overflow. Factorization
uses a smallest-prime-factor table that grows on demand.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable

Factorization = tuple[tuple[int, int], ...]

# Past this bound factorize() falls back to plain trial division.
_SPF_CAP = 1 << 24

_spf: list[int] = [0, 1]
_spf_lock = threading.Lock()


def _spf_table(n: int) -> list[int]:
    global _spf
    table = _spf
    if n < len(table):
        return table
    with _spf_lock:
        if n < len(_spf):
            return _spf
        size = min(max(n + 1, 2 * len(_spf), 1024), _SPF_CAP)
        spf = list(range(size))
        for p in range(2, isqrt(size - 1) + 1):
            if spf[p] == p:
                for m in range(p * p, size, p):
                    if spf[m] == m:
                        spf[m] = p
        _spf = spf
        return spf


def _trial_division(n: int) -> Factorization:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Return the prime factorization of ``n`` as ``((p, e), ...)`` sorted by p."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    if n >= _SPF_CAP:
        return _trial_division(n)
    spf = _spf_table(n)
    out: list[tuple[int, int]] = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return tuple(out)


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [q * p**i for q in divs for i in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class ArithmeticFunction:
    """An integer-valued function on the positive integers.

    ``prime_power_rule`` (if given) maps ``(p, n)`` to the value at ``p**n``.
    For a genuinely multiplicative function the evaluator must agree with the
    product of the rule over the factorization; ``check_prime_power_rule``
    tests that.
    """

    evaluator: Callable[[int], int]
    claimed_multiplicative: bool = False
    prime_power_rule: Callable[[int, int], int] | None = None
    name: str = "f"

    def __call__(self, d: int) -> int:
        if d < 1:
            raise ValueError(f"{self.name} is defined on positive integers, got {d}")
        return self.evaluator(d)

    def __repr__(self) -> str:
        return f"ArithmeticFunction({self.name})"

    @classmethod
    def from_prime_powers(cls, rule: Callable[[int, int], int], name: str = "f") -> ArithmeticFunction:
        def evaluate(d: int) -> int:
            value = 1
            for p, n in factorize(d):
                value *= rule(p, n)
            return value

        return cls(evaluate, claimed_multiplicative=True, prime_power_rule=rule, name=name)

    def rule_product(self, d: int) -> int:
        if self.prime_power_rule is None:
            raise ValueError(f"{self.name} has no prime-power rule")
        value = 1
        for p, n in factorize(d):
            value *= self.prime_power_rule(p, n)
        return value


def sigma(k: int, d: int) -> int:
    """Sum of the k-th powers of the positive divisors of ``d``."""
    if d < 1:
        raise ValueError(f"sigma expects d >= 1, got {d}")
    return sum(q**k for q in divisors(d))


def sigma_half(d: int) -> int:
    """sigma_1(d/2), with the convention that it vanishes for odd d."""
    if d < 1:
        raise ValueError(f"sigma_half expects d >= 1, got {d}")
    return sigma(1, d // 2) if d % 2 == 0 else 0


def totient(d: int) -> int:
    value = d
    for p, _ in factorize(d):
        value -= value // p
    return value


def _sigma_rule(k: int) -> Callable[[int, int], int]:
    if k == 0:
        return lambda p, n: n + 1
    return lambda p, n: (p ** (k * (n + 1)) - 1) // (p**k - 1)


def big_f(d: int) -> int:
    """Multiplicative function with F(p^n) = (p^2 - 1) p^(2n - 2); F(1) = 1."""
    return BIG_F(d)


def sigma_function(k: int) -> ArithmeticFunction:
    return ArithmeticFunction(
        lambda d: sigma(k, d),
        claimed_multiplicative=True,
        prime_power_rule=_sigma_rule(k),
        name=f"sigma_{k}",
    )


SIGMA1 = sigma_function(1)
SIGMA3 = sigma_function(3)
PHI = ArithmeticFunction(
    totient,
    claimed_multiplicative=True,
    prime_power_rule=lambda p, n: (p - 1) * p ** (n - 1),
    name="phi",
)
IOTA = ArithmeticFunction(lambda d: d, claimed_multiplicative=True, prime_power_rule=lambda p, n: p**n, name="iota")
ZERO = ArithmeticFunction(lambda d: 0, name="zero")
# Dirichlet unit: 1 at d = 1, 0 elsewhere.
UNIT = ArithmeticFunction(lambda d: int(d == 1), claimed_multiplicative=True, prime_power_rule=lambda p, n: 0, name="unit")
BIG_F = ArithmeticFunction.from_prime_powers(lambda p, n: (p * p - 1) * p ** (2 * n - 2), name="F")


def dirichlet_convolve(f: ArithmeticFunction, g: ArithmeticFunction, d: int) -> int:
    """(f * g)(d) = sum over divisors e of d of f(e) g(d/e)."""
    return sum(f(e) * g(d // e) for e in divisors(d))


def convolution(f: ArithmeticFunction, g: ArithmeticFunction) -> ArithmeticFunction:
    """The function d -> (f * g)(d)."""
    return ArithmeticFunction(
        lambda d: dirichlet_convolve(f, g, d),
        claimed_multiplicative=f.claimed_multiplicative and g.claimed_multiplicative,
        name=f"({f.name} * {g.name})",
    )


def pointwise_product(f: ArithmeticFunction, g: ArithmeticFunction) -> ArithmeticFunction:
    rule = None
    if f.prime_power_rule is not None and g.prime_power_rule is not None:
        fr, gr = f.prime_power_rule, g.prime_power_rule
        rule = lambda p, n: fr(p, n) * gr(p, n)  # noqa: E731
    return ArithmeticFunction(
        lambda d: f(d) * g(d),
        claimed_multiplicative=f.claimed_multiplicative and g.claimed_multiplicative,
        prime_power_rule=rule,
        name=f"({f.name} . {g.name})",
    )


def multiplicativity_counterexample(f: Callable[[int], int], bound: int) -> tuple[int, int] | None:
    """First coprime pair (a, b), a <= b, a*b <= bound, with f(ab) != f(a) f(b)."""
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    values = [0] + [f(n) for n in range(1, bound + 1)]
    for a in range(1, isqrt(bound) + 1):
        for b in range(a, bound // a + 1):
            if gcd(a, b) == 1 and values[a * b] != values[a] * values[b]:
                return a, b
    return None


def check_multiplicative(f: Callable[[int], int], bound: int) -> bool:
    """True iff f(ab) = f(a) f(b) for all coprime a, b with ab <= bound."""
    return multiplicativity_counterexample(f, bound) is None


def ramanujan_rhs(d: int) -> Fraction:
    """(1/12 - d/2) sigma_1(d) + (5/12) sigma_3(d)."""
    return (Fraction(1, 12) - Fraction(d, 2)) * sigma(1, d) + Fraction(5, 12) * sigma(3, d)


def sigma1_additive_convolution(d: int, table: SieveTable | None = None) -> int:
    """sum_{h=1}^{d-1} sigma_1(h) sigma_1(d - h), summed term by term."""
    if table is not None and d <= table.bound:
        s1 = table.sigma1
    else:
        s1 = [0] + [sigma(1, n) for n in range(1, d)]
    return sum(s1[h] * s1[d - h] for h in range(1, d))


@dataclass(frozen=True)
class SieveTable:
    """sigma_1, sigma_3 and phi on 1..bound; index 0 holds a dummy 0."""

    bound: int
    sigma1: tuple[int, ...]
    sigma3: tuple[int, ...]
    phi: tuple[int, ...]

    @classmethod
    def build(cls, bound: int) -> SieveTable:
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        s1 = [0] * (bound + 1)
        s3 = [0] * (bound + 1)
        for q in range(1, bound + 1):
            cube = q * q * q
            for m in range(q, bound + 1, q):
                s1[m] += q
                s3[m] += cube
        phi = list(range(bound + 1))
        for p in range(2, bound + 1):
            if phi[p] == p:
                for m in range(p, bound + 1, p):
                    phi[m] -= phi[m] // p
        return cls(bound, tuple(s1), tuple(s3), tuple(phi))
