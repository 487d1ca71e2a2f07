"""Census of nodal genus-2 covers of a pointed elliptic curve.

Three routes to the same numbers:

* closed forms: |A_d| from the count of marked cyclic sublattices;
* recursion: |B_d| solved from the two-way count of all two-component covers;
* brute force: |B_d| as unordered pairs of sublattices with indices summing
  to d that jointly generate Z^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .arithfn import BIG_F, SieveTable, divisors, multiplicativity_counterexample, sigma
from .lattice import HermiteMatrix, count_marked_closed_form, enumerate_sublattices, lattice_sum
from .report import Check, Report


class InvariantViolation(AssertionError):
    """A counting identity that must hold exactly did not."""


@dataclass(frozen=True)
class CoverCensusRow:
    d: int
    m_count: int
    a_count: int
    b_count: int
    c_count: int
    delta0: int
    delta1: int
    slope: Fraction


class LatticePair(NamedTuple):
    """Unordered pair of sublattices, stored with first <= second by (index, a, c)."""

    first: HermiteMatrix
    second: HermiteMatrix

    @classmethod
    def of(cls, m1: HermiteMatrix, m2: HermiteMatrix) -> LatticePair:
        key = lambda m: (m.index, m.a, m.c)  # noqa: E731
        return cls(*sorted((m1, m2), key=key))

    @property
    def degree(self) -> int:
        return self.first.index + self.second.index

    def is_primitive(self) -> bool:
        return lattice_sum(self.first, self.second).index == 1


def count_a(d: int) -> int:
    """|A_d|: half of |M_d| for d >= 3, all of it at d = 2, none at d = 1."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if d == 1:
        return 0
    m = count_marked_closed_form(d)
    if d == 2:
        return m
    if m % 2:
        raise InvariantViolation(f"|M_{d}| = {m} is odd")
    return m // 2


def total_pairs(d: int, table: SieveTable | None = None) -> Fraction:
    """Number of (not necessarily primitive) two-component covers of degree d.

    (1/2) [sigma_1(d/2) + sum_{h=1}^{d-1} sigma_1(h) sigma_1(d-h)], which is
    asserted to be an integer.
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if table is not None and d <= table.bound:
        s1 = table.sigma1
        half = s1[d // 2] if d % 2 == 0 else 0
    else:
        s1 = [0] + [sigma(1, n) for n in range(1, d)]
        half = sigma(1, d // 2) if d % 2 == 0 else 0
    conv = sum(s1[h] * s1[d - h] for h in range(1, d))
    value = Fraction(half + conv, 2)
    if value.denominator != 1:
        raise InvariantViolation(f"total_pairs({d}) = {value} is not an integer")
    return value


def solve_b_recursion(max_d: int, table: SieveTable | None = None) -> list[int]:
    """B_1..B_max_d from the divisor recursion; ``result[d]`` is B_d, ``result[0]`` is 0.

    B_d = total_pairs(d) - sum over proper divisors d' of d of B_d' sigma_1(d/d').
    """
    if max_d < 1:
        raise ValueError(f"max_d must be positive, got {max_d}")
    if table is None or table.bound < max_d:
        table = SieveTable.build(max_d)
    s1 = table.sigma1
    b = [0] * (max_d + 1)
    for d in range(1, max_d + 1):
        rest = sum(b[e] * s1[d // e] for e in divisors(d)[:-1])
        value = total_pairs(d, table) - rest
        if value.denominator != 1 or value < 0:
            raise InvariantViolation(f"recursion gives B_{d} = {value}")
        b[d] = int(value)
    return b


def _hermite_arrays(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ms = enumerate_sublattices(n)
    return (
        np.fromiter((m.a for m in ms), np.int64, len(ms)),
        np.fromiter((m.b for m in ms), np.int64, len(ms)),
        np.fromiter((m.c for m in ms), np.int64, len(ms)),
    )


def _primitive_grid(h: int, k: int) -> np.ndarray:
    """Boolean matrix over (index-h lattice, index-k lattice) pairs: does the pair span Z^2?

    The index of a lattice spanned by vectors is the gcd of their 2x2 minors;
    for generators (a1,0),(c1,b1),(a2,0),(c2,b2) the minors are h, k,
    a1*b2, a2*b1 and c1*b2 - c2*b1 (and 0).
    """
    a1, b1, c1 = (v[:, None] for v in _hermite_arrays(h))
    a2, b2, c2 = (v[None, :] for v in _hermite_arrays(k))
    g = np.gcd(a1 * b2, a2 * b1)
    g = np.gcd(g, c1 * b2 - c2 * b1)
    g = np.gcd(g, gcd(h, k))
    return g == 1


def brute_force_b(d: int) -> int:
    """|B_d| by enumerating unordered sublattice pairs that generate Z^2."""
    if d < 2:
        raise ValueError(f"brute_force_b needs d >= 2, got {d}")
    total = 0
    for h in range(1, d // 2 + 1):
        grid = _primitive_grid(h, d - h)
        if h != d - h:
            total += int(grid.sum())
        else:
            # unordered: off-diagonal pairs appear twice, the diagonal once
            diag = int(np.trace(grid))
            total += (int(grid.sum()) - diag) // 2 + diag
    return total


def iter_primitive_pairs(d: int) -> Iterator[LatticePair]:
    """Primitive unordered pairs of total index d, one lattice_sum call per pair.

    Quadratic in the sublattice counts; meant for small d.
    """
    for h in range(1, d // 2 + 1):
        first = enumerate_sublattices(h)
        second = enumerate_sublattices(d - h)
        for i, m1 in enumerate(first):
            for m2 in second[i:] if h == d - h else second:
                pair = LatticePair.of(m1, m2)
                if pair.is_primitive():
                    yield pair


def slope_of(delta0: int, delta1: int) -> Fraction:
    """10 (D0 + D1) / (D0 + 2 D1), from 10 lambda = delta_0 + 2 delta_1 on M_2-bar."""
    denom = delta0 + 2 * delta1
    if denom == 0:
        raise ZeroDivisionError("delta0 + 2*delta1 vanishes; slope undefined")
    return Fraction(10 * (delta0 + delta1), denom)


def census(max_d: int, b_values: Sequence[int] | None = None) -> list[CoverCensusRow]:
    """Rows for d = 2..max_d. ``b_values[d]`` overrides the recursion-solved B_d."""
    if max_d < 2:
        raise ValueError(f"census needs max_d >= 2, got {max_d}")
    table = SieveTable.build(max_d)
    b = list(b_values) if b_values is not None else solve_b_recursion(max_d, table)
    rows = []
    for d in range(2, max_d + 1):
        a = count_a(d)
        delta0, delta1 = 4 * a, 4 * b[d]
        rows.append(
            CoverCensusRow(
                d=d,
                m_count=count_marked_closed_form(d),
                a_count=a,
                b_count=b[d],
                c_count=table.sigma1[d],
                delta0=delta0,
                delta1=delta1,
                slope=slope_of(delta0, delta1),
            )
        )
    return rows


def f_from_a(d: int) -> int:
    """2|A_d| + [d = 1] - 3[d = 2]."""
    return 2 * count_a(d) + (d == 1) - 3 * (d == 2)


def verify_genus2_slope(max_d: int, b_values: Sequence[int] | None = None) -> Report:
    """Check (5d-6) D0 = 12 D1, slope = 5 + 6/d, and multiplicativity of 2|A_d| + corrections."""
    if max_d < 2:
        raise ValueError(f"max_d must be >= 2, got {max_d}")
    rows = census(max_d, b_values)
    report = Report()

    bad = next((r for r in rows if (5 * r.d - 6) * r.delta0 != 12 * r.delta1), None)
    report.add(
        Check(
            "boundary relation (5d-6)*delta0 == 12*delta1",
            bad is None,
            None if bad is None else {"d": bad.d, "lhs": (5 * bad.d - 6) * bad.delta0, "rhs": 12 * bad.delta1},
        )
    )

    bad = next((r for r in rows if r.slope != 5 + Fraction(6, r.d)), None)
    report.add(
        Check(
            "slope == 5 + 6/d",
            bad is None,
            None if bad is None else {"d": bad.d, "lhs": bad.slope, "rhs": 5 + Fraction(6, bad.d)},
        )
    )

    pair = multiplicativity_counterexample(f_from_a, max_d)
    detail = None
    if pair is not None:
        x, y = pair
        detail = {"d": x * y, "a": x, "b": y, "lhs": f_from_a(x * y), "rhs": f_from_a(x) * f_from_a(y)}
    report.add(Check("F(d) = 2|A_d| + [d=1] - 3[d=2] is multiplicative", pair is None, detail))

    bad_d = next((d for d in range(1, max_d + 1) if f_from_a(d) != BIG_F.rule_product(d)), None)
    report.add(
        Check(
            "F(d) == prod over p^n || d of (p^2-1) p^(2n-2)",
            bad_d is None,
            None if bad_d is None else {"d": bad_d, "lhs": f_from_a(bad_d), "rhs": BIG_F.rule_product(bad_d)},
        )
    )
    return report
