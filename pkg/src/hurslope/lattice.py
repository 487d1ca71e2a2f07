"""Finite-index sublattices of Z^2 and the marked set M_d.

A sublattice of index d is stored in Hermite normal form: the columns of
``[[a, c], [0, b]]``, i.e. the vectors (a, 0) and (c, b), with ab = d and
0 <= c < a.

Residue convention for Z^2 / L: the class of (x, y) is represented by the
unique (x', y') with 0 <= x' < a, 0 <= y' < b obtained by writing
y = q*b + y', subtracting q*(c, b), then reducing x - q*c modulo a.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

import numpy as np

from .arithfn import factorize, totient


class DomainError(ValueError):
    """Input outside the domain of a lattice operation."""


class HermiteMatrix(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def index(self) -> int:
        return self.a * self.b

    def contains(self, x: int, y: int) -> bool:
        if y % self.b:
            return False
        return (x - (y // self.b) * self.c) % self.a == 0


class MarkedSublattice(NamedTuple):
    lattice: HermiteMatrix
    eta: tuple[int, int]


def enumerate_sublattices(d: int) -> list[HermiteMatrix]:
    """Every index-d sublattice of Z^2, sorted by (a, c)."""
    if d < 1:
        raise ValueError(f"index must be positive, got {d}")
    return [HermiteMatrix(a, d // a, c) for a in range(1, d + 1) if d % a == 0 for c in range(a)]


def is_cyclic_quotient(m: HermiteMatrix) -> bool:
    return gcd(m.a, m.b, m.c) == 1


def reduce_residue(m: HermiteMatrix, x: int, y: int) -> tuple[int, int]:
    q, y = divmod(y, m.b)
    return (x - q * m.c) % m.a, y


def smith_invariants(m: HermiteMatrix) -> tuple[int, int]:
    """Invariant factors (d1, d2), d1 | d2, of Z^2 / L, by explicit 2x2 Smith reduction."""
    mat = [[m.a, m.c], [0, m.b]]
    while True:
        # move the smallest nonzero entry to (0, 0)
        _, i, j = min((abs(mat[i][j]), i, j) for i in range(2) for j in range(2) if mat[i][j])
        mat[0], mat[i] = mat[i], mat[0]
        for row in mat:
            row[0], row[j] = row[j], row[0]
        p = mat[0][0]
        q = mat[1][0] // p
        mat[1] = [mat[1][0] - q * p, mat[1][1] - q * mat[0][1]]
        q = mat[0][1] // p
        for row in mat:
            row[1] -= q * row[0]
        if mat[1][0] or mat[0][1]:
            continue
        if mat[1][1] % p:
            # add row 1 into row 0 and go again
            mat[0][1] = mat[1][1]
            continue
        return abs(p), abs(mat[1][1])


def element_order(m: HermiteMatrix, eta: tuple[int, int]) -> int:
    """Order of eta in Z^2 / L, found by stripping primes off the group order."""
    x, y = eta
    order = m.index
    for p, _ in factorize(order) if order > 1 else ():
        while order % p == 0 and m.contains((order // p) * x, (order // p) * y):
            order //= p
    return order


def _generator_mask(m: HermiteMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = m.index
    xs, ys = np.meshgrid(np.arange(m.a, dtype=np.int64), np.arange(m.b, dtype=np.int64), indexing="ij")
    xs, ys = xs.ravel(), ys.ravel()
    mask = np.ones(xs.shape, dtype=bool)
    for p, _ in factorize(d):
        k = d // p
        ky = k * ys
        in_lattice = (ky % m.b == 0) & ((k * xs - (ky // m.b) * m.c) % m.a == 0)
        mask &= ~in_lattice
    return xs, ys, mask


def quotient_generators(m: HermiteMatrix) -> list[tuple[int, int]]:
    """All elements of exact order a*b in a cyclic quotient Z^2 / L, as residue pairs."""
    if m.index < 2:
        raise DomainError(f"{m} has trivial quotient")
    if not is_cyclic_quotient(m):
        raise DomainError(f"{m} does not have a cyclic quotient")
    xs, ys, mask = _generator_mask(m)
    return list(zip(xs[mask].tolist(), ys[mask].tolist()))


def enumerate_marked(d: int) -> list[MarkedSublattice]:
    """All pairs (L, eta) with Z^2/L cyclic of order d and eta a generator.

    Empty for d = 1, where the quotient is trivial.
    """
    if d < 1:
        raise ValueError(f"index must be positive, got {d}")
    if d == 1:
        return []
    return [
        MarkedSublattice(m, eta)
        for m in enumerate_sublattices(d)
        if is_cyclic_quotient(m)
        for eta in quotient_generators(m)
    ]


def count_marked(d: int) -> int:
    """|M_d| counted lattice by lattice without building the pairs."""
    if d < 2:
        return 0
    total = 0
    for m in enumerate_sublattices(d):
        if is_cyclic_quotient(m):
            total += int(_generator_mask(m)[2].sum())
    return total


def count_marked_closed_form(d: int) -> int:
    """phi(d) * prod over p^n || d of (p^n + p^(n-1))."""
    if d < 2:
        raise DomainError(f"closed form for |M_d| needs d >= 2, got {d}")
    value = totient(d)
    for p, n in factorize(d):
        value *= p**n + p ** (n - 1)
    return value


def lattice_sum(m1: HermiteMatrix, m2: HermiteMatrix) -> HermiteMatrix:
    """Hermite form of L1 + L2, by integer row reduction of the stacked generators.

    The four generators (x, y) are the rows of a 4x2 matrix. Euclid on the y
    column leaves a single row (c, b) with b = gcd of all y; the remaining
    rows lie on the x axis and their x entries reduce to a.
    """
    rows = [[m1.a, 0], [m1.c, m1.b], [m2.a, 0], [m2.c, m2.b]]
    while sum(1 for r in rows if r[1]) > 1:
        rows.sort(key=lambda r: (r[1] == 0, abs(r[1])))
        top = rows[0]
        for r in rows[1:]:
            if r[1]:
                q = r[1] // top[1]
                r[0] -= q * top[0]
                r[1] -= q * top[1]
    rows.sort(key=lambda r: r[1] == 0)
    (c, b), rest = rows[0], rows[1:]
    if b < 0:
        c, b = -c, -b
    a = 0
    for x, _ in rest:
        a = gcd(a, x)
    return HermiteMatrix(a, b, c % a)
