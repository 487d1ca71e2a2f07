"""Verification sweeps that cut across modules, with optional process parallelism."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, TypeVar

from .arithfn import (
    BIG_F,
    IOTA,
    SIGMA1,
    SieveTable,
    dirichlet_convolve,
    multiplicativity_counterexample,
    pointwise_product,
    ramanujan_rhs,
    sigma,
    sigma1_additive_convolution,
    factorize,
    totient,
)
from .covercount import brute_force_b, f_from_a, solve_b_recursion
from .lattice import count_marked_closed_form, enumerate_marked, enumerate_sublattices
from .report import Check, Report

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """``list(map(fn, items))``, spread over processes when workers > 1; order is kept."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (8 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _first_mismatch(ds: Iterable[int], lhs: list, rhs: list, name: str) -> Check:
    for d, x, y in zip(ds, lhs, rhs):
        if x != y:
            return Check(name, False, {"d": d, "lhs": x, "rhs": y})
    return Check(name, True)


def _marked_len(d: int) -> int:
    return len(enumerate_marked(d))


def verify_identities(max_d: int, workers: int = 1) -> Report:
    """Sieve consistency, the Ramanujan convolution identity, both Dirichlet identities,
    and the multiplicative structure of F, for 1 <= d <= max_d."""
    if max_d < 1:
        raise ValueError(f"max_d must be positive, got {max_d}")
    ds = range(1, max_d + 1)
    table = SieveTable.build(max_d)
    report = Report()

    for name, col, direct in (
        ("sieve sigma_1 == divisor sum", table.sigma1, lambda d: sigma(1, d)),
        ("sieve sigma_3 == divisor sum", table.sigma3, lambda d: sigma(3, d)),
        ("sieve phi == totient", table.phi, totient),
    ):
        report.add(_first_mismatch(ds, [col[d] for d in ds], [direct(d) for d in ds], name))

    lhs = parallel_map(partial(sigma1_additive_convolution, table=table), ds, workers)
    report.add(_first_mismatch(ds, lhs, [ramanujan_rhs(d) for d in ds],
                               "sum_h sigma_1(h) sigma_1(d-h) == (1/12 - d/2) sigma_1(d) + (5/12) sigma_3(d)"))

    iota_f = pointwise_product(IOTA, BIG_F)
    report.add(_first_mismatch(ds, [dirichlet_convolve(iota_f, SIGMA1, d) for d in ds],
                               [table.sigma3[d] for d in ds], "((iota . F) * sigma_1)(d) == sigma_3(d)"))
    report.add(_first_mismatch(ds, [dirichlet_convolve(BIG_F, SIGMA1, d) for d in ds],
                               [d * table.sigma1[d] for d in ds], "(F * sigma_1)(d) == d sigma_1(d)"))

    pair = multiplicativity_counterexample(f_from_a, max_d)
    report.add(Check("F(d) = 2|A_d| + [d=1] - 3[d=2] is multiplicative", pair is None,
                     None if pair is None else {"d": pair[0] * pair[1], "a": pair[0], "b": pair[1]}))
    prime_powers = [d for d in ds if d > 1 and len(factorize(d)) == 1]
    report.add(_first_mismatch(
        prime_powers,
        [f_from_a(q) for q in prime_powers],
        [(p * p - 1) * p ** (2 * n - 2) for p, n in (factorize(q)[0] for q in prime_powers)],
        "F(p^n) == (p^2-1) p^(2n-2)",
    ))
    return report


def verify_oracle(max_d: int, oracle_max_d: int, workers: int = 1) -> Report:
    """Brute-force enumerations against closed forms and the recursion."""
    if max_d < 2 or oracle_max_d < 2:
        raise ValueError("verify_oracle needs max_d, oracle_max_d >= 2")
    report = Report()

    ds = range(2, oracle_max_d + 1)
    recursion = solve_b_recursion(oracle_max_d)
    brute = parallel_map(brute_force_b, ds, workers)
    report.add(_first_mismatch(ds, brute, [recursion[d] for d in ds],
                               "brute-force |B_d| == recursion |B_d|"))

    ds = range(2, max_d + 1)
    report.add(_first_mismatch(ds, parallel_map(_marked_len, ds, workers),
                               [count_marked_closed_form(d) for d in ds],
                               "|enumerate_marked(d)| == phi(d) prod (p^n + p^(n-1))"))

    ds = range(1, max_d + 1)
    report.add(_first_mismatch(ds, [len(enumerate_sublattices(d)) for d in ds],
                               [sigma(1, d) for d in ds], "|enumerate_sublattices(d)| == sigma_1(d)"))
    return report
