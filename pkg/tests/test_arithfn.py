from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hurslope.arithfn import (
    BIG_F,
    IOTA,
    PHI,
    SIGMA1,
    SIGMA3,
    UNIT,
    ZERO,
    ArithmeticFunction,
    SieveTable,
    big_f,
    check_multiplicative,
    convolution,
    dirichlet_convolve,
    divisors,
    factorize,
    multiplicativity_counterexample,
    pointwise_product,
    ramanujan_rhs,
    sigma,
    sigma1_additive_convolution,
    sigma_half,
    totient,
)

N = 300


@pytest.mark.parametrize("k, d, expected", [(1, 1, 1), (1, 6, 12), (3, 2, 9), (0, 12, 6), (3, 4, 73)])
def test_sigma_examples(k, d, expected):
    assert sigma(k, d) == oracles.sigma(k, d) == expected


@pytest.mark.parametrize("d, expected", [(3, 0), (2, 1), (12, 12), (1, 0)])
def test_sigma_half(d, expected):
    assert sigma_half(d) == expected


@pytest.mark.parametrize("d, expected", [(1, 1), (2, 3), (12, 96), (9, 72)])
def test_big_f(d, expected):
    assert big_f(d) == expected


def test_factorize_reconstructs():
    for n in range(1, 3000):
        fac = factorize(n)
        assert prod(p**e for p, e in fac) == n
        primes = [p for p, _ in fac]
        assert primes == sorted(set(primes))
        assert all(e >= 1 and len(oracles.divisors(p)) == 2 for p, e in fac)


def test_factorize_beyond_sieve_cap():
    n = (1 << 24) + 3 * 17 * 17
    assert prod(p**e for p, e in factorize(n)) == n
    assert factorize(9 * 10007 * 1000003) == ((3, 2), (10007, 1), (1000003, 1))


def test_divisors():
    for n in range(1, 400):
        assert divisors(n) == oracles.divisors(n)


def test_sieve_matches_direct():
    t = SieveTable.build(N)
    for d in range(1, N + 1):
        assert t.sigma1[d] == oracles.sigma(1, d)
        assert t.sigma3[d] == oracles.sigma(3, d)
        assert t.phi[d] == oracles.phi(d) == totient(d)


def test_sieve_rejects_nonpositive():
    with pytest.raises(ValueError):
        SieveTable.build(0)


def test_convolution_with_zero():
    assert all(dirichlet_convolve(SIGMA1, ZERO, d) == 0 for d in range(1, 50))


def test_convolution_examples():
    # brute-force divisor sums against the identities' predicted values
    f = lambda n: big_f(n)  # noqa: E731
    assert sum(f(e) * oracles.sigma(1, 6 // e) for e in oracles.divisors(6)) == 72
    assert dirichlet_convolve(BIG_F, SIGMA1, 6) == 72
    iota_f = pointwise_product(IOTA, BIG_F)
    assert sum(e * f(e) * oracles.sigma(1, 4 // e) for e in oracles.divisors(4)) == 73
    assert dirichlet_convolve(iota_f, SIGMA1, 4) == 73


def test_pointwise_product_examples():
    assert pointwise_product(IOTA, SIGMA1)(1) == 1
    iota_f = pointwise_product(IOTA, BIG_F)
    assert iota_f(2) == 2 * 3
    assert iota_f(9) == 9 * (9 - 1) * 9
    assert iota_f(9) == 648


def test_pointwise_product_flags():
    assert pointwise_product(IOTA, BIG_F).claimed_multiplicative
    plus_one = ArithmeticFunction(lambda d: d + 1)
    assert not pointwise_product(IOTA, plus_one).claimed_multiplicative


def test_unit_is_identity_for_convolution():
    for d in range(1, 60):
        assert dirichlet_convolve(UNIT, SIGMA3, d) == sigma(3, d)


def test_check_multiplicative_examples():
    assert check_multiplicative(SIGMA1, 300)
    assert check_multiplicative(BIG_F, 300)
    plus_one = lambda d: d + 1  # noqa: E731
    assert not check_multiplicative(plus_one, 10)
    # first failure is at a = 1 (f(1) != 1), then 2*3 would also fail
    assert multiplicativity_counterexample(plus_one, 10) == (1, 1)
    shifted = lambda d: 1 if d == 1 else d + 1  # noqa: E731
    assert multiplicativity_counterexample(shifted, 10) == (2, 3)


@pytest.mark.parametrize("f", [BIG_F, SIGMA1, SIGMA3, PHI, IOTA, UNIT])
def test_standard_functions_multiplicative(f):
    assert check_multiplicative(f, N)


@pytest.mark.parametrize("f", [BIG_F, SIGMA1, SIGMA3, PHI, IOTA])
def test_prime_power_rule_agrees_with_evaluator(f):
    for d in range(1, N + 1):
        assert f(d) == f.rule_product(d)


def test_products_and_convolutions_stay_multiplicative():
    for f, g in [(BIG_F, SIGMA1), (IOTA, BIG_F), (PHI, SIGMA3)]:
        assert check_multiplicative(convolution(f, g), 200)
        assert check_multiplicative(pointwise_product(f, g), 200)
        assert convolution(f, g).claimed_multiplicative


@pytest.mark.parametrize("d, expected", [(1, 0), (2, 1), (4, 17)])
def test_ramanujan_rhs(d, expected):
    assert oracles.additive_sigma_sum(d) == expected
    assert ramanujan_rhs(d) == expected


def test_ramanujan_identity_sweep():
    t = SieveTable.build(N)
    for d in range(1, N + 1):
        lhs = sigma1_additive_convolution(d, t)
        assert lhs == ramanujan_rhs(d)
        assert isinstance(ramanujan_rhs(d), Fraction)
    for d in (1, 7, 30):
        assert sigma1_additive_convolution(d) == oracles.additive_sigma_sum(d)


def test_dirichlet_identities_sweep():
    iota_f = pointwise_product(IOTA, BIG_F)
    for d in range(1, N + 1):
        assert dirichlet_convolve(iota_f, SIGMA1, d) == sigma(3, d)
        assert dirichlet_convolve(BIG_F, SIGMA1, d) == d * sigma(1, d)


_fns = st.sampled_from([BIG_F, SIGMA1, SIGMA3, PHI, IOTA, UNIT])


@settings(max_examples=60, deadline=None)
@given(f=_fns, g=_fns, h=_fns, d=st.integers(1, 200))
def test_convolution_commutative_associative(f, g, h, d):
    assert dirichlet_convolve(f, g, d) == dirichlet_convolve(g, f, d)
    assert dirichlet_convolve(convolution(f, g), h, d) == dirichlet_convolve(f, convolution(g, h), d)


@settings(deadline=None)  # first call grows the factor table
@given(st.integers(1, 10**6))
def test_values_exact_at_large_d(d):
    # sigma_3 grows as d^3; no precision is lost with Python ints
    assert sigma(3, d) == SIGMA3.rule_product(d)


def test_nonpositive_arguments_rejected():
    with pytest.raises(ValueError):
        sigma(1, 0)
    with pytest.raises(ValueError):
        BIG_F(0)
    with pytest.raises(ValueError):
        factorize(-3)
