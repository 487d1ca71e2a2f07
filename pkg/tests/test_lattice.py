import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hurslope.lattice import (
    DomainError,
    HermiteMatrix,
    count_marked,
    count_marked_closed_form,
    element_order,
    enumerate_marked,
    enumerate_sublattices,
    is_cyclic_quotient,
    lattice_sum,
    quotient_generators,
    reduce_residue,
    smith_invariants,
)


@pytest.mark.parametrize("d, length", [(1, 1), (4, 7), (6, 12)])
def test_enumerate_sublattices_examples(d, length):
    ms = enumerate_sublattices(d)
    assert len(ms) == length == oracles.sigma(1, d)
    if d == 1:
        assert ms == [HermiteMatrix(1, 1, 0)]


def test_enumeration_canonical():
    for d in range(1, 120):
        ms = enumerate_sublattices(d)
        assert len(set(ms)) == len(ms)
        assert ms == sorted(ms, key=lambda m: (m.a, m.c))
        assert all(m.index == d and 0 <= m.c < m.a for m in ms)
        assert [tuple(m) for m in ms] == sorted(oracles.hermite_triples(d))


@pytest.mark.parametrize(
    "m, expected",
    [(HermiteMatrix(1, 7, 0), True), (HermiteMatrix(2, 2, 0), False), (HermiteMatrix(2, 2, 1), True)],
)
def test_is_cyclic_quotient(m, expected):
    assert is_cyclic_quotient(m) is expected


def test_smith_reduction_agrees_with_gcd_test():
    for d in range(1, 150):
        for m in enumerate_sublattices(d):
            d1, d2 = smith_invariants(m)
            assert d1 * d2 == d and d2 % d1 == 0
            assert (d1 == 1) == is_cyclic_quotient(m)


@pytest.mark.parametrize("m, count", [(HermiteMatrix(1, 2, 0), 1), (HermiteMatrix(1, 5, 0), 4)])
def test_quotient_generators_examples(m, count):
    assert len(quotient_generators(m)) == count


@pytest.mark.parametrize("m", [HermiteMatrix(2, 2, 0), HermiteMatrix(1, 1, 0), HermiteMatrix(3, 3, 0)])
def test_quotient_generators_domain_error(m):
    with pytest.raises(DomainError):
        quotient_generators(m)


def test_generators_have_exact_order():
    for d in range(2, 60):
        for m in enumerate_sublattices(d):
            if not is_cyclic_quotient(m):
                continue
            gens = quotient_generators(m)
            assert len(gens) == oracles.phi(d)
            assert len(set(gens)) == len(gens)
            for x, y in gens:
                assert reduce_residue(m, x, y) == (x, y)
                assert m.contains(d * x, d * y)
                assert not any(m.contains(k * x, k * y) for k in range(1, d))
                assert element_order(m, (x, y)) == d


@given(a=st.integers(1, 12), b=st.integers(1, 12), data=st.data())
def test_reduce_residue_is_canonical(a, b, data):
    c = data.draw(st.integers(0, a - 1))
    m = HermiteMatrix(a, b, c)
    x, y = data.draw(st.integers(-500, 500)), data.draw(st.integers(-500, 500))
    rx, ry = reduce_residue(m, x, y)
    assert 0 <= rx < a and 0 <= ry < b
    assert m.contains(x - rx, y - ry)
    # translating by a lattice vector does not change the residue
    i, j = data.draw(st.integers(-5, 5)), data.draw(st.integers(-5, 5))
    assert reduce_residue(m, x + i * a + j * c, y + j * b) == (rx, ry)


@pytest.mark.parametrize("d, length", [(1, 0), (2, 3), (12, 96)])
def test_enumerate_marked_examples(d, length):
    assert len(enumerate_marked(d)) == length


def test_enumerate_marked_matches_naive_oracle():
    for d in range(1, 25):
        ours = sorted((m.lattice.a, m.lattice.b, m.lattice.c, *m.eta) for m in enumerate_marked(d))
        assert ours == sorted(oracles.marked(d))


@pytest.mark.parametrize("d, expected", [(2, 3), (9, 72), (6, 24)])
def test_count_marked_closed_form_examples(d, expected):
    assert count_marked_closed_form(d) == expected


def test_closed_form_rejects_one():
    with pytest.raises(DomainError):
        count_marked_closed_form(1)


def test_marked_count_closed_form_sweep():
    for d in range(2, 150):
        assert count_marked(d) == len(enumerate_marked(d)) == count_marked_closed_form(d)


def test_lattice_sum_against_minor_gcd():
    for h in range(1, 10):
        for k in range(1, 10):
            for m1 in enumerate_sublattices(h):
                for m2 in enumerate_sublattices(k):
                    s = lattice_sum(m1, m2)
                    assert 0 <= s.c < s.a
                    assert s.index == oracles.span_index((m1.a, 0), (m1.c, m1.b), (m2.a, 0), (m2.c, m2.b))
                    for vx, vy in [(m1.a, 0), (m1.c, m1.b), (m2.a, 0), (m2.c, m2.b)]:
                        assert s.contains(vx, vy)
                    assert lattice_sum(m2, m1) == s


def test_lattice_sum_with_itself():
    for m in enumerate_sublattices(12):
        assert lattice_sum(m, m) == m
