from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckesym.combinatorics import (Partition, dimension, gamma_set, hook_length, hook_product,
                                    in_gamma, k_coeff, omega_set, p_coeff, partitions,
                                    standard_tableaux, tableau_data)
from heckesym.scalars import GENERIC, format_scalar

P = Partition


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions(3) == [P((3,)), P((2, 1)), P((1, 1, 1))]


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    assert P.parse("1,2") == P((2, 1))
    assert P((3, 1)).conjugate == P((2, 1, 1))


@given(st.integers(0, 7))
def test_hook_length_formula_counts_tableaux(n):
    for lam in partitions(n):
        assert len(standard_tableaux(lam)) == dimension(lam)
        assert dimension(lam) * hook_product(lam) == factorial(n)


def test_sum_of_squares():
    for n in range(1, 7):
        assert sum(dimension(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_hooks_and_contents():
    lam = P((3, 1))
    assert [hook_length(lam, x) for x in lam.nodes()] == [4, 2, 1, 1]
    data = tableau_data(lam)
    assert data.content_sum == 2 and data.n_lambda == 1


def test_k_coeff():
    q = GENERIC.q
    assert k_coeff(P(())) == 1
    assert k_coeff(P((2,))) == 1 / GENERIC.q_int(2)
    assert k_coeff(P((1, 1))) == q / GENERIC.q_int(2)
    assert k_coeff(P((1, 1)), variant="content") == q ** -1 / GENERIC.q_int(2)


def test_p_coeff_standard():
    # r = 2, s = 0: no rectangle, p_(1) = q^2 / [2]_q
    assert p_coeff(P((1,)), 2, 0) == GENERIC.q ** 2 / GENERIC.q_int(2)
    assert p_coeff(P(()), 2, 0) == 1


def test_p_coeff_vanishing():
    # a node of content s - r outside the rectangle kills p
    assert not p_coeff(P((1, 1, 1)), 2, 0)
    # lambda must contain the r x s rectangle
    assert not p_coeff(P((1,)), 2, 1)
    assert p_coeff(P((1, 1)), 2, 1)
    assert not p_coeff(P(()), 1, 1)


def test_gamma_sets():
    assert gamma_set(3, 2, 0) == [P((3,)), P((2, 1))]
    assert gamma_set(4, 1, 1) == [P((4,)), P((3, 1)), P((2, 1, 1)), P((1, 1, 1, 1))]
    # the literal reading drops (2) for (1|1)
    assert not in_gamma(P((2,)), 1, 1, "literal")
    assert in_gamma(P((2,)), 1, 1, "hook")


def test_omega_sets():
    assert omega_set(2, 1, 1) == [P((2,)), P((1, 1))]
    assert omega_set(1, 2, 1) == []
    assert omega_set(2, 2, 1) == [P((1, 1))]
    assert omega_set(2, 2, 0) == [P((2,)), P((1, 1))]


def test_p_format():
    assert format_scalar(p_coeff(P((2,)), 1, 0)) == "(q^2)/(1 + q)"
