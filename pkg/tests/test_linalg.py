from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from heckesym.errors import IndexOutOfRange, NotInvertible
from heckesym.linalg import (Operator, composite, determinant, exact_inverse, exact_kernel,
                             exact_rank, identity, kron, lift, multi_index, tensor_power)

entries = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_size=5, square=False):
    rows = draw(st.integers(1, max_size))
    cols = rows if square else draw(st.integers(1, max_size))
    # sparse-ish: many zeros so the block decomposition gets exercised
    cell = st.one_of(st.just(0), st.just(0), entries)
    return Operator([[draw(cell) for _ in range(cols)] for _ in range(rows)])


def _sym(a):
    return sympy.Matrix(a.entries)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_matches_sympy(a):
    assert exact_rank(a) == _sym(a).rank()


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_kernel(a):
    ker = exact_kernel(a)
    assert len(ker) == a.cols - exact_rank(a)
    for vec in ker:
        assert all(x == 0 for x in a.apply(vec))


@given(matrices(square=True))
@settings(max_examples=100, deadline=None)
def test_determinant_and_inverse(a):
    det = determinant(a)
    assert det == _sym(a).det()
    if det:
        inv = exact_inverse(a)
        assert inv @ a == Operator.identity(a.rows)
    else:
        with pytest.raises(NotInvertible):
            exact_inverse(a)


@given(st.integers(1, 4), st.integers(0, 4), st.data())
def test_multi_index_roundtrip(d, n, data):
    c = data.draw(st.integers(0, d ** n - 1))
    assert composite(multi_index(c, d, n), d) == c


def test_big_endian_convention():
    assert composite((1, 0), 2) == 2
    assert multi_index(5, 2, 3) == (1, 0, 1)


@given(matrices(max_size=3, square=True), matrices(max_size=3, square=True),
       matrices(max_size=3, square=True), matrices(max_size=3, square=True))
@settings(max_examples=50, deadline=None)
def test_kron_mixed_product(a, b, c, e):
    if a.rows != c.rows or b.rows != e.rows:
        return
    assert kron(a, b) @ kron(c, e) == kron(a @ c, b @ e)


def test_kron_action_on_basis():
    a = Operator([[1, 2], [3, 4]])
    b = Operator([[0, 1], [1, 0]])
    k = kron(a, b)
    # column (i, j) is A x_i (x) B x_j
    assert k.column(composite((1, 0), 2)) == [0, 2, 0, 4]


def test_lift_and_tensor_power():
    r = Operator([[Fraction(k)] * 4 for k in range(4)], shape=(2, 2))
    assert lift(r, 2, 1) == r
    assert lift(r, 3, 2) == kron(identity(2, 1), r)
    with pytest.raises(IndexOutOfRange):
        lift(r, 3, 3)
    c = Operator([[2, 0], [0, 3]], shape=(2, 1))
    assert tensor_power(c, 2).trace() == 25
    assert tensor_power(c, 0).entries == [[1]]
