from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckesym.combinatorics import Partition, partitions
from heckesym.comodules import (birank, decompose_tensor_power, ext_dim, ext_dims,
                                poincare_rational, simple_dim, support_matches_gamma, sym_dim,
                                unit_image_dim)
from heckesym.errors import DegreeOverflow, RecurrenceUnstable

P = Partition


def test_standard_dims(std2, std3):
    assert ext_dims(std2, 5) == [1, 2, 1, 0, 0, 0]
    assert [sym_dim(std2, n) for n in range(5)] == [1, 2, 3, 4, 5]
    assert ext_dims(std3, 4) == [comb(3, n) for n in range(5)]


def test_super_dims(sup11, sup21):
    assert ext_dims(sup11, 5) == [1, 2, 2, 2, 2, 2]
    assert [sym_dim(sup11, n) for n in range(6)] == [1, 2, 2, 2, 2, 2]
    # (2|1): Lambda is symmetric on the odd line, so dims grow to 4
    assert ext_dims(sup21, 4) == [1, 3, 4, 4, 4]
    assert [sym_dim(sup21, n) for n in range(5)] == [1, 3, 5, 7, 9]


def test_degree_one_is_d(std3, sup21):
    for h in (std3, sup21):
        assert ext_dim(h, 1) == sym_dim(h, 1) == h.d


def test_budget(std3):
    with pytest.raises(DegreeOverflow):
        ext_dim(std3, 5, budget=100)


def test_poincare_examples():
    prof = poincare_rational([1, 2, 1, 0, 0, 0])
    assert prof.birank == (2, 0) and prof.numerator == [1, 2, 1] and prof.denominator == [1]
    prof = poincare_rational([1, 2, 2, 2, 2, 2])
    assert prof.birank == (1, 1)
    assert (prof.numerator_str, prof.denominator_str) == ("1+t", "1-t")
    assert poincare_rational([1, 0, 0, 0]).birank == (0, 0)


def test_poincare_needs_guard():
    with pytest.raises(RecurrenceUnstable):
        poincare_rational([1, 2, 2])
    with pytest.raises(ValueError):
        poincare_rational([2, 1])


def _series(r, s, terms):
    """Coefficients of (1 + t)^r / (1 - t)^s."""
    def inv(m):  # coefficient of t^m in (1 - t)^-s
        return comb(s - 1 + m, m) if s else int(m == 0)
    return [sum(comb(r, j) * inv(k - j) for j in range(min(k, r) + 1)) for k in range(terms)]


@given(st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=30, deadline=None)
def test_poincare_recovers_hook_series(r, s):
    dims = _series(r, s, r + s + 4)
    prof = poincare_rational(dims)
    assert prof.birank == (r, s)
    assert prof.series(len(dims)) == dims


def test_birank(std2, std3, sup11, sup21, conj11):
    assert birank(std2, n_max=6) == (2, 0)
    assert birank(std3, n_max=5) == (3, 0)
    assert birank(sup11, n_max=6) == (1, 1)
    assert birank(sup21, n_max=5) == (2, 1)
    assert birank(conj11) == (1, 1)


def test_simple_dims(std2, sup11):
    assert simple_dim(std2, P((1,))) == 2
    assert simple_dim(std2, P((1, 1))) == 1
    assert simple_dim(sup11, P((2,))) == 2
    assert simple_dim(sup11, P((2, 1))) == 2
    assert simple_dim(sup11, P((2, 2))) == 0
    assert simple_dim(std2, P(())) == 1


@pytest.mark.parametrize("name", ["std2", "sup11"])
def test_determinant_matches_idempotent_image(name, request):
    h = request.getfixturevalue(name)
    for n in range(1, 5):
        for lam in partitions(n):
            assert simple_dim(h, lam) == unit_image_dim(h, lam)


def test_decompose(std2, sup11):
    dec = decompose_tensor_power(std2, 3)
    assert dec.parts[P((3,))] == (1, 4)
    assert dec.parts[P((2, 1))] == (2, 2)
    assert dec.parts[P((1, 1, 1))] == (0, 0)
    assert dec.total == 8
    assert decompose_tensor_power(sup11, 3).total == 8


def test_support_is_hook(std2, sup11):
    for n in range(1, 6):
        assert support_matches_gamma(std2, n)
        assert support_matches_gamma(sup11, n)
