import pytest

from heckesym.errors import DegreeOverflow
from heckesym.koszul import (check_d_squared, check_euler, distinguished_index, homology_dims,
                             koszul_differential, koszul_term, window)


def test_window():
    assert window(2, 3) == [(2, 0), (3, 1), (4, 2)]
    assert window(-1, 2) == [(0, 1), (1, 2)]


def test_terms(std2, sup11):
    assert koszul_term(std2, 0, 0).dim == 1
    assert koszul_term(std2, 2, 0).dim == 1
    assert koszul_term(sup11, 1, 1).dim == 4
    assert koszul_term(std2, -1, 0).dim == 0


def test_negative_differential_is_zero(std2):
    assert koszul_differential(std2, -1, 0).is_zero()


def test_standard_d1_all_zero(std1):
    rep = homology_dims(std1, 1, 3)
    assert [row[2] for row in rep.rows] == [1, 0, 0]
    assert all(row[3] == 0 for row in rep.rows)


def test_d_squared(sup11, sup21):
    for k in range(3):
        assert check_d_squared(sup11, k, k)
    assert check_d_squared(sup21, 1, 0)


def test_standard_concentration(std2):
    rep = homology_dims(std2, 2, 3)
    assert rep.concentrated_at == [2, 0]
    assert rep.homological_determinant_dim == 1
    for a in (1, 3, 0):
        assert homology_dims(std2, a, 3).homological_determinant_dim == 0


def test_super_concentration(sup11):
    rep = homology_dims(sup11, 0, 4)
    assert [row[4] for row in rep.rows] == [0, 1, 0, 0]
    assert rep.concentrated_at == [1, 1]
    for a in (-1, 1):
        assert homology_dims(sup11, a, 4).homological_determinant_dim == 0


def test_super21_concentration(sup21):
    assert distinguished_index(sup21) == 1
    rep = homology_dims(sup21, 1, 3)
    assert rep.concentrated_at == [2, 1]


def test_euler(sup11, std2):
    for h, a, w in ((sup11, 0, 4), (std2, 0, 3), (std2, 1, 3)):
        assert check_euler(homology_dims(h, a, w))


def test_report_json(sup11):
    data = homology_dims(sup11, 0, 3).to_dict()
    assert data["window"] == [[0, 0], [1, 1], [2, 2]]
    assert data["terms"][1] == {"k": 1, "l": 1, "dim": 4, "rank_d": 2, "homology": 1}


def test_budget(sup21):
    with pytest.raises(DegreeOverflow):
        homology_dims(sup21, 0, 4)
