import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckesym.combinatorics import Partition, k_coeff, partitions
from heckesym.hecke import (HeckeElement, antisymmetrizer, coset_representatives, hecke_mul,
                            length, matrix_units, perm_identity, perm_inverse, perm_mul,
                            reduced_word, rho, rho_symmetrizer, schur_element, seminormal_irrep,
                            symmetric_group, symmetrizer, symmetrizer_direct, unit_operators)
from heckesym.linalg import Operator, identity, lift
from heckesym.scalars import GENERIC

q = GENERIC.q


def _gen(n, i):
    return HeckeElement.generator(n, i)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_group_basics(n):
    group = symmetric_group(n)
    assert len(group) == [1, 1, 2, 6, 24][n]
    for w in group:
        assert perm_mul(w, perm_inverse(w)) == perm_identity(n)
        assert len(reduced_word(w)) == length(w)
    # coset representatives times S_{n-1} cover S_n once
    assert len(coset_representatives(n)) == n


@pytest.mark.parametrize("n", [3, 4])
def test_hecke_relations(n):
    one = HeckeElement.one(n)
    for i in range(1, n):
        t = _gen(n, i)
        assert (t - one.scale(q)) * (t + one) == HeckeElement(n, {})
        if i + 1 < n:
            u = _gen(n, i + 1)
            assert t * u * t == u * t * u
        for j in range(i + 2, n):
            u = _gen(n, j)
            assert t * u == u * t


@given(st.permutations(range(4)), st.permutations(range(4)))
@settings(max_examples=30, deadline=None)
def test_basis_multiplies_when_lengths_add(w, v):
    w, v = tuple(w), tuple(v)
    if length(perm_mul(w, v)) == length(w) + length(v):
        assert HeckeElement.basis(w) * HeckeElement.basis(v) == HeckeElement.basis(perm_mul(w, v))


@pytest.mark.parametrize("n", range(2, 6))
def test_seminormal_form_is_a_representation(n):
    for lam in partitions(n):
        gens = seminormal_irrep(lam)
        m = gens[0].rows
        one = Operator.identity(m)
        for i, t in enumerate(gens):
            assert (t - one.scale(q)) @ (t + one) == Operator.zeros(m)
            if i + 1 < len(gens):
                u = gens[i + 1]
                assert t @ u @ t == u @ t @ u
            for u in gens[i + 2:]:
                assert t @ u == u @ t


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrix_units(n):
    mu = matrix_units(n)
    total = HeckeElement(n, {})
    for lam in partitions(n):
        m = mu.dim(lam)
        for i in range(m):
            total = total + mu[lam, i, i]
            for j in range(m):
                for mu2 in partitions(n):
                    for k in range(mu.dim(mu2)):
                        for l in range(mu.dim(mu2)):
                            prod = hecke_mul(mu[lam, i, j], mu[mu2, k, l])
                            if lam == mu2 and j == k:
                                assert prod == mu[lam, i, l]
                            else:
                                assert prod.is_zero()
    assert total == HeckeElement.one(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_trace_of_unit_is_k(n):
    mu = matrix_units(n)
    for lam in partitions(n):
        assert schur_element(lam) * k_coeff(lam) == 1
        for i in range(mu.dim(lam)):
            assert mu[lam, i, i].trace() == k_coeff(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetrizers_idempotent(n):
    x, y = symmetrizer(n), antisymmetrizer(n)
    assert x * x == x
    assert y * y == y


@pytest.mark.parametrize("n", range(2, 5))
def test_recursion_matches_direct_sum(n):
    assert symmetrizer(n) == symmetrizer_direct(n)
    assert antisymmetrizer(n) == symmetrizer_direct(n, antisym=True)


def test_symmetrizers_absorb_generators():
    x, y = symmetrizer(3), antisymmetrizer(3)
    for i in (1, 2):
        assert _gen(3, i) * x == x.scale(q)
        assert _gen(3, i) * y == y.scale(-1)


def test_complementary_in_degree_two():
    assert symmetrizer(2) + antisymmetrizer(2) == HeckeElement.one(2)
    assert (symmetrizer(2) * antisymmetrizer(2)).is_zero()


def test_q_integer_normalizer_not_idempotent():
    x = symmetrizer(3, normalizer="q_integer")
    assert x * x != x
    assert symmetrizer(2, normalizer="q_integer") == symmetrizer(2)


def test_str_distinguishes_identity():
    text = str(symmetrizer(2))
    assert "*1" in text and "t[1]" in text


def test_rho_is_a_homomorphism(std2):
    # rho(a b) = rho(a) rho(b) on a few products
    a = _gen(3, 1) + HeckeElement.one(3).scale(2)
    b = _gen(3, 2) * _gen(3, 1)
    assert rho(std2, 3, a * b) == rho(std2, 3, a) @ rho(std2, 3, b)
    assert rho(std2, 3, _gen(3, 2)) == lift(std2.R, 3, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_operator_symmetrizer_matches_algebra(sup11, n):
    assert rho_symmetrizer(sup11, n) == rho(sup11, n, symmetrizer(n))
    assert rho_symmetrizer(sup11, n, True) == rho(sup11, n, antisymmetrizer(n))


def test_unit_operators_resolve_identity(sup11):
    ops = unit_operators(sup11, 3)
    total = Operator.zeros(8)
    for lam, grid in ops.items():
        for i in range(len(grid)):
            total = total + grid[i][i]
    assert total == identity(2, 3)
