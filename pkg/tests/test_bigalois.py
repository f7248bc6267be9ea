from heckesym.bigalois import (equivalence_report, functional_table, m_functional,
                               m_nonzero_witness, m_relation_check)
from heckesym.integral import integral_table


def _matches_integral(h, n):
    f = functional_table(h, h, n)
    t = integral_table(h, n)
    # (Lam, J, K, Gam) on M corresponds to (J, Lam, Gam, K) for the integral
    return {(j, l, g, k): v for (l, j, k, g), v in f.values.items()} == t.values


def test_specialization(std2, sup11):
    for n in range(3):
        assert _matches_integral(std2, n)
        assert _matches_integral(sup11, n)


def test_point_query(std2):
    assert m_functional(std2, std2, 0, (), (), (), ()) == 1


def test_mismatched_is_zero(std2, sup11):
    for n in range(3):
        assert functional_table(std2, sup11, n).is_zero()
    assert m_nonzero_witness(std2, sup11, 2) == (None, "bi-ranks differ")


def test_disjoint_omega(sup21, std1):
    # same r - s, different bi-rank: the Omega sets never meet
    for n in range(4):
        assert functional_table(sup21, std1, n, force=True).is_zero()


def test_witnesses(std2, sup11, conj11):
    w, _ = m_nonzero_witness(std2, std2, 2)
    assert w.n == 0 and w.value == 1
    w, _ = m_nonzero_witness(sup11, sup11, 2)
    assert w.n == 1
    w, _ = m_nonzero_witness(sup11, conj11, 2)
    assert w.n == 1 and w.value != 0


def test_relations(std2, sup11, conj11):
    for hl, hr in ((std2, std2), (sup11, conj11), (conj11, sup11)):
        for n in range(3):
            assert all(r.passed for r in m_relation_check(hl, hr, n))


def test_equivalence(std2, sup11, conj11):
    rep = equivalence_report(std2, sup11)
    assert rep.verdict == "not_equivalent"
    assert (rep.birank_left, rep.birank_right) == ((2, 0), (1, 1))
    assert equivalence_report(std2, std2).verdict == "equivalent"
    rep = equivalence_report(sup11, conj11, check_relations=True)
    assert rep.verdict == "equivalent" and rep.witness.n == 1
    assert all(r.passed for r in rep.suites)
