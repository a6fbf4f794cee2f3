"""Tests for the identity checkers."""

import pytest

from overq import identities as idn
from overq.arith import ModulusParams
from overq.overpartitions import pbar


def test_rec_small():
    rep = idn.check_rec(10)
    assert rep.passed
    # n = 3 row: 8 - 2*4 = 0
    row = rep.rows[3]
    assert (row.lhs, row.rhs) == (0, 0)
    assert rep.rows[0].lhs == 1


def test_th2_phi():
    rep = idn.check_th2("phi", ModulusParams(1, 0), 2, 60)
    assert rep.passed
    assert rep.params == {"seq": "phi", "alpha": 1, "beta": 0, "k": 2}


def test_th2_mu_reduces_to_recurrence():
    # for a = mu the right side must equal the shifted pbar recurrence
    for k in (1, 2, 3):
        rep = idn.check_th2("mu", ModulusParams(1, 0), k, 50)
        assert rep.passed
        sign = (-1) ** k
        for row in rep.rows:
            n = row.n
            acc = pbar(n - 1)
            for j in range(1, k + 1):
                acc += 2 * (-1) ** j * pbar(n - 1 - j * j)
            expect = sign * (acc - (1 if n == 1 else 0))
            assert row.rhs == expect, (k, n)


def test_th2_empty_range_trivial():
    # below (k+1)^2 + 1 the M-bar convolution has no support beyond B itself
    rep = idn.check_th2("zero", ModulusParams(1, 0), 3, 20)
    assert rep.passed
    assert all(row.lhs == row.rhs == 0 for row in rep.rows)


def test_c3_inequalities():
    for k in (1, 2):
        rep = idn.check_c3("one", ModulusParams(1, 0), k, 100)
        assert rep.passed
    rep = idn.check_c3("zero", ModulusParams(1, 0), 1, 30)
    assert rep.passed
    assert all(row.lhs == 0 for row in rep.rows)
    assert rep.notes  # strictness waived where the convolution vanishes


def test_c3_strictness_beyond_square():
    rep = idn.check_c3("one", ModulusParams(1, 0), 1, 60)
    waived = {int(note.split(":")[0].split("=")[1]) for note in rep.notes}
    for row in rep.rows:
        if row.n >= 4 and row.n not in waived:
            assert row.lhs > 0


def test_th1_examples():
    assert idn.check_th1("mu", ModulusParams(1, 0), 80).passed
    for name in ("phi", "chi", "abs_mu", "sigma_1"):
        for alpha in (1, 2, 3):
            for beta in range(alpha):
                assert idn.check_th1(name, ModulusParams(alpha, beta), 60).passed


def test_mu_decomposition():
    rep = idn.check_mu_decomposition(100)
    assert rep.passed
    assert rep.rows[3].lhs == 15 - 5 - 2 == 8
    assert rep.rows[0].lhs == 1


def test_gauss():
    rep = idn.check_gauss(200)
    assert rep.passed


def test_eq4():
    rep = idn.check_eq4(4, 60)
    assert rep.passed
    assert {row.tag for row in rep.rows} == {f"k={k}" for k in range(1, 5)}


def test_phi_suite():
    rep = idn.check_phi_suite(3, 80)
    assert rep.passed
    # Corollary 7 instance at n = 4: 26 - 2*A(3) + 2*A(0) = 4
    cor7 = {r.n: r for r in rep.rows if r.tag == "cor7"}
    assert cor7[4].lhs == 4
    assert cor7[1].lhs == 1


def test_prime_suite():
    rep = idn.check_prime_suite(3, 80)
    assert rep.passed
    cor9 = {r.n: r for r in rep.rows if r.tag == "cor9"}
    assert cor9[5].lhs == 15  # = pbar(3)+pbar(2)+pbar(1)+pbar(0)
    assert cor9[1].lhs == 0


def test_squarefree_suite():
    rep = idn.check_squarefree_suite(3, 60)
    assert rep.passed
    cor12 = {r.n: r for r in rep.rows if r.tag == "cor12"}
    assert cor12[5].lhs == 44


def test_mangoldt_float_domain():
    rep = idn.check_th2("mangoldt", ModulusParams(2, 1), 4, 80)
    assert rep.passed
    assert isinstance(rep.rows[0].lhs, float)
    assert idn.check_th1("mangoldt", ModulusParams(1, 0), 80).passed


def test_values_equal_tolerances():
    assert idn.values_equal(3, 3)
    assert not idn.values_equal(3, 4)
    assert idn.values_equal(1.0, 1.0 + 1e-12)
    assert not idn.values_equal(1.0, 1.001)
    # near-zero cancellation judged against the scale of the inputs
    assert idn.values_equal(1e-12, 0.0, scale=1e4)
    assert not idn.values_equal(1e-3, 0.0, scale=1e4)


def test_run_identity_dispatch():
    assert idn.run_identity("rec", n_max=10).identity_id == "rec"
    assert idn.run_identity("th2", seq="one", alpha=2, beta=1, k=1, n_max=20).passed
    with pytest.raises(ValueError):
        idn.run_identity("nope")
