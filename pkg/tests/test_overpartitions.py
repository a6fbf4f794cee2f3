"""Tests for the enumeration oracle and the overpartition statistics."""

import pytest

from overq import qseries
from overq.arith import ModulusParams, sequence
from overq.overpartitions import (
    Overpartition,
    a_stat,
    distinct_nonoverlined_sum,
    enumerate_overpartitions,
    mbar,
    pbar,
    pbar_from_gf,
    s_count,
    s_row,
)

# the 8 overpartitions of 3, as rendered
LISTED_3 = {"3", "3*", "2 1", "2* 1", "2 1*", "2* 1*", "1 1 1", "1* 1 1"}


class TestOverpartitionType:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            Overpartition(((1, False), (2, False)))  # increasing sizes
        with pytest.raises(ValueError):
            Overpartition(((2, True), (2, True)))  # double overline
        with pytest.raises(ValueError):
            Overpartition(((2, False), (2, True)))  # overline not first

    def test_render(self):
        op = Overpartition(((3, True), (3, False), (2, False), (1, True)))
        assert op.render() == "3* 3 2 1*"
        assert op.total == 9
        assert Overpartition(()).render() == "()"


class TestEnumerate:
    def test_n3_matches_listing(self):
        got = [op.render() for op in enumerate_overpartitions(3)]
        assert len(got) == 8
        assert set(got) == LISTED_3

    def test_n0_single_empty(self):
        assert [op.render() for op in enumerate_overpartitions(0)] == ["()"]

    def test_n5_count(self):
        assert sum(1 for _ in enumerate_overpartitions(5)) == 24

    def test_generation_order(self):
        # reverse-lex partitions; overline masks count in binary with the
        # low bit on the largest distinct size
        got = [op.render() for op in enumerate_overpartitions(3)]
        assert got == ["3", "3*", "2 1", "2* 1", "2 1*", "2* 1*", "1 1 1", "1* 1 1"]

    def test_no_duplicates(self):
        for n in range(11):
            ops = list(enumerate_overpartitions(n))
            assert len(ops) == len(set(ops))
            assert all(op.total == n for op in ops if n > 0)


class TestPbar:
    def test_paper_values(self):
        assert [pbar(n) for n in range(5)] == [1, 2, 4, 8, 14]

    def test_negative(self):
        assert pbar(-5) == 0

    def test_matches_enumeration(self):
        for n in range(19):
            assert pbar(n) == sum(1 for _ in enumerate_overpartitions(n))

    def test_recurrence_matches_gf(self):
        assert pbar_from_gf(200) == [pbar(n) for n in range(201)]


class TestSCount:
    def test_paper_values_n4(self):
        assert [s_count(k, 4) for k in (1, 2, 3, 4)] == [15, 5, 2, 1]

    def test_part_exceeds_n(self):
        assert s_count(5, 4) == 0

    def test_paper_values_n5(self):
        assert s_count(1, 5) == 29
        assert s_count(2, 5) == 10
        assert s_count(3, 5) == 4
        assert s_count(5, 5) == 1

    def test_series_vs_enumeration(self):
        for n in range(1, 17):
            assert s_row(n, "series") == s_row(n, "enumerate"), n

    def test_bad_args(self):
        with pytest.raises(ValueError):
            s_count(0, 4)
        with pytest.raises(ValueError):
            s_count(1, 4, method="magic")


class TestAStat:
    def test_symbolic_expansion_n4(self):
        # A(a,1,0;4) = 15 a1 + 5 a2 + 2 a3 + a4 for any weights
        for name in ("one", "mu", "phi", "chi", "sigma_1"):
            a = sequence(name)
            expect = 15 * a(1) + 5 * a(2) + 2 * a(3) + a(4)
            assert a_stat(a, ModulusParams(1, 0), 4) == expect
        assert a_stat(sequence("one"), ModulusParams(1, 0), 4) == 23
        assert a_stat(sequence("chi"), ModulusParams(1, 0), 4) == 5 + 2

    def test_symbolic_expansion_other_moduli(self):
        one = sequence("one")
        assert a_stat(one, ModulusParams(2, 0), 4) == 5 + 1
        assert a_stat(one, ModulusParams(2, 1), 4) == 15 + 2

    def test_mu_shifts_pbar(self):
        mu = sequence("mu")
        params = ModulusParams(1, 0)
        for n in range(1, 61):
            assert a_stat(mu, params, n) == pbar(n - 1)

    def test_paper_counts_at_5(self):
        assert a_stat(sequence("chi"), ModulusParams(1, 0), 5) == 15
        assert a_stat(sequence("abs_mu"), ModulusParams(1, 0), 5) == 44
        assert a_stat(sequence("alt_abs_mu"), ModulusParams(1, 0), 5) == 24

    def test_nonpositive_n(self):
        params = ModulusParams(1, 0)
        assert a_stat(sequence("phi"), params, -3) == 0
        assert a_stat(sequence("phi"), params, 0) == 0
        assert a_stat(sequence("mangoldt"), params, -1) == 0.0

    def test_method_agreement(self):
        moduli = [ModulusParams(a, b) for a in (1, 2, 3) for b in range(a)]
        for name in ("one", "mu", "phi", "abs_mu", "chi", "sigma_1"):
            seq = sequence(name)
            for params in moduli:
                for n in range(1, 41):
                    direct = a_stat(seq, params, n, "direct")
                    assert direct == a_stat(seq, params, n, "gf"), (name, params, n)
                    assert direct == a_stat(seq, params, n, "convolution")

    def test_enumeration_backed_direct(self):
        moduli = [ModulusParams(a, b) for a in (1, 2, 3) for b in range(a)]
        for name in ("one", "phi", "chi"):
            seq = sequence(name)
            for params in moduli:
                for n in range(1, 15):
                    assert a_stat(seq, params, n, "enumerate") == a_stat(seq, params, n)


class TestMbar:
    def test_paper_value(self):
        assert mbar(2, 12) == 16
        assert mbar(2, 12, "enumerate") == 16

    def test_vanishes_below_square(self):
        for k in (1, 2, 3):
            for n in range((k + 1) ** 2):
                assert mbar(k, n) == 0

    def test_methods_agree(self):
        for k in (1, 2, 3):
            for n in range(21):
                assert mbar(k, n, "gf") == mbar(k, n, "enumerate"), (k, n)

    def test_least_part_reading_is_the_one_that_matches(self):
        # the generating function is normative; only the least-part reading
        # of "first part larger than k" reproduces it
        def greatest_reading(k, n):
            cnt = 0
            for op in enumerate_overpartitions(n):
                above = [s for s, _ in op.parts if s > k]
                if above and above.count(max(above)) >= k + 1:
                    cnt += 1
            return cnt

        gf = [qseries.mbar_gf(1, 12)[n] for n in range(13)]
        least = [mbar(1, n, "enumerate") for n in range(13)]
        great = [greatest_reading(1, n) for n in range(13)]
        assert gf == least
        assert gf != great


class TestDistinctNonoverlinedSum:
    def test_zero(self):
        assert distinct_nonoverlined_sum(0) == 0

    def test_n4(self):
        expect = 15 * 1 + 5 * 1 + 2 * 2 + 1 * 2  # 15 phi(1)+5 phi(2)+2 phi(3)+phi(4)
        assert distinct_nonoverlined_sum(4) == expect == 26
        assert a_stat(sequence("phi"), ModulusParams(1, 0), 4) == 26

    def test_matches_convolution(self):
        for n in range(17):
            assert distinct_nonoverlined_sum(n) == distinct_nonoverlined_sum(n, "convolution")

    def test_matches_phi_weighted_stat(self):
        phi = sequence("phi")
        params = ModulusParams(1, 0)
        for n in range(1, 15):
            assert distinct_nonoverlined_sum(n) == a_stat(phi, params, n)


class TestWeightConservation:
    def test_total_weight(self):
        # bookkeeping check of the enumerator: non-overlined weight through
        # the S-counts plus overlined weight equals n * pbar(n)
        for n in range(15):
            overlined = sum(
                s for op in enumerate_overpartitions(n) for s, over in op.parts if over
            )
            s_weight = sum(k * s_count(k, n, "enumerate") for k in range(1, n + 1))
            assert s_weight + overlined == n * pbar(n)
