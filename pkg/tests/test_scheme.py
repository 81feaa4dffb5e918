"""Rate formulas and the partition-aligned allocation construction."""

from fractions import Fraction

import pytest

from wiretap_helper import (
    Allocation,
    CaseTag,
    ChannelParams,
    ParameterError,
    SingularCaseError,
    build_linear_scheme,
    construct_allocation,
    decodable,
    l_func,
    leakage,
    phi1,
    phi2,
    r_achievable,
    r_private,
    upper_bounds,
)
from wiretap_helper.verify import iter_instances


class TestLFunc:
    @pytest.mark.parametrize("p,q,expected", [(10, 4, 2), (10, 0, 0), (0, 7, 0)])
    def test_examples(self, p, q, expected):
        assert l_func(p, q) == expected

    def test_fraction_arguments(self):
        assert l_func(Fraction(40), Fraction(12)) == 3


class TestPhi:
    @pytest.mark.parametrize("p,q,expected", [(10, 4, 4), (12, 4, 4), (5, 0, 0), (9, 0, 0)])
    def test_phi1_examples(self, p, q, expected):
        assert phi1(p, q) == expected

    @pytest.mark.parametrize("p,q,expected", [(10, 4, 6), (12, 4, 8), (5, 5, 5)])
    def test_phi2_examples(self, p, q, expected):
        assert phi2(p, q) == expected

    def test_real_arguments_stay_exact(self):
        assert phi2(Fraction(40), Fraction(10)) == 20
        assert phi1(Fraction(40), Fraction(12)) == 16
        assert phi2(Fraction(40), Fraction(2, 5)) == 20

    def test_phi1_never_exceeds_phi2(self):
        for p in range(0, 61):
            for q in range(0, 61):
                assert phi1(p, q) <= phi2(p, q)

    def test_integer_results_for_integer_arguments(self):
        for p in range(0, 40):
            for q in range(0, 40):
                assert isinstance(phi1(p, q), int)
                assert isinstance(phi2(p, q), int)


class TestRPrivate:
    @pytest.mark.parametrize(
        "n11,n2,expected", [(10, 10, 0), (10, 6, 4), (4, 9, 0)]
    )
    def test_examples(self, n11, n2, expected):
        assert r_private(ChannelParams(n11, 5, n2)) == expected


class TestRAchievable:
    def test_weak_helper_example(self):
        br = r_achievable(ChannelParams(10, 6, 10))
        assert (br.r_ach, br.case_tag) == (6, CaseTag.WEAK_HELPER)

    def test_aligned_example(self):
        br = r_achievable(ChannelParams(10, 8, 10))
        assert (br.r_ach, br.case_tag) == (6, CaseTag.ALIGNED)
        assert br.r_private == 0 and br.r_common == 6

    def test_strong_helper_example(self):
        br = r_achievable(ChannelParams(4, 8, 4))
        assert (br.r_ach, br.case_tag) == (4, CaseTag.STRONG_HELPER)

    def test_singular_reports_private_rate(self):
        br = r_achievable(ChannelParams(10, 10, 7))
        assert br.case_tag is CaseTag.SINGULAR
        assert br.r_ach == br.r_private == 3

    def test_zero_direct_gain(self):
        assert r_achievable(ChannelParams(0, 3, 2)).case_tag is CaseTag.STRONG_HELPER
        assert r_achievable(ChannelParams(0, 3, 2)).r_ach == 0
        assert r_achievable(ChannelParams(0, 0, 2)).case_tag is CaseTag.SINGULAR

    def test_case_boundaries_are_exact(self):
        # ratio 2/3 belongs to the aligned case, ratio 2 to the strong case
        assert r_achievable(ChannelParams(9, 6, 9)).case_tag is CaseTag.ALIGNED
        assert r_achievable(ChannelParams(9, 18, 9)).case_tag is CaseTag.STRONG_HELPER
        assert r_achievable(ChannelParams(9, 5, 9)).case_tag is CaseTag.WEAK_HELPER

    def test_rate_sandwich_on_grid(self):
        for p in iter_instances(12):
            br = r_achievable(p)
            assert r_private(p) <= br.r_ach <= p.n11
            assert br.r_private >= 0 and br.r_common >= 0 and br.r_ach >= 0
            if br.case_tag is CaseTag.ALIGNED:
                assert br.r_ach == br.r_private + br.r_common

    def test_monotone_in_direct_gain_weak_and_strong_cases(self):
        # In the aligned case the value genuinely oscillates with n11: the
        # partition size delta = |n11 - n21| changes, e.g. (5,9,6) -> 4 but
        # (6,9,6) -> 3, and the exhaustive oracle confirms the drop is real
        # for one-shot level schemes.  Only the weak and strong expressions
        # are monotone, so only those are asserted; aligned drops are counted.
        aligned_drops = 0
        for n21 in range(0, 31):
            for n2 in range(0, 31):
                prev = None
                for n11 in range(0, 31):
                    br = r_achievable(ChannelParams(n11, n21, n2))
                    if prev is not None and br.case_tag is prev.case_tag:
                        if br.case_tag in (CaseTag.WEAK_HELPER, CaseTag.STRONG_HELPER):
                            assert br.r_ach >= prev.r_ach
                        elif br.r_ach < prev.r_ach:
                            aligned_drops += 1
                    prev = br
        assert aligned_drops > 0  # the oscillation exists and is tolerated

    def test_aligned_oscillation_matches_oracle(self):
        # the one-shot optimum itself drops from (5,9,6) to (6,9,6)
        from wiretap_helper import oracle_best_rate

        assert r_achievable(ChannelParams(5, 9, 6)).r_ach == 4
        assert r_achievable(ChannelParams(6, 9, 6)).r_ach == 3
        assert oracle_best_rate(ChannelParams(5, 9, 6))[0] == 4
        assert oracle_best_rate(ChannelParams(6, 9, 6))[0] == 3


class TestConstructAllocation:
    def test_aligned_odd_partitions(self):
        a = construct_allocation(ChannelParams(10, 8, 10))
        assert sorted(a.message_levels) == [1, 2, 5, 6, 9, 10]
        assert sorted(a.jam_levels) == [1, 2, 5, 6, 9, 10]
        assert a.delta == 2

    def test_strong_helper_uses_top_levels(self):
        a = construct_allocation(ChannelParams(4, 8, 4))
        assert sorted(a.message_levels) == [1, 2, 3, 4]
        assert sorted(a.jam_levels) == [1, 2, 3, 4]

    def test_weak_helper_jamming_winner_is_two_slices(self):
        a = construct_allocation(ChannelParams(10, 6, 10))
        assert sorted(a.message_levels) == [1, 2, 3, 4, 9, 10]
        assert len(a.message_levels) == 6

    def test_singular_raises(self):
        with pytest.raises(SingularCaseError):
            construct_allocation(ChannelParams(7, 7, 3))

    def test_message_count_matches_formula_on_grid(self):
        for p in iter_instances(14):
            br = r_achievable(p)
            if br.case_tag is CaseTag.SINGULAR:
                continue
            a = construct_allocation(p)
            assert len(a.message_levels) == br.r_ach, p

    def test_jam_never_lands_on_message_levels(self):
        # the delta offset pushes every audible jam bit onto unused levels
        for p in iter_instances(12):
            if r_achievable(p).case_tag is CaseTag.SINGULAR:
                continue
            a = construct_allocation(p)
            landing = {
                v + p.n11 - p.n21
                for v in a.jam_levels
                if v <= p.n21 and 1 <= v + p.n11 - p.n21 <= p.n11
            }
            assert not landing & a.message_levels, p


class TestBuildLinearScheme:
    def test_empty_allocation(self):
        p = ChannelParams(5, 3, 4)
        s = build_linear_scheme(Allocation(frozenset(), frozenset(), p.delta), p)
        assert s.k == 0 and s.m == 0
        assert s.A.cols == s.B.cols == s.C.cols == s.D.cols == 0

    def test_constructed_scheme_is_secret_and_decodable(self):
        p = ChannelParams(10, 8, 10)
        s = build_linear_scheme(construct_allocation(p), p)
        assert s.k == 6 and s.m == 6
        assert leakage(s) == 0
        assert decodable(s)

    def test_private_only_message_vanishes_at_eavesdropper(self):
        p = ChannelParams(10, 2, 6)
        s = build_linear_scheme(
            Allocation(frozenset({7, 8, 9, 10}), frozenset(), p.delta), p
        )
        assert s.k == 4 and s.m == 0
        assert all(c == 0 for c in s.A.columns)
        assert leakage(s) == 0 and decodable(s)

    def test_out_of_range_levels_rejected(self):
        p = ChannelParams(5, 3, 4)
        with pytest.raises(ParameterError):
            build_linear_scheme(Allocation(frozenset({6}), frozenset(), p.delta), p)
        with pytest.raises(ParameterError):
            build_linear_scheme(Allocation(frozenset({1}), frozenset({5}), p.delta), p)

    def test_column_order_follows_level_order(self):
        p = ChannelParams(4, 2, 4)
        s = build_linear_scheme(
            Allocation(frozenset({3, 1}), frozenset({2}), p.delta), p
        )
        assert s.message_levels == (1, 3)
        assert s.C.columns[0] == 1 << 0 and s.C.columns[1] == 1 << 2


class TestAgainstConverse:
    def test_spec_example_is_tight(self):
        p = ChannelParams(10, 8, 10)
        assert r_achievable(p).r_ach == upper_bounds(p).min_ub == 6


class TestSchemeMatricesMatchChannel:
    def test_random_allocations_agree_with_channel_map(self):
        # A,B,C,D must reproduce exactly what the shift channel does to
        # bits placed on the allocated levels
        import random

        from wiretap_helper import BitVector, ldm_channel

        rng = random.Random(7)
        for _ in range(200):
            q = rng.randint(1, 12)
            p = ChannelParams(rng.randint(1, q), rng.randint(0, q), rng.randint(0, q))
            if p.q != q:
                continue
            msg = sorted(rng.sample(range(1, p.n11 + 1), rng.randint(0, p.n11)))
            jam = sorted(rng.sample(range(1, p.n2 + 1), rng.randint(0, p.n2))) if p.n2 else []
            s = build_linear_scheme(
                Allocation(frozenset(msg), frozenset(jam), p.delta), p
            )
            w = rng.getrandbits(s.k) if s.k else 0
            u = rng.getrandbits(s.m) if s.m else 0
            x1 = sum(1 << (lvl - 1) for j, lvl in enumerate(msg) if (w >> j) & 1)
            x2 = sum(1 << (lvl - 1) for j, lvl in enumerate(jam) if (u >> j) & 1)
            y1, y2 = ldm_channel(BitVector.from_int(x1, q), BitVector.from_int(x2, q), p)
            assert y1.to_int() == s.C.apply(w) ^ s.D.apply(u)
            assert y2.to_int() == s.A.apply(w) ^ s.B.apply(u)
