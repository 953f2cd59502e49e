import pytest

import refdata
import lucastrick as lt
from lucastrick import (
    FIBONACCI,
    FOUND,
    JACOBSTHAL,
    LUCAS,
    PELL,
    UNBOUNDED,
    DivisibilityResult,
    UnsupportedCaseError,
    first_kind,
    lucas_index_of,
    lucas_odd_cycle,
    max_div_index_bruteforce,
    max_div_index_closed,
    oeis_sequence,
    partial_sum,
    pattern_table,
    sequence_values,
    triangular,
)


class TestBruteForce:
    def test_ten_fibonacci_terms(self):
        got = max_div_index_bruteforce(FIBONACCI, 10)
        assert (got.outcome, got.m, got.z, got.lucas_index) == (FOUND, 7, 11, 5)

    def test_four_fibonacci_terms(self):
        got = max_div_index_bruteforce(FIBONACCI, 4)
        assert (got.m, got.z, got.lucas_index) == (2, 7, 4)

    def test_five_lucas_terms(self):
        got = max_div_index_bruteforce(LUCAS, 5)
        assert (got.m, got.z) == (1, 26)

    def test_periodic_sequence_is_unbounded(self):
        got = max_div_index_bruteforce(first_kind(1, 1), 6)
        assert got.outcome == UNBOUNDED

    def test_periodic_nonzero_sum_is_still_unbounded(self):
        # sum of one U(1,1) term is 1, divisible by the +-1 cycle entries
        got = max_div_index_bruteforce(first_kind(1, 1), 1)
        assert got.outcome == UNBOUNDED

    def test_twelve_pell_terms(self):
        got = max_div_index_bruteforce(PELL, 12)
        assert (got.m, got.z) == (7, 140)

    def test_index_may_exceed_count(self):
        # two terms sum to the third term
        got = max_div_index_bruteforce(FIBONACCI, 2)
        assert got.m == 3 and got.z == 1

    def test_unit_term_tie_takes_larger_index(self):
        got = max_div_index_bruteforce(FIBONACCI, 1)
        assert got.m == 2 and got.z == 1

    def test_signed_multiplier_carries_sign(self):
        got = max_div_index_bruteforce(lt.SIGNED_FIBONACCI, 7)
        assert (got.m, got.z) == (4, -3)
        assert partial_sum(lt.SIGNED_FIBONACCI, 7).value == 9

    def test_scan_cap_flags_truncation(self, monkeypatch):
        monkeypatch.setenv("LUCASTRICK_MAX_SCAN", "3")
        got = max_div_index_bruteforce(FIBONACCI, 30)
        assert got.truncated

    def test_scan_cap_env_validation(self, monkeypatch):
        monkeypatch.setenv("LUCASTRICK_MAX_SCAN", "zero")
        with pytest.raises(ValueError):
            max_div_index_bruteforce(FIBONACCI, 5)

    @pytest.mark.parametrize("n,expected", sorted(refdata.MAXDIV_FIBONACCI.items()))
    def test_fibonacci_reference_rows(self, n, expected):
        got = max_div_index_bruteforce(FIBONACCI, n)
        assert (got.m, got.z, got.lucas_index) == expected


class TestClosedForms:
    def test_fibonacci_18(self):
        got = max_div_index_closed("fibonacci", 18)
        assert (got.m, got.z, got.lucas_index, got.confidence) == (11, 76, 9, "theorem")

    def test_fibonacci_exceptional_count_three(self):
        got = max_div_index_closed("fibonacci", 3)
        assert (got.m, got.z, got.lucas_index) == (3, 2, 0)

    def test_lucas_20(self):
        got = max_div_index_closed("lucas", 20)
        assert (got.m, got.z, got.confidence) == (6, 2200, "theorem")

    def test_lucas_odd_count_is_cycle_tagged(self):
        got = max_div_index_closed("lucas", 13)
        assert (got.m, got.z, got.confidence) == (1, 1361, "empirical-cycle")

    def test_pell_8_is_conjecture_tagged(self):
        got = max_div_index_closed("pell", 8)
        assert (got.m, got.z, got.confidence) == (5, 24, "conjecture")

    def test_signed_fibonacci_zero_sum_count(self):
        got = max_div_index_closed("signed-fibonacci", 2)
        assert got.outcome == UNBOUNDED

    def test_unsupported_family_raises(self):
        with pytest.raises(UnsupportedCaseError):
            max_div_index_closed("first-kind", 4)
        with pytest.raises(UnsupportedCaseError):
            max_div_index_closed("fibonacci", 0)

    @pytest.mark.parametrize("family,n_max,step", [
        ("fibonacci", 120, 1),
        ("jacobsthal", 120, 1),
        ("signed-fibonacci", 120, 1),
        ("fib-bisection", 80, 1),
        ("pell", 80, 1),
    ])
    def test_matches_brute_force(self, family, n_max, step):
        seq = lt.NAMED_FAMILIES[family]
        for n in range(1, n_max + 1, step):
            closed = max_div_index_closed(family, n)
            brute = max_div_index_bruteforce(seq, n)
            assert closed.same_answer(brute), (family, n)

    def test_lucas_even_counts_match_brute_force(self):
        for n in range(2, 121, 2):
            if n % 4 in (0, 2):
                assert max_div_index_closed("lucas", n).same_answer(
                    max_div_index_bruteforce(LUCAS, n)), n


class TestLucasIndexOf:
    def test_values(self):
        assert lucas_index_of(76) == 9
        assert lucas_index_of(2) == 0
        assert lucas_index_of(1) == 1
        assert lucas_index_of(-29) == 7
        assert lucas_index_of(5) is None
        assert lucas_index_of(0) is None

    def test_round_trip(self):
        # Lucas values are pairwise distinct, so each is its own least index
        for i in range(0, 40):
            assert lucas_index_of(lt.lucas(i)) == i

    def test_fibonacci_multiplier_is_always_a_lucas_number(self):
        for n in range(1, 401):
            got = max_div_index_closed("fibonacci", n)
            assert got.lucas_index is not None, n


class TestPatterns:
    def test_m_advances_by_two_every_four_counts(self):
        # the block pattern (2k+2, 2k+3, 2k+2, 2k+2) shifts by 2 per block
        ms = {n: max_div_index_closed("fibonacci", n).m for n in range(1, 201)}
        for n in range(4, 197):
            assert ms[n + 4] == ms[n] + 2, n

    def test_multiplier_index_tracks_count_minus_index(self):
        for n in range(4, 201):
            got = max_div_index_closed("fibonacci", n)
            assert got.lucas_index == n - got.m + 2, n

    def test_triangular_counts_mod_4_have_period_8(self):
        pattern = [triangular(n) % 4 for n in range(8)]
        assert pattern == [0, 1, 3, 2, 2, 3, 1, 0]
        for n in range(200):
            assert triangular(n) % 4 == pattern[n % 8]

    def test_triangular_table(self):
        assert [tuple(r) for r in pattern_table("triangular", 10)] == \
            refdata.TABLE_TRIANGULAR

    def test_odd_m_table(self):
        assert [tuple(r) for r in pattern_table("odd_m", 9)] == refdata.TABLE_ODD_M

    def test_triangular_odd_table(self):
        assert [tuple(r) for r in pattern_table("triangular_odd", 7)] == \
            refdata.TABLE_TRIANGULAR_ODD

    def test_triangular_odd_counts_need_k_3_or_4_mod_8(self):
        ks = [k for k in range(1, 60) if triangular(k) % 4 == 2]
        assert all(k % 8 in (3, 4) for k in ks)

    def test_unknown_table_kind(self):
        with pytest.raises(ValueError):
            pattern_table("square", 3)


class TestOeisSequences:
    @pytest.mark.parametrize("oeis_id,expected", [
        ("A372048", refdata.OEIS_A372048),
        ("A372049", refdata.OEIS_A372049),
        ("A372050", refdata.OEIS_A372050),
        ("A372051", refdata.OEIS_A372051),
        ("A372718", refdata.OEIS_A372718),
        ("A372225", refdata.OEIS_A372225),
    ])
    def test_reference_prefixes(self, oeis_id, expected):
        assert oeis_sequence(oeis_id, len(expected)) == expected

    def test_a372048_example_prefix(self):
        assert oeis_sequence("A372048", 8) == [2, 3, 2, 2, 4, 5, 4, 4]

    def test_a372225_example_prefix(self):
        assert oeis_sequence("A372225", 5) == [1, 6, 24, 105, 440]

    def test_a372718_example_prefix(self):
        assert oeis_sequence("A372718", 4) == [3, 5, 33, 39]

    def test_a372048_progression_vs_true_maximum(self):
        # the published progression keeps 2 at position 3; the true maximal
        # index there is 3 (S_3 = 4 = 2 * F_3)
        assert oeis_sequence("A372048", 3)[2] == 2
        assert max_div_index_bruteforce(FIBONACCI, 3).m == 3
        for n in range(1, 25):
            if n != 3:
                assert oeis_sequence("A372048", n)[-1] == \
                    max_div_index_closed("fibonacci", n).m

    def test_a372050_is_m_at_triangular_counts(self):
        values = oeis_sequence("A372050", 21)
        for k, value in enumerate(values, start=1):
            assert value == max_div_index_closed("fibonacci", triangular(k)).m

    def test_a372051_pins_a372050(self):
        # i = n - m + 2 links the two triangular-count sequences rowwise
        ms = oeis_sequence("A372050", 21)
        iis = oeis_sequence("A372051", 21)
        for k in range(1, 22):
            n = triangular(k)
            if n > 3:
                assert iis[k - 1] == n - ms[k - 1] + 2

    def test_a372225_matches_lucas_multiplier(self):
        values = oeis_sequence("A372225", 11)
        for k, value in enumerate(values, start=1):
            got = max_div_index_closed("lucas", 4 * k)
            assert got.m == k + 1 and got.z == 5 * value

    def test_unknown_id(self):
        with pytest.raises(ValueError):
            oeis_sequence("A000045", 5)


class TestCycleTable:
    def test_values(self):
        table = lucas_odd_cycle(1200)
        assert table.values == refdata.LUCAS_ODD_CYCLE_VALUES
        assert table.values[0] == 1
        assert table.values[4] == 4
        assert set(table.values) == {1, 3, 4}

    def test_divisibility_claim(self):
        table = lucas_odd_cycle(1200)
        assert table.divisibility_verified and table.verified_bound == 1200

    def test_small_instance(self):
        # k = 2: (L(5) - 3) / L(3) = 8 / 4
        assert (lt.lucas(5) - 3) // lt.lucas(refdata.LUCAS_ODD_CYCLE_VALUES[1]) == 2

    def test_cycle_matches_brute_force_maximality_on_a_range(self):
        for n in range(1, 202, 2):
            assert max_div_index_closed("lucas", n).same_answer(
                max_div_index_bruteforce(LUCAS, n)), n


class TestResultPayload:
    def test_round_trip(self):
        for result in (
            max_div_index_bruteforce(FIBONACCI, 10),
            max_div_index_closed("pell", 8),
            max_div_index_bruteforce(first_kind(1, 1), 6),
        ):
            assert DivisibilityResult.from_payload(result.to_payload()) == result
