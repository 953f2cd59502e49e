import json

import pytest

from lucastrick import DivisibilityResult, cli
from lucastrick.cli import (
    EXIT_BOTH_MISMATCH,
    EXIT_NO_TRICK,
    EXIT_OK,
    EXIT_UNSUPPORTED_CLOSED,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as err:
        main(list(argv))
    capsys.readouterr()
    return err.value.code


class TestSeq:
    def test_lucas_terms(self, capsys):
        code, out, _ = run(capsys, "seq", "--family", "lucas", "--count", "6")
        assert code == EXIT_OK and out.strip() == "2 1 3 4 7 11"

    def test_pell_via_pq(self, capsys):
        code, out, _ = run(capsys, "seq", "--p", "2", "--q", "-1", "--count", "5")
        assert code == EXIT_OK and out.strip() == "0 1 2 5 12"

    def test_single_term(self, capsys):
        code, out, _ = run(capsys, "seq", "--family", "fibonacci", "--count", "1")
        assert code == EXIT_OK and out.strip() == "0"

    def test_second_kind(self, capsys):
        code, out, _ = run(capsys, "seq", "--p", "1", "--q", "-1",
                           "--kind", "second", "--count", "5")
        assert out.strip() == "2 1 3 4 7"

    def test_custom_initials(self, capsys):
        code, out, _ = run(capsys, "seq", "--p", "1", "--q", "-1",
                           "--init", "10,-3", "--count", "5")
        assert out.strip() == "10 -3 7 4 11"

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "seq", "--family", "lucas", "--count", "3",
                           "--format", "json-lines")
        rows = [json.loads(line) for line in out.splitlines()]
        assert [(r["index"], r["value"]) for r in rows] == [(0, 2), (1, 1), (2, 3)]

    def test_flag_validation_exits_2(self, capsys):
        assert run_usage_error(capsys, "seq", "--count", "5") == EXIT_USAGE
        assert run_usage_error(capsys, "seq", "--family", "lucas", "--p", "1",
                               "--q", "1", "--count", "3") == EXIT_USAGE
        assert run_usage_error(capsys, "seq", "--family", "lucas",
                               "--count", "0") == EXIT_USAGE


class TestMaxdiv:
    def test_both_modes_match(self, capsys):
        code, out, _ = run(capsys, "maxdiv", "--family", "fibonacci",
                           "--n", "10", "--both")
        assert code == EXIT_OK
        assert "m=7" in out and "z=11" in out and "i=5" in out
        assert out.strip().endswith("match")

    def test_lucas_brute(self, capsys):
        code, out, _ = run(capsys, "maxdiv", "--family", "lucas", "--n", "13",
                           "--brute")
        assert code == EXIT_OK and "m=1" in out and "z=1361" in out

    def test_periodic_family_unbounded(self, capsys):
        code, out, _ = run(capsys, "maxdiv", "--p", "1", "--q", "1", "--n", "6",
                           "--brute")
        assert code == EXIT_OK and "unbounded" in out

    def test_closed_on_custom_family_exits_3(self, capsys):
        code, out, err = run(capsys, "maxdiv", "--p", "5", "--q", "3", "--n", "6",
                             "--closed")
        assert code == EXIT_UNSUPPORTED_CLOSED and "error" in err

    def test_both_mismatch_exits_4(self, capsys, monkeypatch):
        wrong = DivisibilityResult("found", 10, m=5, z=999, confidence="theorem")
        monkeypatch.setattr(cli, "max_div_index_closed", lambda family, n: wrong)
        code, out, _ = run(capsys, "maxdiv", "--family", "fibonacci", "--n", "10",
                           "--both")
        assert code == EXIT_BOTH_MISMATCH and "MISMATCH" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "maxdiv", "--family", "fibonacci", "--n", "10",
                           "--brute", "--format", "json-lines")
        payload = json.loads(out.strip())
        rebuilt = DivisibilityResult.from_payload(payload)
        assert rebuilt == DivisibilityResult(
            "found", 10, m=7, z=11, lucas_index=5, confidence="exhaustive")

    def test_json_round_trip_closed_conjecture(self, capsys):
        code, out, _ = run(capsys, "maxdiv", "--family", "pell", "--n", "8",
                           "--closed", "--format", "json-lines")
        payload = json.loads(out.strip())
        assert DivisibilityResult.from_payload(payload).confidence == "conjecture"

    def test_big_multiplier_full_decimal(self, capsys):
        code, out, _ = run(capsys, "maxdiv", "--family", "fibonacci", "--n", "378",
                           "--closed")
        assert "3152564691982405848945267213740827495676" in out


class TestTrick:
    def test_perform_classic(self, capsys):
        code, out, _ = run(capsys, "trick", "--p", "1", "--q", "-1", "--n", "10",
                           "--init", "1,1")
        assert code == EXIT_OK and out.strip() == "sum=143 term7=13 z=11"

    def test_no_common_trick_report(self, capsys):
        code, out, _ = run(capsys, "trick", "--p", "1", "--q", "-2", "--n", "10")
        assert code == EXIT_OK and "no common trick" in out

    def test_tribonacci_demo(self, capsys):
        code, out, _ = run(capsys, "trick", "--order", "3", "--n", "8",
                           "--init", "1,1,1")
        assert code == EXIT_OK and out.strip() == "sum=68 term7=17 z=4"

    def test_init_without_certificate_exits_5(self, capsys):
        code, out, err = run(capsys, "trick", "--p", "1", "--q", "-2", "--n", "10",
                             "--init", "4,5")
        assert code == EXIT_NO_TRICK and "no common trick" in err

    def test_certificate_rendering(self, capsys):
        code, out, _ = run(capsys, "trick", "--p", "1", "--q", "-1", "--n", "10")
        assert "sum = 11 * term 7" in out and "55a+88b" in out

    def test_certificate_json(self, capsys):
        code, out, _ = run(capsys, "trick", "--p", "1", "--q", "-1", "--n", "6",
                           "--format", "json-lines")
        payload = json.loads(out.strip())
        assert payload["m"] == 5 and payload["z"] == 4
        assert payload["sum_form"] == [8, 12] and payload["term_form"] == [2, 3]

    def test_degenerate_zero_sum_message(self, capsys):
        code, out, _ = run(capsys, "trick", "--p", "1", "--q", "1", "--n", "6")
        assert code == EXIT_OK and "sum is 0" in out

    def test_order_and_pq_conflict(self, capsys):
        assert run_usage_error(capsys, "trick", "--order", "3", "--p", "1",
                               "--q", "1", "--n", "4") == EXIT_USAGE


class TestVerify:
    @pytest.mark.parametrize("suite,bound", [
        ("identities", 25),
        ("fl", 12),
        ("ll", 12),
        ("rounding", 60),
        ("cycles", 60),
        ("tricks", 40),
        ("nnacci", 5),
    ])
    def test_suites_pass(self, capsys, suite, bound):
        code, out, err = run(capsys, "verify", "--suite", suite,
                             "--bound", str(bound))
        assert code == EXIT_OK, (suite, out)
        assert "FAIL" not in out
        assert "RESULT: PASS" in err

    def test_failure_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "verify_nnacci_theorem", lambda order: False)
        code, out, _ = run(capsys, "verify", "--suite", "nnacci", "--bound", "3")
        assert code == EXIT_VERIFY_FAILED and "FAIL" in out

    def test_conjecture_mismatch_warns_but_passes(self, capsys, monkeypatch):
        # force the conjectured Pell answer to disagree with the scan
        real = cli.max_div_index_closed

        def fake(family, n):
            if family == "pell":
                return DivisibilityResult("found", n, m=1, z=0, confidence="conjecture")
            return real(family, n)

        monkeypatch.setattr(cli, "max_div_index_closed", fake)
        code, out, _ = run(capsys, "verify", "--suite", "cycles", "--bound", "20")
        assert code == EXIT_OK
        assert "WARN" in out and "conjecture" in out


class TestOeis:
    def test_text_listing(self, capsys):
        code, out, _ = run(capsys, "oeis", "--id", "A372049", "--count", "6")
        assert code == EXIT_OK and out.strip() == "1 1 0 4 3 3"

    def test_bfile_listing(self, capsys):
        code, out, _ = run(capsys, "oeis", "--id", "A372050", "--count", "5",
                           "--format", "bfile")
        assert code == EXIT_OK
        assert out == "1 2\n2 3\n3 5\n4 7\n5 8\n"

    def test_text_prefix(self, capsys):
        code, out, _ = run(capsys, "oeis", "--id", "A372225", "--count", "3")
        assert out.strip() == "1 6 24"

    def test_unknown_id_exits_2(self, capsys):
        assert run_usage_error(capsys, "oeis", "--id", "A000001",
                               "--count", "3") == EXIT_USAGE

    def test_bfile_is_index_value_pairs(self, capsys):
        code, out, _ = run(capsys, "oeis", "--id", "A372718", "--count", "14",
                           "--format", "bfile")
        lines = out.splitlines()
        assert len(lines) == 14
        for i, line in enumerate(lines, start=1):
            idx, value = line.split(" ")
            assert int(idx) == i and int(value) > 0
