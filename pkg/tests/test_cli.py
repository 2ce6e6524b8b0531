import json

import pytest

from fptlib.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestFpt:
    def test_exact_quintic(self, capsys):
        code, out, _ = run(capsys, "fpt", "--p", "7", "--poly", "x^5+y^5")
        assert code == 0
        assert out.strip() == "19/49 (exact, truncation-candidate, L=2)"

    def test_monomial(self, capsys):
        code, out, _ = run(capsys, "fpt", "--p", "3", "--poly", "x^2*y^3")
        assert code == 0
        assert out.strip() == "1/3 (exact, monomial)"

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "fpt", "--p", "5", "--poly", "(unparsable")
        assert code == 2
        assert "parse error at offset" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "fpt", "--p", "7", "--poly", "x^5+y^5",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == "19/49"
        assert payload["method"] == "truncation-candidate"
        assert payload["certificates"][-1] == {"N": 19, "e": 2, "member": True}
        assert payload["schema_version"] == 1

    def test_interval_output(self, capsys):
        code, out, _ = run(capsys, "fpt", "--p", "3",
                           "--poly", "x*(x^6+x^3*y^3+y^6)", "--e-cap", "4")
        assert code == 0
        assert "interval, bounded-fallback" in out


class TestGeneric:
    def test_values(self, capsys):
        code, out, _ = run(capsys, "generic", "--n", "2", "--d", "7", "--p", "3")
        assert code == 0 and out.strip() == "23/81, L=4"
        code, out, _ = run(capsys, "generic", "--n", "2", "--d", "6", "--p", "5")
        assert code == 0 and out.strip() == "1/3, L=absent"
        code, out, _ = run(capsys, "generic", "--n", "3", "--d", "3", "--p", "2")
        assert code == 0 and out.strip() == "1, L=absent"

    def test_trace_in_json(self, capsys):
        code, out, _ = run(capsys, "generic", "--n", "2", "--d", "5", "--p", "7",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["value"] == "137/343"
        assert len(payload["inequality_trace"]) == 3


class TestCandidates:
    def test_exclusion_shown(self, capsys):
        code, out, _ = run(capsys, "candidates", "--d", "19", "--p", "11")
        assert code == 0
        line = next(l for l in out.splitlines() if l.strip().startswith("L=2"))
        assert "excluded=y" in line and "inadmissible" in line

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "candidates", "--d", "5", "--p", "7",
                           "--format", "csv")
        assert code == 0
        assert out.splitlines()[0].startswith("L,value,cond_I")


class TestCensus:
    def test_small_census_text(self, capsys):
        code, out, _ = run(capsys, "census", "--d", "4", "--p", "3", "--k", "1")
        assert code == 0
        assert "1/2: reduced=48" in out
        assert "1/3: reduced=24" in out

    def test_budget_refusal(self, capsys):
        code, _, err = run(capsys, "census", "--d", "9", "--p", "5",
                           "--budget", "100")
        assert code == 3
        assert "budget" in err

    def test_reduced_only_json(self, capsys):
        code, out, _ = run(capsys, "census", "--d", "3", "--p", "2",
                           "--reduced-only", "--format", "json")
        payload = json.loads(out)
        # xy(x+y), the three linear*irreducible-quadratic products, and the
        # two irreducible cubics: six reduced cubics over F_2, all at 1/2
        assert payload["values"]["1/2"]["count_reduced"] == 6
        assert payload["skipped_nonreduced"] > 0


class TestWitness:
    def test_sextic(self, capsys):
        code, out, _ = run(capsys, "witness", "--d", "6", "--p", "5",
                           "--target", "1/5", "--family", "0,0,3")
        assert code == 0
        assert "a=0 over F_5" in out

    def test_not_found_is_reported(self, capsys):
        code, out, _ = run(capsys, "witness", "--d", "7", "--p", "3",
                           "--target", "2/9", "--family", "1,0,3")
        assert code == 0
        assert "no witness found" in out

    def test_validation(self, capsys):
        code, _, err = run(capsys, "witness", "--d", "6", "--p", "5",
                           "--target", "1/5", "--family", "1,0,3")
        assert code == 2


class TestVerifyPaper:
    def test_quartics_pass(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--d", "4",
                           "--primes", "2,3,5,7")
        assert code == 0
        assert out.count("PASS") == 4

    def test_quintics_pass_including_char_two(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--d", "5", "--primes", "2,7")
        assert code == 0

    def test_json_matrix(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--d", "6", "--primes", "2,3",
                           "--format", "json")
        payload = json.loads(out)
        assert {row["p"]: row["status"] for row in payload["matrix"]} == \
            {2: "PASS", 3: "PASS"}

    def test_rejects_out_of_range_degree(self, capsys):
        code, _, err = run(capsys, "verify-paper", "--d", "9", "--primes", "2")
        assert code == 2


class TestDeterminism:
    def test_identical_invocations_identical_output(self, capsys):
        _, out1, _ = run(capsys, "census", "--d", "4", "--p", "3",
                         "--format", "json")
        _, out2, _ = run(capsys, "census", "--d", "4", "--p", "3",
                         "--format", "json")
        assert out1 == out2

    def test_reports_carry_no_floats(self, capsys):
        def no_floats(node):
            if isinstance(node, float):
                return False
            if isinstance(node, dict):
                return all(no_floats(v) for v in node.values())
            if isinstance(node, list):
                return all(no_floats(v) for v in node)
            return True

        for argv in (["fpt", "--p", "7", "--poly", "x^5+y^5"],
                     ["generic", "--n", "2", "--d", "5", "--p", "7"],
                     ["candidates", "--d", "5", "--p", "7"],
                     ["census", "--d", "3", "--p", "3"]):
            _, out, _ = run(capsys, *argv, "--format", "json")
            assert no_floats(json.loads(out))
