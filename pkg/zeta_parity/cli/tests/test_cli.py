"""Tests for the ``zetap`` command line."""
import csv
import io
import json

import pytest

from zeta_parity.cli.main import EXIT_ERROR, EXIT_SUCCESS, EXIT_VERIFICATION_FAILED, main
from zeta_parity.closed_forms.evaluation import ExactPi, evaluate
from zeta_parity.closed_forms.function_id import FunctionId
from zeta_parity.core.pi_value import PiValue
from zeta_parity.verification.suites import (
    SuiteSummary,
    TrialResult,
    VerificationSuite,
)


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestCoeff:
    """``zetap coeff``."""

    @pytest.mark.parametrize(
        ("argv", "expected"),
        [
            pytest.param(("B", "1"), "B 1 1/6", id="B_1"),
            pytest.param(("A", "2"), "A 2 7/720", id="A_2"),
            pytest.param(("C", "0"), "C 0 1/4", id="C_0"),
            pytest.param(("C", "2"), "C 2 5/1536", id="C_2"),
        ],
    )
    def test_text(
        self, capsys: pytest.CaptureFixture[str], argv: tuple[str, ...], expected: str
    ) -> None:
        """Test the text form of single coefficients."""
        status, out, _ = _run(capsys, "coeff", *argv)
        assert status == EXIT_SUCCESS
        assert out == expected + "\n"

    def test_csv(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the CSV form."""
        _, out, _ = _run(capsys, "coeff", "B", "2", "--format", "csv")
        assert out == "B,2,1/90\n"

    def test_index_below_domain(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that A_0 is a usage error."""
        status, out, err = _run(capsys, "coeff", "A", "0")
        assert status == EXIT_ERROR
        assert not out
        assert err.startswith("error: A_p is defined for p >= 1")


class TestValue:
    """``zetap value``."""

    @pytest.mark.parametrize(
        ("argv", "expected"),
        [
            pytest.param(("zeta", "2", "--exact"), "1/6 * pi^2", id="zeta 2"),
            pytest.param(("beta", "4"), "1/96 * pi^4", id="beta 4"),
            pytest.param(("phi", "1"), "ln2-multiple 1/2", id="phi 1"),
            pytest.param(("alpha", "1"), "divergent", id="alpha 1"),
            pytest.param(("psi", "4"), "open", id="psi 4"),
        ],
    )
    def test_exact(
        self, capsys: pytest.CaptureFixture[str], argv: tuple[str, ...], expected: str
    ) -> None:
        """Test exact forms and tags."""
        status, out, _ = _run(capsys, "value", *argv)
        assert status == EXIT_SUCCESS
        assert out == expected + "\n"

    def test_decimal(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test psi(3) to twelve decimals."""
        _, out, _ = _run(capsys, "value", "psi", "3", "--decimal", "--digits", "12")
        assert out == "0.968946146259\n"

    def test_open_value_prints_note(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that zeta(3) is open and carries its note."""
        status, out, _ = _run(capsys, "value", "zeta", "3")
        assert status == EXIT_SUCCESS
        first, second = out.splitlines()
        assert first == "open"
        assert second.startswith("note: irrational")

    def test_open_value_jsonl_has_note(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that the note is a field of the JSON record."""
        _, out, _ = _run(capsys, "value", "zeta", "3", "--format", "jsonl")
        record = json.loads(out)
        assert record["exact"] == "open"
        assert "note" in record

    def test_decimal_of_open_value_is_an_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that an open value has no decimal expansion."""
        status, out, err = _run(capsys, "value", "zeta", "3", "--decimal")
        assert status == EXIT_ERROR
        assert not out
        assert "no decimal value" in err

    def test_negative_argument_is_an_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that negative arguments fail validation."""
        status, _, err = _run(capsys, "value", "zeta", "-2")
        assert status == EXIT_ERROR
        assert err.startswith("error:")

    def test_exact_and_decimal_are_exclusive(self) -> None:
        """Test that argparse rejects both modes at once."""
        with pytest.raises(SystemExit) as exit_info:
            main(["value", "zeta", "2", "--exact", "--decimal"])
        assert exit_info.value.code == EXIT_ERROR


def test_classify(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the typology line of psi(4)."""
    _, out, _ = _run(capsys, "classify", "psi", "4")
    assert out == "arg=even denom=odd alternating=yes status=open\n"


def test_classify_jsonl(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the JSON record of zeta(2)."""
    _, out, _ = _run(capsys, "classify", "zeta", "2", "--format", "jsonl")
    record = json.loads(out)
    assert record["status"] == "resolved"
    assert record["method"] == "even_periodization"


def test_unknown_function_is_a_usage_error() -> None:
    """Test that argparse rejects unknown series names."""
    with pytest.raises(SystemExit) as exit_info:
        main(["value", "gamma", "2"])
    assert exit_info.value.code == EXIT_ERROR


class TestVerify:
    """``zetap verify``."""

    def test_bridge(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the bridge suite up to p = 50."""
        status, out, _ = _run(capsys, "verify", "bridge", "--max-p", "50")
        assert status == EXIT_SUCCESS
        assert out == "bridge: 50/50 exact\n"

    def test_odd_identity(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a small seeded run."""
        status, out, _ = _run(
            capsys,
            "verify",
            "odd-identity",
            "--seed",
            "1",
            "--max-p",
            "2",
            "--trials",
            "2",
            "--height",
            "100",
        )
        assert status == EXIT_SUCCESS
        assert out == "odd-identity: 6/6 residuals zero, 3/3 canonical\n"

    def test_randomised_suite_needs_seed(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that a missing seed is a usage error."""
        status, _, err = _run(capsys, "verify", "even-identity")
        assert status == EXIT_ERROR
        assert "--seed is required" in err

    def test_per_trial_rows(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that every trial is printed before the summary."""
        _, out, _ = _run(
            capsys, "verify", "bridge", "--max-p", "3", "--per-trial", "--format", "csv"
        )
        lines = out.splitlines()
        assert lines[0] == "bridge,B_1,1,0,pass"
        assert len(lines) == 4
        assert lines[-1] == "bridge: 3/3 exact"

    def test_crosscheck_records(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that the crosscheck suite prints one full record per resolved pair."""
        _, out, _ = _run(
            capsys,
            "verify",
            "crosscheck",
            "--max-n",
            "3",
            "--tol",
            "1e-9",
            "--per-trial",
            "--format",
            "csv",
        )
        *rows, summary = [line.split(",") for line in out.splitlines()]
        assert summary == ["crosscheck: 9/9 pairs pass"]
        assert [row[:3] for row in rows[:4]] == [
            ["xi", "1", "ln2-multiple 1"],
            ["phi", "1", "ln2-multiple 1/2"],
            ["psi", "1", "1/4 * pi"],
            ["zeta", "2", "1/6 * pi^2"],
        ]
        for row in rows:
            assert len(row) == 7
            assert row[-1] == "pass"
            assert float(row[4]) <= 1e-9
            assert int(row[5]) > 0

    def test_crosscheck_records_jsonl(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the JSON-lines form of a crosscheck record."""
        _, out, _ = _run(
            capsys, "verify", "crosscheck", "--max-n", "1", "--per-trial", "--format", "jsonl"
        )
        record = json.loads(out.splitlines()[0])
        assert record["function"] == "xi"
        assert record["status"] == "pass"
        assert set(record) == {"function", "n", "closed_form", "numeric", "gap", "terms", "status"}

    @pytest.mark.parametrize(
        ("alias", "summary"),
        [
            pytest.param("prop1", "even-identity: 2/2 residuals zero, 2/2 canonical", id="prop1"),
            pytest.param("prop6", "odd-identity: 4/4 residuals zero, 2/2 canonical", id="prop6"),
        ],
    )
    def test_identity_suite_aliases(
        self, capsys: pytest.CaptureFixture[str], alias: str, summary: str
    ) -> None:
        """Test the alternative names of the identity suites."""
        status, out, _ = _run(
            capsys, "verify", alias, "--seed", "1", "--max-p", "1", "--trials", "2"
        )
        assert status == EXIT_SUCCESS
        assert out == summary + "\n"

    def test_failure_exit_status(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test that a failing suite exits with 1 and reports to stderr."""
        failing = SuiteSummary(
            VerificationSuite.BRIDGE,
            (TrialResult(VerificationSuite.BRIDGE, "B_1", 1, "1/7", passed=False),),
        )
        monkeypatch.setattr("zeta_parity.cli.main.run_bridge_suite", lambda _max_p: failing)
        status, out, err = _run(capsys, "verify", "bridge")
        assert status == EXIT_VERIFICATION_FAILED
        assert out == "bridge: 0/1 exact\n"
        assert "failed: bridge index=1 instance=B_1 detail=1/7" in err


class TestTable:
    """``zetap table``."""

    def test_rows(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the resolved values with n <= 2."""
        status, out, _ = _run(capsys, "table", "--max-p", "2", "--format", "csv")
        assert status == EXIT_SUCCESS
        rows = list(csv.reader(io.StringIO(out)))
        assert [(row[0], row[1]) for row in rows] == [
            ("xi", "1"),
            ("phi", "1"),
            ("psi", "1"),
            ("zeta", "2"),
            ("alpha", "2"),
            ("beta", "2"),
            ("xi", "2"),
            ("phi", "2"),
        ]
        assert rows[0] == ["xi", "1", "ln2", "0.693147180559945"]
        assert rows[2] == ["psi", "1", "1/4 * pi", "0.785398163397448"]

    def test_exact_column_parses_back(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that exact forms in Q[pi] parse to the evaluated values."""
        _, out, _ = _run(capsys, "table", "--max-p", "12", "--format", "csv")
        parsed = 0
        for function, n, exact, _decimal in csv.reader(io.StringIO(out)):
            evaluation = evaluate(FunctionId(function), int(n))
            if isinstance(evaluation, ExactPi):
                assert PiValue.parse(exact) == evaluation.value
                parsed += 1
        assert parsed > 30

    def test_text_equals_csv(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that table rows have no separate text form."""
        _, text, _ = _run(capsys, "table", "--max-p", "3")
        _, rows, _ = _run(capsys, "table", "--max-p", "3", "--format", "csv")
        assert text == rows

    def test_max_p_below_one_is_an_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the lower limit of --max-p."""
        status, _, err = _run(capsys, "table", "--max-p", "0")
        assert status == EXIT_ERROR
        assert "--max-p must be at least 1" in err
