#!/usr/bin/env python3
"""
Тесты командного интерфейса nilform: коды выхода, отчеты и эталонные прогоны.
"""

import io
import json
import sys
import time
from pathlib import Path

import numpy as np
import pytest

# Добавляем путь к проекту
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from nilform.cli.documents import algebra_to_document
from nilform.cli.errors import (
    EXIT_COUNTEREXAMPLE,
    EXIT_HYPOTHESIS,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    HypothesisViolationError,
    InvalidInputError,
)
from nilform.cli.main import main
from nilform.cli.schemas import Report
from nilform.core.gallery import get_entry, random_basis_change


def run_cli(capsys, *argv):
    """Запускает main и возвращает (код выхода, разобранный JSON stdout)."""
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def write_document(path: Path, document: dict) -> str:
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


SL2_DOCUMENT = {
    "name": "sl2",
    "dim": 3,
    "labels": ["e", "h", "f"],
    "brackets": [
        {"i": 0, "j": 1, "coeffs": {"0": "-2"}},
        {"i": 0, "j": 2, "coeffs": {"1": "1"}},
        {"i": 1, "j": 2, "coeffs": {"2": "-2"}},
    ],
    "form": [["0", "0", "4"], ["0", "8", "0"], ["4", "0", "0"]],
}


class TestAnalyze:
    """Команда analyze."""

    def test_twisted_example(self, capsys):
        code, report = run_cli(capsys, "analyze", "gallery://ex-3-8")
        assert code == EXIT_OK
        analysis = report["results"]["analysis"]
        assert analysis["signature"] == [3, 3, 3]
        assert analysis["relative_index"] == 3
        assert report["verdicts"]["invariant"] is False
        assert report["verdicts"]["nil_invariant"] == "holds"
        assert report["verdicts"]["effective"] is True
        assert report["counterexample"] is False
        assert "euclidean_type" in report["results"]
        assert len(report["input_digest"]) == 64

    def test_file_document(self, capsys, tmp_path):
        source = write_document(tmp_path / "sl2.json", SL2_DOCUMENT)
        code, report = run_cli(capsys, "analyze", "--input", source)
        assert code == EXIT_OK
        assert report["results"]["analysis"]["signature"] == [2, 1, 0]
        assert report["verdicts"]["invariant"] is True

    def test_stdin_document(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(SL2_DOCUMENT)))
        code, report = run_cli(capsys, "analyze", "-")
        assert code == EXIT_OK
        assert report["command"] == "nilform analyze -"

    def test_nil_invariance_failure_is_not_a_counterexample(self, capsys):
        code, report = run_cli(capsys, "analyze", "gallery://e4-full-definite")
        assert code == EXIT_OK
        assert report["verdicts"]["nil_invariant"] == "fails"
        assert report["results"]["analysis"]["nil_invariant"]["witness"] is not None

    def test_text_output(self, capsys):
        code, out = run_cli(capsys, "analyze", "gallery://so3-killing", "--output", "text")
        assert code == EXIT_OK
        assert out.startswith("✅")
        assert "nil_invariant" in out

    def test_malformed_rational(self, capsys, tmp_path):
        document = dict(SL2_DOCUMENT, form=[["0", "1/0", "4"], ["0", "8", "0"], ["4", "0", "0"]])
        code, error = run_cli(capsys, "analyze", write_document(tmp_path / "bad.json", document))
        assert code == EXIT_INVALID_INPUT
        assert "form[0][1]" in error["detail"]

    def test_asymmetric_form(self, capsys, tmp_path):
        document = dict(SL2_DOCUMENT, form=[["0", "1", "4"], ["0", "8", "0"], ["4", "0", "0"]])
        code, error = run_cli(capsys, "analyze", write_document(tmp_path / "asym.json", document))
        assert code == EXIT_INVALID_INPUT
        assert error["detail"].startswith("form")

    def test_jacobi_violation(self, capsys, tmp_path):
        document = {
            "dim": 3,
            "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "1"}}, {"i": 0, "j": 2, "coeffs": {"1": "1"}}],
            "form": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        }
        code, error = run_cli(capsys, "analyze", write_document(tmp_path / "jacobi.json", document))
        assert code == EXIT_INVALID_INPUT
        assert error["error"] == "Invalid input"

    def test_bracket_index_out_of_range(self, capsys, tmp_path):
        document = dict(SL2_DOCUMENT, brackets=[{"i": 0, "j": 5, "coeffs": {"0": "1"}}])
        code, error = run_cli(capsys, "analyze", write_document(tmp_path / "range.json", document))
        assert code == EXIT_INVALID_INPUT
        assert "brackets[0]" in error["detail"]

    def test_missing_form(self, capsys, tmp_path):
        document = {key: value for key, value in SL2_DOCUMENT.items() if key != "form"}
        code, error = run_cli(capsys, "analyze", write_document(tmp_path / "noform.json", document))
        assert code == EXIT_HYPOTHESIS
        assert error["violations"] == ["form-missing"]

    def test_invalid_json_and_missing_file(self, capsys, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{\"dim\": 3,", encoding="utf-8")
        code, error = run_cli(capsys, "analyze", str(broken))
        assert code == EXIT_INVALID_INPUT
        assert "JSON" in error["detail"]

        code, _ = run_cli(capsys, "analyze", str(tmp_path / "absent.json"))
        assert code == EXIT_INVALID_INPUT

        code, _ = run_cli(capsys, "analyze")
        assert code == EXIT_INVALID_INPUT

    def test_output_is_deterministic(self, capsys):
        main(["analyze", "gallery://three-factor"])
        first = capsys.readouterr().out
        main(["analyze", "gallery://three-factor"])
        second = capsys.readouterr().out
        assert first == second

    def test_basis_change_invariance(self, capsys, tmp_path):
        entry = get_entry("ex-3-8")
        P = random_basis_change(np.random.default_rng(3), entry.algebra.dim)
        scrambled = algebra_to_document(entry.algebra.change_basis(P), entry.form.congruent(P), name="scrambled")
        source = write_document(tmp_path / "scrambled.json", scrambled.model_dump(mode="json"))

        _, original = run_cli(capsys, "analyze", "gallery://ex-3-8")
        code, report = run_cli(capsys, "analyze", source)
        assert code == EXIT_OK
        for key in ("signature", "relative_index", "kernel_dim", "effective"):
            assert report["results"]["analysis"][key] == original["results"]["analysis"][key]
        assert report["verdicts"] == original["verdicts"]


class TestDecompose:
    """Команда decompose."""

    def test_three_factor(self, capsys):
        code, report = run_cli(capsys, "decompose", "gallery://three-factor")
        assert code == EXIT_OK
        fingerprints = report["results"]["decomposition"]["fingerprints"]
        assert [fingerprints[key]["dim"] for key in ("G1", "G2", "G3")] == [9, 3, 6]
        assert report["verdicts"]["orthogonal_product"] is True
        assert report["verdicts"]["cotangent"] is True

    def test_annotated_cotangent(self, capsys):
        code, report = run_cli(capsys, "decompose", "gallery://e3-dual")
        assert code == EXIT_OK
        assert report["verdicts"]["annotated_cotangent"] is True

    def test_kernel_ideal_is_hypothesis_violation(self, capsys):
        code, error = run_cli(capsys, "decompose", "gallery://e4-definite")
        assert code == EXIT_HYPOTHESIS
        assert error["violations"] == ["kernel-contains-ideal"]

    def test_failed_nil_invariance(self, capsys):
        code, error = run_cli(capsys, "decompose", "gallery://e4-full-definite")
        assert code == EXIT_HYPOTHESIS
        assert "not-nil-invariant" in error["violations"]


class TestAuditStabilizer:
    """Команда audit-stabilizer."""

    def test_annotation_target(self, capsys):
        code, report = run_cli(capsys, "audit-stabilizer", "gallery://ex-4-7")
        assert code == EXIT_OK
        assert report["verdicts"]["all_hold"] is True
        assert report["verdicts"]["flags"] == get_entry("ex-4-7").expected["audit_flags"]

    def test_radical_control(self, capsys):
        code, report = run_cli(capsys, "audit-stabilizer", "gallery://ex-4-7", "--target", "radical")
        assert code == EXIT_OK
        assert report["verdicts"]["all_hold"] is False
        assert report["verdicts"]["flags"]["phi_nontrivial"] is False

    def test_levi_control(self, capsys):
        code, report = run_cli(capsys, "audit-stabilizer", "gallery://ex-4-7", "--target", "levi")
        assert code == EXIT_OK
        assert report["verdicts"]["flags"]["projects_onto_radical"] is False

    def test_missing_stabilizer(self, capsys):
        code, error = run_cli(capsys, "audit-stabilizer", "gallery://so4")
        assert code == EXIT_INVALID_INPUT
        assert "stabilizer" in error["detail"]

    def test_noncompact_levi_factor(self, capsys):
        code, error = run_cli(capsys, "audit-stabilizer", "gallery://sl2-killing", "--target", "radical")
        assert code == EXIT_HYPOTHESIS
        assert error["violations"] == ["not-compact-semidirect"]


class TestVerify:
    """Проверочные прогоны verify."""

    def test_euclidean(self, capsys):
        code, report = run_cli(capsys, "verify", "euclidean", "--n", "2,3,4")
        assert code == EXIT_OK
        cases = {case["n"]: case for case in report["results"]["cases"]}
        assert [cases[n]["solution_dim"] for n in (2, 3, 4)] == [1, 7, 21]
        assert [cases[n]["radical_in_every_kernel"] for n in (2, 3, 4)] == [True, False, True]
        witness = cases[3]["witness"]
        assert witness["in_solution_space"] and witness["nondegenerate"] and witness["invariant"]
        assert report["verdicts"] == {"E2": "radical-in-kernel", "E3": "exception", "E4": "radical-in-kernel"}

    @pytest.mark.parametrize("n, solution_dim", [(5, 55), (6, 120)])
    def test_euclidean_larger_n_within_time(self, capsys, n, solution_dim):
        started = time.perf_counter()
        code, report = run_cli(capsys, "verify", "euclidean", "--n", str(n))
        elapsed = time.perf_counter() - started
        assert code == EXIT_OK
        case = report["results"]["cases"][0]
        assert case["solution_dim"] == solution_dim
        assert case["radical_in_every_kernel"] is True
        assert report["verdicts"] == {f"E{n}": "radical-in-kernel"}
        assert elapsed < 30, f"E{n}: {elapsed:.1f} с"

    def test_euclidean_basis(self, capsys):
        code, report = run_cli(capsys, "verify", "euclidean", "--n", "2", "--basis")
        assert code == EXIT_OK
        basis = report["results"]["cases"][0]["basis"]
        assert len(basis) == 1
        assert len(basis[0]) == 3

    def test_skew_pairing(self, capsys):
        code, report = run_cli(capsys, "verify", "skew-pairing", "--l", "0,1,2,3")
        assert code == EXIT_OK
        assert report["verdicts"] == {"l=0": 3, "l=1": 1, "l=2": 0, "l=3": 0}
        l1 = next(case for case in report["results"]["cases"] if case["l"] == 1)
        assert l1["proportional_to_killing"] is True

    def test_so3_module(self, capsys):
        code, report = run_cli(capsys, "verify", "so3-module", "--l", "1,2")
        assert code == EXIT_OK
        assert report["verdicts"] == {"l=1": False, "l=2": True}

    def test_counterexample_report_exit_code(self, capsys, monkeypatch):
        def broken(n_list, command, seed=None, with_basis=False):
            return Report(command=command, summary="E5: КОНТРПРИМЕР", counterexample=True)

        monkeypatch.setattr(sys.modules[main.__module__], "cmd_verify_euclidean", broken)
        code, report = run_cli(capsys, "verify", "euclidean", "--n", "5")
        assert code == EXIT_COUNTEREXAMPLE
        assert report["counterexample"] is True
        assert report["summary"] == "E5: КОНТРПРИМЕР"

    @pytest.mark.parametrize("argv", [
        ["verify", "euclidean", "--n", "0"],
        ["verify", "euclidean", "--n", "99"],
        ["verify", "skew-pairing", "--l", "-1"],
        ["verify", "so3-module", "--l", "a,b"],
    ])
    def test_out_of_range_arguments(self, capsys, argv):
        code = main(argv)
        capsys.readouterr()
        assert code == EXIT_INVALID_INPUT


class TestGallery:
    """Команда gallery."""

    def test_list(self, capsys):
        code, report = run_cli(capsys, "gallery", "list")
        assert code == EXIT_OK
        entries = report["results"]["entries"]
        assert len(entries) >= 10
        assert {"name", "description", "dim", "has_form"} <= set(entries[0])

    @pytest.mark.parametrize("name, dim", [("ex-3-8", 9), ("cotangent-sl2", 6), ("ex-4-7", 21)])
    def test_entry_document(self, capsys, name, dim):
        code, document = run_cli(capsys, "gallery", name)
        assert code == EXIT_OK
        assert document["dim"] == dim
        assert document["name"] == name

    def test_unknown_entry_suggests_names(self, capsys):
        code, error = run_cli(capsys, "gallery", "ex-3-80")
        assert code == EXIT_INVALID_INPUT
        assert "ex-3-8" in error["detail"]


class TestArguments:
    """Разбор аргументов."""

    def test_help_and_version(self, capsys):
        assert main(["--help"]) == EXIT_OK
        assert main(["--version"]) == EXIT_OK
        capsys.readouterr()

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_INVALID_INPUT
        capsys.readouterr()

    def test_error_responses(self):
        response = InvalidInputError("bad --n").to_response()
        assert response.exit_code == EXIT_INVALID_INPUT
        assert response.error == "Invalid input"
        assert HypothesisViolationError("x", ["form-missing"]).to_response().violations == ["form-missing"]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
