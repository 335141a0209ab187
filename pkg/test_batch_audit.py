#!/usr/bin/env python3
"""
Тесты пакетного анализа документов.
"""

import json
import sys
from pathlib import Path

import pytest

# Добавляем путь к проекту
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from nilform.cli.errors import EXIT_HYPOTHESIS, EXIT_INVALID_INPUT, EXIT_OK
from nilform.core.gallery import list_entries
from scripts.batch_audit import create_report, export_gallery, find_documents, main, process_single_document


def test_export_and_find(tmp_path):
    paths = export_gallery(tmp_path)
    assert len(paths) == len(list_entries())
    (tmp_path / "batch_audit_old.json").write_text("{}", encoding="utf-8")
    assert find_documents(tmp_path, recursive=False) == sorted(paths)


def test_process_single_document(tmp_path):
    paths = {p.stem: p for p in export_gallery(tmp_path)}

    outcome = process_single_document(paths["so3-killing"], ["analyze", "decompose"], None, False)
    assert outcome["success"]
    assert outcome["results"]["analyze"]["exit_code"] == EXIT_OK
    assert outcome["results"]["decompose"]["exit_code"] == EXIT_OK
    assert outcome["counterexample"] is False

    outcome = process_single_document(paths["e4-definite"], ["decompose"], None, False)
    assert outcome["results"]["decompose"]["exit_code"] == EXIT_HYPOTHESIS
    assert outcome["results"]["decompose"]["violations"] == ["kernel-contains-ideal"]


def test_invalid_document(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("[1, 2", encoding="utf-8")
    outcome = process_single_document(broken, ["analyze"], None, False)
    assert not outcome["success"]
    assert outcome["exit_code"] == EXIT_INVALID_INPUT


def test_report_and_main(tmp_path, capsys):
    source = tmp_path / "docs"
    source.mkdir()
    (source / "sl2.json").write_text(json.dumps({
        "name": "sl2",
        "dim": 3,
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"0": "-2"}},
            {"i": 0, "j": 2, "coeffs": {"1": "1"}},
            {"i": 1, "j": 2, "coeffs": {"2": "-2"}},
        ],
        "form": [["0", "0", "4"], ["0", "8", "0"], ["4", "0", "0"]],
    }), encoding="utf-8")
    report_path = tmp_path / "report.json"
    assert main([str(source), "--report", str(report_path), "--workers", "1"]) == 0
    capsys.readouterr()

    report = json.loads(report_path.read_text(encoding="utf-8"))["batch_audit_report"]
    assert report["statistics"]["total_documents"] == 1
    assert report["statistics"]["counterexamples"] == 0

    summary = create_report([], source, tmp_path / "empty.json")
    assert summary["batch_audit_report"]["statistics"]["total_documents"] == 0


def test_missing_directory(tmp_path, capsys):
    assert main([str(tmp_path / "absent")]) == 1
    capsys.readouterr()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
