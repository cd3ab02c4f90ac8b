import json

import pytest

from conftest import DATA
from primesrl import cli


def path(name):
    return str(DATA / name)


def run(argv):
    return cli.main(argv)


class TestEvaluate:
    def test_head_self_comparison(self, capsys):
        code = run(["evaluate", path("buy_gold.conll"), path("buy_gold.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "Predicate F1: 1.0000" in out
        assert "Argument F1: 1.0000" in out

    def test_wrong_lemma_zeroes_core_arguments(self, capsys):
        code = run(["evaluate", path("buy_gold.conll"), path("buy_p3.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "Predicate F1: 0.0000" in out
        assert "Argument F1: 0.3333" in out

    def test_legacy_metric_flag(self, capsys):
        code = run(["evaluate", "--metric", "legacy",
                    path("buy_gold.conll"), path("buy_p3.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "Metric: legacy_head" in out
        assert "Argument F1: 1.0000" in out

    def test_span_format(self, capsys):
        code = run(["evaluate", "--format", "conll05", "--metric", "legacy",
                    "--words", path("tax.words"),
                    path("tax_gold.props"), path("tax_p4.props")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "Metric: legacy_span" in out
        assert "Argument F1: 0.5714" in out

    def test_per_label_table(self, capsys):
        code = run(["evaluate", "--per-label",
                    path("tax_gold.conll"), path("tax_p1.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "label" in out
        lines = [l for l in out.splitlines() if l.startswith("A0")]
        assert lines and lines[0].split()[1:4] == ["0", "1", "1"]

    def test_json_report_round_trips(self, capsys, tmp_path):
        report_path = tmp_path / "report.json"
        code = run(["evaluate", "--json", str(report_path),
                    path("tax_gold.conll"), path("tax_p1.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        data = json.loads(report_path.read_text())
        assert data["schema_version"] == cli.SCHEMA_VERSION
        assert data["metric"] == "primesrl" and data["mode"] == "head"
        assert data["flags"]["gold"] == path("tax_gold.conll")
        # the file reproduces the printed numbers exactly
        printed_arg_f1 = next(l for l in out.splitlines()
                              if l.startswith("Argument F1:")).split()[2]
        assert float(printed_arg_f1) == data["arguments"]["f1"]
        printed_pred_f1 = next(l for l in out.splitlines()
                               if l.startswith("Predicate F1:")).split()[2]
        assert float(printed_pred_f1) == data["predicates"]["f1"]
        assert data["arguments"]["correct"] == 2
        assert data["per_label"]["AM-TMP"]["f1"] == 1.0

    def test_no_color_env(self, capsys, monkeypatch):
        monkeypatch.setenv("PRIME_SRL_NO_COLOR", "1")
        run(["evaluate", path("buy_gold.conll"), path("buy_gold.conll")])
        assert "\x1b[" not in capsys.readouterr().out

    def test_deterministic_output(self, capsys):
        run(["evaluate", "--per-label", path("lead_gold.conll"), path("lead_p1.conll")])
        first = capsys.readouterr().out
        run(["evaluate", "--per-label", path("lead_gold.conll"), path("lead_p1.conll")])
        assert capsys.readouterr().out == first


class TestCompare:
    def test_delta_between_metrics(self, capsys):
        code = run(["compare", path("buy_gold.conll"), path("buy_p3.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "legacy_head" in out and "primesrl" in out
        assert "Argument F1 delta: -0.6667" in out

    def test_identical_files_have_zero_delta(self, capsys):
        run(["compare", path("lead_gold.conll"), path("lead_gold.conll")])
        assert "Argument F1 delta: +0.0000" in capsys.readouterr().out


class TestStats:
    def test_continuation_and_reference_shares(self, capsys):
        code = run(["stats", path("tax_gold.conll")])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "Sentences: 1" in out
        assert "Predicates: 1" in out
        assert "Arguments: 4" in out
        assert "C-X: 25.00%" in out
        assert "R-X: 0.00%" in out

    def test_reference_share(self, capsys):
        run(["stats", path("lead_gold.conll")])
        assert "R-X: 33.33%" in capsys.readouterr().out


class TestExitCodes:
    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.conll"
        bad.write_text("1\tword\tnot\tenough\tcolumns\n")
        code = run(["evaluate", str(bad), str(bad)])
        err = capsys.readouterr().err
        assert code == cli.EXIT_PARSE
        assert "line 1" in err and "bad.conll" in err

    def test_alignment_error(self, capsys):
        code = run(["evaluate", path("tax_gold.conll"), path("lead_gold.conll")])
        err = capsys.readouterr().err
        assert code == cli.EXIT_ALIGN
        assert "sentence 1" in err

    def test_span_format_requires_words(self, capsys):
        code = run(["evaluate", "--format", "conll05",
                    path("tax_gold.props"), path("tax_p1.props")])
        assert code == cli.EXIT_CONFIG
        assert "--words" in capsys.readouterr().err

    def test_span_format_rejects_head_mode(self, capsys):
        code = run(["evaluate", "--format", "conll05", "--mode", "head",
                    "--words", path("tax.words"),
                    path("tax_gold.props"), path("tax_p1.props")])
        assert code == cli.EXIT_CONFIG

    def test_unreadable_file(self, capsys):
        code = run(["evaluate", path("no_such_file.conll"), path("buy_gold.conll")])
        assert code == cli.EXIT_CONFIG

    def test_stats_on_empty_corpus(self, tmp_path, capsys):
        empty = tmp_path / "empty.conll"
        cols = ["1", "word"] + ["_"] * 10 + ["Y", "go.01", "_"]
        empty.write_text("\t".join(cols) + "\n")
        code = run(["stats", str(empty)])
        assert code == cli.EXIT_CONFIG
