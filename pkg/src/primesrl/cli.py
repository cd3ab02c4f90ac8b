"""Command-line front end: evaluate, compare and stats subcommands."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .conll import (
    AlignmentError,
    Corpus,
    ParseError,
    parse_conll05,
    parse_conll09,
    parse_sense_sidecar,
)
from .model import EvalCounts, ScoreReport, label_sort_key
from .scoring import EmptyCorpus, corpus_stats, evaluate

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_ALIGN = 3
EXIT_CONFIG = 4

SCHEMA_VERSION = 1


class ConfigError(Exception):
    pass


def _bold(text: str) -> str:
    if os.environ.get("PRIME_SRL_NO_COLOR") or not sys.stdout.isatty():
        return text
    return "\033[1m%s\033[0m" % text


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ConfigError("cannot read %s: %s" % (path, exc.strerror))


def load_corpus(path: str, fmt: str, words: str | None,
                senses: str | None) -> Corpus:
    if fmt == "conll09":
        return parse_conll09(_read(path), path=path)
    if words is None:
        raise ConfigError("--format conll05 requires --words TOKEN_FILE")
    sidecar = None
    if senses is not None:
        sidecar = parse_sense_sidecar(_read(senses), path=senses)
    return parse_conll05(_read(words), _read(path), senses=sidecar, path=path)


def _resolve_mode(args) -> str:
    if args.format == "conll05":
        if args.mode == "head":
            raise ConfigError("conll05 input is span-based; --mode head is not valid")
        return "span"
    return args.mode or "head"


def _metric_name(metric: str, mode: str) -> str:
    if metric == "legacy":
        return "legacy_head" if mode == "head" else "legacy_span"
    return metric


def _counts_line(name: str, counts: EvalCounts) -> str:
    return ("%s P: %.4f  R: %.4f  F1: %.4f  (correct %d, predicted %d, gold %d)"
            % (name, counts.precision, counts.recall, counts.f1,
               counts.correct, counts.predicted, counts.gold))


def _print_per_label(per_label: dict[str, EvalCounts]) -> None:
    print(_bold("%-10s %8s %10s %8s %9s %9s %9s" %
                ("label", "correct", "predicted", "gold", "P", "R", "F1")))
    for label in sorted(per_label, key=label_sort_key):
        c = per_label[label]
        print("%-10s %8d %10d %8d %9.4f %9.4f %9.4f"
              % (label, c.correct, c.predicted, c.gold, c.precision, c.recall, c.f1))


def _counts_json(counts: EvalCounts) -> dict:
    return {"correct": counts.correct, "predicted": counts.predicted,
            "gold": counts.gold, "precision": round(counts.precision, 4),
            "recall": round(counts.recall, 4), "f1": round(counts.f1, 4)}


def _report_json(report: ScoreReport, flags: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "srl-score %s" % __version__,
        "flags": flags,
        "metric": report.metric,
        "mode": report.mode,
        "predicates": _counts_json(report.predicate_counts),
        "arguments": _counts_json(report.argument_counts),
        "per_label": {label: _counts_json(report.per_label[label])
                      for label in sorted(report.per_label, key=label_sort_key)},
    }


def cmd_evaluate(args) -> int:
    mode = _resolve_mode(args)
    gold = load_corpus(args.gold, args.format, args.words, args.senses)
    system = load_corpus(args.system, args.format, args.words, args.senses_system)
    metric = _metric_name(args.metric, mode)
    report = evaluate(gold, system, metric, mode)
    print(_bold("Metric: %s  Mode: %s" % (metric, mode)))
    print("Predicate F1: %.4f  (%s)" % (report.predicate_counts.f1,
                                        _counts_line("", report.predicate_counts).strip()))
    print("Argument F1: %.4f  (%s)" % (report.argument_counts.f1,
                                       _counts_line("", report.argument_counts).strip()))
    if args.per_label:
        _print_per_label(report.per_label)
    if args.json:
        flags = {"gold": args.gold, "system": args.system, "format": args.format,
                 "metric": args.metric, "mode": mode, "words": args.words,
                 "senses": args.senses, "per_label": args.per_label}
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(_report_json(report, flags), handle, indent=2)
            handle.write("\n")
    return EXIT_OK


def cmd_compare(args) -> int:
    mode = _resolve_mode(args)
    gold = load_corpus(args.gold, args.format, args.words, args.senses)
    system = load_corpus(args.system, args.format, args.words, args.senses_system)
    legacy_metric = _metric_name("legacy", mode)
    legacy = evaluate(gold, system, legacy_metric, mode)
    strict = evaluate(gold, system, "primesrl", mode)
    print(_bold("%-12s %10s %8s %8s %8s" % ("metric", "pred F1", "arg P", "arg R", "arg F1")))
    for report in (legacy, strict):
        print("%-12s %10.4f %8.4f %8.4f %8.4f"
              % (report.metric, report.predicate_counts.f1,
                 report.argument_counts.precision, report.argument_counts.recall,
                 report.argument_counts.f1))
    delta = strict.argument_counts.f1 - legacy.argument_counts.f1
    print("Argument F1 delta: %+.4f" % delta)
    return EXIT_OK


def cmd_stats(args) -> int:
    corpus = load_corpus(args.path, args.format, args.words, args.senses)
    stats = corpus_stats(corpus)
    print(_bold("Corpus statistics"))
    print("Sentences: %d" % stats.total_sentences)
    print("Predicates: %d" % stats.total_predicates)
    print("Arguments: %d" % stats.total_arguments)
    print("C-X: %.2f%%" % stats.pct_continuation)
    print("R-X: %.2f%%" % stats.pct_reference)
    for label in sorted(stats.per_label, key=label_sort_key):
        print("%-10s %6d" % (label, stats.per_label[label]))
    return EXIT_OK


def _add_io_args(parser, with_metric: bool) -> None:
    parser.add_argument("--format", choices=("conll09", "conll05"), default="conll09",
                        help="input file format (default: conll09)")
    parser.add_argument("--mode", choices=("head", "span"), default=None,
                        help="scoring mode (default: head for conll09, span for conll05)")
    parser.add_argument("--words", default=None,
                        help="token file shared by gold and system (conll05 only)")
    parser.add_argument("--senses", default=None,
                        help="sense sidecar for the gold side (conll05 only)")
    if with_metric:
        parser.add_argument("--metric", choices=("primesrl", "legacy"), default="primesrl",
                            help="scoring metric (default: primesrl)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srl-score",
        description="Score semantic role labeling output against gold data.")
    parser.add_argument("--version", action="version", version="srl-score %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evaluate", help="score one system file with one metric")
    ev.add_argument("gold")
    ev.add_argument("system")
    _add_io_args(ev, with_metric=True)
    ev.add_argument("--senses-system", default=None,
                    help="sense sidecar for the system side (conll05 only)")
    ev.add_argument("--per-label", action="store_true", help="print a per-label table")
    ev.add_argument("--json", default=None, metavar="PATH",
                    help="write a machine-readable report")
    ev.set_defaults(func=cmd_evaluate)

    cmp_ = sub.add_parser("compare", help="strict vs legacy metric, side by side")
    cmp_.add_argument("gold")
    cmp_.add_argument("system")
    _add_io_args(cmp_, with_metric=False)
    cmp_.add_argument("--senses-system", default=None,
                      help="sense sidecar for the system side (conll05 only)")
    cmp_.set_defaults(func=cmd_compare)

    st = sub.add_parser("stats", help="continuation/reference statistics of one file")
    st.add_argument("path")
    _add_io_args(st, with_metric=False)
    st.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except AlignmentError as exc:
        print("alignment error: %s" % exc, file=sys.stderr)
        return EXIT_ALIGN
    except (ConfigError, EmptyCorpus) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
