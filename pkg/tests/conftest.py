"""Shared loaders for the corpora under tests/data."""

from pathlib import Path

from primesrl import Corpus, parse_conll05, parse_conll09, parse_sense_sidecar

DATA = Path(__file__).parent / "data"


def load_head(name: str) -> Corpus:
    path = DATA / (name + ".conll")
    return parse_conll09(path.read_text(), path=str(path))


def load_span(words: str, name: str, senses: str | None = None) -> Corpus:
    sidecar = None
    if senses is not None:
        sidecar = parse_sense_sidecar((DATA / senses).read_text(), path=senses)
    path = DATA / (name + ".props")
    return parse_conll05((DATA / (words + ".words")).read_text(),
                         path.read_text(), senses=sidecar, path=str(path))


def counts(ev) -> tuple[int, int, int]:
    return (ev.correct, ev.predicted, ev.gold)
