"""The three scoring engines plus predicate scorers and corpus statistics.

Metrics:
  * strict ("primesrl"): joint predicate.sense credit, sense-conditioned core
    arguments, whole-argument continuation merging, referent-dependent
    reference credit; identical rules for head and span data.
  * legacy_head (CoNLL-2009 style): every labeled head token is an
    independent unit, literal label match, no sense conditioning.
  * legacy_span (CoNLL-2005 style): left-to-right span chaining, literal
    per-part labels, verb spans excluded, no sense conditioning.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .conll import AlignedCorpus, AlignedSentence, Corpus, align
from .model import (
    EvalCounts,
    MergedArgument,
    PredicateInstance,
    ScoreReport,
    VERB_BASE,
)
from .normalize import classify, merge_continuations

METRICS = ("primesrl", "legacy_head", "legacy_span")


class MissingGoldSense(ValueError):
    """A gold predicate without a sense where sense scoring was requested."""


class EmptyCorpus(ValueError):
    """Statistics requested for a corpus without any arguments."""


class _Tally:
    __slots__ = ("correct", "predicted", "gold")

    def __init__(self):
        self.correct = 0
        self.predicted = 0
        self.gold = 0

    def freeze(self) -> EvalCounts:
        return EvalCounts(self.correct, self.predicted, self.gold)


def _freeze_labels(tallies: dict[str, _Tally]) -> dict[str, EvalCounts]:
    return {label: t.freeze() for label, t in tallies.items()}


# ---------------------------------------------------------------------------
# predicate scorers

def _score_predicates(aligned: AlignedCorpus, correct_fn) -> EvalCounts:
    total = _Tally()
    for sent in aligned.sentences:
        total.predicted += len(sent.pairs) + len(sent.spurious)
        total.gold += len(sent.pairs) + len(sent.missed)
        for gp, sp in sent.pairs:
            if gp.sense is None:
                raise MissingGoldSense(
                    "sentence %d: gold predicate at token %d has no sense"
                    % (sent.index, gp.anchor))
            if sp.sense is not None and correct_fn(gp, sp):
                total.correct += 1
    return total.freeze()


def score_predicates_primesrl(aligned: AlignedCorpus) -> EvalCounts:
    """A predicate is correct only when lemma and sense number both match."""
    return _score_predicates(aligned, lambda gp, sp: gp.sense == sp.sense)


def score_predicates_legacy09(aligned: AlignedCorpus) -> EvalCounts:
    """Sense-number-only credit: buy.01 vs sell.01 counts as correct."""
    return _score_predicates(aligned, lambda gp, sp: gp.sense.sense_id == sp.sense.sense_id)


def score_predicates_trivial(aligned: AlignedCorpus) -> EvalCounts:
    """The always-correct convention for formats carrying no sense data."""
    total = _Tally()
    for sent in aligned.sentences:
        total.correct += len(sent.pairs)
        total.predicted += len(sent.pairs) + len(sent.spurious)
        total.gold += len(sent.pairs) + len(sent.missed)
    return total.freeze()


# ---------------------------------------------------------------------------
# strict argument scorer

def _sense_joint_ok(gp: PredicateInstance, sp: PredicateInstance) -> bool:
    if gp.sense is None:  # format without sense data: trivially correct
        return True
    return sp.sense is not None and sp.sense == gp.sense


def _units(pred: PredicateInstance, mode: str) -> list[MergedArgument]:
    return [u for u in merge_continuations(pred, mode) if not u.base_label.is_verb]


def _match_exact(sys_units: list[MergedArgument],
                 gold_units: list[MergedArgument]) -> set[int]:
    """One-to-one token-set matching within one label group; returns indices
    of matched system units. Exact-equality matching makes the greedy pass
    maximal."""
    available = Counter(u.tokens for u in gold_units)
    matched = set()
    for i, unit in enumerate(sys_units):
        if available[unit.tokens] > 0:
            available[unit.tokens] -= 1
            matched.add(i)
    return matched


def _primesrl_sentence(sent: AlignedSentence, mode: str,
                       labels: dict[str, _Tally]) -> _Tally:
    tally = _Tally()

    def bump(label, field_name, n=1):
        setattr(tally, field_name, getattr(tally, field_name) + n)
        t = labels.setdefault(label, _Tally())
        setattr(t, field_name, getattr(t, field_name) + n)

    for gp in sent.missed:
        for unit in _units(gp, mode):
            bump(str(unit.base_label), "gold")
    for sp in sent.spurious:
        for unit in _units(sp, mode):
            bump(str(unit.base_label), "predicted")

    for gp, sp in sent.pairs:
        gold_units = _units(gp, mode)
        sys_units = _units(sp, mode)
        sense_ok = _sense_joint_ok(gp, sp)
        for unit in gold_units:
            bump(str(unit.base_label), "gold")
        for unit in sys_units:
            bump(str(unit.base_label), "predicted")

        gold_by_key: dict[tuple[str, bool], list[MergedArgument]] = {}
        sys_by_key: dict[tuple[str, bool], list[MergedArgument]] = {}
        for unit in gold_units:
            gold_by_key.setdefault((unit.base_label.base, unit.is_reference), []).append(unit)
        for unit in sys_units:
            sys_by_key.setdefault((unit.base_label.base, unit.is_reference), []).append(unit)

        # Non-reference units first; reference credit depends on their outcome.
        referent_exists: dict[str, bool] = {}
        referent_ok: dict[str, bool] = {}
        for (base, is_ref), group in sys_by_key.items():
            if is_ref:
                continue
            matched = _match_exact(group, gold_by_key.get((base, False), []))
            ok_any = False
            for i, unit in enumerate(group):
                ok = i in matched and (sense_ok or classify(unit.base_label) != "core")
                ok_any = ok_any or ok
                if ok:
                    bump(str(unit.base_label), "correct")
            referent_exists[base] = True
            referent_ok[base] = ok_any

        for (base, is_ref), group in sys_by_key.items():
            if not is_ref:
                continue
            matched = _match_exact(group, gold_by_key.get((base, True), []))
            for i, unit in enumerate(group):
                ok = (i in matched
                      and (sense_ok or classify(unit.base_label) != "core")
                      and referent_exists.get(base, False)
                      and referent_ok.get(base, False))
                if ok:
                    bump(str(unit.base_label), "correct")
    return tally


def score_arguments_primesrl(aligned: AlignedCorpus,
                             mode: str) -> tuple[EvalCounts, dict[str, EvalCounts]]:
    labels: dict[str, _Tally] = {}
    total = _Tally()
    for sent in aligned.sentences:
        t = _primesrl_sentence(sent, mode, labels)
        total.correct += t.correct
        total.predicted += t.predicted
        total.gold += t.gold
    return total.freeze(), _freeze_labels(labels)


# ---------------------------------------------------------------------------
# legacy head scorer

def _head_items(pred: PredicateInstance):
    return [(str(a.label), a.extent) for a in pred.arguments if a.label.base != VERB_BASE]


def _legacy_head_sentence(sent: AlignedSentence, labels: dict[str, _Tally]) -> _Tally:
    tally = _Tally()

    def bump(label, field_name):
        setattr(tally, field_name, getattr(tally, field_name) + 1)
        t = labels.setdefault(label, _Tally())
        setattr(t, field_name, getattr(t, field_name) + 1)

    for gp in sent.missed:
        for label, _ in _head_items(gp):
            bump(label, "gold")
    for sp in sent.spurious:
        for label, _ in _head_items(sp):
            bump(label, "predicted")
    for gp, sp in sent.pairs:
        gold_items = _head_items(gp)
        sys_items = _head_items(sp)
        for label, _ in gold_items:
            bump(label, "gold")
        available = Counter(gold_items)
        for item in sys_items:
            bump(item[0], "predicted")
            if available[item] > 0:
                available[item] -= 1
                bump(item[0], "correct")
    return tally


def score_arguments_legacy_head(aligned: AlignedCorpus) -> tuple[EvalCounts, dict[str, EvalCounts]]:
    """Every labeled head token is an independent unit; literal label match."""
    labels: dict[str, _Tally] = {}
    total = _Tally()
    for sent in aligned.sentences:
        t = _legacy_head_sentence(sent, labels)
        total.correct += t.correct
        total.predicted += t.predicted
        total.gold += t.gold
    return total.freeze(), _freeze_labels(labels)


# ---------------------------------------------------------------------------
# legacy span scorer

def chain_spans(pred: PredicateInstance) -> list[tuple[tuple[str, tuple[int, ...]], ...]]:
    """Left-to-right chaining of span parts into units, verb spans excluded.

    An unprefixed X opens a new unit; a following C-X attaches to the most
    recently opened unit with base X; an orphan C-X opens a unit keyed by its
    literal label and later C-X parts chain onto it.
    """
    units: list[list[tuple[str, tuple[int, ...]]]] = []
    open_idx: dict[tuple[str, bool], int] = {}
    for arg in sorted(pred.arguments, key=lambda a: a.extent[0]):
        if arg.label.base == VERB_BASE:
            continue
        key = (arg.label.base, arg.label.is_reference)
        if arg.label.is_continuation and key in open_idx:
            units[open_idx[key]].append((str(arg.label), arg.extent))
        else:
            units.append([(str(arg.label), arg.extent)])
            open_idx[key] = len(units) - 1
    return [tuple(u) for u in units]


def _legacy_span_sentence(sent: AlignedSentence, labels: dict[str, _Tally]) -> _Tally:
    tally = _Tally()

    def bump(label, field_name):
        setattr(tally, field_name, getattr(tally, field_name) + 1)
        t = labels.setdefault(label, _Tally())
        setattr(t, field_name, getattr(t, field_name) + 1)

    def unit_label(unit):
        return unit[0][0]

    for gp in sent.missed:
        for unit in chain_spans(gp):
            bump(unit_label(unit), "gold")
    for sp in sent.spurious:
        for unit in chain_spans(sp):
            bump(unit_label(unit), "predicted")
    for gp, sp in sent.pairs:
        gold_units = chain_spans(gp)
        sys_units = chain_spans(sp)
        for unit in gold_units:
            bump(unit_label(unit), "gold")
        available = Counter(gold_units)
        for unit in sys_units:
            bump(unit_label(unit), "predicted")
            if available[unit] > 0:
                available[unit] -= 1
                bump(unit_label(unit), "correct")
    return tally


def score_arguments_legacy_span(aligned: AlignedCorpus) -> tuple[EvalCounts, dict[str, EvalCounts]]:
    """A unit is correct iff its full part sequence matches a gold unit."""
    labels: dict[str, _Tally] = {}
    total = _Tally()
    for sent in aligned.sentences:
        t = _legacy_span_sentence(sent, labels)
        total.correct += t.correct
        total.predicted += t.predicted
        total.gold += t.gold
    return total.freeze(), _freeze_labels(labels)


# ---------------------------------------------------------------------------
# corpus statistics

@dataclass
class CorpusStats:
    total_sentences: int
    total_predicates: int
    total_arguments: int  # raw parts before merging, verb spans excluded
    continuation_count: int
    reference_count: int
    per_label: dict[str, int] = field(default_factory=dict)

    @property
    def pct_continuation(self) -> float:
        return 100.0 * self.continuation_count / self.total_arguments

    @property
    def pct_reference(self) -> float:
        return 100.0 * self.reference_count / self.total_arguments


def corpus_stats(corpus: Corpus) -> CorpusStats:
    stats = CorpusStats(total_sentences=len(corpus.sentences),
                        total_predicates=0, total_arguments=0,
                        continuation_count=0, reference_count=0)
    for sentence in corpus.sentences:
        stats.total_predicates += len(sentence.predicates)
        for pred in sentence.predicates:
            for arg in pred.arguments:
                if arg.label.base == VERB_BASE:
                    continue
                stats.total_arguments += 1
                if arg.label.is_continuation:
                    stats.continuation_count += 1
                if arg.label.is_reference:
                    stats.reference_count += 1
                label = str(arg.label)
                stats.per_label[label] = stats.per_label.get(label, 0) + 1
    if stats.total_arguments == 0:
        raise EmptyCorpus("corpus has no scorable arguments")
    return stats


# ---------------------------------------------------------------------------
# dispatch

def _gold_has_senses(aligned: AlignedCorpus) -> bool:
    return any(gp.sense is not None
               for sent in aligned.sentences
               for gp in ([p for p, _ in sent.pairs] + sent.missed))


def evaluate(gold: Corpus, system: Corpus, metric: str, mode: str,
             per_sentence: bool = False) -> ScoreReport:
    """Score a gold/system pair with one metric and fill a full report."""
    if metric not in METRICS:
        raise ValueError("unknown metric %r" % metric)
    if mode not in ("head", "span"):
        raise ValueError("unknown mode %r" % mode)
    aligned = align(gold, system)

    if metric == "legacy_span" or not _gold_has_senses(aligned):
        predicate_counts = score_predicates_trivial(aligned)
    elif metric == "primesrl":
        predicate_counts = score_predicates_primesrl(aligned)
    else:
        predicate_counts = score_predicates_legacy09(aligned)

    labels: dict[str, _Tally] = {}
    sentence_counts = []
    total = _Tally()
    for sent in aligned.sentences:
        if metric == "primesrl":
            t = _primesrl_sentence(sent, mode, labels)
        elif metric == "legacy_head":
            t = _legacy_head_sentence(sent, labels)
        else:
            t = _legacy_span_sentence(sent, labels)
        total.correct += t.correct
        total.predicted += t.predicted
        total.gold += t.gold
        if per_sentence:
            sentence_counts.append(t.freeze())

    return ScoreReport(metric=metric, mode=mode,
                       predicate_counts=predicate_counts,
                       argument_counts=total.freeze(),
                       per_label=_freeze_labels(labels),
                       per_sentence=sentence_counts if per_sentence else None)
