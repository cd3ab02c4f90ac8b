"""Readers, writers and alignment for the two corpus file formats.

Head-based data uses the CoNLL-2009 column layout (FILLPRED / PRED / APRED
columns); span-based data uses the CoNLL-2005 props layout (one bracket
column per target verb, plus a separate one-token-per-line words file).
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from .model import (
    LabelError,
    PredicateInstance,
    RawArgument,
    RoleLabel,
    SenseLabel,
    Token,
    VERB_BASE,
)

FILLPRED_COL = 12  # 0-based; column 13 in the format description
PRED_COL = 13
FIRST_APRED_COL = 14


class ParseError(Exception):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.message = message
        self.line = line
        self.path = path
        super().__init__(str(self))

    def __str__(self) -> str:
        where = ""
        if self.path is not None:
            where += self.path + ":"
        if self.line is not None:
            where += "line %d: " % self.line
        elif where:
            where += " "
        return where + self.message


class ColumnCountMismatch(ParseError):
    pass


class DanglingApredColumn(ParseError):
    pass


class UnbalancedBracket(ParseError):
    pass


class OverlappingSpan(ParseError):
    pass


class AnchorMissing(ParseError):
    pass


class MalformedSenseWarning(UserWarning):
    """A predicate row whose PRED cell is not a parsable lemma.sense."""


class ModeMismatch(ValueError):
    pass


class AlignmentError(Exception):
    pass


class SentenceCountMismatch(AlignmentError):
    pass


class TokenMismatch(AlignmentError):
    def __init__(self, message: str, sentence: int, token: int):
        self.sentence = sentence
        self.token = token
        super().__init__(message)


@dataclass
class Sentence:
    tokens: list[Token]
    predicates: list[PredicateInstance]


@dataclass
class Corpus:
    sentences: list[Sentence]
    mode: str  # "head" | "span"


def _blocks(text: str):
    """Yield (first_line_number, [(line_number, stripped_line), ...]) per sentence."""
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if block:
                yield block
                block = []
            continue
        if line.startswith("#"):
            continue
        block.append((lineno, line))
    if block:
        yield block


def parse_conll09(text: str, path: str | None = None) -> Corpus:
    sentences = []
    for block in _blocks(text):
        rows = []
        for lineno, line in block:
            cols = line.split()
            if len(cols) < FIRST_APRED_COL:
                raise ColumnCountMismatch(
                    "expected at least %d columns, found %d" % (FIRST_APRED_COL, len(cols)),
                    line=lineno, path=path)
            rows.append((lineno, cols))
        pred_rows = [i for i, (_, cols) in enumerate(rows) if cols[FILLPRED_COL] == "Y"]
        n_preds = len(pred_rows)
        for lineno, cols in rows:
            if len(cols) < FIRST_APRED_COL + n_preds:
                raise ColumnCountMismatch(
                    "expected %d columns for %d predicates, found %d"
                    % (FIRST_APRED_COL + n_preds, n_preds, len(cols)),
                    line=lineno, path=path)
            if len(cols) > FIRST_APRED_COL + n_preds:
                raise DanglingApredColumn(
                    "row has %d argument columns but the sentence has %d predicate rows"
                    % (len(cols) - FIRST_APRED_COL, n_preds),
                    line=lineno, path=path)

        senses: dict[int, SenseLabel | None] = {}
        for i in pred_rows:
            lineno, cols = rows[i]
            cell = cols[PRED_COL]
            if cell == "_":
                senses[i] = None
            else:
                try:
                    senses[i] = SenseLabel.parse(cell)
                except LabelError:
                    warnings.warn(
                        "line %d: predicate sense cell %r is not lemma.sense; "
                        "recorded as sense-missing" % (lineno, cell),
                        MalformedSenseWarning)
                    senses[i] = None

        tokens = []
        for i, (lineno, cols) in enumerate(rows):
            try:
                index = int(cols[0])
            except ValueError:
                raise ParseError("token id %r is not an integer" % cols[0], line=lineno, path=path)
            if index != i + 1:
                raise ParseError("token ids not contiguous: expected %d, found %d"
                                 % (i + 1, index), line=lineno, path=path)
            tokens.append(Token(index=index, form=cols[1],
                                is_predicate=(i in senses), sense=senses.get(i)))

        predicates = []
        for k, pi in enumerate(pred_rows):
            args = []
            for i, (lineno, cols) in enumerate(rows):
                cell = cols[FIRST_APRED_COL + k]
                if cell == "_":
                    continue
                try:
                    label = RoleLabel.parse(cell)
                except LabelError as exc:
                    raise ParseError(str(exc), line=lineno, path=path)
                args.append(RawArgument(label=label, extent=(i + 1,)))
            predicates.append(PredicateInstance(anchor=pi + 1, sense=senses[pi],
                                                arguments=tuple(args)))
        sentences.append(Sentence(tokens=tokens, predicates=predicates))
    return Corpus(sentences=sentences, mode="head")


_PROPS_CELL = re.compile(r"^(?:\(([^\s()*]+))?\*(\))?$")


def parse_sense_sidecar(text: str, path: str | None = None) -> dict[tuple[int, int], SenseLabel]:
    """Optional sense annotations for span data: "sent<TAB>token<TAB>lemma.sense"."""
    senses = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected 3 fields (sentence, token, lemma.sense)",
                             line=lineno, path=path)
        try:
            sent, tok = int(parts[0]), int(parts[1])
            sense = SenseLabel.parse(parts[2])
        except (ValueError, LabelError) as exc:
            raise ParseError(str(exc), line=lineno, path=path)
        senses[(sent, tok)] = sense
    return senses


def parse_conll05(words: str, props: str,
                  senses: dict[tuple[int, int], SenseLabel] | None = None,
                  path: str | None = None) -> Corpus:
    word_blocks = [[line for _, line in block] for block in _blocks(words)]
    prop_blocks = list(_blocks(props))
    if len(word_blocks) != len(prop_blocks):
        raise ParseError("words file has %d sentences, props file has %d"
                         % (len(word_blocks), len(prop_blocks)), path=path)

    sentences = []
    for sent_no, (forms, block) in enumerate(zip(word_blocks, prop_blocks), start=1):
        rows = []
        for lineno, line in block:
            rows.append((lineno, line.split()))
        if len(rows) != len(forms):
            raise ParseError("sentence %d: %d props rows for %d words"
                             % (sent_no, len(rows), len(forms)),
                             line=rows[0][0], path=path)
        width = len(rows[0][1])
        for lineno, cols in rows:
            if len(cols) != width:
                raise ColumnCountMismatch("expected %d columns, found %d" % (width, len(cols)),
                                          line=lineno, path=path)
        if width < 1:
            raise ColumnCountMismatch("empty props row", line=rows[0][0], path=path)

        predicates = []
        anchors: dict[int, SenseLabel | None] = {}
        for j in range(width - 1):
            parts = []
            open_label: RoleLabel | None = None
            open_start = 0
            open_line = 0
            for i, (lineno, cols) in enumerate(rows):
                cell = cols[1 + j]
                m = _PROPS_CELL.match(cell)
                if not m:
                    raise ParseError("malformed props cell %r" % cell, line=lineno, path=path)
                opened, closed = m.group(1), m.group(2)
                if opened is not None:
                    if open_label is not None:
                        raise OverlappingSpan(
                            "span %s opened inside an open %s span" % (opened, open_label),
                            line=lineno, path=path)
                    try:
                        open_label = RoleLabel.parse(opened)
                    except LabelError as exc:
                        raise ParseError(str(exc), line=lineno, path=path)
                    open_start = i
                    open_line = lineno
                if closed is not None:
                    if open_label is None:
                        raise UnbalancedBracket("close bracket without an open span",
                                                line=lineno, path=path)
                    parts.append(RawArgument(label=open_label,
                                             extent=tuple(range(open_start + 1, i + 2))))
                    open_label = None
            if open_label is not None:
                raise UnbalancedBracket("span %s never closed" % open_label,
                                        line=open_line, path=path)

            verb_parts = [p for p in parts if p.label.base == VERB_BASE]
            if not verb_parts:
                raise AnchorMissing("predicate column %d has no V span" % (j + 1),
                                    line=rows[0][0], path=path)
            anchor = verb_parts[0].extent[0]
            sense = (senses or {}).get((sent_no, anchor))
            anchors[anchor] = sense
            predicates.append(PredicateInstance(anchor=anchor, sense=sense,
                                                arguments=tuple(parts)))

        tokens = [Token(index=i + 1, form=form,
                        is_predicate=(i + 1) in anchors, sense=anchors.get(i + 1))
                  for i, form in enumerate(forms)]
        predicates.sort(key=lambda p: p.anchor)
        sentences.append(Sentence(tokens=tokens, predicates=predicates))
    return Corpus(sentences=sentences, mode="span")


def serialize_conll09(corpus: Corpus) -> str:
    if corpus.mode != "head":
        raise ModeMismatch("CoNLL-2009 output requires a head-mode corpus")
    out = []
    for sentence in corpus.sentences:
        n = len(sentence.predicates)
        apred = [["_"] * len(sentence.tokens) for _ in range(n)]
        for k, pred in enumerate(sentence.predicates):
            for arg in pred.arguments:
                if len(arg.extent) != 1:
                    raise ModeMismatch("head-mode argument with multi-token extent")
                i = arg.extent[0] - 1
                if apred[k][i] != "_":
                    raise ValueError("two labels on one token for one predicate")
                apred[k][i] = str(arg.label)
        pred_by_anchor = {p.anchor: p for p in sentence.predicates}
        for token in sentence.tokens:
            pred = pred_by_anchor.get(token.index)
            fillpred = "Y" if pred is not None else "_"
            sense = str(pred.sense) if pred is not None and pred.sense is not None else "_"
            cols = ([str(token.index), token.form] + ["_"] * 10 + [fillpred, sense]
                    + [apred[k][token.index - 1] for k in range(n)])
            out.append("\t".join(cols))
        out.append("")
    return "\n".join(out)


def serialize_conll05(corpus: Corpus) -> tuple[str, str]:
    if corpus.mode != "span":
        raise ModeMismatch("CoNLL-2005 output requires a span-mode corpus")
    words_out = []
    props_out = []
    for sentence in corpus.sentences:
        n_tokens = len(sentence.tokens)
        col0 = ["-"] * n_tokens
        columns = []
        for pred in sentence.predicates:
            opens = [""] * n_tokens
            closes = [""] * n_tokens
            parts = list(pred.arguments)
            if not any(p.label.base == VERB_BASE for p in parts):
                parts.append(RawArgument(label=RoleLabel(VERB_BASE),
                                         extent=(pred.anchor,)))
            for part in parts:
                if list(part.extent) != list(range(part.extent[0], part.extent[-1] + 1)):
                    raise ValueError("span part %s is not contiguous" % (part.extent,))
                start, end = part.extent[0] - 1, part.extent[-1] - 1
                if opens[start] or closes[end]:
                    raise ValueError("overlapping span parts in one predicate column")
                opens[start] = "(" + str(part.label)
                closes[end] = ")"
            columns.append([opens[i] + "*" + closes[i] for i in range(n_tokens)])
            lemma = pred.sense.lemma if pred.sense is not None else \
                sentence.tokens[pred.anchor - 1].form
            col0[pred.anchor - 1] = lemma
        for i, token in enumerate(sentence.tokens):
            words_out.append(token.form)
            props_out.append("\t".join([col0[i]] + [col[i] for col in columns]))
        words_out.append("")
        props_out.append("")
    return "\n".join(words_out), "\n".join(props_out)


@dataclass
class AlignedSentence:
    index: int  # 1-based sentence number
    gold: Sentence
    system: Sentence
    pairs: list[tuple[PredicateInstance, PredicateInstance]] = field(default_factory=list)
    missed: list[PredicateInstance] = field(default_factory=list)
    spurious: list[PredicateInstance] = field(default_factory=list)


@dataclass
class AlignedCorpus:
    sentences: list[AlignedSentence]
    mode: str


def align(gold: Corpus, system: Corpus) -> AlignedCorpus:
    """Pair gold and system predicates by anchor token index."""
    if len(gold.sentences) != len(system.sentences):
        raise SentenceCountMismatch("gold has %d sentences, system has %d"
                                    % (len(gold.sentences), len(system.sentences)))
    aligned = []
    for idx, (gs, ss) in enumerate(zip(gold.sentences, system.sentences), start=1):
        if len(gs.tokens) != len(ss.tokens):
            raise TokenMismatch(
                "sentence %d: gold has %d tokens, system has %d"
                % (idx, len(gs.tokens), len(ss.tokens)),
                sentence=idx, token=min(len(gs.tokens), len(ss.tokens)) + 1)
        for gt, st in zip(gs.tokens, ss.tokens):
            if gt.form != st.form:
                raise TokenMismatch(
                    "sentence %d, token %d: form %r != %r"
                    % (idx, gt.index, gt.form, st.form),
                    sentence=idx, token=gt.index)
        sys_by_anchor = {p.anchor: p for p in ss.predicates}
        sent = AlignedSentence(index=idx, gold=gs, system=ss)
        for gp in gs.predicates:
            sp = sys_by_anchor.pop(gp.anchor, None)
            if sp is None:
                sent.missed.append(gp)
            else:
                sent.pairs.append((gp, sp))
        sent.spurious.extend(sys_by_anchor[a] for a in sorted(sys_by_anchor))
        aligned.append(sent)
    return AlignedCorpus(sentences=aligned, mode=gold.mode)
