"""Core data model: labels, sentences, predicates, arguments and score tallies."""

from __future__ import annotations

from dataclasses import dataclass, field

CORE_BASES = ("A0", "A1", "A2", "A3", "A4", "A5", "AA")
VERB_BASE = "V"

# Adjunct tags that circulate without the "AM-" prefix in some data files.
MODIFIER_TAGS = frozenset({
    "ADJ", "ADV", "CAU", "COM", "CXN", "DIR", "DIS", "DSP", "EXT", "GOL",
    "LOC", "LVB", "MNR", "MOD", "NEG", "PNC", "PRD", "PRP", "PRR", "REC",
    "TM", "TMP",
})


class LabelError(ValueError):
    """A role or sense label string that cannot be parsed."""


@dataclass(frozen=True)
class SenseLabel:
    """A predicate sense as a (lemma, sense number) pair, e.g. buy.01.

    The sense number is zero-padded to two digits on construction so that
    "buy.1" and "buy.01" compare equal.
    """

    lemma: str
    sense_id: str

    def __post_init__(self):
        if not self.lemma:
            raise LabelError("empty lemma in sense label")
        if not self.sense_id or not self.sense_id.isdigit():
            raise LabelError("sense number must be a digit string, got %r" % (self.sense_id,))
        object.__setattr__(self, "sense_id", self.sense_id.zfill(2))

    @classmethod
    def parse(cls, text: str) -> "SenseLabel":
        # Lemmas may contain dots; the sense number is everything after the last one.
        lemma, sep, sense_id = text.rpartition(".")
        if not sep:
            raise LabelError("sense label %r has no '.' separator" % (text,))
        return cls(lemma, sense_id)

    def __str__(self) -> str:
        return f"{self.lemma}.{self.sense_id}"


def _canonical_base(text: str) -> str:
    """Map the long and shorthand PropBank spellings onto one canonical base."""
    if not text:
        raise LabelError("empty role label")
    if text.startswith("ARG"):
        text = "A" + text[3:]  # ARG0 -> A0, ARGM-TMP -> AM-TMP
    if text in MODIFIER_TAGS:
        text = "AM-" + text  # bare shorthand, e.g. TMP
    return text


@dataclass(frozen=True)
class RoleLabel:
    """A normalized argument label: base role plus optional C-/R- prefixes."""

    base: str
    is_continuation: bool = False
    is_reference: bool = False

    @classmethod
    def parse(cls, text: str) -> "RoleLabel":
        cont = ref = False
        rest = text
        while True:
            if rest.startswith("C-"):
                if cont:
                    raise LabelError("nested continuation prefix in %r" % (text,))
                cont = True
                rest = rest[2:]
            elif rest.startswith("R-"):
                if ref:
                    raise LabelError("nested reference prefix in %r" % (text,))
                ref = True
                rest = rest[2:]
            else:
                break
        return cls(_canonical_base(rest), cont, ref)

    @property
    def is_verb(self) -> bool:
        return self.base == VERB_BASE

    @property
    def is_core(self) -> bool:
        return self.base in CORE_BASES

    @property
    def is_modifier(self) -> bool:
        return self.base.startswith("AM-")

    def without_continuation(self) -> "RoleLabel":
        if not self.is_continuation:
            return self
        return RoleLabel(self.base, False, self.is_reference)

    def __str__(self) -> str:
        return ("R-" if self.is_reference else "") + ("C-" if self.is_continuation else "") + self.base


def label_sort_key(label: str):
    """Stable display order: core labels ascending, then modifiers alphabetical."""
    parsed = RoleLabel.parse(label)
    family = 0 if parsed.is_core else (2 if parsed.is_modifier else 1)
    return (family, parsed.base, parsed.is_reference, parsed.is_continuation)


@dataclass(frozen=True)
class Token:
    index: int  # 1-based position in the sentence
    form: str
    is_predicate: bool = False
    sense: SenseLabel | None = None

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("token index must be >= 1")


@dataclass(frozen=True)
class RawArgument:
    """One labeled part: a single head token or one contiguous span run."""

    label: RoleLabel
    extent: tuple[int, ...]

    def __post_init__(self):
        if not self.extent:
            raise ValueError("argument extent is empty")
        if list(self.extent) != sorted(set(self.extent)):
            raise ValueError("argument extent must be sorted and duplicate-free")


@dataclass(frozen=True)
class PredicateInstance:
    anchor: int
    sense: SenseLabel | None
    arguments: tuple[RawArgument, ...]

    def __post_init__(self):
        seen = set()
        for arg in self.arguments:
            key = (arg.label, arg.extent)
            if key in seen:
                raise ValueError("duplicate argument %s at %s" % (arg.label, arg.extent))
            seen.add(key)


@dataclass(frozen=True)
class MergedArgument:
    """A scoring unit after continuation merging.

    base_label never carries a C- prefix; the reference flag is preserved.
    first_part_is_base records whether the leftmost merged part carried the
    unprefixed label (only the legacy span scorer cares).
    """

    base_label: RoleLabel
    tokens: tuple[int, ...]
    part_count: int = 1
    first_part_is_base: bool = True

    def __post_init__(self):
        if self.base_label.is_continuation:
            raise ValueError("merged argument label must not carry a continuation prefix")
        if not self.tokens:
            raise ValueError("merged argument has no tokens")

    @property
    def is_reference(self) -> bool:
        return self.base_label.is_reference


@dataclass(frozen=True)
class EvalCounts:
    correct: int = 0
    predicted: int = 0
    gold: int = 0

    def __post_init__(self):
        if min(self.correct, self.predicted, self.gold) < 0:
            raise ValueError("negative count")
        if self.correct > self.predicted or self.correct > self.gold:
            raise ValueError("correct exceeds predicted or gold")

    @property
    def precision(self) -> float:
        return self.correct / self.predicted if self.predicted else 0.0

    @property
    def recall(self) -> float:
        return self.correct / self.gold if self.gold else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def __add__(self, other: "EvalCounts") -> "EvalCounts":
        return EvalCounts(self.correct + other.correct,
                          self.predicted + other.predicted,
                          self.gold + other.gold)


def f1(counts: EvalCounts) -> tuple[float, float, float]:
    """Precision, recall and F1 with the zero-denominator-yields-zero convention."""
    return counts.precision, counts.recall, counts.f1


def merge_counts(a: EvalCounts, b: EvalCounts) -> EvalCounts:
    """Field-wise sum; associative and commutative with identity (0, 0, 0)."""
    return a + b


@dataclass
class ScoreReport:
    metric: str  # primesrl | legacy_head | legacy_span
    mode: str  # head | span
    predicate_counts: EvalCounts
    argument_counts: EvalCounts
    per_label: dict[str, EvalCounts] = field(default_factory=dict)
    per_sentence: list[EvalCounts] | None = None
