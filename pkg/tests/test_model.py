import pytest

from primesrl import EvalCounts, RoleLabel, SenseLabel, f1, merge_counts
from primesrl.model import (
    LabelError,
    MergedArgument,
    PredicateInstance,
    RawArgument,
    Token,
    label_sort_key,
)


class TestSenseLabel:
    def test_parse(self):
        s = SenseLabel.parse("buy.01")
        assert (s.lemma, s.sense_id) == ("buy", "01")
        assert str(s) == "buy.01"

    def test_single_digit_is_padded(self):
        assert SenseLabel.parse("buy.1") == SenseLabel.parse("buy.01")
        assert SenseLabel.parse("buy.1").sense_id == "01"

    def test_lemma_may_contain_separators(self):
        s = SenseLabel.parse("buy_out.03")
        assert (s.lemma, s.sense_id) == ("buy_out", "03")
        # dots inside the lemma: the sense number is after the last dot
        assert SenseLabel.parse("a.b.02").lemma == "a.b"

    @pytest.mark.parametrize("bad", ["buy", "buy.", ".01", "buy.xx", ""])
    def test_rejects_malformed(self, bad):
        with pytest.raises(LabelError):
            SenseLabel.parse(bad)


class TestRoleLabel:
    def test_plain(self):
        lbl = RoleLabel.parse("A0")
        assert lbl == RoleLabel("A0")
        assert lbl.is_core and not lbl.is_modifier and not lbl.is_verb

    def test_prefixes(self):
        lbl = RoleLabel.parse("C-A1")
        assert lbl.is_continuation and not lbl.is_reference
        lbl = RoleLabel.parse("R-A0")
        assert lbl.is_reference and not lbl.is_continuation

    def test_prefix_order_does_not_matter(self):
        assert RoleLabel.parse("C-R-A0") == RoleLabel.parse("R-C-A0")
        assert str(RoleLabel.parse("C-R-A0")) == "R-C-A0"

    @pytest.mark.parametrize("bad", ["C-C-A0", "R-R-A0", "C-R-C-A0", ""])
    def test_rejects_nested_or_empty(self, bad):
        with pytest.raises(LabelError):
            RoleLabel.parse(bad)

    def test_canonical_spellings(self):
        assert RoleLabel.parse("ARG0") == RoleLabel.parse("A0")
        assert RoleLabel.parse("ARGM-TMP") == RoleLabel.parse("AM-TMP")
        assert RoleLabel.parse("TMP") == RoleLabel.parse("AM-TMP")
        assert RoleLabel.parse("C-ARG1") == RoleLabel.parse("C-A1")

    def test_families(self):
        assert RoleLabel.parse("AM-TMP").is_modifier
        assert RoleLabel.parse("V").is_verb
        assert RoleLabel.parse("AA").is_core

    def test_without_continuation(self):
        lbl = RoleLabel.parse("C-R-A0").without_continuation()
        assert lbl == RoleLabel("A0", False, True)

    def test_round_trip(self):
        for text in ("A0", "C-A1", "R-A0", "R-C-A2", "AM-TMP", "C-AM-LOC", "V"):
            assert str(RoleLabel.parse(text)) == text


def test_label_sort_key_order():
    shuffled = ["AM-TMP", "C-A1", "A1", "R-A0", "A0", "AM-LOC"]
    assert sorted(shuffled, key=label_sort_key) == [
        "A0", "R-A0", "A1", "C-A1", "AM-LOC", "AM-TMP"]


class TestEvalCounts:
    def test_f1_values(self):
        assert f1(EvalCounts(1, 3, 3)) == pytest.approx((1 / 3, 1 / 3, 1 / 3))
        p, r, score = f1(EvalCounts(2, 4, 3))
        assert (p, r) == pytest.approx((0.5, 2 / 3))
        assert score == pytest.approx(4 / 7)

    def test_zero_denominators_yield_zero(self):
        assert f1(EvalCounts(0, 0, 0)) == (0.0, 0.0, 0.0)
        assert f1(EvalCounts(0, 5, 0)) == (0.0, 0.0, 0.0)
        assert f1(EvalCounts(0, 0, 5)) == (0.0, 0.0, 0.0)

    def test_perfect(self):
        assert f1(EvalCounts(3, 3, 3)) == (1.0, 1.0, 1.0)

    def test_validation(self):
        with pytest.raises(ValueError):
            EvalCounts(2, 1, 3)
        with pytest.raises(ValueError):
            EvalCounts(-1, 0, 0)

    def test_merge_is_a_monoid(self):
        a, b, c = EvalCounts(1, 2, 3), EvalCounts(0, 4, 1), EvalCounts(2, 2, 2)
        zero = EvalCounts()
        assert merge_counts(a, zero) == a
        assert merge_counts(a, b) == merge_counts(b, a)
        assert merge_counts(merge_counts(a, b), c) == merge_counts(a, merge_counts(b, c))
        assert merge_counts(a, b) == EvalCounts(1, 6, 4)


class TestStructures:
    def test_token_index_must_be_positive(self):
        with pytest.raises(ValueError):
            Token(0, "w")

    def test_raw_argument_extent_validation(self):
        with pytest.raises(ValueError):
            RawArgument(RoleLabel("A0"), ())
        with pytest.raises(ValueError):
            RawArgument(RoleLabel("A0"), (3, 2))
        with pytest.raises(ValueError):
            RawArgument(RoleLabel("A0"), (2, 2))

    def test_predicate_rejects_duplicate_parts(self):
        arg = RawArgument(RoleLabel("A0"), (3,))
        with pytest.raises(ValueError):
            PredicateInstance(anchor=1, sense=None, arguments=(arg, arg))

    def test_merged_argument_never_carries_continuation(self):
        with pytest.raises(ValueError):
            MergedArgument(base_label=RoleLabel("A0", is_continuation=True), tokens=(1,))
        unit = MergedArgument(base_label=RoleLabel("A0", False, True), tokens=(1, 2))
        assert unit.is_reference
