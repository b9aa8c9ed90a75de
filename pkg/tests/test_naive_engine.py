"""Tests for the non-threading reference engine."""
import pytest

from logic_blocks.core_types import atomic
from logic_blocks.naive_engine import Token, TraceItem, default_trace_budget, interleavings, merge, parse_naive
from logic_blocks.parser import parse_target


def naive(lexicon, sentence, target, budget=None):
    return parse_naive(sentence.split(), parse_target(target), lexicon, budget)


class TestMerge:
    def test_interleavings_keep_order(self):
        merged = set(interleavings((1, 2), ("a",)))
        assert merged == {(1, 2, "a"), (1, "a", 2), ("a", 1, 2)}

    def test_interleavings_with_empty(self):
        assert list(interleavings((), ())) == [()]

    def test_traces_in_any_order(self):
        a, b = TraceItem(atomic("np")), TraceItem(atomic("n"))
        assert len(merge((Token("x"),), [a, b])) == 6

    def test_equal_traces_not_repeated(self):
        a = TraceItem(atomic("np"))
        x = Token("x")
        assert set(merge((x,), [a, a])) == {(a, a, x), (a, x, a), (x, a, a)}
        assert len(merge((x,), [a, a])) == 3


class TestParseNaive:
    """Results on the English demo grammar."""

    def test_transitive(self, demo_lexicon):
        assert naive(demo_lexicon, "john loves mary", "s") == {atomic("s")}

    def test_missing_object(self, demo_lexicon):
        assert naive(demo_lexicon, "john loves", "s", budget=0) == set()

    def test_relative_clause(self, demo_lexicon):
        assert naive(demo_lexicon, "the book that john loves", "np") == {atomic("np")}

    def test_relative_clause_needs_budget(self, demo_lexicon):
        assert naive(demo_lexicon, "the book that john loves", "np", budget=0) == set()

    def test_unused_trace_rejected(self, demo_lexicon):
        assert naive(demo_lexicon, "the book that john loves mary", "np") == set()

    def test_empty_input(self, demo_lexicon):
        assert naive(demo_lexicon, "", "np") == set()

    def test_vorfeld(self, vorfeld_lexicon):
        assert naive(vorfeld_lexicon, "hans liebt maria", "cp") == {atomic("cp")}

    def test_default_budget(self, demo_lexicon):
        """One slash element in the lexicon, so one trace per token."""
        assert default_trace_budget(demo_lexicon, 5) == 5

    def test_negative_budget(self, demo_lexicon):
        with pytest.raises(ValueError):
            naive(demo_lexicon, "john", "np", budget=-1)
