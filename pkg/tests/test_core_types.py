"""Tests for the tree data model and the curried translation."""
import random

import pytest

from logic_blocks.core_types import (
    BAR,
    ArgSTree,
    Atom,
    Conn,
    Direction,
    Leaf,
    RootTerm,
    Var,
    atomic,
    category_text,
    check_levels,
    format_category,
    format_tree,
    from_curried,
    is_feature_free,
    parse_category,
    slash_size,
    to_curried,
    tree_atoms,
    validate_lexical_tree,
)
from logic_blocks.errors import CategorySyntaxError, LevelViolationError

NP = atomic("np")
N = atomic("n")
S = atomic("s")


def right(cat):
    return Leaf(Direction.RIGHT, cat)


def left(cat):
    return Leaf(Direction.LEFT, cat)


LOVES = ArgSTree(RootTerm("s"), (right(NP), left(NP)))
THAT = ArgSTree(RootTerm("n"), (right(S.with_slash([NP])), left(N)))


def random_tree(rng, depth, level=1):
    """Well-formed tree: leaves only at odd levels, slash elements only at even ones."""
    features = {}
    if rng.random() < 0.3:
        features[rng.choice(["case", "num"])] = rng.choice(["nom", "acc", "sg"])
    root = RootTerm(rng.choice(["s", "np", "n", "vp"]), tuple(features.items()))
    width = rng.randint(0, 2) if depth > 0 else 0
    children = [random_tree(rng, depth - 1, level + 1) for _ in range(width)]
    if level % 2:
        return ArgSTree(root, tuple(Leaf(rng.choice(list(Direction)), child) for child in children))
    return ArgSTree(root, slash=tuple(children))


class TestRootTerm:
    """Tests for root terms."""

    def test_features_sorted(self):
        """Feature order does not matter for equality."""
        assert RootTerm("np", (("num", "sg"), ("case", "nom"))) == RootTerm("np", {"case": "nom", "num": "sg"})

    def test_duplicate_attribute(self):
        """A repeated attribute is rejected."""
        with pytest.raises(ValueError):
            RootTerm("np", (("case", "nom"), ("case", "acc")))

    def test_format(self):
        assert str(RootTerm("np", {"case": "nom"})) == "np{case=nom}"

    def test_fresh_variables_differ(self):
        """Two variables with one name are still distinct."""
        assert Var("X") != Var("X")


class TestArgSTree:
    """Tests for ArgSTree helpers."""

    def test_slash_is_a_multiset(self):
        a = ArgSTree(RootTerm("s"), slash=(NP, N))
        b = ArgSTree(RootTerm("s"), slash=(N, NP))
        assert a == b

    def test_rest_drops_first_leaf(self):
        assert LOVES.rest() == ArgSTree(RootTerm("s"), (left(NP),))

    def test_maximal(self):
        assert NP.is_maximal
        assert not LOVES.is_maximal

    def test_format_tree(self):
        assert format_tree(NP) == "np"
        assert format_tree(LOVES) == "tree(s, [right: np, left: np])"
        assert format_tree(S.with_slash([NP])) == "slashed(s, [np])"

    def test_slash_size_counts_nested_elements(self):
        assert slash_size(THAT) == 1
        assert slash_size(LOVES) == 0

    def test_tree_atoms(self):
        assert tree_atoms(THAT) == {"n", "s", "np"}

    def test_feature_free(self):
        assert is_feature_free(LOVES)
        assert not is_feature_free(atomic("np", case="nom"))


class TestCurrying:
    """Tests for to_curried and from_curried."""

    def test_transitive_verb(self):
        assert format_category(to_curried(LOVES)) == "(s\\np)/np"

    def test_relative_pronoun(self):
        assert format_category(to_curried(THAT)) == "(n\\n)/(s|np)"

    def test_atom(self):
        assert to_curried(NP) == Atom(RootTerm("np"))

    def test_top_level_slash_has_no_curried_form(self):
        with pytest.raises(LevelViolationError):
            to_curried(S.with_slash([NP]))

    def test_complement_with_leaves_has_no_curried_form(self):
        """Leaves at an even level cannot be expressed."""
        tree = ArgSTree(RootTerm("s"), (right(LOVES),))
        assert category_text(tree) is None

    def test_decode_rejects_bar_at_odd_level(self):
        with pytest.raises(LevelViolationError):
            from_curried(Conn(Atom(RootTerm("s")), BAR, Atom(RootTerm("np"))))

    def test_check_levels_reports_offenders(self):
        category = Conn(Conn(Atom(RootTerm("s")), BAR, Atom(RootTerm("np"))), "/", Atom(RootTerm("np")))
        assert check_levels(category) == [(1, BAR)]

    def test_random_roundtrip(self):
        """Translation round-trips on random well-formed trees."""
        rng = random.Random(1995)
        for _ in range(1000):
            tree = random_tree(rng, rng.randint(0, 3))
            curried = to_curried(tree)
            assert check_levels(curried) == []
            assert from_curried(curried) == tree


class TestCategoryText:
    """Tests for the category text syntax."""

    @pytest.mark.parametrize("text", ["np", "(s\\np)/np", "(n\\n)/(s|np)", "np{case=nom}/n"])
    def test_parse_format(self, text):
        assert format_category(parse_category(text)) == text

    def test_unparenthesised_chain_rejected(self):
        with pytest.raises(CategorySyntaxError):
            parse_category("a/b/c")

    def test_feature_variables_shared_by_name(self):
        category = parse_category("s{agr=X}/np{agr=X}")
        assert category.result.root.features[0][1] is category.arg.root.features[0][1]

    def test_underscore_is_anonymous(self):
        category = parse_category("s{agr=_}/np{agr=_}")
        assert category.result.root.features[0][1] != category.arg.root.features[0][1]

    @pytest.mark.parametrize("text", ["", "(np", "np)", "/np", "np{case}"])
    def test_bad_text(self, text):
        with pytest.raises(CategorySyntaxError):
            parse_category(text)


class TestValidation:
    """Tests for lexical tree validation."""

    def test_valid_entries(self):
        assert validate_lexical_tree(LOVES, {"s", "np"}).ok
        assert validate_lexical_tree(THAT, {"s", "np", "n"}).ok

    def test_top_level_slash(self):
        report = validate_lexical_tree(S.with_slash([NP]))
        assert not report.ok

    def test_undeclared_atom(self):
        report = validate_lexical_tree(LOVES, {"s"})
        assert report.violations == ["undeclared atom 'np'"]

    def test_unbound_tree_variable(self):
        tree = ArgSTree(RootTerm("s"), (right(Var("T")),))
        assert not validate_lexical_tree(tree).ok

    def test_nested_slash(self):
        element = NP.with_slash([N])
        tree = ArgSTree(RootTerm("s"), (right(S.with_slash([element])),))
        assert any("its own slash" in v for v in validate_lexical_tree(tree).violations)
