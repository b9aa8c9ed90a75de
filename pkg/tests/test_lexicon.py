"""Tests for grammar compilation and lexical expansion."""
import pytest

from logic_blocks.core_types import ArgSTree, Direction, Leaf, RootTerm, atomic, category_text, iter_variables
from logic_blocks.errors import CyclicGrammarError, GrammarError, GrammarSyntaxError
from logic_blocks.core_types import validate_lexical_tree
from logic_blocks.lexicon import check_acyclic, expand, load_grammar, load_grammar_file, movement_schema
from logic_blocks.unify import EMPTY, unify_stree

HEADER = "atom s, np, n .\nclass maxproj(R) := tree(R, []) .\n"


def curried(lexicon, word):
    return [category_text(tree) for tree in expand(word, lexicon)]


class TestDemoLexicon:
    """The English demo grammar."""

    def test_words(self, demo_lexicon):
        assert sorted(demo_lexicon.words) == ["big", "book", "john", "loves", "mary", "sleeps", "that", "the"]

    @pytest.mark.parametrize("word, category", [
        ("john", "np"),
        ("book", "n"),
        ("loves", "(s\\np)/np"),
        ("sleeps", "s\\np"),
        ("the", "np/n"),
        ("big", "n/n"),
        ("that", "(n\\n)/(s|np)"),
    ])
    def test_curried_entries(self, demo_lexicon, word, category):
        assert curried(demo_lexicon, word) == [category]

    def test_unknown_word(self, demo_lexicon):
        assert expand("zzz", demo_lexicon) == ()

    def test_flags(self, demo_lexicon):
        assert demo_lexicon.feature_free
        assert demo_lexicon.translatable
        assert demo_lexicon.warnings == ()

    def test_provenance(self, demo_lexicon):
        (expansion,) = demo_lexicon.expansions("that")
        assert expansion.provenance == ("rel#1", "maxproj#1", "maxproj#1", "movement#1")

    def test_cache_is_transparent(self, demo_text, demo_lexicon):
        lazy = load_grammar(demo_text, cache=False)
        for word in demo_lexicon.words:
            assert curried(lazy, word) == curried(demo_lexicon, word)

    def test_file_loader(self, data_dir):
        assert len(load_grammar_file(data_dir / "demo.lg").words) == 8


class TestVorfeld:
    """The verb-second grammar with the movement schema."""

    def test_two_alternatives(self, vorfeld_lexicon):
        assert sorted(curried(vorfeld_lexicon, "hans")) == ["cp/(vp|dp)", "dp"]

    def test_provenance_names_clauses(self, vorfeld_lexicon):
        trails = sorted(e.provenance[0] for e in vorfeld_lexicon.expansions("hans"))
        assert trails == ["determiner_phrase#1", "determiner_phrase#2"]

    def test_verb(self, vorfeld_lexicon):
        assert curried(vorfeld_lexicon, "liebt") == ["(vp/dp)/dp"]


class TestVerbMovement:
    """The finite verb leaves a trace at the end of a verb-final vp."""

    def test_verb_alternatives(self, verb_movement_lexicon):
        assert sorted(curried(verb_movement_lexicon, "liebt")) == ["(vp\\dp)\\dp", "c/(vp|((vp\\dp)\\dp))"]

    def test_verb_trace_has_leaves(self, verb_movement_lexicon):
        (moved,) = [tree for tree in expand("liebt", verb_movement_lexicon) if tree.root.symbol == "c"]
        (trace,) = moved.leaves[0].cat.slash
        assert [leaf.dir for leaf in trace.leaves] == [Direction.LEFT, Direction.LEFT]

    def test_fronting(self, verb_movement_lexicon):
        assert sorted(curried(verb_movement_lexicon, "maria")) == ["cp/(c|dp)", "dp"]


@pytest.mark.parametrize("name", ["demo.lg", "demo_vorfeld.lg", "demo_verb_movement.lg"])
def test_expansions_are_sound(data_dir, name):
    """Every stored expansion is well formed and unifies with a fresh evaluation of its entry."""
    lexicon = load_grammar_file(data_dir / name)
    lazy = load_grammar_file(data_dir / name, cache=False)
    for word in lexicon.words:
        fresh = [expansion.tree for expansion in lazy.expansions(word)]
        for tree in expand(word, lexicon):
            assert validate_lexical_tree(tree, lexicon.atoms).ok
            assert any(unify_stree(tree, other, EMPTY) is not None for other in fresh), (word, tree)


class TestExpansion:
    """Tests for class calls, conjunction and features."""

    def test_conjunction_unifies_descriptions(self):
        lexicon = load_grammar(
            "atom v .\n"
            "class agreeing(A) := tree(v{agr=A}, []) .\n"
            "class third := tree(v{agr=third, tense=T}, []) .\n"
            "entry runs : agreeing(X) & third .\n")
        (tree,) = expand("runs", lexicon)
        assert tree.root.feature_map()["agr"] == "third"

    def test_conjunction_clash_gives_no_expansion(self):
        lexicon = load_grammar(HEADER + "entry x : maxproj(np) & maxproj(n) .\n")
        assert expand("x", lexicon) == ()
        assert len(lexicon.warnings) == 1

    def test_alternatives_multiply(self):
        lexicon = load_grammar(
            HEADER
            + "class nominal := np .\nclass nominal := n .\n"
            + "class pair := tree(s, [right: nominal, left: nominal]) .\n"
            + "entry x : pair .\n")
        assert len(expand("x", lexicon)) == 4

    def test_shared_feature_variable(self):
        lexicon = load_grammar(
            "atom s, np .\n"
            "class iv(A) := tree(s{agr=A}, [left: np{agr=A}]) .\n"
            "entry walk : iv(_) .\n")
        (tree,) = expand("walk", lexicon)
        (variable,) = set(iter_variables(tree))
        assert tree.leaves[0].cat.root.feature_map()["agr"] == variable

    def test_each_lookup_is_fresh(self):
        lexicon = load_grammar("atom s .\nclass v(A) := tree(s{agr=A}, []) .\nentry x : v(_) .\n")
        (first,) = expand("x", lexicon)
        (second,) = expand("x", lexicon)
        assert set(iter_variables(first)).isdisjoint(iter_variables(second))

    def test_user_defined_movement_wins(self):
        lexicon = load_grammar(HEADER + "class movement(T, B) := T .\n"
                               "entry x : movement(tree(s, [right: np]), np) .\n")
        assert curried(lexicon, "x") == ["s/np"]

    def test_movement_schema(self):
        host = ArgSTree(RootTerm("n"), (Leaf(Direction.RIGHT, atomic("s")), Leaf(Direction.LEFT, atomic("n"))))
        ((tree, _),) = list(movement_schema(host, atomic("np")))
        assert tree.leaves[0].cat.slash == (atomic("np"),)
        assert tree.leaves[1] == host.leaves[1]

    def test_movement_schema_needs_a_complement(self):
        assert list(movement_schema(atomic("np"), atomic("np"))) == []

    def test_movement_schema_clashing_slash(self):
        host = ArgSTree(RootTerm("s"), (Leaf(Direction.RIGHT, atomic("s").with_slash([atomic("n")])),))
        assert list(movement_schema(host, atomic("np"))) == []

    def test_movement_schema_matching_slash(self):
        host = ArgSTree(RootTerm("s"), (Leaf(Direction.RIGHT, atomic("s").with_slash([atomic("np")])),))
        ((tree, _),) = list(movement_schema(host, atomic("np")))
        assert tree == host

    def test_movement_over_clashing_slash_vanishes(self):
        lexicon = load_grammar(HEADER + "entry x : movement(tree(s, [right: slashed(s, [n])]), np) .\n"
                                        "entry y : movement(tree(s, [right: slashed(s, [np])]), np) .\n")
        assert expand("x", lexicon) == ()
        assert lexicon.warnings == ("line 3: entry 'x' has no expansions",)
        assert curried(lexicon, "y") == ["s/(s|np)"]

    def test_underscores_are_distinct(self):
        lexicon = load_grammar(
            "atom s, np .\n"
            "class pair(A, B) := tree(s, [right: np{agr=A}, left: np{agr=B}]) .\n"
            "class loose := tree(s{agr=_}, [left: np{agr=_}]) .\n"
            "entry x : pair(_, _) .\n"
            "entry y : loose .\n")
        for word in ("x", "y"):
            (tree,) = expand(word, lexicon)
            assert len(set(iter_variables(tree))) == 2

    def test_named_variable_is_shared(self):
        lexicon = load_grammar("atom s, np .\nentry x : tree(s{agr=A}, [left: np{agr=A}]) .\n")
        (tree,) = expand("x", lexicon)
        assert len(set(iter_variables(tree))) == 1


class TestGrammarErrors:
    """Load-time errors, each with the offending line."""

    def test_cycle_named(self):
        with pytest.raises(CyclicGrammarError) as info:
            load_grammar("atom s .\nclass a := b .\nclass b := a .\nentry x : a .\n")
        assert set(info.value.cycle) == {"a", "b"}
        assert "cyclic class graph" in str(info.value)

    def test_check_acyclic_ok(self, demo_lexicon):
        assert check_acyclic(demo_lexicon.classes) is None

    @pytest.mark.parametrize("text, line", [
        ("atom s .\nentry x : np .\n", 2),
        ("atom s .\nentry x : tree(s, [right: vp]) .\n", 2),
        ("atom s .\n\nentry x : undefined(s) .\n", 3),
        ("atom s .\nclass c(A) := A .\nentry x : c(s, s) .\n", 3),
        ("atom s .\nclass c(A) := A .\nclass c := s .\n", 3),
        ("atom s .\nclass s := s .\n", 2),
        ("atom s .\nclass tree(A) := A .\n", 2),
        ("atom s, np .\nentry x : slashed(s, [np]) .\n", 2),
        ("atom s .\nentry x : tree(s, [s]) .\n", 2),
    ])
    def test_line_reported(self, text, line):
        with pytest.raises(GrammarError) as info:
            load_grammar(text)
        assert info.value.line == line

    def test_no_atoms(self):
        with pytest.raises(GrammarError):
            load_grammar("entry x : s .\n")

    def test_syntax_error_propagates(self):
        with pytest.raises(GrammarSyntaxError):
            load_grammar("atom s\n")
