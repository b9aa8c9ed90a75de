"""
Word-class hierarchy compiler.

A grammar is a set of named, parameterized class definitions (several
clauses for one name are alternatives) plus word entries.  Expanding an
entry walks up the hierarchy by calling superclasses, conjoining the
descriptions met on the way; since the class graph is acyclic the whole
lexicon is expanded once, at load time.
"""
import itertools
import logging
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from pathlib import Path
from types import MappingProxyType
from typing import Dict, Iterator, List, Optional, Tuple

from logic_blocks.core_types import (
    ArgSTree,
    Direction,
    Leaf,
    RootTerm,
    Var,
    category_text,
    is_feature_free,
    validate_lexical_tree,
)
from logic_blocks.errors import CyclicGrammarError, GrammarError
from logic_blocks.grammar_reader import (
    AtomDecl,
    Call,
    ClassClauseDecl,
    EntryDecl,
    Ident,
    LeafItem,
    ListTerm,
    RootLit,
    VarRef,
    read_grammar,
)
from logic_blocks.unify import EMPTY, apply, rename_apart, unify_stree_all

logger = logging.getLogger(__name__)

BUILTINS = {"tree": 2, "slashed": 2, "first_leaf_slash": 2}

PRELUDE = "class movement(T, Base) := first_leaf_slash(T, [Base]) .\n"


@dataclass(frozen=True)
class Clause:
    params: Tuple[str, ...]
    body: tuple
    line: int


@dataclass(frozen=True)
class ClassDef:
    name: str
    arity: int
    clauses: Tuple[Clause, ...]


@dataclass(frozen=True)
class WordEntry:
    surface: str
    body: tuple
    line: int


@dataclass(frozen=True)
class Expansion:
    """One alternative of a word, with the class#clause chain it came from."""

    tree: ArgSTree
    provenance: Tuple[str, ...]


def movement_schema(host, base, subst=EMPTY) -> Iterator[Tuple[ArgSTree, object]]:
    """
    Make base the single slash element of the host's first complement.

    A host without leaves, or whose first complement already carries a
    slash that does not unify with ``[base]``, yields nothing.
    """
    return _first_leaf_slash(host, (base,), subst)


def _first_leaf_slash(host, elements, subst):
    host = subst.walk(host)
    if not isinstance(host, ArgSTree) or not host.leaves:
        return
    first = host.leaves[0]
    complement = subst.walk(first.cat)
    if not isinstance(complement, ArgSTree):
        return
    for slashed, extended in _add_slash(complement, elements, subst):
        yield ArgSTree(host.root, (Leaf(first.dir, slashed),) + host.leaves[1:], host.slash), extended


def _add_slash(tree, elements, subst):
    if not tree.slash:
        yield tree.with_slash(elements), subst
        return
    for extended in unify_stree_all(tree, tree.with_slash(elements), subst):
        yield tree, extended


class _Expander:
    """Evaluates constraint bodies into tree alternatives."""

    def __init__(self, atoms, classes):
        self.atoms = atoms
        self.classes = classes

    def expand_entry(self, entry) -> List[Expansion]:
        results = []
        env = self._locals(entry.body, {})
        for value, subst, trail in self._conjunction(entry.body, env, EMPTY, (), entry.line):
            tree = apply(self._as_tree(value, entry.line), subst)
            results.append(Expansion(tree, trail))
        return results

    def _locals(self, body, env):
        env = dict(env)
        for name in _variable_names(body):
            if name not in env:
                env[name] = Var(name)
        return env

    def _conjunction(self, conjuncts, env, subst, trail, line):
        first, rest = conjuncts[0], conjuncts[1:]
        for value, subst1, trail1 in self._eval(first, env, subst, trail):
            if not rest:
                yield value, subst1, trail1
                continue
            tree = self._as_tree(value, line)
            for other, subst2, trail2 in self._conjunction(rest, env, subst1, trail1, line):
                for subst3 in unify_stree_all(tree, self._as_tree(other, line), subst2):
                    yield tree, subst3, trail2

    def _eval(self, term, env, subst, trail):
        if isinstance(term, VarRef):
            yield env[term.name], subst, trail
        elif isinstance(term, Ident):
            cls = self.classes.get(term.name)
            if cls is not None and cls.arity == 0:
                yield from self._call(cls, (), subst, trail)
            elif term.name in self.atoms:
                yield RootTerm(term.name), subst, trail
            else:
                yield term.name, subst, trail
        elif isinstance(term, RootLit):
            features = tuple((name, self._as_feature(env[value.name], term.line)
                              if isinstance(value, VarRef) else value.name)
                             for name, value in term.features)
            yield RootTerm(term.symbol, features), subst, trail
        elif isinstance(term, ListTerm):
            for items, subst1, trail1 in self._eval_all(term.items, env, subst, trail):
                yield tuple(items), subst1, trail1
        elif isinstance(term, LeafItem):
            direction = Direction(term.direction)
            for value, subst1, trail1 in self._eval(term.term, env, subst, trail):
                yield Leaf(direction, self._as_tree(value, term.line)), subst1, trail1
        elif isinstance(term, Call):
            if term.name in BUILTINS:
                yield from self._builtin(term, env, subst, trail)
            else:
                for args, subst1, trail1 in self._eval_all(term.args, env, subst, trail):
                    yield from self._call(self.classes[term.name], args, subst1, trail1)
        else:
            raise GrammarError(f"cannot evaluate {term!r}")

    def _eval_all(self, terms, env, subst, trail):
        if not terms:
            yield [], subst, trail
            return
        for value, subst1, trail1 in self._eval(terms[0], env, subst, trail):
            for rest, subst2, trail2 in self._eval_all(terms[1:], env, subst1, trail1):
                yield [value] + rest, subst2, trail2

    def _call(self, cls, args, subst, trail):
        for index, clause in enumerate(cls.clauses, 1):
            env = self._locals(clause.body, dict(zip(clause.params, args)))
            yield from self._conjunction(clause.body, env, subst, trail + (f"{cls.name}#{index}",), clause.line)

    def _builtin(self, term, env, subst, trail):
        line = term.line
        for (first, second), subst1, trail1 in self._eval_all(term.args, env, subst, trail):
            if term.name == "tree":
                root = self._as_root(first, line)
                if not isinstance(second, tuple) or not all(isinstance(leaf, Leaf) for leaf in second):
                    raise GrammarError("tree/2 expects a list of 'left:'/'right:' leaves", line)
                yield ArgSTree(root, second), subst1, trail1
                continue
            if not isinstance(second, tuple):
                raise GrammarError(f"{term.name}/2 expects a list as second argument", line)
            elements = tuple(self._as_tree(element, line) for element in second)
            host = self._as_tree(first, line)
            if term.name == "slashed":
                if isinstance(host, Var):
                    raise GrammarError("slashed/2 needs a tree description, not a bare variable", line)
                results = _add_slash(host, elements, subst1)
            else:
                results = _first_leaf_slash(host, elements, subst1)
            for tree, subst2 in results:
                yield tree, subst2, trail1

    def _as_root(self, value, line):
        if isinstance(value, RootTerm):
            return value
        if isinstance(value, ArgSTree) and not value.leaves and not value.slash:
            return value.root
        if isinstance(value, str):
            raise GrammarError(f"undeclared atom '{value}'", line)
        raise GrammarError("category root must be an atom", line)

    def _as_feature(self, value, line):
        if isinstance(value, (str, Var)):
            return value
        if isinstance(value, ArgSTree) and not value.leaves and not value.slash:
            value = value.root
        if isinstance(value, RootTerm) and not value.features:
            return value.symbol
        raise GrammarError("feature values must be atoms or variables", line)

    def _as_tree(self, value, line):
        if isinstance(value, (ArgSTree, Var)):
            return value
        if isinstance(value, RootTerm):
            return ArgSTree(value)
        if isinstance(value, str):
            raise GrammarError(f"undeclared atom '{value}'", line)
        raise GrammarError("expected a tree description", line)


def _variable_names(body):
    names = []

    def visit(term):
        if isinstance(term, VarRef):
            if term.name not in names:
                names.append(term.name)
        elif isinstance(term, RootLit):
            for _, value in term.features:
                visit(value)
        elif isinstance(term, (Call,)):
            for arg in term.args:
                visit(arg)
        elif isinstance(term, ListTerm):
            for item in term.items:
                visit(item)
        elif isinstance(term, LeafItem):
            visit(term.term)

    for conjunct in body:
        visit(conjunct)
    return names


def _called_classes(body, classes):
    called = set()

    def visit(term):
        if isinstance(term, Ident) and term.name in classes:
            called.add(term.name)
        elif isinstance(term, Call):
            if term.name in classes:
                called.add(term.name)
            for arg in term.args:
                visit(arg)
        elif isinstance(term, ListTerm):
            for item in term.items:
                visit(item)
        elif isinstance(term, LeafItem):
            visit(term.term)

    for conjunct in body:
        visit(conjunct)
    return called


def check_acyclic(classes) -> Optional[List[str]]:
    """None when the class-call graph has a topological order, else one cycle."""
    graph = {name: set().union(*(_called_classes(clause.body, classes) for clause in cls.clauses))
             for name, cls in classes.items()}
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        cycle = list(exc.args[1])
        return cycle[:-1] if len(cycle) > 1 and cycle[0] == cycle[-1] else cycle
    return None


class CompiledLexicon:
    """
    Atoms, class table and expanded word entries.

    Every lookup returns fresh copies of the stored trees.  With
    ``cache=False`` expansions are recomputed on each lookup instead of
    being served from the table built at load time.
    """

    def __init__(self, atoms, classes, entries, cache=True, warnings=()):
        self.atoms = frozenset(atoms)
        self.classes = MappingProxyType(dict(classes))
        self.cache = cache
        self.warnings = tuple(warnings)
        self._entries: Dict[str, Tuple[WordEntry, ...]] = {}
        for entry in entries:
            self._entries[entry.surface] = self._entries.get(entry.surface, ()) + (entry,)
        self._expander = _Expander(self.atoms, self.classes)
        self._table = MappingProxyType({word: self._compute(word) for word in self._entries})

    def _compute(self, word) -> Tuple[Expansion, ...]:
        return tuple(itertools.chain.from_iterable(
            self._expander.expand_entry(entry) for entry in self._entries.get(word, ())))

    @property
    def words(self):
        return tuple(self._entries)

    def expansions(self, word) -> Tuple[Expansion, ...]:
        if self.cache:
            return self._table.get(word, ())
        return self._compute(word)

    def expand(self, word) -> Tuple[ArgSTree, ...]:
        return tuple(rename_apart(expansion.tree) for expansion in self.expansions(word))

    def entry_lines(self, word):
        return tuple(entry.line for entry in self._entries.get(word, ()))

    @property
    def feature_free(self):
        return all(is_feature_free(expansion.tree)
                   for expansions in self._table.values() for expansion in expansions)

    @property
    def translatable(self):
        return all(category_text(expansion.tree) is not None
                   for expansions in self._table.values() for expansion in expansions)


def expand(word, lexicon) -> Tuple[ArgSTree, ...]:
    """All alternatives of word with fresh variables; unknown words give ()."""
    return lexicon.expand(word)


def load_grammar(text, cache=True) -> CompiledLexicon:
    """
    Compile grammar text.

    Raises GrammarSyntaxError, GrammarError or CyclicGrammarError.  Words
    without any expansion are reported as warnings on the result.
    """
    statements = read_grammar(text)
    atoms: List[str] = []
    clauses: Dict[str, List[ClassClauseDecl]] = {}
    entries: List[WordEntry] = []
    for statement in statements:
        if isinstance(statement, AtomDecl):
            atoms.extend(name for name in statement.names if name not in atoms)
        elif isinstance(statement, ClassClauseDecl):
            clauses.setdefault(statement.name, []).append(statement)
        elif isinstance(statement, EntryDecl):
            entries.append(WordEntry(statement.word, statement.body, statement.line))
    if not atoms:
        raise GrammarError("no atoms declared")
    if "movement" not in clauses:
        clauses["movement"] = [statement for statement in read_grammar(PRELUDE)]

    classes = {}
    for name, group in clauses.items():
        if name in BUILTINS:
            raise GrammarError(f"class '{name}' redefines a builtin", group[0].line)
        if name in atoms:
            raise GrammarError(f"'{name}' is declared both as atom and as class", group[0].line)
        arity = len(group[0].params)
        for clause in group[1:]:
            if len(clause.params) != arity:
                raise GrammarError(f"class '{name}' defined with {len(clause.params)} and {arity} parameters",
                                   clause.line)
        classes[name] = ClassDef(name, arity, tuple(Clause(c.params, c.body, c.line) for c in group))

    for cls in classes.values():
        for clause in cls.clauses:
            _check_body(clause.body, atoms, classes, set(clause.params), clause.line)
    for entry in entries:
        _check_body(entry.body, atoms, classes, set(), entry.line)

    cycle = check_acyclic(classes)
    if cycle is not None:
        raise CyclicGrammarError(cycle)

    lexicon = CompiledLexicon(atoms, classes, entries, cache=cache)
    warnings = []
    for word in lexicon.words:
        expansions = lexicon._table[word]
        if not expansions:
            line = lexicon.entry_lines(word)[0]
            warnings.append(f"line {line}: entry '{word}' has no expansions")
        for expansion in expansions:
            report = validate_lexical_tree(expansion.tree, lexicon.atoms)
            if not report.ok:
                line = lexicon.entry_lines(word)[0]
                raise GrammarError(f"entry '{word}': {'; '.join(report.violations)}", line)
    lexicon.warnings = tuple(warnings)
    for warning in warnings:
        logger.warning(warning)
    logger.debug("compiled %d atoms, %d classes, %d words", len(atoms), len(classes), len(lexicon.words))
    return lexicon


def load_grammar_file(path, cache=True) -> CompiledLexicon:
    return load_grammar(Path(path).read_text(encoding="utf-8"), cache=cache)


def _check_body(body, atoms, classes, params, line):
    """Static checks: declared classes and atoms, call arities."""

    def visit(term, position):
        if isinstance(term, Ident):
            if position == "root" and term.name not in atoms:
                raise GrammarError(f"undeclared atom '{term.name}'", term.line)
            if position == "tree" and term.name not in atoms and term.name not in classes:
                raise GrammarError(f"undeclared atom or class '{term.name}'", term.line)
            if position == "tree" and term.name in classes and classes[term.name].arity != 0:
                raise GrammarError(f"class '{term.name}' expects {classes[term.name].arity} arguments",
                                   term.line)
        elif isinstance(term, VarRef):
            return
        elif isinstance(term, RootLit):
            if term.symbol not in atoms:
                raise GrammarError(f"undeclared atom '{term.symbol}'", term.line)
        elif isinstance(term, Call):
            if term.name in BUILTINS:
                arity = BUILTINS[term.name]
            elif term.name in classes:
                arity = classes[term.name].arity
            else:
                raise GrammarError(f"undeclared class '{term.name}'", term.line)
            if len(term.args) != arity:
                raise GrammarError(f"'{term.name}' expects {arity} arguments, got {len(term.args)}", term.line)
            if term.name == "tree":
                visit(term.args[0], "root")
                visit(term.args[1], "leaves")
            elif term.name in BUILTINS:
                visit(term.args[0], "tree")
                visit(term.args[1], "trees")
            else:
                for arg in term.args:
                    visit(arg, "any")
        elif isinstance(term, ListTerm):
            for item in term.items:
                if position == "leaves" and not isinstance(item, LeafItem):
                    raise GrammarError("leaf list items must be 'left: T' or 'right: T'", term.line)
                visit(item, "tree" if position in ("leaves", "trees") else "any")
        elif isinstance(term, LeafItem):
            visit(term.term, "tree")

    for conjunct in body:
        visit(conjunct, "tree")
