"""
Syntactic data model of the lexicalized grammar.

An ArgSTree is the uncurried form of a categorial category: a root term,
an ordered list of direction-annotated leaves (expected complements) and
a slash multiset of trace categories its derivation must contain.  The
curried form is the familiar slash notation, e.g. ``(n\\n)/(s|np)``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, List, Optional, Tuple, Union

from logic_blocks.errors import CategorySyntaxError, LevelViolationError

_variable_ids = itertools.count(1)


@dataclass(frozen=True)
class Var:
    """A logic variable. Two variables are equal only if their ids are."""

    name: str = "_"
    id: int = field(default_factory=lambda: next(_variable_ids))

    def __str__(self):
        return f"{self.name}_{self.id}"


FeatureValue = Union[str, Var]


@dataclass(frozen=True)
class RootTerm:
    """Atomic category symbol plus a flat feature bundle."""

    symbol: str
    features: Tuple[Tuple[str, FeatureValue], ...] = ()

    def __post_init__(self):
        pairs = self.features.items() if isinstance(self.features, dict) else self.features
        pairs = tuple(sorted(pairs, key=lambda pair: pair[0]))
        names = [name for name, _ in pairs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate attribute in root term '{self.symbol}'")
        object.__setattr__(self, "features", pairs)

    def feature_map(self):
        return dict(self.features)

    def __str__(self):
        return format_root(self)


class Direction(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Leaf:
    dir: Direction
    cat: "TreeTerm"


@dataclass(frozen=True)
class ArgSTree:
    """
    Lexical tree description.

    Leaves are ordered head-adjacent first.  The slash is a multiset; it is
    kept sorted by its text so that equality is equality up to permutation.
    An STree is an ArgSTree with an empty slash.
    """

    root: RootTerm
    leaves: Tuple[Leaf, ...] = ()
    slash: Tuple["TreeTerm", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(self.leaves))
        object.__setattr__(self, "slash", tuple(sorted(self.slash, key=format_tree)))

    @property
    def is_maximal(self):
        return not self.leaves

    def rest(self):
        """The tree left over once the first leaf has been discharged."""
        return ArgSTree(self.root, self.leaves[1:], self.slash)

    def without_slash(self):
        return ArgSTree(self.root, self.leaves) if self.slash else self

    def with_slash(self, elements):
        return ArgSTree(self.root, self.leaves, tuple(elements))

    def __str__(self):
        return format_tree(self)


STree = ArgSTree
TreeTerm = Union[ArgSTree, Var]


def atomic(symbol, **features):
    """Maximal projection of a bare atom, e.g. ``atomic("np", case="nom")``."""
    return ArgSTree(RootTerm(symbol, tuple(features.items())))


# Curried categories

SLASH = "/"
BACKSLASH = "\\"
BAR = "|"

_OPERATOR = {Direction.RIGHT: SLASH, Direction.LEFT: BACKSLASH}
_DIRECTION = {SLASH: Direction.RIGHT, BACKSLASH: Direction.LEFT}


@dataclass(frozen=True)
class Atom:
    root: RootTerm

    def __str__(self):
        return format_category(self)


@dataclass(frozen=True)
class Conn:
    result: "CurriedCategory"
    op: str
    arg: "CurriedCategory"

    def __post_init__(self):
        if self.op not in (SLASH, BACKSLASH, BAR):
            raise ValueError(f"unknown connective {self.op!r}")

    def __str__(self):
        return format_category(self)


CurriedCategory = Union[Atom, Conn]


def to_curried(tree):
    """
    Curry an ArgSTree.

    Odd embedding levels encode leaves with ``/`` and ``\\``, even levels
    encode slash elements with ``|``.  Raises LevelViolationError when the
    tree has no curried counterpart (a slash where only leaves can be
    expressed, or leaves where only a slash can).
    """
    return _encode(tree, 1)


def _encode(tree, level):
    if isinstance(tree, Var):
        raise LevelViolationError(f"unbound category variable {tree}")
    category = Atom(tree.root)
    if level % 2:
        if tree.slash:
            raise LevelViolationError(f"slash on {format_tree(tree)} at odd level {level}")
        for leaf in reversed(tree.leaves):
            category = Conn(category, _OPERATOR[leaf.dir], _encode(leaf.cat, level + 1))
        return category
    if tree.leaves:
        raise LevelViolationError(f"leaves on {format_tree(tree)} at even level {level}")
    elements = sorted((_encode(element, level + 1) for element in tree.slash), key=format_category)
    for element in elements:
        category = Conn(category, BAR, element)
    return category


def from_curried(category):
    """Inverse of to_curried, up to slash permutation."""
    return _decode(category, 1)


def _decode(category, level):
    odd = bool(level % 2)
    connectives = []
    while isinstance(category, Conn):
        if (category.op == BAR) == odd:
            raise LevelViolationError(f"'{category.op}' at embedding level {level}")
        connectives.append(category)
        category = category.result
    if odd:
        leaves = tuple(Leaf(_DIRECTION[conn.op], _decode(conn.arg, level + 1)) for conn in connectives)
        return ArgSTree(category.root, leaves)
    return ArgSTree(category.root, slash=tuple(_decode(conn.arg, level + 1) for conn in connectives))


def check_levels(category, level=1):
    """Every (level, operator) pair breaking the odd/even discipline."""
    violations = []
    while isinstance(category, Conn):
        if (category.op == BAR) == bool(level % 2):
            violations.append((level, category.op))
        violations.extend(check_levels(category.arg, level + 1))
        category = category.result
    return violations


# Lexical tree well-formedness

@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def validate_lexical_tree(tree, atoms=None):
    """
    Check a lexical tree description.

    With the flat leaves representation the single-head-leaf, binary and
    head-path conditions hold by construction, so what remains is the
    recursive well-formedness of every embedded tree.  Violations are
    collected, never raised.
    """
    report = ValidationReport()
    if atoms is not None:
        report.violations.extend(f"undeclared atom '{symbol}'" for symbol in sorted(tree_atoms(tree) - set(atoms)))
    if isinstance(tree, ArgSTree) and tree.slash:
        report.violations.append(f"lexical head {format_tree(tree)} carries a slash")
    _validate(tree, report, in_slash=False)
    return report


def _validate(tree, report, in_slash):
    if isinstance(tree, Var):
        report.violations.append(f"unbound category variable {tree}")
        return
    if in_slash and tree.slash:
        report.violations.append(f"slash element {format_tree(tree)} carries its own slash")
    for leaf in tree.leaves:
        _validate(leaf.cat, report, in_slash=False)
    for element in tree.slash:
        _validate(element, report, in_slash=True)


def is_feature_free(tree):
    if isinstance(tree, Var):
        return True
    return (not tree.root.features
            and all(is_feature_free(leaf.cat) for leaf in tree.leaves)
            and all(is_feature_free(element) for element in tree.slash))


def tree_atoms(tree):
    """Set of atom symbols used anywhere in the tree."""
    if isinstance(tree, Var):
        return set()
    atoms = {tree.root.symbol}
    for leaf in tree.leaves:
        atoms |= tree_atoms(leaf.cat)
    for element in tree.slash:
        atoms |= tree_atoms(element)
    return atoms


def slash_size(tree):
    """Number of slash elements anywhere inside the tree."""
    if isinstance(tree, Var):
        return 0
    return (len(tree.slash)
            + sum(slash_size(leaf.cat) for leaf in tree.leaves)
            + sum(slash_size(element) for element in tree.slash))


# Variables

def map_variables(term, fn: Callable[[Var], object]):
    """Rebuild a term with every variable replaced by fn(variable)."""
    if isinstance(term, Var):
        return fn(term)
    if isinstance(term, str):
        return term
    if isinstance(term, RootTerm):
        if not term.features:
            return term
        return RootTerm(term.symbol, tuple((name, map_variables(value, fn)) for name, value in term.features))
    if isinstance(term, ArgSTree):
        return ArgSTree(map_variables(term.root, fn),
                        tuple(map_variables(leaf, fn) for leaf in term.leaves),
                        tuple(map_variables(element, fn) for element in term.slash))
    if isinstance(term, Leaf):
        return Leaf(term.dir, map_variables(term.cat, fn))
    if isinstance(term, Atom):
        return Atom(map_variables(term.root, fn))
    if isinstance(term, Conn):
        return Conn(map_variables(term.result, fn), term.op, map_variables(term.arg, fn))
    if isinstance(term, tuple):
        return tuple(map_variables(item, fn) for item in term)
    raise TypeError(f"not a term: {term!r}")


def iter_variables(term) -> Iterator[Var]:
    if isinstance(term, Var):
        yield term
    elif isinstance(term, RootTerm):
        for _, value in term.features:
            yield from iter_variables(value)
    elif isinstance(term, ArgSTree):
        yield from iter_variables(term.root)
        for leaf in term.leaves:
            yield from iter_variables(leaf.cat)
        for element in term.slash:
            yield from iter_variables(element)
    elif isinstance(term, Leaf):
        yield from iter_variables(term.cat)
    elif isinstance(term, Atom):
        yield from iter_variables(term.root)
    elif isinstance(term, Conn):
        yield from iter_variables(term.result)
        yield from iter_variables(term.arg)
    elif isinstance(term, tuple):
        for item in term:
            yield from iter_variables(item)


# Text forms

def format_root(root):
    if not root.features:
        return root.symbol
    body = ",".join(f"{name}={value}" for name, value in root.features)
    return f"{root.symbol}{{{body}}}"


def format_category(category, nested=False):
    if isinstance(category, Atom):
        return format_root(category.root)
    text = f"{format_category(category.result, True)}{category.op}{format_category(category.arg, True)}"
    return f"({text})" if nested else text


def format_tree(tree):
    """Grammar-term rendering: ``np``, ``tree(s, [right: np])``, ``slashed(s, [np])``."""
    if isinstance(tree, Var):
        return str(tree)
    text = format_root(tree.root)
    if tree.leaves:
        leaves = ", ".join(f"{leaf.dir.value}: {format_tree(leaf.cat)}" for leaf in tree.leaves)
        text = f"tree({text}, [{leaves}])"
    if tree.slash:
        text = f"slashed({text}, [{', '.join(format_tree(element) for element in tree.slash)}])"
    return text


_TOKEN = re.compile(r"\s*(?:(?P<atom>[a-z][A-Za-z0-9_]*(?:\{[^}]*\})?)|(?P<op>[/\\|])|(?P<open>\()|(?P<close>\)))")
_FEATURE = re.compile(r"\s*([a-z][A-Za-z0-9_]*)\s*=\s*([A-Za-z0-9_]+)\s*$")


def parse_category(text):
    """
    Read the canonical category text.

    Connectives carry no precedence: ``a/b/c`` is rejected, write
    ``(a/b)/c``.  Feature values starting with an uppercase letter or an
    underscore are variables, shared by name within one call; a bare ``_``
    is a new variable each time.
    """
    tokens = _tokenize(text)
    variables = {}
    category, position = _parse_expression(tokens, 0, variables, text)
    if position != len(tokens):
        raise CategorySyntaxError(f"unexpected '{tokens[position][1]}' in {text!r}; "
                                  "connectives must be parenthesised")
    return category


def _tokenize(text):
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None or match.end() == position:
            raise CategorySyntaxError(f"cannot read {stripped[position:]!r} in {text!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        position = match.end()
    if not tokens:
        raise CategorySyntaxError("empty category")
    return tokens


def _parse_expression(tokens, position, variables, text):
    left, position = _parse_operand(tokens, position, variables, text)
    if position < len(tokens) and tokens[position][0] == "op":
        op = tokens[position][1]
        right, position = _parse_operand(tokens, position + 1, variables, text)
        return Conn(left, op, right), position
    return left, position


def _parse_operand(tokens, position, variables, text):
    if position >= len(tokens):
        raise CategorySyntaxError(f"unexpected end of {text!r}")
    kind, value = tokens[position]
    if kind == "atom":
        return Atom(_parse_root(value, variables)), position + 1
    if kind == "open":
        inner, position = _parse_expression(tokens, position + 1, variables, text)
        if position >= len(tokens) or tokens[position][0] != "close":
            raise CategorySyntaxError(f"missing ')' in {text!r}")
        return inner, position + 1
    raise CategorySyntaxError(f"unexpected '{value}' in {text!r}")


def _parse_root(text, variables) -> RootTerm:
    symbol, _, rest = text.partition("{")
    if not rest:
        return RootTerm(symbol)
    features = []
    for item in rest.rstrip("}").split(","):
        if not item.strip():
            continue
        match = _FEATURE.match(item)
        if match is None:
            raise CategorySyntaxError(f"bad feature {item.strip()!r} on '{symbol}'")
        name, value = match.groups()
        if value == "_":
            value = Var()
        elif value[0].isupper() or value[0] == "_":
            value = variables.setdefault(value, Var(value))
        features.append((name, value))
    try:
        return RootTerm(symbol, tuple(features))
    except ValueError as exc:
        raise CategorySyntaxError(str(exc)) from exc


def category_text(tree) -> Optional[str]:
    """Curried text of a tree, or None when it has no curried form."""
    try:
        return format_category(to_curried(tree))
    except LevelViolationError:
        return None
