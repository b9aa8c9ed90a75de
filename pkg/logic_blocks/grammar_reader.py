"""
Reader for the line-oriented grammar file format.

    atom s, np, n .
    class tv(R, Obj, Subj) := tree(R, [right: Obj, left: Subj]) .
    entry loves : tv(s, maxproj(np), maxproj(np)) .

``%`` starts a comment, every statement ends with ``.``.  The reader only
builds the statement syntax tree; declarations are checked by the lexicon
compiler.
"""
import itertools
import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from logic_blocks.errors import GrammarSyntaxError


@dataclass(frozen=True)
class Ident:
    name: str
    line: int


@dataclass(frozen=True)
class VarRef:
    name: str
    line: int


@dataclass(frozen=True)
class RootLit:
    symbol: str
    features: Tuple[Tuple[str, Union[Ident, VarRef]], ...]
    line: int


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Term", ...]
    line: int


@dataclass(frozen=True)
class ListTerm:
    items: Tuple["Term", ...]
    line: int


@dataclass(frozen=True)
class LeafItem:
    direction: str
    term: "Term"
    line: int


Term = Union[Ident, VarRef, RootLit, Call, ListTerm, LeafItem]


@dataclass(frozen=True)
class AtomDecl:
    names: Tuple[str, ...]
    line: int


@dataclass(frozen=True)
class ClassClauseDecl:
    name: str
    params: Tuple[str, ...]
    body: Tuple[Term, ...]
    line: int


@dataclass(frozen=True)
class EntryDecl:
    word: str
    body: Tuple[Term, ...]
    line: int


Statement = Union[AtomDecl, ClassClauseDecl, EntryDecl]

_TOKEN = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>%[^\n]*)
  | (?P<define>:=)
  | (?P<name>[A-Za-z0-9_][A-Za-z0-9_'\-]*)
  | (?P<punct>[:.,()\[\]{}=&])
""", re.VERBOSE)


def tokenize(text):
    tokens = []
    line = 1
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            raise GrammarSyntaxError(f"unexpected character {text[position]!r}", line)
        kind = match.lastgroup
        if kind == "newline":
            line += 1
        elif kind not in ("space", "comment"):
            tokens.append((kind, match.group(kind), line))
        position = match.end()
    return tokens


def _is_variable(name):
    return name[0].isupper() or name[0] == "_"


class _Reader:
    def __init__(self, tokens):
        self.tokens = tokens
        self.position = 0
        self.anonymous = itertools.count(1)

    @property
    def line(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position][2]
        return self.tokens[-1][2] if self.tokens else 1

    def peek(self, offset=0):
        index = self.position + offset
        return self.tokens[index] if index < len(self.tokens) else (None, None, self.line)

    def take(self):
        token = self.peek()
        if token[0] is None:
            raise GrammarSyntaxError("unexpected end of file, missing '.'", self.line)
        self.position += 1
        return token

    def expect(self, value):
        kind, text, line = self.take()
        if text != value:
            raise GrammarSyntaxError(f"expected '{value}', found '{text}'", line)

    def accept(self, value):
        if self.peek()[1] == value and self.peek()[0] != "name":
            self.position += 1
            return True
        return False

    def name(self, what):
        kind, text, line = self.take()
        if kind != "name":
            raise GrammarSyntaxError(f"expected {what}, found '{text}'", line)
        return text, line

    def statements(self) -> List[Statement]:
        result = []
        while self.peek()[0] is not None:
            result.append(self.statement())
        return result

    def statement(self):
        keyword, line = self.name("'atom', 'class' or 'entry'")
        if keyword == "atom":
            names = [self.name("an atom name")[0]]
            while self.accept(","):
                names.append(self.name("an atom name")[0])
            for name in names:
                if _is_variable(name):
                    raise GrammarSyntaxError(f"atom '{name}' must start lowercase", line)
            self.expect(".")
            return AtomDecl(tuple(names), line)
        if keyword == "class":
            name, _ = self.name("a class name")
            if _is_variable(name):
                raise GrammarSyntaxError(f"class '{name}' must start lowercase", line)
            params = []
            if self.accept("("):
                params.append(self.parameter())
                while self.accept(","):
                    params.append(self.parameter())
                self.expect(")")
            if len(set(params)) != len(params):
                raise GrammarSyntaxError(f"repeated parameter in class '{name}'", line)
            self.expect_define()
            body = self.body()
            self.expect(".")
            return ClassClauseDecl(name, tuple(params), body, line)
        if keyword == "entry":
            word, _ = self.name("a word")
            self.expect(":")
            body = self.body()
            self.expect(".")
            return EntryDecl(word, body, line)
        raise GrammarSyntaxError(f"unknown statement '{keyword}'", line)

    def expect_define(self):
        kind, text, line = self.take()
        if kind != "define":
            raise GrammarSyntaxError(f"expected ':=', found '{text}'", line)

    def parameter(self):
        name, line = self.name("a parameter")
        if not _is_variable(name):
            raise GrammarSyntaxError(f"parameter '{name}' must start uppercase", line)
        return self.fresh(name)

    def fresh(self, name):
        """Every '_' is a variable of its own."""
        return f"_#{next(self.anonymous)}" if name == "_" else name

    def body(self):
        conjuncts = [self.term()]
        while self.accept("&"):
            conjuncts.append(self.term())
        return tuple(conjuncts)

    def term(self):
        kind, text, line = self.peek()
        if kind == "punct" and text == "[":
            self.take()
            items = []
            if not self.accept("]"):
                items.append(self.item())
                while self.accept(","):
                    items.append(self.item())
                self.expect("]")
            return ListTerm(tuple(items), line)
        name, line = self.name("a term")
        if _is_variable(name):
            return VarRef(self.fresh(name), line)
        if self.accept("("):
            args = [self.term()]
            while self.accept(","):
                args.append(self.term())
            self.expect(")")
            return Call(name, tuple(args), line)
        if self.accept("{"):
            features = []
            if not self.accept("}"):
                features.append(self.feature())
                while self.accept(","):
                    features.append(self.feature())
                self.expect("}")
            return RootLit(name, tuple(features), line)
        return Ident(name, line)

    def item(self):
        kind, text, line = self.peek()
        if kind == "name" and text in ("left", "right") and self.peek(1)[1] == ":":
            self.take()
            self.take()
            return LeafItem(text, self.term(), line)
        return self.term()

    def feature(self):
        attribute, line = self.name("an attribute")
        self.expect("=")
        value, _ = self.name("a feature value")
        return attribute, VarRef(self.fresh(value), line) if _is_variable(value) else Ident(value, line)


def read_grammar(text) -> List[Statement]:
    """Parse grammar text into statements, raising GrammarSyntaxError."""
    return _Reader(tokenize(text)).statements()
