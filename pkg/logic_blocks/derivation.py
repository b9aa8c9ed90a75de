"""
Proof trees recorded by the head-driven parser.

A head node (Lex or Trace) carries the proof that reduces its leaves; that
proof is a chain of ReduceRight/ReduceLeft nodes ending in an Axiom.

Golden serialization, one node per parenthesis group:

    (LEX loves@1-2 (s\\np)/np (REDR (LEX mary@2-3 np (AX)) (REDL (LEX john@0-1 np (AX)) (AX))))
"""
import re
from dataclasses import dataclass
from typing import Iterator, Union

from logic_blocks.core_types import ArgSTree, Leaf, category_text, format_tree
from logic_blocks.unify import Substitution, apply


@dataclass(frozen=True)
class Span:
    """Fencepost positions into the input, lo <= hi."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"bad span {self.lo}-{self.hi}")

    @property
    def empty(self):
        return self.lo == self.hi

    def __str__(self):
        return f"{self.lo}-{self.hi}"


@dataclass(frozen=True)
class Axiom:
    pass


@dataclass(frozen=True)
class ReduceRight:
    leaf: Leaf
    span: Span
    complement: "HeadNode"
    continuation: "ProofNode"


@dataclass(frozen=True)
class ReduceLeft:
    leaf: Leaf
    span: Span
    complement: "HeadNode"
    continuation: "ProofNode"


@dataclass(frozen=True)
class Lex:
    word: str
    span: Span
    entry: ArgSTree
    proof: "ProofNode"


@dataclass(frozen=True)
class Trace:
    hypothesis: ArgSTree
    position: int
    proof: "ProofNode"


HeadNode = Union[Lex, Trace]
ProofNode = Union[Axiom, ReduceRight, ReduceLeft]

_TRACE_POSITION = re.compile(r"ε@\d+")


@dataclass(frozen=True)
class Derivation:
    root: HeadNode
    substitution: Substitution
    result: ArgSTree

    def nodes(self) -> Iterator[object]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, (Lex, Trace)):
                stack.append(node.proof)
            elif isinstance(node, (ReduceRight, ReduceLeft)):
                stack.append(node.continuation)
                stack.append(node.complement)

    def lex_nodes(self):
        return [node for node in self.nodes() if isinstance(node, Lex)]

    def trace_nodes(self):
        return [node for node in self.nodes() if isinstance(node, Trace)]

    def reductions(self):
        return [node for node in self.nodes() if isinstance(node, (ReduceRight, ReduceLeft))]

    def category(self, tree):
        """Curried text of a tree under the final substitution."""
        tree = apply(tree, self.substitution)
        text = category_text(tree)
        return text if text is not None else format_tree(tree)

    def serialize(self):
        return self._serialize(self.root)

    def _serialize(self, node):
        if isinstance(node, Axiom):
            return "(AX)"
        if isinstance(node, Lex):
            return f"(LEX {node.word}@{node.span} {self.category(node.entry)} {self._serialize(node.proof)})"
        if isinstance(node, Trace):
            return f"(TRACE ε@{node.position} {self.category(node.hypothesis)} {self._serialize(node.proof)})"
        kind = "REDR" if isinstance(node, ReduceRight) else "REDL"
        return f"({kind} {self._serialize(node.complement)} {self._serialize(node.continuation)})"

    def signature(self):
        """Serialization with trace positions erased; equal signatures are duplicates."""
        return _TRACE_POSITION.sub("ε", self.serialize())

    def pretty(self):
        lines = []
        self._pretty(self.root, 0, lines)
        return "\n".join(lines)

    def _pretty(self, node, depth, lines):
        pad = "  " * depth
        if isinstance(node, Axiom):
            lines.append(f"{pad}AX")
        elif isinstance(node, Lex):
            lines.append(f"{pad}LEX {node.word}@{node.span} {self.category(node.entry)}")
            self._pretty(node.proof, depth + 1, lines)
        elif isinstance(node, Trace):
            lines.append(f"{pad}TRACE ε@{node.position} {self.category(node.hypothesis)}")
            self._pretty(node.proof, depth + 1, lines)
        else:
            kind = "REDR" if isinstance(node, ReduceRight) else "REDL"
            lines.append(f"{pad}{kind} {node.span}")
            self._pretty(node.complement, depth + 1, lines)
            self._pretty(node.continuation, depth, lines)
