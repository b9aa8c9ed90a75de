"""
Head-driven parser with slash threading.

Proving that a span derives a goal picks a head first: a word of the span
whose lexical root matches (lex), or a pending trace hypothesis placed at
some position of the span (trace).  The head's leaves are then discharged
one by one, each complement being proved on an adjacent sub-span (PSS/,
PSS\\) until nothing is left to consume (axiom).

Slash hypotheses live in a stack of frames.  Reducing a complement pushes
its slash as a new frame, which must be empty again once the complement
is proved.  Traces may be taken from any frame, innermost first.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional, Tuple

from logic_blocks.core_types import ArgSTree, Direction, Var, from_curried, parse_category
from logic_blocks.derivation import (
    Axiom,
    Derivation,
    Lex,
    ReduceLeft,
    ReduceRight,
    Span,
    Trace,
)
from logic_blocks.errors import FrameNotEmptyError
from logic_blocks.unify import EMPTY, apply, unify_root, unify_stree_all

logger = logging.getLogger(__name__)

Frame = Tuple[ArgSTree, ...]
SlashStack = Tuple[Frame, ...]


def push_frame(stack: SlashStack, hypotheses) -> SlashStack:
    return (tuple(hypotheses),) + stack


def pop_frame_checked(stack: SlashStack) -> SlashStack:
    if stack[0]:
        raise FrameNotEmptyError(stack[0])
    return stack[1:]


def remove_trace(stack: SlashStack, pattern, subst):
    """
    Take one hypothesis out of the stack.

    Yields ``(stack, hypothesis, subst)`` for every hypothesis whose root
    unifies with pattern (a RootTerm, or None for any), innermost frame
    first.  Equal hypotheses within one frame are tried once.
    """
    for depth, frame in enumerate(stack):
        tried = []
        for index, hypothesis in enumerate(frame):
            resolved = apply(hypothesis, subst)
            if resolved in tried:
                continue
            tried.append(resolved)
            extended = subst
            if pattern is not None:
                root = subst.walk(hypothesis)
                if isinstance(root, Var):
                    continue
                extended = unify_root(root.root, pattern, subst)
                if extended is None:
                    continue
            shrunk = frame[:index] + frame[index + 1:]
            yield stack[:depth] + (shrunk,) + stack[depth + 1:], hypothesis, extended


@dataclass(frozen=True)
class SpanGoal:
    span: Span
    target: object
    slash_in: SlashStack


@dataclass(frozen=True)
class ItemGoal:
    left: Span
    item: ArgSTree
    right: Span
    target: object
    slash_in: SlashStack


class Proof(NamedTuple):
    node: object
    subst: object
    slash: SlashStack


@dataclass(frozen=True)
class ParseLimits:
    max_derivations: int = 64
    max_depth: Optional[int] = None

    def __post_init__(self):
        if self.max_derivations < 1:
            raise ValueError("max_derivations must be at least 1")

    def depth_for(self, length):
        return self.max_depth if self.max_depth is not None else 10 * max(length, 1)


@dataclass
class ParseResult:
    derivations: List[Derivation] = field(default_factory=list)
    limit_exceeded: bool = False
    reason: Optional[str] = None

    def __len__(self):
        return len(self.derivations)


def parse_target(text) -> ArgSTree:
    """Goal category from its text form, e.g. ``s`` or ``np{case=nom}``."""
    return from_curried(parse_category(text))


class ParseSearch:
    """Search state of one parse call: the input and the depth bookkeeping."""

    def __init__(self, tokens, lexicon, max_depth, check_frames=True):
        self.tokens = tuple(tokens)
        self.lexicon = lexicon
        self.max_depth = max_depth
        self.check_frames = check_frames
        self.depth_exceeded = False

    def prove_span(self, goal: SpanGoal, subst, depth=0) -> Iterator[Proof]:
        if depth > self.max_depth:
            self.depth_exceeded = True
            return
        target = subst.walk(goal.target)
        pattern = None if isinstance(target, Var) else target.root
        lo, hi = goal.span.lo, goal.span.hi

        for position in range(lo, hi):
            word = self.tokens[position]
            for entry in self.lexicon.expand(word):
                extended = subst if pattern is None else unify_root(entry.root, pattern, subst)
                if extended is None:
                    continue
                item_goal = ItemGoal(Span(lo, position), entry, Span(position + 1, hi), goal.target, goal.slash_in)
                for proof in self.prove_item(item_goal, extended, depth):
                    node = Lex(word, Span(position, position + 1), entry, proof.node)
                    yield Proof(node, proof.subst, proof.slash)

        for stack, hypothesis, extended in remove_trace(goal.slash_in, pattern, subst):
            for position in range(lo, hi + 1):
                item_goal = ItemGoal(Span(lo, position), hypothesis, Span(position, hi), goal.target, stack)
                for proof in self.prove_item(item_goal, extended, depth):
                    yield Proof(Trace(hypothesis, position, proof.node), proof.subst, proof.slash)

    def prove_item(self, goal: ItemGoal, subst, depth=0) -> Iterator[Proof]:
        item = goal.item
        directions = {leaf.dir for leaf in item.leaves}
        if not goal.right.empty and Direction.RIGHT not in directions:
            return
        if not goal.left.empty and Direction.LEFT not in directions:
            return
        if goal.left.empty and goal.right.empty:
            for extended in unify_stree_all(item, goal.target, subst):
                yield Proof(Axiom(), extended, goal.slash_in)
        if item.is_maximal:
            return

        leaf, rest = item.leaves[0], item.rest()
        rest_directions = {other.dir for other in rest.leaves}
        if leaf.dir is Direction.RIGHT:
            right = goal.right
            stops = range(right.lo, right.hi + 1) if Direction.RIGHT in rest_directions else (right.hi,)
            for stop in stops:
                remainder = ItemGoal(goal.left, rest, Span(stop, right.hi), goal.target, goal.slash_in)
                yield from self._reduce(ReduceRight, leaf, Span(right.lo, stop), remainder, subst, depth)
        else:
            left = goal.left
            starts = range(left.hi, left.lo - 1, -1) if Direction.LEFT in rest_directions else (left.lo,)
            for start in starts:
                remainder = ItemGoal(Span(left.lo, start), rest, goal.right, goal.target, goal.slash_in)
                yield from self._reduce(ReduceLeft, leaf, Span(start, left.hi), remainder, subst, depth)

    def _reduce(self, kind, leaf, span, remainder, subst, depth):
        category = subst.walk(leaf.cat)
        if isinstance(category, ArgSTree):
            hypotheses, complement = category.slash, category.without_slash()
        else:
            hypotheses, complement = (), category
        pushed = push_frame(remainder.slash_in, hypotheses)
        for inner in self.prove_span(SpanGoal(span, complement, pushed), subst, depth + 1):
            if self.check_frames:
                try:
                    popped = pop_frame_checked(inner.slash)
                except FrameNotEmptyError:
                    continue
            else:
                popped = inner.slash[1:]
            goal = ItemGoal(remainder.left, remainder.item, remainder.right, remainder.target, popped)
            for proof in self.prove_item(goal, inner.subst, depth):
                yield Proof(kind(leaf, span, inner.node, proof.node), proof.subst, proof.slash)


class HeadDrivenParser:
    """
    All-solutions parser over a compiled lexicon.

    ``check_frames=False`` drops pushed frames without checking that they
    are empty; it exists to show that the check matters.
    """

    def __init__(self, lexicon, limits=None, check_frames=True):
        self.lexicon = lexicon
        self.limits = limits or ParseLimits()
        self.check_frames = check_frames

    def parse(self, tokens, target) -> ParseResult:
        tokens = tuple(tokens)
        if isinstance(target, str):
            target = parse_target(target)
        search = ParseSearch(tokens, self.lexicon, self.limits.depth_for(len(tokens)), self.check_frames)
        goal = SpanGoal(Span(0, len(tokens)), target, push_frame((), ()))
        result = ParseResult()
        seen = set()
        for proof in search.prove_span(goal, EMPTY):
            try:
                pop_frame_checked(proof.slash)
            except FrameNotEmptyError:
                continue
            derivation = Derivation(proof.node, proof.subst, apply(target, proof.subst))
            key = derivation.signature()
            if key in seen:
                continue
            if len(result.derivations) >= self.limits.max_derivations:
                result.limit_exceeded, result.reason = True, "derivations"
                break
            seen.add(key)
            result.derivations.append(derivation)
        if search.depth_exceeded and not result.limit_exceeded:
            result.limit_exceeded, result.reason = True, "depth"
        logger.debug("parsed %r as %s: %d derivations%s", " ".join(tokens), target, len(result),
                     f" ({result.reason} limit)" if result.limit_exceeded else "")
        return result


def parse(tokens, target, lexicon, limits=None) -> ParseResult:
    return HeadDrivenParser(lexicon, limits).parse(tokens, target)
