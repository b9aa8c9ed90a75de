"""
Non-threading reference engine.

Instead of threading slash hypotheses, the trace categories of a complement
are merged straight into its phon sequence, at every possible position, and
the complement is then derived over the merged sequence with no slash
bookkeeping at all.  Each posited trace costs one unit of a finite budget.
Exhaustive and slow; only meant for cross-checking short sentences.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Set, Tuple, Union

from logic_blocks.core_types import ArgSTree, Direction, Var, slash_size
from logic_blocks.unify import EMPTY, apply, unify_root, unify_stree_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Token:
    word: str


@dataclass(frozen=True)
class TraceItem:
    category: ArgSTree


PhonItem = Union[Token, TraceItem]


def interleavings(first, second) -> Iterator[tuple]:
    """Every merge of two sequences keeping the order inside each."""
    if not first:
        yield tuple(second)
        return
    if not second:
        yield tuple(first)
        return
    for rest in interleavings(first[1:], second):
        yield (first[0],) + rest
    for rest in interleavings(first, second[1:]):
        yield (second[0],) + rest


def merge(phon, traces):
    """Phon sequences with the traces inserted anywhere, in any order, without repeats."""
    merged = dict.fromkeys(
        sequence
        for order in dict.fromkeys(itertools.permutations(traces))
        for sequence in interleavings(tuple(phon), order))
    return tuple(merged)


def default_trace_budget(lexicon, length):
    total = sum(slash_size(expansion.tree) for word in lexicon.words for expansion in lexicon.expansions(word))
    return total * length


class NaiveEngine:
    def __init__(self, lexicon):
        self.lexicon = lexicon

    def derive(self, items, target, subst, budget) -> Iterator[Tuple[object, int]]:
        """Yield (substitution, remaining budget) for every way items derive target."""
        items = tuple(items)
        target = subst.walk(target)
        pattern = None if isinstance(target, Var) else target.root
        for index, item in enumerate(items):
            if isinstance(item, Token):
                heads = self.lexicon.expand(item.word)
            else:
                heads = (item.category,)
            for head in heads:
                head_root = subst.walk(head)
                if isinstance(head_root, Var):
                    continue
                extended = subst if pattern is None else unify_root(head_root.root, pattern, subst)
                if extended is None:
                    continue
                yield from self._consume(items, index, index + 1, head_root, target, extended, budget)

    def _consume(self, items, lo, hi, head, target, subst, budget):
        if lo == 0 and hi == len(items):
            for extended in unify_stree_all(head, target, subst):
                yield extended, budget
        if head.is_maximal:
            return
        leaf, rest = head.leaves[0], head.rest()
        category = subst.walk(leaf.cat)
        if isinstance(category, ArgSTree):
            traces, complement = category.slash, category.without_slash()
        else:
            traces, complement = (), category
        if len(traces) > budget:
            return
        trace_items = [TraceItem(trace) for trace in traces]
        if leaf.dir is Direction.RIGHT:
            regions = [(hi, stop, lo, stop) for stop in range(hi, len(items) + 1)]
        else:
            regions = [(start, lo, start, hi) for start in range(lo, -1, -1)]
        for seg_lo, seg_hi, new_lo, new_hi in regions:
            for merged in merge(items[seg_lo:seg_hi], trace_items):
                for inner, left in self.derive(merged, complement, subst, budget - len(traces)):
                    yield from self._consume(items, new_lo, new_hi, rest, target, inner, left)


def parse_naive(tokens, target, lexicon, trace_budget=None) -> Set[ArgSTree]:
    """Distinct result trees of tokens derived as target."""
    tokens = tuple(tokens)
    if trace_budget is None:
        trace_budget = default_trace_budget(lexicon, len(tokens))
    if trace_budget < 0:
        raise ValueError("trace budget must be non-negative")
    engine = NaiveEngine(lexicon)
    results = {apply(target, subst) for subst, _ in
               engine.derive([Token(token) for token in tokens], target, EMPTY, trace_budget)}
    logger.debug("naive %r as %s: %d results", " ".join(tokens), target, len(results))
    return results
