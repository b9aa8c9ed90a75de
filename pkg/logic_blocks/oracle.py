"""
Cross-validation of the parser against the reference engines.

For every (sentence, target) pair the head-driven parser, the naive
non-threading engine and, on feature-free grammars with a curried form,
the sequent prover each give a verdict.  Pairs where the engines differ
are disagreements; the shortest one is reported as the minimal witness.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from logic_blocks.core_types import Atom, format_root, is_feature_free, to_curried
from logic_blocks.errors import CorpusError, LevelViolationError, ProverBoundError
from logic_blocks.lambek_prover import LambekProver, Sequent
from logic_blocks.naive_engine import parse_naive
from logic_blocks.parser import HeadDrivenParser, parse_target

logger = logging.getLogger(__name__)

PARSER = "parser"
NAIVE = "naive"
LAMBEK = "lambek"

DERIVABLE = "derivable"
NOT_DERIVABLE = "not-derivable"
LIMIT = "limit"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckRow:
    sentence: Tuple[str, ...]
    target: str
    engine: str
    verdict: str
    roots: Tuple[str, ...] = ()

    def render(self):
        roots = f"\t{' '.join(self.roots)}" if self.roots else ""
        return f"{' '.join(self.sentence) or '<empty>'}\t{self.target}\t{self.engine}\t{self.verdict}{roots}"


@dataclass(frozen=True)
class Disagreement:
    sentence: Tuple[str, ...]
    target: str
    verdicts: Tuple[Tuple[str, str], ...]

    def render(self):
        detail = ", ".join(f"{engine}={verdict}" for engine, verdict in self.verdicts)
        return f"'{' '.join(self.sentence)}' -> {self.target}: {detail}"


@dataclass
class CrossCheckReport:
    rows: List[CheckRow] = field(default_factory=list)
    disagreements: List[Disagreement] = field(default_factory=list)

    @property
    def agree(self):
        return not self.disagreements

    @property
    def witness(self) -> Optional[Disagreement]:
        return self.disagreements[0] if self.disagreements else None

    @property
    def checks(self):
        return len({(row.sentence, row.target) for row in self.rows})

    def render(self):
        lines = [row.render() for row in self.rows]
        if self.agree:
            lines.append(f"AGREE ({self.checks} checks)")
        else:
            lines.append(f"minimal witness: {self.witness.render()}")
            lines.append(f"DISAGREE ({len(self.disagreements)} of {self.checks} checks)")
        return "\n".join(lines)


def _roots(trees):
    return tuple(sorted({format_root(tree.root) for tree in trees}))


def lambek_verdict(tokens, target, lexicon, prover) -> str:
    """Provable for some choice of lexical alternatives, one per token."""
    if not tokens:
        return NOT_DERIVABLE
    try:
        succedent = to_curried(target)
        choices = [[to_curried(tree) for tree in lexicon.expand(token)] for token in tokens]
    except LevelViolationError as exc:
        logger.debug("no curried form for %r: %s", " ".join(tokens), exc)
        return SKIPPED
    bounded = False
    for antecedent in itertools.product(*choices):
        try:
            if prover.prove(Sequent(antecedent, succedent)).provable:
                return DERIVABLE
        except ProverBoundError:
            bounded = True
    return LIMIT if bounded else NOT_DERIVABLE


def cross_check_pairs(lexicon, pairs, parser=None, trace_budget=None, prover=None) -> CrossCheckReport:
    """
    Run every engine on each (tokens, target text) pair.

    A parser limit or prover bound makes that engine's verdict
    inconclusive; it is reported but never counted as a disagreement.
    Parser and naive engine are compared on their distinct result roots:
    the naive engine yields a set of trees, so how often a root is derived
    is not comparable.  The prover only runs for feature-free atomic
    targets, its categories carry no features.
    """
    parser = parser or HeadDrivenParser(lexicon)
    prover = prover or LambekProver()
    use_lambek = lexicon.feature_free and lexicon.translatable
    report = CrossCheckReport()
    for tokens, target_text in pairs:
        tokens = tuple(tokens)
        target = parse_target(target_text)

        result = parser.parse(tokens, target)
        parser_roots = _roots(derivation.result for derivation in result.derivations)
        if result.derivations:
            parser_verdict = DERIVABLE
        else:
            parser_verdict = LIMIT if result.limit_exceeded else NOT_DERIVABLE

        naive_roots = _roots(parse_naive(tokens, target, lexicon, trace_budget))
        naive_verdict = DERIVABLE if naive_roots else NOT_DERIVABLE

        rows = [CheckRow(tokens, target_text, PARSER, parser_verdict, parser_roots),
                CheckRow(tokens, target_text, NAIVE, naive_verdict, naive_roots)]
        if use_lambek and is_feature_free(target) and isinstance(to_curried(target), Atom):
            rows.append(CheckRow(tokens, target_text, LAMBEK, lambek_verdict(tokens, target, lexicon, prover)))
        report.rows.extend(rows)

        conclusive = [row for row in rows if row.verdict in (DERIVABLE, NOT_DERIVABLE)]
        differ = len({row.verdict for row in conclusive}) > 1
        if parser_verdict == naive_verdict == DERIVABLE and parser_roots != naive_roots:
            differ = True
        if differ:
            report.disagreements.append(
                Disagreement(tokens, target_text, tuple((row.engine, row.verdict) for row in rows)))

    report.disagreements.sort(key=lambda d: (len(d.sentence), d.sentence, d.target))
    logger.debug("cross-checked %d pairs, %d disagreements", report.checks, len(report.disagreements))
    return report


def cross_check(lexicon, sentences, targets, parser=None, trace_budget=None, prover=None) -> CrossCheckReport:
    """Every sentence against every target."""
    pairs = [(tuple(sentence), target) for sentence in sentences for target in targets]
    return cross_check_pairs(lexicon, pairs, parser=parser, trace_budget=trace_budget, prover=prover)


def vocabulary_sentences(lexicon, max_length):
    """All token sequences over the lexicon's words up to max_length, shortest first."""
    words = sorted(lexicon.words)
    for length in range(max_length + 1):
        yield from itertools.product(words, repeat=length)


def describe(report: CrossCheckReport) -> Dict[str, int]:
    counts = {"checks": report.checks, "disagreements": len(report.disagreements)}
    for row in report.rows:
        counts[f"{row.engine}:{row.verdict}"] = counts.get(f"{row.engine}:{row.verdict}", 0) + 1
    return counts


def parse_corpus(text) -> List[Tuple[Tuple[str, ...], str]]:
    """
    Read ``sentence<TAB>target`` lines; blank lines are skipped.

    Raises CorpusError for a line without a tab or without a target.
    """
    pairs = []
    for number, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        sentence, tab, target = line.partition("\t")
        if not tab:
            raise CorpusError("expected 'sentence<TAB>target'", number)
        if not target.strip():
            raise CorpusError("missing target", number)
        pairs.append((tuple(sentence.split()), target.strip()))
    return pairs
