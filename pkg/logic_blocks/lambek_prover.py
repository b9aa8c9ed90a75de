"""
Backward-chaining sequent prover for the semi-directional calculus.

Rules, read bottom-up:

    ax    X => X
    /L    G, A/B, D, H => C    from  D => B  and  G, A, H => C
    \\L    G, D, A\\B, H => C    from  D => B  and  G, A, H => C
    |R    G => A|B             from  G with B inserted anywhere => A
    |L    A|B next to D, on either side, as in /L and \\L

``/`` and ``\\`` are only eliminated, ``|`` is both introduced and
eliminated.  Every premise has fewer connectives than its conclusion, so
search terminates; results are memoized per prover.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from logic_blocks.core_types import BACKSLASH, BAR, SLASH, Atom, Conn, format_category
from logic_blocks.errors import ProverBoundError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sequent:
    antecedent: Tuple[object, ...]
    succedent: object

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        if not self.antecedent:
            raise ValueError("sequent antecedent must be nonempty")

    @property
    def size(self):
        return len(self.antecedent) + sum(connectives(c) for c in self.antecedent) + connectives(self.succedent)

    def __str__(self):
        return f"{', '.join(format_category(c) for c in self.antecedent)} => {format_category(self.succedent)}"


@dataclass(frozen=True)
class ProverLimits:
    max_size: int = 40
    max_proofs: int = 1000


@dataclass(frozen=True)
class ProofResult:
    provable: bool
    proof_count: int


def connectives(category):
    if isinstance(category, Atom):
        return 0
    return 1 + connectives(category.result) + connectives(category.arg)


def atom_balance(category, polarity=1, counts=None):
    """Signed atom occurrences; arguments count with flipped polarity."""
    counts = Counter() if counts is None else counts
    if isinstance(category, Atom):
        counts[category.root] += polarity
    else:
        atom_balance(category.result, polarity, counts)
        atom_balance(category.arg, -polarity, counts)
    return counts


def balanced(sequent):
    counts = atom_balance(sequent.succedent)
    for category in sequent.antecedent:
        atom_balance(category, -1, counts)
    return not any(counts.values())


class LambekProver:
    def __init__(self, limits=None):
        self.limits = limits or ProverLimits()
        self._count = lru_cache(maxsize=None)(self._count_proofs)

    def prove(self, sequent) -> ProofResult:
        if sequent.size > self.limits.max_size:
            raise ProverBoundError(f"sequent size {sequent.size} exceeds bound {self.limits.max_size}: {sequent}")
        if not balanced(sequent):
            return ProofResult(False, 0)
        count = self.count_proofs(sequent)
        logger.debug("%s: %d proofs", sequent, count)
        return ProofResult(count > 0, count)

    def count_proofs(self, sequent):
        """Number of proofs, capped, without the polarity filter."""
        return self._count(sequent.antecedent, sequent.succedent)

    def _cap(self, count):
        return min(count, self.limits.max_proofs)

    def _count_proofs(self, antecedent, succedent):
        total = 0
        if len(antecedent) == 1 and antecedent[0] == succedent:
            total += 1
        if isinstance(succedent, Conn) and succedent.op == BAR:
            for position in range(len(antecedent) + 1):
                extended = antecedent[:position] + (succedent.arg,) + antecedent[position:]
                total += self._count(extended, succedent.result)
        for index, functor in enumerate(antecedent):
            if not isinstance(functor, Conn):
                continue
            if functor.op in (SLASH, BAR):
                total += self._eliminate(antecedent, index, functor, right=True, succedent=succedent)
            if functor.op in (BACKSLASH, BAR):
                total += self._eliminate(antecedent, index, functor, right=False, succedent=succedent)
            if total >= self.limits.max_proofs:
                break
        return self._cap(total)

    def _eliminate(self, antecedent, index, functor, right, succedent):
        total = 0
        if right:
            for stop in range(index + 2, len(antecedent) + 1):
                argument = self._count(antecedent[index + 1:stop], functor.arg)
                if argument:
                    rest = antecedent[:index] + (functor.result,) + antecedent[stop:]
                    total += argument * self._count(rest, succedent)
        else:
            for start in range(index - 1, -1, -1):
                argument = self._count(antecedent[start:index], functor.arg)
                if argument:
                    rest = antecedent[:start] + (functor.result,) + antecedent[index + 1:]
                    total += argument * self._count(rest, succedent)
        return self._cap(total)


def prove_lambek(sequent, limits=None) -> ProofResult:
    return LambekProver(limits).prove(sequent)
