"""Tests for the semi-directional sequent prover."""
import itertools
import random

import pytest

from logic_blocks.core_types import parse_category
from logic_blocks.errors import ProverBoundError
from logic_blocks.lambek_prover import (
    LambekProver,
    ProverLimits,
    Sequent,
    atom_balance,
    balanced,
    prove_lambek,
)


def sequent(antecedent, succedent):
    return Sequent([parse_category(text) for text in antecedent], parse_category(succedent))


def random_category(rng, depth, level=1):
    """Feature-free category obeying the odd/even level discipline."""
    text = rng.choice(["s", "np", "n"])
    if depth == 0:
        return text
    for _ in range(rng.randint(0, 2)):
        op = rng.choice(["/", "\\"]) if level % 2 else "|"
        text = f"({text}){op}({random_category(rng, depth - 1, level + 1)})"
    return text


class TestExamples:
    """Sequents from the English demo grammar."""

    def test_transitive(self):
        assert prove_lambek(sequent(["np", "(s\\np)/np", "np"], "s")).provable

    def test_atom_mismatch(self):
        assert not prove_lambek(sequent(["np"], "s")).provable

    def test_relative_clause(self):
        """The object hypothesis is withdrawn inside the clause."""
        result = prove_lambek(sequent(["n", "(n\\n)/(s|np)", "np", "(s\\np)/np"], "n"))
        assert result.provable
        assert result.proof_count == 1

    def test_unused_hypothesis(self):
        assert not prove_lambek(sequent(["np/n", "n", "(n\\n)/(s|np)", "np", "(s\\np)/np", "np"], "np")).provable

    def test_direction_matters(self):
        assert not prove_lambek(sequent(["(s\\np)/np", "np", "np"], "s")).provable

    def test_vorfeld(self):
        assert prove_lambek(sequent(["cp/(vp|dp)", "(vp/dp)/dp", "dp"], "cp")).provable

    @pytest.mark.parametrize("text", ["np", "(s\\np)/np", "(n\\n)/(s|np)", "s|np"])
    def test_axiom(self, text):
        assert prove_lambek(sequent([text], text)).provable


class TestCounting:
    def test_elimination_order_counts(self):
        assert prove_lambek(sequent(["n/n", "n/n", "n"], "n")).proof_count == 2

    def test_proof_cap(self):
        result = prove_lambek(sequent(["n/n", "n/n", "n"], "n"), ProverLimits(max_proofs=1))
        assert result.provable
        assert result.proof_count == 1


class TestBounds:
    def test_size_bound(self):
        with pytest.raises(ProverBoundError):
            prove_lambek(sequent(["np"] * 41, "np"))

    def test_configured_bound(self):
        with pytest.raises(ProverBoundError):
            prove_lambek(sequent(["np", "(s\\np)/np", "np"], "s"), ProverLimits(max_size=4))

    def test_empty_antecedent(self):
        with pytest.raises(ValueError):
            Sequent([], parse_category("s"))


class TestAtomBalance:
    """Provable sequents preserve signed atom counts."""

    def test_counts(self):
        counts = atom_balance(parse_category("(s\\np)/np"))
        assert counts == {parse_category("s").root: 1, parse_category("np").root: -2}

    def test_balanced(self):
        assert balanced(sequent(["np", "s\\np"], "s"))
        assert not balanced(sequent(["np"], "s"))

    def test_random_sequents(self):
        """Every sequent with a proof is balanced."""
        rng = random.Random(7)
        prover = LambekProver()
        pool = [random_category(rng, 2) for _ in range(12)] + ["np", "s", "n", "s\\np", "np/n"]
        checked = 0
        for length in (1, 2, 3):
            for antecedent in itertools.islice(itertools.product(pool, repeat=length), 400):
                for succedent in ("s", "np", "n", "s|np"):
                    candidate = sequent(antecedent, succedent)
                    if prover.count_proofs(candidate):
                        assert balanced(candidate), str(candidate)
                        checked += 1
        assert checked > 0
