"""
Exception hierarchy shared by all logic blocks.

Search failure (a unification that does not go through, a dead parse
branch) is never an exception; these classes cover malformed input and
exhausted resource bounds.
"""


class LexGramError(Exception):
    """Base class for every error raised by the LexGram components."""


class GrammarSyntaxError(LexGramError):
    """Grammar file text that does not follow the statement syntax."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GrammarError(LexGramError):
    """Well-formed grammar text with inconsistent declarations."""

    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class CyclicGrammarError(GrammarError):
    """The class-call graph contains a cycle."""

    def __init__(self, cycle):
        path = " -> ".join(list(cycle) + [cycle[0]])
        super().__init__(f"cyclic class graph: {path}")
        self.cycle = list(cycle)


class CategorySyntaxError(LexGramError):
    """Category text that cannot be read."""


class LevelViolationError(LexGramError):
    """A connective sits at an embedding level it is not allowed at."""


class FrameNotEmptyError(LexGramError):
    """A slash frame still holds trace hypotheses when it is popped."""

    def __init__(self, frame):
        super().__init__(f"slash frame not empty: {len(frame)} pending hypotheses")
        self.frame = frame


class ProverBoundError(LexGramError):
    """A sequent is larger than the prover is configured to search."""


class CorpusError(LexGramError):
    """A malformed line in a sentence corpus file."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
