import sys

from agents.grammar_agent import GrammarAgent
from agents.oracle_agent import OracleAgent
from agents.parser_agent import ParserAgent
from logic_blocks.errors import LexGramError

EXIT_OK = 0
EXIT_NO_PARSE = 1
EXIT_ERROR = 2

SHOWN_DERIVATIONS = 8


class LexGramWorkflow:
    """
    Runs one command of the command-line front end.
    Owns the exit status and everything printed on stdout; diagnostics go
    to the error stream.
    """

    def __init__(self, config, stdout=None, stderr=None):
        self.config = config
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.grammar_agent = GrammarAgent()
        self.parser_agent = ParserAgent()
        self.oracle_agent = OracleAgent()

    def run(self) -> int:
        command = getattr(self, f"cmd_{self.config.command}")
        try:
            return command()
        except (LexGramError, OSError) as exc:
            self.error(str(exc))
            return EXIT_ERROR

    def emit(self, text=""):
        print(text, file=self.stdout)

    def error(self, text):
        print(f"error: {text}", file=self.stderr)

    def cmd_parse(self):
        lexicon = self.grammar_agent.load(self.config.grammar)
        page = self.parser_agent.process({
            "lexicon": lexicon,
            "sentence": self.config.sentence,
            "target": self.config.target,
            "limits": self.config.limits,
        })
        derivations = page["derivations"]
        shown = derivations if self.config.all_derivations else derivations[:SHOWN_DERIVATIONS]
        for derivation in shown:
            if self.config.output == "golden":
                self.emit(derivation["golden"])
            else:
                self.emit(derivation["pretty"])
                self.emit()
        if len(shown) < len(derivations):
            self.emit(f"... {len(derivations) - len(shown)} more, use --all")
        self.emit(f"derivations: {page['total_derivations']}")
        if page["limit_exceeded"]:
            self.error(f"{page['limit_reason']} limit exceeded, derivation list may be incomplete")
            return EXIT_ERROR
        return EXIT_OK if derivations else EXIT_NO_PARSE

    def cmd_check(self):
        lexicon = self.grammar_agent.load(self.config.grammar)
        for warning in lexicon.warnings:
            self.emit(f"warning: {warning}")
        self.emit(f"ok: {len(lexicon.atoms)} atoms, {len(lexicon.classes)} classes, {len(lexicon.words)} words")
        return EXIT_OK

    def cmd_dump(self):
        lexicon = self.grammar_agent.load(self.config.grammar)
        page = self.grammar_agent.process({
            "lexicon": lexicon,
            "grammar": self.config.grammar,
            "word": self.config.word,
        })
        if not page["entries"]:
            self.emit("no entries")
            return EXIT_OK
        for entry in page["entries"]:
            self.emit(f"{entry['word']}\t{entry['tree']}\t{entry['curried'] or '-'}")
        return EXIT_OK

    def cmd_oracle(self):
        lexicon = self.grammar_agent.load(self.config.grammar)
        page = self.oracle_agent.process({
            "lexicon": lexicon,
            "corpus": self.config.corpus,
            "limits": self.config.limits,
        })
        self.emit(page["report"])
        return EXIT_OK if page["agree"] else EXIT_NO_PARSE
