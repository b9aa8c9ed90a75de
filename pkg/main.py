#!/usr/bin/env python3
"""
LexGram command-line front end.

    python main.py parse --grammar data/demo.lg --target s "john loves mary"
    python main.py check --grammar data/demo.lg
    python main.py dump --grammar data/demo.lg --word loves
    python main.py oracle --grammar data/demo.lg --corpus data/demo_corpus.tsv
"""
import argparse
import logging
import os
import sys

# Add project root to Python path
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from pydantic import ValidationError  # noqa: E402

from orchestrator.config import CliConfig, config_errors  # noqa: E402
from orchestrator.workflow import EXIT_ERROR, LexGramWorkflow  # noqa: E402


def build_parser():
    parser = argparse.ArgumentParser(prog="lexgram", description="Lexicalized categorial grammar engine")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grammar", required=True, help="grammar file (.lg)")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    parse = commands.add_parser("parse", parents=[common], help="parse a sentence")
    parse.add_argument("sentence", help="whitespace-separated tokens")
    parse.add_argument("--target", required=True, help="goal category, e.g. s")
    parse.add_argument("--all", dest="all_derivations", action="store_true", help="print every derivation")
    parse.add_argument("--max-derivations", type=int, default=64)
    parse.add_argument("--max-depth", type=int, default=None)
    parse.add_argument("--output", choices=["pretty", "golden"], default="golden")

    commands.add_parser("check", parents=[common], help="validate a grammar")

    dump = commands.add_parser("dump", parents=[common], help="list lexical expansions")
    dump.add_argument("--word", default=None)

    oracle = commands.add_parser("oracle", parents=[common], help="cross-check the parser on a corpus")
    oracle.add_argument("--corpus", required=True, help="file of sentence<TAB>target lines")
    oracle.add_argument("--max-derivations", type=int, default=64)
    oracle.add_argument("--max-depth", type=int, default=None)
    return parser


def configure_logging(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="[%(name)s] %(message)s",
        stream=sys.stderr,
    )


def main(argv=None):
    """Main entry point"""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = CliConfig(**{key: value for key, value in vars(args).items() if value is not None})
    except ValidationError as exc:
        for line in config_errors(exc):
            print(f"error: {line}", file=sys.stderr)
        return EXIT_ERROR
    return LexGramWorkflow(config).run()


if __name__ == "__main__":
    sys.exit(main())
