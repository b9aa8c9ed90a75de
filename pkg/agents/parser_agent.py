from datetime import datetime
from typing import Any, Dict

from agents.base_agent import BaseAgent
from logic_blocks.core_types import format_tree
from logic_blocks.parser import HeadDrivenParser, ParseLimits, parse_target
from templates.parse_template import ParseTemplate


class ParserAgent(BaseAgent):
    """
    Agent responsible for parsing sentences against a target category.
    Input: compiled lexicon, sentence, target, optional limits
    Output: parse page with every derivation in golden and indented form
    """

    def __init__(self):
        super().__init__("ParserAgent")
        self.capabilities = ["parse"]
        self.template = ParseTemplate()

    def process(self, data: Dict[str, Any]) -> Dict[str, Any]:
        """Parse one whitespace-tokenized sentence"""
        lexicon = data["lexicon"]
        sentence = data.get("sentence", "")
        tokens = sentence.split() if isinstance(sentence, str) else list(sentence)
        target = data["target"]
        limits = data.get("limits") or ParseLimits()

        self.log(f"Parsing {len(tokens)} tokens as {target}...")
        parser = HeadDrivenParser(lexicon, limits, check_frames=data.get("check_frames", True))
        result = parser.parse(tokens, parse_target(target))
        if result.limit_exceeded:
            self.log(f"Stopped at the {result.reason} limit")
        self.log(f"Found {len(result)} derivation(s)")

        derivations = [{
            "golden": derivation.serialize(),
            "pretty": derivation.pretty(),
            "result": format_tree(derivation.result),
            "traces": len(derivation.trace_nodes()),
        } for derivation in result.derivations]

        page = {
            "sentence": " ".join(tokens),
            "target": target,
            "derivations": derivations,
            "total_derivations": len(derivations),
            "limit_exceeded": result.limit_exceeded,
            "limit_reason": result.reason or "",
            "generated_at": datetime.now().isoformat()
        }
        return self.template.fill(page)
