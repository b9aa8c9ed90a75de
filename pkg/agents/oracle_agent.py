from datetime import datetime
from pathlib import Path
from typing import Any, Dict

from agents.base_agent import BaseAgent
from logic_blocks.oracle import cross_check_pairs, describe, parse_corpus
from logic_blocks.parser import HeadDrivenParser
from templates.report_template import CrossCheckTemplate


class OracleAgent(BaseAgent):
    """
    Agent responsible for cross-checking the parser against the reference engines.
    Input: compiled lexicon plus a corpus path, corpus text or (tokens, target) pairs
    Output: cross-check page, including the rendered text report
    """

    def __init__(self):
        super().__init__("OracleAgent")
        self.capabilities = ["cross_check"]
        self.template = CrossCheckTemplate()

    def process(self, data: Dict[str, Any]) -> Dict[str, Any]:
        lexicon = data["lexicon"]
        pairs = data.get("pairs")
        if pairs is None:
            text = data.get("corpus_text")
            if text is None:
                text = Path(data["corpus"]).read_text(encoding="utf-8")
            pairs = parse_corpus(text)

        self.log(f"Cross-checking {len(pairs)} sentence/target pairs...")
        parser = data.get("parser") or HeadDrivenParser(lexicon, data.get("limits"))
        report = cross_check_pairs(lexicon, pairs, parser=parser, trace_budget=data.get("trace_budget"))
        self.log("Engines agree" if report.agree else f"{len(report.disagreements)} disagreement(s)")

        page = {
            "rows": [{
                "sentence": " ".join(row.sentence),
                "target": row.target,
                "engine": row.engine,
                "verdict": row.verdict,
                "roots": list(row.roots),
            } for row in report.rows],
            "disagreements": [d.render() for d in report.disagreements],
            "witness": report.witness.render() if report.witness else "",
            "agree": report.agree,
            "total_checks": report.checks,
            "verdict_counts": describe(report),
            "report": report.render(),
            "generated_at": datetime.now().isoformat()
        }
        return self.template.fill(page)
