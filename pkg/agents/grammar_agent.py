from datetime import datetime
from typing import Any, Dict

from agents.base_agent import BaseAgent
from logic_blocks.core_types import category_text, format_tree
from logic_blocks.lexicon import CompiledLexicon, load_grammar, load_grammar_file
from templates.lexicon_template import LexiconTemplate


class GrammarAgent(BaseAgent):
    """
    Agent responsible for compiling grammars and describing lexicons.
    Input: grammar path or text, optional word
    Output: lexicon page with every expansion, its curried form and provenance
    """

    def __init__(self):
        super().__init__("GrammarAgent")
        self.capabilities = ["load_grammar", "check_grammar", "dump_lexicon"]
        self.template = LexiconTemplate()

    def load(self, path, cache=True) -> CompiledLexicon:
        """Compile a grammar file; errors propagate as LexGramError or OSError."""
        self.log(f"Loading grammar {path}...")
        lexicon = load_grammar_file(path, cache=cache)
        self.log(f"Compiled {len(lexicon.words)} words over {len(lexicon.atoms)} atoms")
        return lexicon

    def process(self, data: Dict[str, Any]) -> Dict[str, Any]:
        lexicon = data.get("lexicon")
        if lexicon is None:
            if "grammar_text" in data:
                lexicon = load_grammar(data["grammar_text"])
            else:
                lexicon = self.load(data["grammar"])
        word = data.get("word")
        words = [word] if word is not None else sorted(lexicon.words)

        entries = []
        for surface in words:
            for expansion in lexicon.expansions(surface):
                entries.append({
                    "word": surface,
                    "tree": format_tree(expansion.tree),
                    "curried": category_text(expansion.tree),
                    "provenance": list(expansion.provenance),
                })
        self.log(f"Described {len(entries)} entries for {len(words)} word(s)")

        page = {
            "grammar": str(data.get("grammar", "")),
            "atoms": sorted(lexicon.atoms),
            "classes": [f"{cls.name}/{cls.arity}" for cls in lexicon.classes.values()],
            "entries": entries,
            "total_words": len(lexicon.words),
            "total_entries": len(entries),
            "feature_free": lexicon.feature_free,
            "translatable": lexicon.translatable,
            "warnings": list(lexicon.warnings),
            "generated_at": datetime.now().isoformat()
        }
        return self.template.fill(page)
