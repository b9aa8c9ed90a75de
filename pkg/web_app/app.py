import os
import sys
from functools import lru_cache

from flask import Flask, jsonify, request

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from agents.grammar_agent import GrammarAgent  # noqa: E402
from agents.parser_agent import ParserAgent  # noqa: E402
from logic_blocks.errors import LexGramError  # noqa: E402

app = Flask(__name__)
app.config["GRAMMAR_PATH"] = os.environ.get("LEXGRAM_GRAMMAR", os.path.join(PROJECT_ROOT, "data", "demo.lg"))

grammar_agent = GrammarAgent()
parser_agent = ParserAgent()


@lru_cache(maxsize=8)
def _lexicon(path):
    return grammar_agent.load(path)


def current_lexicon():
    return _lexicon(app.config["GRAMMAR_PATH"])


@app.route('/api/health')
def health():
    """Liveness probe"""
    return jsonify({'success': True, 'grammar': app.config["GRAMMAR_PATH"]})


@app.route('/api/parse')
def parse():
    """Parse ?sentence=...&target=... with the configured grammar"""
    sentence = request.args.get('sentence', '')
    target = request.args.get('target')
    if not target:
        return jsonify({'success': False, 'error': 'missing target parameter'}), 400
    try:
        page = parser_agent.process({'lexicon': current_lexicon(), 'sentence': sentence, 'target': target})
    except (LexGramError, OSError) as e:
        return jsonify({'success': False, 'error': str(e)}), 400
    return jsonify({'success': True, 'parse': page})


@app.route('/api/lexicon/<word>')
def lexicon_entry(word):
    """Expansions of one word, with provenance"""
    try:
        page = grammar_agent.process({'lexicon': current_lexicon(),
                                      'grammar': app.config["GRAMMAR_PATH"], 'word': word})
    except (LexGramError, OSError) as e:
        return jsonify({'success': False, 'error': str(e)}), 400
    if not page['entries']:
        return jsonify({'success': False, 'error': f'no entries for {word!r}'}), 404
    return jsonify({'success': True, 'lexicon': page})


if __name__ == '__main__':
    app.run(debug=True, port=5000)
