class LexiconTemplate:
    """
    Template for the compiled lexicon page (check and dump).
    """

    def __init__(self):
        self.structure = {
            "page_type": str,
            "grammar": str,
            "atoms": list,
            "classes": list,
            "entries": list,
            "total_words": int,
            "total_entries": int,
            "feature_free": bool,
            "translatable": bool,
            "warnings": list,
            "generated_at": str
        }

    def fill(self, data):
        """Fill template with data and ensure all fields are present"""
        return {
            "page_type": data.get("page_type", "Lexicon"),
            "grammar": data.get("grammar", ""),
            "atoms": data.get("atoms", []),
            "classes": data.get("classes", []),
            "entries": data.get("entries", []),
            "total_words": data.get("total_words", 0),
            "total_entries": data.get("total_entries", 0),
            "feature_free": data.get("feature_free", False),
            "translatable": data.get("translatable", False),
            "warnings": data.get("warnings", []),
            "generated_at": data.get("generated_at", "")
        }
