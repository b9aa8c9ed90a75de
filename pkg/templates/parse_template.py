class ParseTemplate:
    """
    Template for the parse result page.
    """

    def __init__(self):
        self.structure = {
            "page_type": str,
            "sentence": str,
            "target": str,
            "derivations": list,
            "total_derivations": int,
            "limit_exceeded": bool,
            "limit_reason": str,
            "generated_at": str
        }

    def fill(self, data):
        """Fill template with data and ensure all fields are present"""
        return {
            "page_type": data.get("page_type", "Parse"),
            "sentence": data.get("sentence", ""),
            "target": data.get("target", ""),
            "derivations": data.get("derivations", []),
            "total_derivations": data.get("total_derivations", 0),
            "limit_exceeded": data.get("limit_exceeded", False),
            "limit_reason": data.get("limit_reason", ""),
            "generated_at": data.get("generated_at", "")
        }
