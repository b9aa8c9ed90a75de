class CrossCheckTemplate:
    """
    Template for the engine cross-check report page.
    """

    def __init__(self):
        self.structure = {
            "page_type": str,
            "rows": list,
            "disagreements": list,
            "witness": str,
            "agree": bool,
            "total_checks": int,
            "verdict_counts": dict,
            "report": str,
            "generated_at": str
        }

    def fill(self, data):
        """Fill template with data and ensure all fields are present"""
        return {
            "page_type": data.get("page_type", "Cross-check"),
            "rows": data.get("rows", []),
            "disagreements": data.get("disagreements", []),
            "witness": data.get("witness", ""),
            "agree": data.get("agree", True),
            "total_checks": data.get("total_checks", 0),
            "verdict_counts": data.get("verdict_counts", {}),
            "report": data.get("report", ""),
            "generated_at": data.get("generated_at", "")
        }
