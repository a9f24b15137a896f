"""Jinja2 renderer for command reports."""

import json
from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader

from ..models.reports import GroupSummary, Report


EMPTY_PARTITION = "(empty)"


def _partition_text(text: Optional[str]) -> str:
    """Partition grammar text, with a placeholder for the empty partition."""
    if text is None:
        return "-"
    return text or EMPTY_PARTITION


def _verdict_text(verdict: Optional[bool]) -> str:
    if verdict is None:
        return "-"
    return "true" if verdict else "false"


def _summary_text(summary: GroupSummary) -> str:
    primes = ",".join(map(str, summary.primes)) or "-"
    return f"degree {summary.degree}, order {summary.order}, primes {primes}"


class ReportRenderer:
    """Renders reports as text (jinja2 template) or JSON."""

    def __init__(self, template_path: Optional[Path] = None):
        """
        Initialize Jinja2 environment.

        Args:
            template_path: Custom template file. If None, uses the built-in one.
        """
        if template_path and template_path.exists():
            template_dir = template_path.parent
            template_name = template_path.name
        else:
            template_dir = Path(__file__).parent
            template_name = "report.txt.j2"

        self.env = Environment(
            loader=FileSystemLoader(template_dir),
            keep_trailing_newline=True,
        )
        self.env.filters["partition_text"] = _partition_text
        self.env.filters["verdict_text"] = _verdict_text
        self.env.filters["summary_text"] = _summary_text
        self.template = self.env.get_template(template_name)

    def render_text(self, report: Report) -> str:
        return self.template.render(report=report)

    @staticmethod
    def render_json(report: Report) -> str:
        """JSON with a stable key order (schema 1)."""
        return json.dumps(report.to_dict(), ensure_ascii=False) + "\n"

    def render(self, report: Report, as_json: bool = False) -> str:
        return self.render_json(report) if as_json else self.render_text(report)


def emit_report(report: Report, as_json: bool = False) -> str:
    """Render a report with the built-in template or as JSON."""
    return ReportRenderer().render(report, as_json)
