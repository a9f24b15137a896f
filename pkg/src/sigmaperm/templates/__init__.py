"""Report rendering."""

from .renderer import ReportRenderer, emit_report

__all__ = ["ReportRenderer", "emit_report"]
