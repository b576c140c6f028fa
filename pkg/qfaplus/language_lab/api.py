"""language_lab api."""

__all__ = ["RecognitionReport", "MarginScan", "check_bounded_error", "margin_scan", "acceptance_table"]

from .recognition import RecognitionReport, MarginScan, check_bounded_error, margin_scan, acceptance_table
