"""Firewall log status reporter."""

from .aggregator import (
    Aggregate, FrequencyTable, MatchMode, ReportEntry, ReportKind, SummaryStats,
    build_report, count_frequencies, extract_key, filter_log_records, format_percent,
    summary_stats,
)
from .log_model import LogRecord, MalformedTimestamp, Timestamp, compare_timestamps, parse_timestamp
from .parser import ParseDiagnostic, ParseResult, parse_record, read_log, split_record
from .renderer import RenderOptions, render_jsonl, render_report, render_section, truncate_key

__all__ = [
    "Aggregate", "FrequencyTable", "LogRecord", "MalformedTimestamp", "MatchMode",
    "ParseDiagnostic", "ParseResult", "RenderOptions", "ReportEntry", "ReportKind",
    "SummaryStats", "Timestamp", "build_report", "compare_timestamps", "count_frequencies",
    "extract_key", "filter_log_records", "format_percent", "parse_record", "parse_timestamp",
    "read_log", "render_jsonl", "render_report", "render_section", "split_record",
    "summary_stats", "truncate_key",
]
