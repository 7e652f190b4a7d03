"""Text and JSON Lines rendering of the summary report."""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .aggregator import DEFAULT_TOP_N, REPORT_ORDER, ReportEntry, ReportKind, SummaryStats
from .log_model import Timestamp

KEY_WIDTH = 16
BANNER = "| Firewall Log Summary Report |"
BANNER_RULE = "-" * 31
SECTION_RULE = "=" * 26

SECTION_TITLES = {
    ReportKind.SOURCE: "Users/Source Addressess :",
    ReportKind.DESTINATION: "Users/Destination Addressess :",
    ReportKind.SERVICE: "Service Usage :",
    ReportKind.INTERFACE: "Network Interface Usage :",
}

DAY_NAMES = ("Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat")
MONTH_NAMES = ("January", "February", "March", "April", "May", "June", "July",
               "August", "Sept", "October", "November", "December")

Sections = Mapping[ReportKind, tuple[Sequence[ReportEntry], int]]


@dataclass(frozen=True)
class RenderOptions:
    generated_on: str | None = None
    top_n: int = DEFAULT_TOP_N
    format: str = "text"

    def resolve_generated_on(self) -> str:
        if self.generated_on is not None:
            return self.generated_on
        return format_generated_on(dt.datetime.now())


def format_generated_on(when: dt.datetime) -> str:
    # isoweekday: Mon=1..Sun=7, so %7 lines it up with DAY_NAMES
    return (f"{DAY_NAMES[when.isoweekday() % 7]} {when.day} {MONTH_NAMES[when.month - 1]} "
            f"{when.year} {when:%H:%M:%S}")


def truncate_key(key: str) -> str:
    return key[:KEY_WIDTH]


def render_header(stats: SummaryStats, opts: RenderOptions,
                  generated_on: str | None = None) -> str:
    lines = [
        BANNER_RULE, BANNER, BANNER_RULE,
        f"Report generated on:{generated_on or opts.resolve_generated_on()}",
    ]
    if stats.period_start is not None and stats.period_end is not None:
        lines.append(f"Period for matched data: {stats.period_start.display()} "
                     f"to {stats.period_end.display()}")
    lines += [
        f"Total entries processed: {stats.total_log_records}",
        f"Inbound traffic: {stats.inbound}",
        f"Outbound traffic: {stats.outbound}",
        "",
    ]
    return "\n".join(lines) + "\n"


def render_row(entry: ReportEntry) -> str:
    return f"  {truncate_key(entry.key)}\t{entry.count}\t{entry.percent}%"


def render_section(kind: ReportKind, entries: Sequence[ReportEntry], total_distinct: int,
                   opts: RenderOptions | None = None) -> str:
    lines = [SECTION_RULE, SECTION_TITLES[kind], SECTION_RULE]
    lines += [render_row(e) for e in entries]
    lines += [f"<-----Top {len(entries)} of {total_distinct} Entries----->", ""]
    return "\n".join(lines) + "\n"


def _selected(selection) -> list[ReportKind]:
    chosen = set(selection)
    return [k for k in REPORT_ORDER if k in chosen]


def render_report(selection, sections: Sections, stats: SummaryStats,
                  opts: RenderOptions) -> str:
    """Header followed by the chosen sections in source, destination,
    service, interface order."""
    parts = [render_header(stats, opts)]
    for kind in _selected(selection):
        entries, total_distinct = sections.get(kind, ([], 0))
        parts.append(render_section(kind, entries, total_distinct, opts))
    return "".join(parts)


def _iso(ts: Timestamp | None) -> str | None:
    return ts.isoformat() if ts is not None else None


def render_jsonl(selection, sections: Sections, stats: SummaryStats,
                 opts: RenderOptions) -> str:
    kinds = _selected(selection)
    lines = [json.dumps({
        "record": "summary",
        "total": stats.total_log_records,
        "inbound": stats.inbound,
        "outbound": stats.outbound,
        "period_start": _iso(stats.period_start),
        "period_end": _iso(stats.period_end),
        "generated_on": opts.resolve_generated_on(),
        "sections": [k.value for k in kinds],
    }, ensure_ascii=False)]
    for kind in kinds:
        entries, total_distinct = sections.get(kind, ([], 0))
        for rank, e in enumerate(entries, 1):
            lines.append(json.dumps({
                "record": "row", "kind": kind.value, "rank": rank, "key": e.key,
                "count": e.count, "percent": e.percent, "total_distinct": total_distinct,
            }, ensure_ascii=False))
    return "\n".join(lines) + "\n"


def _parse_iso(value: str | None) -> Timestamp | None:
    if value is None:
        return None
    d = dt.datetime.fromisoformat(value)
    return Timestamp(d.year, d.month, d.day, d.hour, d.minute, d.second)


def load_jsonl(text: str):
    """Inverse of :func:`render_jsonl`.

    Returns ``(selection, sections, stats, generated_on)`` such that
    ``render_report`` over them reproduces the text report.
    """
    summary = None
    rows: dict[ReportKind, list] = {}
    distinct: dict[ReportKind, int] = {}
    # split on LF only: splitlines() would also break on U+0085 and friends
    for line in text.split("\n"):
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec["record"] == "summary":
            summary = rec
        elif rec["record"] == "row":
            kind = ReportKind(rec["kind"])
            rows.setdefault(kind, []).append(
                (rec["rank"], ReportEntry(rec["key"], rec["count"], rec["percent"])))
            distinct[kind] = rec["total_distinct"]
        else:
            raise ValueError(f"unknown record type {rec['record']!r}")
    if summary is None:
        raise ValueError("no summary record")
    selection = [ReportKind(k) for k in summary["sections"]]
    sections = {k: ([e for _, e in sorted(rows.get(k, []), key=lambda r: r[0])],
                    distinct.get(k, 0)) for k in selection}
    stats = SummaryStats(summary["total"], summary["inbound"], summary["outbound"],
                         _parse_iso(summary["period_start"]), _parse_iso(summary["period_end"]))
    return selection, sections, stats, summary["generated_on"]
