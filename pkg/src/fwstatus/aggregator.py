"""Frequency tables, top-N reports and summary statistics over log records."""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .log_model import LogRecord, MalformedTimestamp, Timestamp, parse_date, sortable_time

DEFAULT_TOP_N = 10


class MatchMode(enum.Enum):
    EXACT = "exact"
    # a key counts every occurrence containing it, case-insensitively
    LEGACY = "legacy"


class ReportKind(enum.Enum):
    SOURCE = "source"
    DESTINATION = "destination"
    SERVICE = "service"
    INTERFACE = "interface"


REPORT_ORDER = (ReportKind.SOURCE, ReportKind.DESTINATION,
                ReportKind.SERVICE, ReportKind.INTERFACE)


class ZeroTotal(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class FrequencyTable:
    entries: dict[str, int]
    total_occurrences: int
    empty_keys: int = 0


@dataclass(frozen=True)
class ReportEntry:
    key: str
    count: int
    percent: str


@dataclass(frozen=True)
class SummaryStats:
    total_log_records: int = 0
    inbound: int = 0
    outbound: int = 0
    period_start: Timestamp | None = None
    period_end: Timestamp | None = None


def filter_log_records(records: Iterable[LogRecord]) -> list[LogRecord]:
    return [r for r in records if r.msg_type == "log"]


def extract_key(record: LogRecord, kind: ReportKind) -> str:
    if kind is ReportKind.SOURCE:
        return record.src
    if kind is ReportKind.DESTINATION:
        return record.dst
    if kind is ReportKind.SERVICE:
        return f"{record.proto}__{record.service}" if record.service else record.proto
    if kind is ReportKind.INTERFACE:
        return f"{record.orig}__{record.if_name}_{record.if_dir}"
    raise ValueError(f"unknown report kind {kind!r}")


def format_percent(count: int, total: int) -> str:
    """count/total as a percentage with two decimals, halves rounded up.

    Works on the exact ratio in integers so that values sitting on a
    rounding boundary are not pushed either way by binary floats.
    """
    if total <= 0:
        raise ZeroTotal("percentage of an empty total")
    hundredths = (2 * count * 10000 + total) // (2 * total)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def resolve_counts(multiplicity: Counter[str] | dict[str, int], mode: MatchMode) -> dict[str, int]:
    """Turn exact per-key multiplicities into counts under ``mode``.

    Legacy counting is quadratic in the number of distinct keys but never
    needs the raw occurrence stream.
    """
    if mode is MatchMode.EXACT:
        return dict(multiplicity)
    folded = [(k.lower(), n) for k, n in multiplicity.items()]
    out = {}
    for key in multiplicity:
        needle = key.lower()
        out[key] = sum(n for other, n in folded if needle in other)
    return out


def _tally(keys: Sequence[str]) -> tuple[Counter[str], int]:
    c = Counter(keys)
    empty = c.pop("", 0)
    return c, empty


def merge_counters(parts: Iterable[Counter[str]]) -> Counter[str]:
    merged: Counter[str] = Counter()
    for part in parts:
        merged.update(part)
    return merged


def count_frequencies(keys: Sequence[str], mode: MatchMode = MatchMode.EXACT,
                      workers: int = 1) -> FrequencyTable:
    """Count key occurrences; empty keys are excluded from table and total.

    With ``workers > 1`` the sequence is split into contiguous chunks that
    are tallied concurrently and merged; the table is identical either way.
    """
    keys = list(keys)
    if workers > 1 and len(keys) > workers:
        step = -(-len(keys) // workers)
        chunks = [keys[i:i + step] for i in range(0, len(keys), step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(_tally, chunks))
        multiplicity = merge_counters(t for t, _ in tallies)
        empty = sum(e for _, e in tallies)
    else:
        multiplicity, empty = _tally(keys)
    total = sum(multiplicity.values())
    return FrequencyTable(resolve_counts(multiplicity, mode), total, empty)


def rank_entries(table: FrequencyTable, top_n: int | None = DEFAULT_TOP_N
                 ) -> tuple[list[ReportEntry], int]:
    # count descending, then key ascending in code point (== UTF-8 byte) order
    ordered = sorted(table.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    if top_n is not None:
        ordered = ordered[:top_n]
    entries = [ReportEntry(k, n, format_percent(n, table.total_occurrences))
               for k, n in ordered]
    return entries, len(table.entries)


def build_report(records: Iterable[LogRecord], kind: ReportKind,
                 mode: MatchMode = MatchMode.EXACT, top_n: int | None = DEFAULT_TOP_N
                 ) -> tuple[list[ReportEntry], int]:
    """Top-N entries for one report kind plus the number of distinct keys."""
    table = count_frequencies([extract_key(r, kind) for r in records], mode)
    return rank_entries(table, top_n)


class Aggregate:
    """Running state for a streaming pass over log-type records.

    Holds one counter per report kind and the header totals, so memory
    grows with the number of distinct keys, not with input size.
    """

    def __init__(self) -> None:
        self.counters: dict[ReportKind, Counter[str]] = {k: Counter() for k in REPORT_ORDER}
        self.empty_keys: dict[ReportKind, int] = {k: 0 for k in REPORT_ORDER}
        self.total = 0
        self.inbound = 0
        self.outbound = 0
        # raw date string -> [min "HH:MM:SS", max "HH:MM:SS"], or None if the
        # date itself does not parse
        self._bounds: dict[str, list | None] = {}
        self._src = self.counters[ReportKind.SOURCE]
        self._dst = self.counters[ReportKind.DESTINATION]
        self._svc = self.counters[ReportKind.SERVICE]
        self._intf = self.counters[ReportKind.INTERFACE]

    def add(self, record: LogRecord) -> None:
        self.update((record,))

    def update(self, records: Iterable[LogRecord]) -> "Aggregate":
        # hot loop: everything bound to locals, state written back at the end
        src_c, dst_c, svc_c, intf_c = self._src, self._dst, self._svc, self._intf
        empty = self.empty_keys
        total, inbound, outbound = self.total, self.inbound, self.outbound
        bounds = self._bounds
        for record in records:
            (date, time, orig, _, _, _, if_name, if_dir,
             proto, src, dst, service) = record[1:13]
            total += 1
            direction = if_dir.strip().lower()
            if direction == "inbound":
                inbound += 1
            elif direction == "outbound":
                outbound += 1
            # per raw date string keep the earliest/latest valid time; a time
            # is only validated when it would displace a stored bound
            if len(time) != 8:
                time = time.strip()
                if len(time) == 7:
                    time = "0" + time
            b = bounds.get(date, _UNSEEN)
            if b is _UNSEEN:
                bounds[date] = b = _new_bounds(date)
            if b is not None:
                if b[0] is None:
                    hms = sortable_time(time)
                    if hms is not None:
                        b[0] = b[1] = hms
                elif time < b[0]:
                    hms = sortable_time(time)
                    if hms is not None:
                        b[0] = hms
                elif time > b[1]:
                    hms = sortable_time(time)
                    if hms is not None:
                        b[1] = hms
            # same keys as extract_key
            if src:
                src_c[src] += 1
            else:
                empty[ReportKind.SOURCE] += 1
            if dst:
                dst_c[dst] += 1
            else:
                empty[ReportKind.DESTINATION] += 1
            svc = f"{proto}__{service}" if service else proto
            if svc:
                svc_c[svc] += 1
            else:
                empty[ReportKind.SERVICE] += 1
            intf_c[f"{orig}__{if_name}_{if_dir}"] += 1
        self.total, self.inbound, self.outbound = total, inbound, outbound
        return self

    def merge(self, other: "Aggregate") -> "Aggregate":
        out = Aggregate()
        for kind in REPORT_ORDER:
            out.counters[kind].update(self.counters[kind])
            out.counters[kind].update(other.counters[kind])
            out.empty_keys[kind] = self.empty_keys[kind] + other.empty_keys[kind]
        out.total = self.total + other.total
        out.inbound = self.inbound + other.inbound
        out.outbound = self.outbound + other.outbound
        for src in (self, other):
            for date, b in src._bounds.items():
                mine = out._bounds.get(date, _UNSEEN)
                if mine is _UNSEEN or mine is None or mine[0] is None:
                    out._bounds[date] = None if b is None else list(b)
                elif b is not None and b[0] is not None:
                    mine[0], mine[1] = min(mine[0], b[0]), max(mine[1], b[1])
        return out

    def table(self, kind: ReportKind, mode: MatchMode = MatchMode.EXACT) -> FrequencyTable:
        c = self.counters[kind]
        return FrequencyTable(resolve_counts(c, mode), sum(c.values()), self.empty_keys[kind])

    def report(self, kind: ReportKind, mode: MatchMode = MatchMode.EXACT,
               top_n: int | None = DEFAULT_TOP_N) -> tuple[list[ReportEntry], int]:
        return rank_entries(self.table(kind, mode), top_n)

    def period(self) -> tuple[Timestamp | None, Timestamp | None]:
        spans = [(parse_date(d.strip()), b[0], b[1]) for d, b in self._bounds.items()
                 if b is not None and b[0] is not None]
        if not spans:
            return None, None
        first = min((ymd, lo) for ymd, lo, _ in spans)
        last = max((ymd, hi) for ymd, _, hi in spans)
        return _to_timestamp(first), _to_timestamp(last)

    def summary(self) -> SummaryStats:
        return SummaryStats(self.total, self.inbound, self.outbound, *self.period())


_UNSEEN = object()


def _new_bounds(date: str) -> list | None:
    try:
        parse_date(date.strip())
    except MalformedTimestamp:
        return None
    return [None, None]


def _to_timestamp(key: tuple) -> Timestamp:
    # key is ((year, month, day), "HH:MM:SS")
    (year, month, day), hms = key
    return Timestamp(year, month, day, int(hms[:2]), int(hms[3:5]), int(hms[6:]))


def summary_stats(records: Iterable[LogRecord]) -> SummaryStats:
    return Aggregate().update(records).summary()


def aggregate_parallel(records: Sequence[LogRecord], workers: int = 1,
                       reverse_merge: bool = False) -> Aggregate:
    """Aggregate contiguous chunks concurrently and merge the partial states.

    ``reverse_merge`` folds the partials in the opposite order; the merged
    state must come out the same.
    """
    if workers <= 1 or len(records) <= workers:
        return Aggregate().update(records)
    step = -(-len(records) // workers)
    chunks = [records[i:i + step] for i in range(0, len(records), step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda c: Aggregate().update(c), chunks))
    if reverse_merge:
        parts.reverse()
    merged = Aggregate()
    for p in parts:
        merged = merged.merge(p)
    return merged
