"""Record schema and timestamp handling for semicolon-delimited firewall exports."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

FIELD_NAMES = (
    "num", "date", "time", "orig", "msg_type", "action", "alert",
    "if_name", "if_dir", "proto", "src", "dst", "service", "s_port",
    "len", "rule", "icmp_type", "icmp_code", "h_len", "ip_vers", "sys_msgs",
)
# column names as they appear in the export header line
HEADER_NAMES = (
    "num", "date", "time", "orig", "type", "action", "alert",
    "if_name", "if_dir", "proto", "src", "dst", "service", "s_port",
    "len", "rule", "icmp-type", "icmp-code", "h_len", "ip_vers", "sys_msgs",
)
NUM_FIELDS = len(FIELD_NAMES)

MONTHS = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
          "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")
_MONTH_INDEX = {m.lower(): i + 1 for i, m in enumerate(MONTHS)}

_DATE_RE = re.compile(r"(\d{1,2})([A-Za-z]{3})(\d{4})")


class MalformedTimestamp(ValueError):
    pass


class LogRecord(NamedTuple):
    """One line of the export, assigned positionally.

    ``num`` is the only non-string field; an unparseable sequence number
    is stored as 0 (it never takes part in aggregation).
    """

    num: int = 0
    date: str = ""
    time: str = ""
    orig: str = ""
    msg_type: str = ""
    action: str = ""
    alert: str = ""
    if_name: str = ""
    if_dir: str = ""
    proto: str = ""
    src: str = ""
    dst: str = ""
    service: str = ""
    s_port: str = ""
    len: str = ""
    rule: str = ""
    icmp_type: str = ""
    icmp_code: str = ""
    h_len: str = ""
    ip_vers: str = ""
    sys_msgs: str = ""

    def values(self) -> tuple[str, ...]:
        return tuple(str(v) for v in self)


@dataclass(frozen=True, order=True)
class Timestamp:
    year: int
    month: int
    day: int
    hour: int
    minute: int
    second: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.year, self.month, self.day, self.hour, self.minute, self.second)

    def to_fields(self) -> tuple[str, str]:
        """Render back into the export's (date, time) field format."""
        return (
            f"{self.day:02d}{MONTHS[self.month - 1]}{self.year:04d}",
            f"{self.hour:02d}:{self.minute:02d}:{self.second:02d}",
        )

    def isoformat(self) -> str:
        return (f"{self.year:04d}-{self.month:02d}-{self.day:02d}"
                f"T{self.hour:02d}:{self.minute:02d}:{self.second:02d}")

    def display(self) -> str:
        # "17 Feb 2006 07:13:02"
        return (f"{self.day} {MONTHS[self.month - 1]} {self.year:04d} "
                f"{self.hour:02d}:{self.minute:02d}:{self.second:02d}")


def parse_timestamp(date: str, time: str) -> Timestamp:
    """Parse a ``17Nov2006`` / ``14:10:43`` field pair.

    Leading blanks and single-digit day or hour are accepted. No calendar
    validation beyond per-field ranges, so ``30Feb2006`` parses.
    """
    return Timestamp(*timestamp_tuple(date, time))


def timestamp_tuple(date: str, time: str) -> tuple[int, int, int, int, int, int]:
    return parse_date(date) + parse_time(time)


# exports repeat the same dates and times over many lines; both caches are
# small and bounded so memory stays independent of input size
@lru_cache(maxsize=4096)
def parse_date(date: str) -> tuple[int, int, int]:
    dm = _DATE_RE.fullmatch(date.strip())
    if dm is None:
        raise MalformedTimestamp(f"cannot parse date {date!r}")
    month = _MONTH_INDEX.get(dm.group(2).lower())
    if month is None:
        raise MalformedTimestamp(f"unknown month abbreviation {dm.group(2)!r}")
    day = int(dm.group(1))
    if not 1 <= day <= 31:
        raise MalformedTimestamp(f"day out of range: {date!r}")
    return int(dm.group(3)), month, day


@lru_cache(maxsize=4096)
def parse_time(time: str) -> tuple[int, int, int]:
    parts = time.strip().split(":")
    if len(parts) != 3:
        raise MalformedTimestamp(f"cannot parse time {time!r}")
    h, m, s = parts
    digits = h + m + s
    if not (0 < len(h) <= 2 and len(m) == 2 and len(s) == 2
            and digits.isascii() and digits.isdigit()):
        raise MalformedTimestamp(f"cannot parse time {time!r}")
    hour, minute, second = int(h), int(m), int(s)
    if hour > 23 or minute > 59 or second > 59:
        raise MalformedTimestamp(f"time component out of range: {time!r}")
    return hour, minute, second


def sortable_time(time: str) -> str | None:
    """``H:MM:SS`` / ``HH:MM:SS`` as zero-padded ``HH:MM:SS``, or None if invalid.

    Padded strings order the same way as the times they spell, which lets
    the aggregator track min/max without building a Timestamp per record.
    """
    t = time.strip()
    if len(t) == 7:
        t = "0" + t
    if (len(t) == 8 and t[2] == ":" and t[5] == ":"
            and (t[:2] + t[3:5] + t[6:]).isdigit() and t.isascii()
            and t[:2] <= "23" and t[3:5] <= "59" and t[6:] <= "59"):
        return t
    return None


def compare_timestamps(a: Timestamp, b: Timestamp) -> int:
    """Return -1, 0 or 1 as ``a`` is before, equal to, or after ``b``."""
    ta, tb = a.as_tuple(), b.as_tuple()
    return (ta > tb) - (ta < tb)
