"""Single-pass reader for semicolon-delimited firewall log exports."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import repeat
from typing import BinaryIO, Callable, Iterable, Iterator, TextIO

from .log_model import NUM_FIELDS, LogRecord

SEPARATOR = ";"
# ASCII whitespace only; str.strip() would also eat e.g. U+00A0
_WS = " \t\r\n\v\f"


class IoFailure(OSError):
    pass


@dataclass(frozen=True)
class ParseDiagnostic:
    line_number: int
    severity: str  # "info", "warning" or "error"
    message: str
    raw_line: str

    def __str__(self) -> str:
        return f"line {self.line_number}: {self.severity}: {self.message}"


@dataclass
class ParseResult:
    records: list[LogRecord] = field(default_factory=list)
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)
    lines_read: int = 0
    blank_lines: int = 0
    header_lines: int = 0

    @property
    def error_count(self) -> int:
        return sum(d.severity == "error" for d in self.diagnostics)


def split_record(line: str) -> list[str]:
    """Split on every semicolon, keeping empty and trailing-empty fields.

    Whitespace around each field is dropped; interior bytes are kept.
    """
    return list(map(str.strip, line.split(SEPARATOR), repeat(_WS)))


def is_header(fields: list[str]) -> bool:
    return len(fields) >= 2 and fields[0] == "num" and fields[1] == "date"


def decode_line(raw: bytes, line_number: int, strict: bool = False
                ) -> tuple[str | None, ParseDiagnostic | None]:
    """Decode one physical line as UTF-8.

    Invalid UTF-8 is kept byte-for-byte through latin-1 with a warning, or
    rejected with an error when ``strict`` is set.
    """
    try:
        return raw.decode("utf-8"), None
    except UnicodeDecodeError as exc:
        text = raw.decode("latin-1")
        if strict:
            return None, ParseDiagnostic(line_number, "error",
                                         f"invalid UTF-8 ({exc.reason}); line dropped", text)
        return text, ParseDiagnostic(line_number, "warning",
                                     "invalid UTF-8; bytes kept verbatim", text)


def parse_record(line: str, line_number: int) -> tuple[LogRecord, list[ParseDiagnostic]]:
    """Assign the split fields of ``line`` to the 21 record slots in order.

    Short lines are padded with empty strings; surplus fields are joined
    back with ";" into ``sys_msgs``. Both cases add a warning.
    """
    parts = split_record(line)
    diags = []
    if len(parts) < NUM_FIELDS:
        diags.append(ParseDiagnostic(line_number, "warning",
                                     f"expected {NUM_FIELDS} fields, got {len(parts)}; padded",
                                     line))
        parts += [""] * (NUM_FIELDS - len(parts))
    elif len(parts) > NUM_FIELDS:
        diags.append(ParseDiagnostic(line_number, "warning",
                                     f"expected {NUM_FIELDS} fields, got {len(parts)}; "
                                     "surplus folded into sys_msgs", line))
        parts = parts[:NUM_FIELDS - 1] + [SEPARATOR.join(parts[NUM_FIELDS - 1:])]

    num = parts[0]
    if num.isascii() and num.isdigit():
        parts[0] = int(num)
    else:
        diags.append(ParseDiagnostic(line_number, "warning",
                                     f"non-numeric record number {num!r}", line))
        parts[0] = 0
    return LogRecord._make(parts), diags


class LogReader:
    """Iterate the records of one stream in a single forward pass.

    Accepts binary or text streams. Diagnostics are collected on
    ``self.diagnostics`` unless ``on_diagnostic`` is given, in which case
    they are handed off one at a time and nothing accumulates.
    """

    def __init__(self, stream: BinaryIO | TextIO | Iterable[bytes | str],
                 strict_encoding: bool = False,
                 on_diagnostic: Callable[[ParseDiagnostic], None] | None = None):
        self.stream = stream
        self.strict_encoding = strict_encoding
        self.diagnostics: list[ParseDiagnostic] = []
        self._emit = on_diagnostic or self.diagnostics.append
        self.lines_read = 0
        self.blank_lines = 0
        self.header_lines = 0
        self.records_read = 0

    def __iter__(self) -> Iterator[LogRecord]:
        lineno = records = 0
        emit = self._emit
        new = tuple.__new__
        try:
            for lineno, raw in enumerate(self.stream, 1):
                if isinstance(raw, bytes):
                    raw = raw.rstrip(b"\r\n")
                    try:
                        text = raw.decode("utf-8")
                    except UnicodeDecodeError:
                        text, diag = decode_line(raw, lineno, self.strict_encoding)
                        emit(diag)
                        if text is None:
                            continue
                else:
                    text = raw.rstrip("\r\n")

                parts = text.split(SEPARATOR)
                if " " in text or "\t" in text or "\v" in text or "\f" in text or "\r" in text:
                    parts = list(map(str.strip, parts, repeat(_WS)))
                num = parts[0]
                if len(parts) == 1 and not num:
                    self.blank_lines += 1
                    continue
                if num == "num" and is_header(parts):
                    self.header_lines += 1
                    emit(ParseDiagnostic(lineno, "info", "header line skipped", text))
                    continue

                if len(parts) == NUM_FIELDS and num.isdigit() and num.isascii():
                    # well-formed line, skip the general path
                    parts[0] = int(num)
                    record = new(LogRecord, parts)
                else:
                    record, diags = parse_record(text, lineno)
                    for d in diags:
                        emit(d)
                records += 1
                yield record
        except OSError as exc:
            raise IoFailure(f"error reading input after line {lineno}: {exc}") from exc
        finally:
            self.lines_read = lineno
            self.records_read = records


def read_log(stream: BinaryIO | TextIO | Iterable[bytes | str],
             strict_encoding: bool = False) -> ParseResult:
    reader = LogReader(stream, strict_encoding=strict_encoding)
    records = list(reader)
    return ParseResult(records=records, diagnostics=reader.diagnostics,
                       lines_read=reader.lines_read, blank_lines=reader.blank_lines,
                       header_lines=reader.header_lines)
