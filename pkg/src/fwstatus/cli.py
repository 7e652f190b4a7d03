"""Command-line entry point: ``fwstatus <s|d|u|i|a|h> [options]``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .aggregator import DEFAULT_TOP_N, REPORT_ORDER, Aggregate, MatchMode, ReportKind
from .parser import IoFailure, LogReader, ParseDiagnostic
from .renderer import RenderOptions, render_jsonl, render_report

SELECTORS = {
    "s": (ReportKind.SOURCE,),
    "d": (ReportKind.DESTINATION,),
    "u": (ReportKind.SERVICE,),
    "i": (ReportKind.INTERFACE,),
    "a": REPORT_ORDER,
}

HELP_LINES = (
    "s - Create the Source Addresses report",
    "d - Create the Destination Address report",
    "u - Create the Service Usage report",
    "i - Create the Network Interface report",
    "a - Create all reports",
    "h - Display the help screen",
)

FLAGS_HELP = """\
Options:
  --input PATH                 log file to read (default: standard input)
  --output PATH                report file to write (default: standard output)
  --top N                      rows per report (default: 10)
  --match-mode exact|legacy    exact counting, or substring counting as in
                               the original tool (default: exact)
  --format text|jsonl          report format (default: text)
  --generated-on STRING        fixed value for the "Report generated on" line
"""

# diagnostics beyond this many are only counted
MAX_REPORTED_DIAGNOSTICS = 20


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Command:
    selector: str = "h"
    input_path: str | None = None
    output_path: str | None = None
    top_n: int = DEFAULT_TOP_N
    match_mode: MatchMode = MatchMode.EXACT
    format: str = "text"
    generated_on: str | None = None


def help_text() -> str:
    return ("You need to pass command line argument: Following options are available\n\n"
            + "\n".join(HELP_LINES) + "\n\n" + FLAGS_HELP)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value!r}")
    return n


def _build_parser() -> _Parser:
    p = _Parser(prog="fwstatus", add_help=False)
    p.add_argument("selector", nargs="?")
    p.add_argument("--input")
    p.add_argument("--output")
    p.add_argument("--top", type=_positive_int, default=DEFAULT_TOP_N)
    p.add_argument("--match-mode", choices=[m.value for m in MatchMode], default="exact")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.add_argument("--generated-on")
    return p


def parse_args(argv: Sequence[str]) -> Command:
    """Build a Command; raises UsageError on malformed flag values.

    A missing or unrecognised selector falls back to the help screen.
    """
    ns = _build_parser().parse_args(list(argv))
    selector = ns.selector if ns.selector in SELECTORS else "h"
    return Command(selector=selector, input_path=ns.input, output_path=ns.output,
                   top_n=ns.top, match_mode=MatchMode(ns.match_mode), format=ns.format,
                   generated_on=ns.generated_on)


class _DiagnosticSink:
    def __init__(self, stream: TextIO):
        self.stream = stream
        self.count = 0

    def __call__(self, diag: ParseDiagnostic) -> None:
        if diag.severity == "info":
            return
        self.count += 1
        if self.count <= MAX_REPORTED_DIAGNOSTICS:
            print(diag, file=self.stream)

    def close(self) -> None:
        extra = self.count - MAX_REPORTED_DIAGNOSTICS
        if extra > 0:
            print(f"... {extra} more diagnostics not shown", file=self.stream)


def aggregate_stream(stream, stderr: TextIO | None = None) -> Aggregate:
    """Read, filter to log-type records and aggregate in one pass."""
    sink = _DiagnosticSink(stderr if stderr is not None else sys.stderr)
    reader = LogReader(stream, on_diagnostic=sink)
    agg = Aggregate().update(r for r in reader if r.msg_type == "log")
    sink.close()
    return agg


def render(cmd: Command, agg: Aggregate) -> str:
    selection = SELECTORS[cmd.selector]
    sections = {k: agg.report(k, cmd.match_mode, cmd.top_n) for k in selection}
    opts = RenderOptions(generated_on=cmd.generated_on, top_n=cmd.top_n, format=cmd.format)
    fn = render_jsonl if cmd.format == "jsonl" else render_report
    return fn(selection, sections, agg.summary(), opts)


def run(cmd: Command, stdin=None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    if cmd.selector == "h":
        stdout.write(help_text())
        return 0

    try:
        if cmd.input_path is None:
            agg = aggregate_stream(stdin, stderr)
        else:
            with open(cmd.input_path, "rb", buffering=1 << 20) as fh:
                agg = aggregate_stream(fh, stderr)
    except (OSError, IoFailure) as exc:
        print(f"fwstatus: cannot read input: {exc}", file=stderr)
        return 1

    document = render(cmd, agg)
    try:
        if cmd.output_path is None:
            stdout.write(document)
            stdout.flush()
        else:
            with open(cmd.output_path, "w", encoding="utf-8", newline="\n") as out:
                out.write(document)
    except OSError as exc:
        print(f"fwstatus: cannot write output: {exc}", file=stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"fwstatus: {exc}\n", file=sys.stderr)
        sys.stderr.write(help_text())
        return 2
    return run(cmd)


if __name__ == "__main__":
    sys.exit(main())
