import io
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from conftest import GOLDEN
from fwstatus.aggregator import MatchMode
from fwstatus.cli import HELP_LINES, Command, UsageError, help_text, main, parse_args, run

PIN = ["--generated-on", "Fri 17 Nov 2006 15:00:00"]


def run_cli(argv, stdin=b""):
    out, err = io.StringIO(), io.StringIO()
    try:
        cmd = parse_args(argv)
    except UsageError:
        return 2, "", "usage"
    code = run(cmd, stdin=io.BytesIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_args_examples():
    assert parse_args(["s"]) == Command(selector="s")
    assert parse_args([]).selector == "h"
    cmd = parse_args(["a", "--top", "5", "--match-mode", "legacy"])
    assert (cmd.selector, cmd.top_n, cmd.match_mode) == ("a", 5, MatchMode.LEGACY)
    assert parse_args(["zzz", "--format", "jsonl"]).selector == "h"


@pytest.mark.parametrize("argv", [
    ["a", "--top", "x"], ["a", "--top", "0"], ["a", "--match-mode", "fuzzy"],
    ["a", "--format", "html"], ["a", "--bogus"],
])
def test_parse_args_usage_errors(argv):
    with pytest.raises(UsageError):
        parse_args(argv)


def test_main_usage_error_exit_code(capsys):
    assert main(["a", "--top", "nope"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "s - Create the Source Addresses report" in captured.err


def test_help_text():
    text = help_text()
    for line in HELP_LINES:
        assert line in text.splitlines()
    assert "d - Create the Destination Address report" in text
    assert "i - Create the Network Interface report" in text
    assert "--match-mode" in text


def test_run_snippet_all_legacy(snippet_bytes):
    code, out, err = run_cli(["a", "--match-mode", "legacy"] + PIN, snippet_bytes)
    assert code == 0
    assert out.count("<-----Top") == 4
    assert "Total entries processed: 2\n" in out
    assert "expected 21 fields" in err
    assert "expected 21 fields" not in out


def test_run_snippet_matches_golden(snippet_bytes):
    code, out, _ = run_cli(["a"] + PIN, snippet_bytes)
    assert code == 0
    assert out == (GOLDEN / "snippet_all.txt").read_text()


def test_run_help():
    code, out, err = run_cli(["h", "--top", "3"])
    assert code == 0 and out == help_text() and err == ""


def test_run_missing_input(tmp_path):
    code, out, err = run_cli(["s", "--input", str(tmp_path / "nope.log")])
    assert code == 1 and out == "" and "cannot read input" in err


def test_run_unwritable_output(tmp_path, snippet_path):
    code, _, err = run_cli(["s", "--input", str(snippet_path),
                            "--output", str(tmp_path / "missing" / "out.txt")])
    assert code == 1 and "cannot write output" in err


def test_run_output_file(tmp_path, snippet_path):
    target = tmp_path / "report.txt"
    code, out, _ = run_cli(["a", "--input", str(snippet_path), "--output", str(target)] + PIN)
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "snippet_all.txt").read_text()


def test_diagnostics_are_capped(snippet_bytes):
    data = b"1;2\n" * 50
    code, _, err = run_cli(["s"], data)
    assert code == 0
    assert err.count("padded") == 20
    assert "30 more diagnostics not shown" in err


@given(st.text(max_size=5))
def test_dispatch_totality(selector):
    cmd = parse_args([selector]) if not selector.startswith("-") else parse_args([])
    if selector in {"s", "d", "u", "i", "a"}:
        assert cmd.selector == selector
    else:
        assert cmd.selector == "h"


def test_module_entry_point(snippet_path):
    proc = subprocess.run([sys.executable, "-m", "fwstatus", "d", "--input", str(snippet_path)]
                          + PIN, capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Users/Destination Addressess :" in proc.stdout
    assert "Users/Source Addressess :" not in proc.stdout
