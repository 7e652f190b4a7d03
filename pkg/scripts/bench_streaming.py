"""Time the all-reports run over a synthetic export and report peak memory.

    python scripts/bench_streaming.py --lines 1000000 --distinct 1000
"""

import argparse
import io
import re
import sys
import tempfile
import time
from pathlib import Path

from fwstatus.cli import main as fwstatus_main
from fwstatus.synthetic import generate_lines


def peak_rss_kib():
    status = Path("/proc/self/status")
    if not status.exists():
        return None
    return int(re.search(r"VmHWM:\s+(\d+) kB", status.read_text()).group(1))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lines", type=int, default=1_000_000)
    ap.add_argument("--distinct", type=int, default=1000)
    ap.add_argument("--match-mode", default="exact")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "synthetic.log"
        with open(path, "w") as fh:
            for line in generate_lines(args.lines, args.distinct, args.seed):
                fh.write(line + "\n")
        before = peak_rss_kib()
        real_stdout, sys.stdout = sys.stdout, io.StringIO()
        start = time.perf_counter()
        code = fwstatus_main(["a", "--input", str(path), "--match-mode", args.match_mode,
                              "--generated-on", "bench"])
        elapsed = time.perf_counter() - start
        sys.stdout = real_stdout
    print(f"lines={args.lines} distinct={args.distinct} mode={args.match_mode} "
          f"exit={code} elapsed={elapsed:.2f}s peak_rss_before={before}KiB "
          f"peak_rss_after={peak_rss_kib()}KiB")


if __name__ == "__main__":
    main()
