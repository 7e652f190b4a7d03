"""Write a synthetic firewall export to a file.

    python scripts/make_synthetic_log.py out.log --lines 1000000 --distinct 1000
"""

import argparse

from fwstatus.synthetic import generate_lines


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("path")
    ap.add_argument("--lines", type=int, default=1_000_000)
    ap.add_argument("--distinct", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    with open(args.path, "w", newline="\n") as fh:
        for line in generate_lines(args.lines, args.distinct, args.seed):
            fh.write(line + "\n")


if __name__ == "__main__":
    main()
