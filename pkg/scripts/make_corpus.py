"""Regenerate the shipped small-graph corpus (needs the ``corpus`` extra: pynauty)."""

import argparse
from pathlib import Path

from tworooted import corpus

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "src" / "tworooted" / "data"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=corpus.SHIPPED_MAX_N)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()
    corpus.write_corpus(args.out, args.max_n)
    for n in range(args.max_n + 1):
        count = sum(1 for line in (args.out / f"graphs{n}.g6").read_text().splitlines() if line)
        print(f"n={n}\t{count}")


if __name__ == "__main__":
    main()
