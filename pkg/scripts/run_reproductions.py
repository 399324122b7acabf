"""Run every reproduction target and write one TSV per target plus a timing summary."""

import argparse
import io
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

from tworooted.cli import main as cli_main
from tworooted.reproduce import TARGETS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--targets", nargs="*", choices=TARGETS, default=list(TARGETS))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for target in args.targets:
        buf = io.StringIO()
        t0 = time.perf_counter()
        with redirect_stdout(buf):
            code = cli_main(["reproduce", target, "--threads", str(args.threads)])
        secs = time.perf_counter() - t0
        (args.out / f"{target}.tsv").write_text(buf.getvalue())
        print(f"{target}\t{'ok' if code == 0 else 'FAILED'}\t{secs:.2f}s\t{len(buf.getvalue().splitlines())} lines")
        status |= code
    return status


if __name__ == "__main__":
    sys.exit(main())
