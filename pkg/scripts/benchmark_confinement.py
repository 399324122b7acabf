"""Wall time of the confinement check on the heaviest hosts, for several worker counts."""

import argparse
import time

from tworooted.families import parse_host, parse_pattern
from tworooted.rooted import confines

CASES = [
    ("named:tutte_coxeter", "T1:2,4,1"),
    ("lex(named:tutte_coxeter,empty:2)", "T1:3,0,1"),
    ("lex(cart(cycle:6,cycle:3),empty:2)", "T2:2,2"),
    ("lex(named:moebius:6,empty:2)", "T2:2,1"),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, nargs="*", default=[1, 2, 4, 8])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print("host\tpattern\tcopies\tconfines\tworkers\tbest_ms")
    for host_text, pat_text in CASES:
        host, pat = parse_host(host_text), parse_pattern(pat_text)
        for w in args.workers:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                rep = confines(host, pat, workers=w)
                best = min(best, time.perf_counter() - t0)
            print(f"{host_text}\t{pat_text}\t{rep.copy_count}\t{str(rep.overall).lower()}\t{w}\t{best * 1000:.1f}")


if __name__ == "__main__":
    main()
