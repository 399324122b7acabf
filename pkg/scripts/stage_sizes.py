"""Stage-graph orders for the rooted families, as a quick look at how fast limits grow."""

import argparse
import warnings

from tworooted.families import parse_pattern
from tworooted.pe import classify

DEFAULT = ["T1:1,0,2", "T1:2,1,1", "T1:4,3,3", "T2:1,1", "T2:2,1", "T3:1,0", "T3:2,1",
           "T4:3", "T5:3", "lft:2", "rooted(cycle:3,0,1)", "rooted(cycle:4,0,1)", "rooted(path:1,0,0)"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("patterns", nargs="*", default=DEFAULT)
    ap.add_argument("--budget", type=int, default=8)
    ap.add_argument("--max-vertices", type=int, default=5000)
    args = ap.parse_args()
    warnings.simplefilter("ignore")
    for text in args.patterns:
        res = classify(parse_pattern(text), args.budget, args.max_vertices)
        sizes = ",".join(str(g.n) for g in res.trace.stages)
        print(f"{text}\t{res}\t{sizes}")


if __name__ == "__main__":
    main()
