#!/usr/bin/env python3
"""Sweep a corpus and print the distribution of dominant dimensions,
shapes, and double-centraliser outcomes.

Usage: profile_sweep.py [V,E,L] [--workers N]
"""

import sys
import time
from collections import Counter

from quivalg.enumeration import CorpusBounds
from quivalg.verify import DEFAULT_CORPORA, sweep_corpus


def main(argv):
    corpora = DEFAULT_CORPORA
    workers = 1
    args = list(argv)
    if "--workers" in args:
        i = args.index("--workers")
        workers = int(args[i + 1])
        del args[i:i + 2]
    if args:
        v, e, l = (int(x) for x in args[0].split(","))
        corpora = (CorpusBounds(v, e, l),)
    t0 = time.time()
    facts = sweep_corpus(corpora, workers=workers)
    elapsed = time.time() - t0
    domdims = Counter()
    shapes = Counter()
    dc = Counter()
    for f in facts:
        d = f["domdim"]
        domdims["infinity" if d["kind"] == "infinite" else str(d["value"])] += 1
        shapes[f["shape"]] += 1
        dc[f["dc_holds"]] += 1
    print(f"{len(facts)} algebras in {elapsed:.1f}s ({workers} workers)")
    print("dominant dimension:", dict(sorted(domdims.items())))
    print("quiver shape:", dict(sorted(shapes.items())))
    print("double centraliser:", {str(k): v for k, v in sorted(dc.items())})
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
