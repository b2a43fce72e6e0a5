#!/usr/bin/env python3
"""Count corpus sizes for given bound triples.

Usage: corpus_stats.py V,E,L [V,E,L ...]

Useful for sizing exhaustive runs before launching them: corpora grow very
fast once several parallel loops meet relation length three (one vertex
with three loops at length 3 already admits over 3.5 million admissible
relation sets).
"""

import sys
import time

from quivalg.enumeration import CorpusBounds, enumerate_monomial_algebras


def main(argv):
    if not argv:
        print(__doc__.strip())
        return 1
    for spec in argv:
        v, e, l = (int(x) for x in spec.split(","))
        bounds = CorpusBounds(v, e, l)
        t0 = time.time()
        count = sum(1 for _ in enumerate_monomial_algebras(bounds))
        print(f"({v},{e},{l}): {count} algebras in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
