#!/usr/bin/env python3
"""Regenerate tests/golden/lietype_grid.jsonl from the Python module.

One entry per (type, ell, q) with ell <= 13 prime, q <= 31 a prime power
coprime to ell; each entry lists the row verdicts in table order. The
acceptance test compares the library against this file and checks the
upper-bound entries against the congruence conditions independently.
"""

import json
import os
import sys

import mfblocks

TYPES = ["G2", "F4", "E6", "2E6", "E7", "E8"]
ELLS = [2, 3, 5, 7, 11, 13]


def prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        r = q
        while r % p == 0:
            r //= p
        if r == 1:
            out.append(q)
    return out


def main(path):
    grid = []
    for t in TYPES:
        for ell in ELLS:
            for q in prime_powers(31):
                if q % ell == 0:
                    continue
                r = mfblocks.lietype(t, ell, q)
                rows = [
                    {"levi": v["levi"], "characters": v["characters"], "verdict": v["verdict"], "reason": v["reason"]}
                    for v in r["verdicts"]
                    if v["levi"] is not None
                ]
                grid.append({"type": t, "ell": ell, "q": q, "e": r["e"], "rows": rows})
    with open(path, "w") as fh:
        for g in grid:
            fh.write(json.dumps(g, separators=(",", ":")) + "\n")
    print(len(grid), "entries")


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "tests", "golden", "lietype_grid.jsonl"))
