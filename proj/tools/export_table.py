#!/usr/bin/env python3
"""Strip the embedded group from a saved character table.

The result has the shape of a table exported from another system: class
labels in place of permutation representatives and no group. Usage:
    export_table.py full_table.json out.json
"""

import json
import sys
from collections import Counter


def main(src, dst):
    t = json.load(open(src))
    seen = Counter()
    for c in t["classes"]:
        o = c["order"]
        c["label"] = f"{o}{chr(ord('a') + seen[o])}"
        seen[o] += 1
        c.pop("rep", None)
    t.pop("group", None)
    with open(dst, "w") as fh:
        json.dump(t, fh, separators=(",", ":"))
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
