#!/usr/bin/env python3
"""Recount the bundled review corpus into manifest.csv.

Independent of the Rust ingestion code: reads the JSON-lines file with the
standard library and tallies reviews per category.
"""

import collections
import json
import os
import sys

CATEGORIES = ["Mobiles", "Computers", "FlashDrives", "Electronics"]


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    data = os.path.join(here, "..", "crates", "core", "data")
    path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(data, "reviews.jsonl")
    counts = collections.Counter()
    lines = 0
    with open(path, encoding="utf-8") as f:
        for raw in f:
            if not raw.strip() or raw.lstrip().startswith("#"):
                continue
            lines += 1
            counts[json.loads(raw)["category"]] += 1
    assert sum(counts.values()) == lines
    out = os.path.join(data, "manifest.csv")
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write("category,count\n")
        for cat in CATEGORIES:
            f.write("%s,%d\n" % (cat, counts[cat]))
    print("%d reviews -> %s" % (lines, out))


if __name__ == "__main__":
    main()
