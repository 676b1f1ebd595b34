#!/usr/bin/env python3
"""Build the bundled W(E7) character table by full enumeration.

Enumerates all 2,903,040 elements, partitions them into conjugacy classes,
runs the class-algebra method, applies the conventional labels, validates,
and writes the table file.  Needs a few GB of RAM and several minutes.
"""

from __future__ import annotations

import argparse
import time

from cherednik.labels import relabel
from cherednik.rootsystem import build_root_system
from cherednik.tableio import default_data_dir, save_table, validate_table
from cherednik.weylbig import big_table, enumerate_big


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--out", default=None, help="output path (default: data dir/e7.table)"
    )
    args = ap.parse_args()
    out = args.out or default_data_dir() / "e7.table"

    t0 = time.time()
    rs = build_root_system("E7")
    group = enumerate_big(rs)
    print(
        f"enumerated |W(E7)| = {group.order} in {time.time() - t0:.1f}s, "
        f"{group.num_classes} classes"
    )
    t0 = time.time()
    table = big_table(group)
    print(f"character table in {time.time() - t0:.1f}s")
    relabel(table)
    validate_table(table)
    save_table(table, out)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
