"""Generate the bundled cuspidal-family data files for the exceptional
types.  Membership and the special representative are fixed reference data;
the sign-tensoring involution on each family is computed from the character
table and validated before writing.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from cherednik.cells import FamilyData, load_family, save_family
from cherednik.tableio import default_data_dir
from cherednik.tables import TableUnavailable, group_table

# first member is the special representation
FAMILIES = {
    "G2": ("phi{2,1}", "phi{2,2}", "phi{1,3}'", "phi{1,3}''"),
    "F4": ("12_1", "9_2", "9_3", "1_2", "1_3", "4_1", "4_3", "4_4",
           "6_1", "6_2", "16_1"),
    "E6": ("80_s", "60_s", "90_s", "10_s", "20_s"),
    "E7": ("512_a'", "512_a"),
    "E8": ("4480_y", "3150_y", "4200_y", "4536_y", "5670_y", "420_y",
           "1134_y", "1400_y", "2688_y", "1680_y", "168_y", "70_y",
           "7168_w", "1344_w", "2016_w", "5600_w", "448_w"),
}


def build_one(code: str, out_dir: Path) -> None:
    members = FAMILIES[code]
    try:
        table = group_table(code)
    except TableUnavailable as exc:
        print(f"{code}: skipped ({exc})")
        return
    missing = [m for m in members if m not in table.irrep_labels]
    assert not missing, f"{code}: labels missing from table: {missing}"
    pairs = {}
    for m in members:
        dual = table.tensor_sgn_label(m)
        assert dual in members, f"{code}: family not sgn-stable at {m}"
        pairs[m] = dual
    fd = FamilyData(code, members[0], members, pairs)
    path = out_dir / f"{code.lower()}.families"
    save_family(fd, path)
    back = load_family(path)
    assert back == fd, f"{code}: round trip mismatch"
    print(f"{code}: wrote {path} ({len(members)} members)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    out_dir = Path(args.out) if args.out else default_data_dir()
    out_dir.mkdir(parents=True, exist_ok=True)
    for code in FAMILIES:
        build_one(code, out_dir)


if __name__ == "__main__":
    main()
