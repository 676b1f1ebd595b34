"""Command-line front end: classification, decompositions, cell reports,
table access, data validation, and the verification harness.

All output is exact (integers, fractions, and quadratic irrationalities as
text); ordering is deterministic everywhere so runs are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cells import cm_cell_report
from .onewtype import classify_bn, classify_dn, classify_exceptional
from .ratlinalg import INFINITE_RATIO, QuadNum
from .tableio import TableFormatError, default_data_dir
from .tables import (
    TableUnavailable,
    group_code,
    group_table,
    split_code,
)


@dataclass
class RunConfig:
    code: str
    ratio: object | None  # QuadNum, INFINITE_RATIO, or None (symbolic)
    data_dir: Path | None
    cache_dir: Path | None
    fmt: str


def _add_common(p: argparse.ArgumentParser, need_type=True) -> None:
    p.add_argument("--type", required=need_type, help="group type (A/B/D/G2/F4/E6/E7/E8)")
    p.add_argument("--rank", type=int, default=0)
    p.add_argument("--equal", action="store_true", help="equal parameters")
    p.add_argument("--ratio", help="parameter ratio c_short/c_long as p/q")
    p.add_argument("--cl-zero", action="store_true", help="c_long = 0")
    p.add_argument("--cs-zero", action="store_true", help="c_short = 0")
    p.add_argument("--data-dir", default=None)
    p.add_argument("--cache-dir", default=None)
    p.add_argument(
        "--format", choices=("text", "records"), default="text", dest="fmt"
    )


def _config(args) -> RunConfig:
    modes = [
        args.equal,
        args.ratio is not None,
        getattr(args, "cl_zero", False),
        getattr(args, "cs_zero", False),
    ]
    if sum(bool(m) for m in modes) > 1:
        raise SystemExit("choose at most one of --equal/--ratio/--cl-zero/--cs-zero")
    ratio = None
    if args.equal:
        ratio = QuadNum.make(1)
    elif args.ratio is not None:
        num, _, den = args.ratio.partition("/")
        try:
            ratio = QuadNum.make(Fraction(int(num), int(den or "1")))
        except (ValueError, ZeroDivisionError):
            raise SystemExit(f"invalid ratio {args.ratio!r}")
    elif args.cl_zero:
        ratio = INFINITE_RATIO
    elif args.cs_zero:
        ratio = QuadNum.make(0)
    code = group_code(args.type, args.rank) if args.type else None
    return RunConfig(
        code=code,
        ratio=ratio,
        data_dir=Path(args.data_dir) if args.data_dir else None,
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
        fmt=args.fmt,
    )


def _table_for(cfg: RunConfig):
    return group_table(
        cfg.code, data_dir=cfg.data_dir, cache_dir=cfg.cache_dir
    )


def _classification(cfg: RunConfig):
    kind, rank = split_code(cfg.code)
    if kind == "A":
        from .onewtype import ClassificationResult

        return ClassificationResult(cfg.code, ())
    if kind == "B":
        return classify_bn(rank)
    if kind == "D":
        return classify_dn(rank)
    return classify_exceptional(_table_for(cfg))


def cmd_classify(args) -> int:
    cfg = _config(args)
    res = _classification(cfg)
    if cfg.ratio is not None:
        labels = sorted(res.labels_at(cfg.ratio))
        if cfg.fmt == "records":
            for lbl in labels:
                print(lbl)
        else:
            print(f"{cfg.code} admissible at the given parameters: "
                  + (", ".join(labels) if labels else "(none)"))
        return 0
    entries = sorted(res.entries, key=lambda e: e.label)
    if cfg.fmt == "records":
        for e in entries:
            print(f"{e.label}\t{e.constraints}")
    else:
        if not entries:
            print(f"{cfg.code}: no one-W-type modules at any parameters")
            return 0
        width = max(len(e.label) for e in entries)
        print(f"{cfg.code}: irreducibles admitting a one-W-type module")
        for e in entries:
            print(f"  {e.label:<{width}}  {e.constraints}")
    return 0


def _resolve_label(table, rep: str) -> str:
    if rep in table.irrep_labels:
        return rep
    aliases = {"trivial": None, "sgn": None, "sign": None}
    if rep in aliases:
        for lbl, row in zip(table.irrep_labels, table.values):
            if rep == "trivial" and all(v == 1 for v in row):
                return lbl
            if rep in ("sgn", "sign") and tuple(row) == table.sign_values():
                return lbl
    raise SystemExit(f"unknown irreducible {rep!r} in {table.group_label}")


def cmd_decompose(args) -> int:
    cfg = _config(args)
    table = _table_for(cfg)
    label = _resolve_label(table, args.rep)
    if args.wedge is None:
        f = table.tensor(table.row(label), table.full_wedge_values())
        factor = 2**table.rs.rank
        lhs = f"{label} (x) wedge*(h)"
    else:
        f = table.tensor(table.row(label), table.wedge_values(args.wedge))
        from math import comb

        factor = comb(table.rs.rank, args.wedge)
        lhs = f"{label} (x) wedge^{args.wedge}(h)"
    dec = table.decompose(f)
    items = sorted(dec.items(), key=lambda kv: (table.dim(kv[0]), kv[0]))
    total = sum(m * table.dim(lbl) for lbl, m in items)
    rhs = " + ".join(
        (f"{m}*{lbl}" if m > 1 else lbl) for lbl, m in items
    )
    if cfg.fmt == "records":
        for lbl, m in items:
            print(f"{lbl}\t{m}\t{table.dim(lbl)}")
    else:
        print(f"{lhs} = {rhs}")
        print(
            f"dimension check: {total} = {table.dim(label)} * {factor}"
        )
    if total != table.dim(label) * factor:
        print("DIMENSION MISMATCH", file=sys.stderr)
        return 1
    return 0


def cmd_cells(args) -> int:
    cfg = _config(args)
    kind, rank = split_code(cfg.code)
    table = None
    if kind not in ("A", "B", "D"):
        table = _table_for(cfg)
    elif kind in ("B", "D") and rank <= 8:
        table = _table_for(cfg)
    rep = cm_cell_report(kind, rank, table=table, data_dir=cfg.data_dir)
    if cfg.fmt == "records":
        print(f"classified\t{','.join(sorted(rep.classified))}")
        print(f"lower_bound\t{','.join(sorted(rep.constituents))}")
        print(f"family\t{','.join(sorted(rep.family.members))}")
        print(f"special\t{rep.family.special}")
        if rep.zero_n is not None:
            print(f"zero_n\t{','.join(sorted(rep.zero_n))}")
        print(f"verdict\t{rep.verdict()}")
        return 0
    print(f"{rep.group_label} Calogero-Moser cuspidal-cell report (equal parameters)")
    print(f"  classified:  {', '.join(sorted(rep.classified)) or '(none)'}")
    print(f"  lower bound: {', '.join(sorted(rep.constituents)) or '(none)'}")
    if rep.zero_n is not None:
        print(f"  zero-N set:  {', '.join(sorted(rep.zero_n)) or '(none)'}")
    print(f"  family:      {', '.join(rep.family.members) or '(none)'}"
          + (f" (special: {rep.family.special})" if rep.family.members else ""))
    print(f"  verdict:     {rep.verdict()}")
    return 0


def cmd_table(args) -> int:
    cfg = _config(args)
    table = _table_for(cfg)
    if cfg.fmt == "records":
        print(f"group\t{table.group_label}\t{table.order}")
        for name, size in zip(table.class_names, table.class_sizes):
            print(f"class\t{name}\t{size}")
        for lbl, row in zip(table.irrep_labels, table.values):
            print(f"irrep\t{lbl}\t" + "\t".join(map(str, row)))
        return 0
    widths = [
        max(len(table.class_names[c]), max(len(str(r[c])) for r in table.values))
        for c in range(table.num_classes)
    ]
    lw = max(len(lbl) for lbl in table.irrep_labels)
    print(f"character table of W({table.group_label}), order {table.order}")
    header = " " * (lw + 2) + "  ".join(
        f"{n:>{w}}" for n, w in zip(table.class_names, widths)
    )
    print(header)
    print(" " * (lw + 2) + "  ".join(
        f"{s:>{w}}" for s, w in zip(table.class_sizes, widths)
    ))
    for lbl, row in zip(table.irrep_labels, table.values):
        print(f"{lbl:<{lw}}  " + "  ".join(
            f"{v:>{w}}" for v, w in zip(row, widths)
        ))
    return 0


def cmd_check_data(args) -> int:
    cfg = _config(args)
    base = cfg.data_dir or default_data_dir()
    from .cells import load_family
    from .tableio import load_table

    ok = True
    files = sorted(list(base.glob("*.table")) + list(base.glob("*.families")))
    if not files:
        print(f"no data files under {base}")
        return 1
    for path in files:
        try:
            if path.suffix == ".table":
                load_table(path)
            else:
                load_family(path)
            print(f"{path.name}: PASS")
        except (TableFormatError, ValueError) as exc:
            print(f"{path.name}: FAIL ({exc})")
            ok = False
    return 0 if ok else 1


def cmd_verify_paper(args) -> int:
    cfg = _config(args)
    from .verify import run_checks

    only = args.only.split(",") if args.only else None
    entries = run_checks(
        data_dir=cfg.data_dir, cache_dir=cfg.cache_dir, only=only
    )
    failed = False
    for e in entries:
        line = f"[{e.status}] {e.check_id}: expected {e.expected}"
        if e.status == "FAIL":
            line += f", computed {e.computed}"
            failed = True
        print(line)
    counts = {}
    for e in entries:
        counts[e.status] = counts.get(e.status, 0) + 1
    print(
        "summary: "
        + ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    )
    return 1 if failed else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="cherednik",
        description="Exact classification of one-W-type modules and "
        "Calogero-Moser cell reports for finite Weyl groups.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="admissible irreducibles and parameter loci")
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("decompose", help="decompose sigma (x) wedge of the reflection rep")
    _add_common(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--wedge", type=int, default=None)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("cells", help="Calogero-Moser cuspidal-cell report")
    _add_common(p)
    p.set_defaults(fn=cmd_cells)

    p = sub.add_parser("table", help="print a character table")
    _add_common(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify-paper", help="run the verification suite")
    _add_common(p, need_type=False)
    p.add_argument("--only", default=None, help="comma-separated check prefixes")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("check-data", help="validate all bundled data files")
    _add_common(p, need_type=False)
    p.set_defaults(fn=cmd_check_data)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except TableUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TableFormatError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
