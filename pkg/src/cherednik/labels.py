"""Group-specific irreducible-character naming.

Canonical labels are phi{dim,b} with prime marks on (dim, b) ties.  The
exceptional groups additionally carry conventional names (primes in G2,
dim_index names in F4, dim_letter names in E6/E7/E8 for the characters the
literature refers to that way).  All names are pinned by computable facts:
wedge positions, classification loci, the zero-N set, and tensor
decompositions; within pairs that no such fact distinguishes, the smaller
(b, row) gets the smaller index -- a pure bookkeeping choice, since every
downstream statement is symmetric in those pairs.
"""

from __future__ import annotations

from .chartable import CharacterTable
from .ratlinalg import ALL, CL_ZERO, CS_ZERO, QuadNum, RATIO_SET


def _set_labels(table: CharacterTable, new: dict[int, str]) -> None:
    labels = list(table.irrep_labels)
    for i, name in new.items():
        labels[i] = name
    if len(set(labels)) != len(labels):
        raise AssertionError("relabeling produced duplicates")
    table.irrep_labels = labels
    table._cache.clear()


def _classification(table: CharacterTable):
    from .onewtype import classify_exceptional

    return classify_exceptional(table)


def _wedge_rows(table: CharacterTable) -> list[int]:
    """Row index of each exterior power of the reflection representation
    (each must be irreducible)."""
    out = []
    for ell in range(table.rs.rank + 1):
        dec = table.decompose(table.wedge_values(ell))
        if len(dec) != 1 or next(iter(dec.values())) != 1:
            raise AssertionError(f"wedge power {ell} is not irreducible")
        out.append(table.irrep_index(next(iter(dec))))
    return out


def relabel_g2(table: CharacterTable) -> None:
    """Distinguish the phi{1,3} pair: the prime goes to the character with
    value +1 on the long-reflection class."""
    pair = [
        i
        for i, lbl in enumerate(table.irrep_labels)
        if lbl.startswith("phi{1,3}")
    ]
    assert len(pair) == 2
    col = table.class_index("A1")
    prime = [i for i in pair if table.values[i][col] == 1]
    assert len(prime) == 1
    other = pair[0] if pair[1] == prime[0] else pair[1]
    _set_labels(table, {prime[0]: "phi{1,3}'", other: "phi{1,3}''"})


def relabel_f4(table: CharacterTable) -> None:
    """Kondo-style dim_index names for all 25 characters."""
    res = _classification(table)
    loci = {e.label: e.constraints for e in res.entries}
    one = QuadNum.make(1)
    minus_one = QuadNum.make(-1)

    def bucket(pred) -> list[int]:
        rows = [
            table.irrep_index(lbl) for lbl, c in loci.items() if pred(c)
        ]
        return sorted(
            rows, key=lambda i: (table.b_invariant(table.irrep_labels[i]), i)
        )

    new: dict[int, str] = {}
    wedges = _wedge_rows(table)
    for i, name in zip(wedges, ("1_1", "4_2", "6_2", "4_5", "1_4")):
        new[i] = name
    (all_row,) = bucket(lambda c: c.kind == ALL)
    new[all_row] = "4_1"
    at_one = bucket(lambda c: c.kind == RATIO_SET and c.contains_ratio(one))
    by_dim: dict[int, list[int]] = {}
    for i in at_one:
        by_dim.setdefault(table.values[i][0], []).append(i)
    assert sorted(by_dim) == [1, 4, 6]
    new[by_dim[6][0]] = "6_1"
    new[by_dim[1][0]], new[by_dim[1][1]] = "1_2", "1_3"
    new[by_dim[4][0]], new[by_dim[4][1]] = "4_3", "4_4"
    cl0 = bucket(lambda c: c.kind == CL_ZERO)
    cs0 = bucket(lambda c: c.kind == CS_ZERO)
    new[cl0[0]], new[cl0[1]] = "2_1", "2_2"
    new[cs0[0]], new[cs0[1]] = "2_3", "2_4"
    imag = bucket(
        lambda c: c.kind == RATIO_SET
        and not c.contains_ratio(one)
        and not c.contains_ratio(minus_one)
    )
    for i in imag:
        new[i] = {12: "12_1", 16: "16_1"}[table.values[i][0]]
    # checks: the minus-one locus must be exactly the wedge-pinned names
    at_minus = bucket(
        lambda c: c.kind == RATIO_SET and c.contains_ratio(minus_one)
    )
    assert sorted(new[i] for i in at_minus) == sorted(
        ["1_1", "1_4", "4_2", "4_5", "6_2"]
    )
    # dim-9: the zero-N pair is 9_2/9_3, the others 9_1/9_4
    nines = [i for i, r in enumerate(table.values) if r[0] == 9]
    zn = sorted(
        (i for i in nines if table.n_invariant(table.irrep_labels[i]) == 0),
        key=lambda i: (table.b_invariant(table.irrep_labels[i]), i),
    )
    others = sorted(
        (i for i in nines if i not in zn),
        key=lambda i: (table.b_invariant(table.irrep_labels[i]), i),
    )
    assert len(zn) == 2 and len(others) == 2
    new[zn[0]], new[zn[1]] = "9_2", "9_3"
    new[others[0]], new[others[1]] = "9_1", "9_4"
    eights = sorted(
        (i for i, r in enumerate(table.values) if r[0] == 8),
        key=lambda i: (table.b_invariant(table.irrep_labels[i]), i),
    )
    for k, i in enumerate(eights):
        new[i] = f"8_{k + 1}"
    assert len(new) == 25
    _set_labels(table, new)


def relabel_e6(table: CharacterTable) -> None:
    """Frame-style names for the five characters of the cuspidal family;
    everything else keeps its phi{dim,b} name."""
    res = _classification(table)
    assert len(res.entries) == 1
    ten = table.irrep_index(res.entries[0].label)
    assert table.values[ten][0] == 10
    new = {ten: "10_s"}
    dec = table.decompose(
        table.tensor(table.values[ten], table.full_wedge_values())
    )
    for lbl in dec:
        i = table.irrep_index(lbl)
        d = table.values[i][0]
        if i == ten:
            continue
        assert d in (20, 60, 80, 90), d
        new[i] = f"{d}_s"
    assert len(new) == 5
    _set_labels(table, new)


def relabel_e7(table: CharacterTable) -> None:
    """The two zero-N characters (both dim 512) get the letter names; the
    special one (minimal b within the family, since a <= b with equality
    exactly for the special member) is 512_a'."""
    zn = [
        i
        for i, lbl in enumerate(table.irrep_labels)
        if table.n_invariant(lbl) == 0
    ]
    assert len(zn) == 2 and all(table.values[i][0] == 512 for i in zn)
    bs = {i: table.b_invariant(table.irrep_labels[i]) for i in zn}
    lo, hi = sorted(zn, key=lambda i: bs[i])
    assert bs[lo] < bs[hi]
    _set_labels(table, {lo: "512_a'", hi: "512_a"})


E8_FAMILY_DIMS = {
    4480: "4480_y",
    3150: "3150_y",
    4200: "4200_y",
    4536: "4536_y",
    5670: "5670_y",
    420: "420_y",
    1134: "1134_y",
    1400: "1400_y",
    2688: "2688_y",
    1680: "1680_y",
    168: "168_y",
    70: "70_y",
    7168: "7168_w",
    1344: "1344_w",
    2016: "2016_w",
    5600: "5600_w",
    448: "448_w",
}


def relabel_e8(table: CharacterTable) -> None:
    """Letter names for the zero-N characters: the classified pair
    (dims 168, 420), the constituents of their wedge tensors, and the two
    remaining zero-N characters (dims 4480 and 2100)."""
    zn = [
        i
        for i, lbl in enumerate(table.irrep_labels)
        if table.n_invariant(lbl) == 0
    ]
    res = _classification(table)
    classified = sorted(
        table.irrep_index(e.label) for e in res.entries
    )
    assert [table.values[i][0] for i in classified] == [168, 420]
    named = set(classified)
    for i in classified:
        dec = table.decompose(
            table.tensor(table.values[i], table.full_wedge_values())
        )
        named |= {table.irrep_index(lbl) for lbl in dec}
    rest = [i for i in zn if i not in named]
    assert sorted(table.values[i][0] for i in rest) == [2100, 4480]
    dims_seen: dict[int, int] = {}
    new: dict[int, str] = {}
    for i in sorted(named):
        d = table.values[i][0]
        assert d not in dims_seen, f"duplicate constituent dim {d}"
        dims_seen[d] = i
        new[i] = E8_FAMILY_DIMS[d]
    for i in rest:
        d = table.values[i][0]
        new[i] = "2100_y" if d == 2100 else E8_FAMILY_DIMS[d]
    assert set(new.values()) == set(E8_FAMILY_DIMS.values()) | {"2100_y"}
    assert set(zn) == set(new), "zero-N set differs from the named set"
    _set_labels(table, new)


_RELABEL = {
    "G2": relabel_g2,
    "F4": relabel_f4,
    "E6": relabel_e6,
    "E7": relabel_e7,
    "E8": relabel_e8,
}


def relabel(table: CharacterTable) -> None:
    fn = _RELABEL.get(table.group_label)
    if fn is not None:
        fn(table)
