"""Symbols, Littlewood-Richardson constituents, cuspidal-family data, and
the Calogero-Moser cell reports.

The cuspidal family of each exceptional group ships as bundled data; the
B/D families are generated from the symbol criterion (rows disjoint, union
an initial segment of the integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .chartable import CharacterTable
from .partitions import (
    Bipartition,
    Partition,
    bipartitions_of,
    is_rectangle,
    subpartitions,
    transpose,
)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients (direct enumeration; shapes are small)


def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """c^lam_{mu,nu}: LR skew tableaux of shape lam/mu and content nu."""
    if mu.size + nu.size != lam.size:
        raise ValueError("size mismatch in LR coefficient")
    if not lam.contains(mu) or not lam.contains(nu):
        return 0
    nrows = len(lam.parts)
    # cells in reading order: rows top to bottom, right to left
    cells = []
    for r in range(nrows):
        lo = mu.row(r)
        for c in range(lam.row(r) - 1, lo - 1, -1):
            cells.append((r, c))
    nletters = len(nu.parts)
    filling: dict[tuple[int, int], int] = {}
    remaining = list(nu.parts)
    count = 0

    def place(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        used = [nu.row(v) - remaining[v] for v in range(nletters)]
        for v in range(nletters):
            if remaining[v] == 0:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            # lattice condition on the reverse reading word
            if v > 0 and used[v] >= used[v - 1]:
                continue
            filling[(r, c)] = v
            remaining[v] -= 1
            place(idx + 1)
            remaining[v] += 1
            del filling[(r, c)]

    place(0)
    return count


def rectangle_constituents(lam: Partition, n: int) -> dict[Bipartition, int]:
    """Decomposition of (lam)x(0) tensored with the full wedge of the
    reflection representation: sum over ell of c^lam_{mu,nu} (mu)x(nu^t)."""
    if is_rectangle(lam) is None:
        raise ValueError("lambda must be rectangular")
    if lam.size != n:
        raise ValueError("lambda must be a partition of n")
    out: dict[Bipartition, int] = {}
    for mu in subpartitions(lam):
        for nu in subpartitions(lam):
            if mu.size + nu.size != n:
                continue
            c = lr_coefficient(mu, nu, lam)
            if c:
                bip = Bipartition.of(mu.parts, transpose(nu).parts)
                out[bip] = out.get(bip, 0) + c
    return out


# ---------------------------------------------------------------------------
# symbols


@dataclass(frozen=True)
class Symbol:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        for row in (self.top, self.bottom):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("symbol rows must be strictly increasing")

    def __str__(self) -> str:
        return f"({','.join(map(str, self.top))} | {','.join(map(str, self.bottom))})"


def _offset_row(parts: tuple[int, ...], length: int) -> tuple[int, ...]:
    """Pad to ``length`` parts with zeros, write increasingly, and add
    0, 1, ..., length-1 entrywise."""
    if len(parts) > length:
        raise ValueError("partition has more parts than the padding length")
    padded = [0] * (length - len(parts)) + sorted(parts)
    return tuple(p + i for i, p in enumerate(padded))


def bn_symbol(bip: Bipartition, d: int) -> Symbol:
    """Type B symbol: left partition padded to d+1 parts with offsets
    0..d, right partition padded to d parts with offsets 0..d-1."""
    return Symbol(
        _offset_row(bip.left.parts, d + 1), _offset_row(bip.right.parts, d)
    )


def dn_symbol(bip: Bipartition, d: int) -> Symbol:
    """Type D symbol: both partitions padded to d parts."""
    return Symbol(
        _offset_row(bip.left.parts, d), _offset_row(bip.right.parts, d)
    )


def is_cuspidal_symbol(s: Symbol) -> bool:
    """Rows disjoint with union {0, ..., #entries - 1}."""
    total = len(s.top) + len(s.bottom)
    union = set(s.top) | set(s.bottom)
    return len(union) == total and union == set(range(total))


# ---------------------------------------------------------------------------
# cuspidal-family data


@dataclass(frozen=True)
class FamilyData:
    group_label: str
    special: str
    members: tuple[str, ...]
    sgn_pairs: dict[str, str]

    def __post_init__(self):
        if self.members and self.special not in self.members:
            raise ValueError("special label not among the family members")
        for a, b in self.sgn_pairs.items():
            if a not in self.members or b not in self.members:
                raise ValueError("sgn pair outside the family")


def save_family(fd: FamilyData, path) -> None:
    # ';' separates list items since labels may contain commas
    pairs = ";".join(
        f"{a}:{b}" for a, b in sorted(fd.sgn_pairs.items()) if a <= b
    )
    line = (
        f"family {fd.group_label} special {fd.special} "
        f"members {';'.join(fd.members)} sgn_pairs {pairs}"
    )
    Path(path).write_text(line + "\n")


def load_family(path) -> FamilyData:
    from .tableio import TableFormatError

    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if (
            len(toks) != 8
            or toks[0] != "family"
            or toks[2] != "special"
            or toks[4] != "members"
            or toks[6] != "sgn_pairs"
        ):
            raise TableFormatError(f"malformed family line: {line!r}")
        members = tuple(toks[5].split(";"))
        pairs = {}
        for item in toks[7].split(";"):
            a, _, b = item.partition(":")
            if not b:
                raise TableFormatError(f"malformed sgn pair: {item!r}")
            pairs[a] = b
            pairs[b] = a
        try:
            return FamilyData(toks[1], toks[3], members, pairs)
        except ValueError as exc:
            raise TableFormatError(str(exc))
    raise TableFormatError("missing family line")


def bn_cuspidal_family(n: int) -> FamilyData:
    """Family in type B_n, nonempty only for n = d^2 + d."""
    d = 0
    while d * d + d < n:
        d += 1
    if d * d + d != n:
        return FamilyData(f"B{n}", "", (), {})
    members = []
    for bip in bipartitions_of(n):
        if len(bip.left.parts) > d + 1 or len(bip.right.parts) > d:
            continue  # does not fit a size-(d+1, d) symbol: not cuspidal
        if is_cuspidal_symbol(bn_symbol(bip, d)):
            members.append(bip)
    labels = tuple(sorted(str(b) for b in members))
    special = str(
        Bipartition.of(tuple(range(d, 0, -1)), tuple(range(d, 0, -1)))
    )
    pairs = {}
    for b in members:
        # tensoring with sgn transposes both partitions and swaps sides
        dual = Bipartition.of(
            transpose(b.right).parts, transpose(b.left).parts
        )
        pairs[str(b)] = str(dual)
    return FamilyData(f"B{n}", special, labels, pairs)


def _dn_canonical(bip: Bipartition) -> Bipartition:
    """(lambda)x(mu) and (mu)x(lambda) restrict to the same D_n type; pick
    the lexicographically larger left side as canonical."""
    if bip.right.parts > bip.left.parts:
        return bip.swapped()
    return bip


def dn_cuspidal_family(n: int) -> FamilyData:
    """Family in type D_n, nonempty only for n = d^2 with d >= 2."""
    d = 0
    while d * d < n:
        d += 1
    if d * d != n or d < 2:
        return FamilyData(f"D{n}", "", (), {})
    members = set()
    for bip in bipartitions_of(n):
        if len(bip.left.parts) > d or len(bip.right.parts) > d:
            continue
        if is_cuspidal_symbol(dn_symbol(bip, d)):
            members.add(_dn_canonical(bip))
    labels = tuple(sorted(str(b) for b in members))
    special = str(
        _dn_canonical(
            Bipartition.of(tuple(range(d, 0, -1)), tuple(range(d - 1, 0, -1)))
        )
    )
    pairs = {}
    for b in members:
        dual = _dn_canonical(
            Bipartition.of(transpose(b.right).parts, transpose(b.left).parts)
        )
        pairs[str(b)] = str(dual)
    return FamilyData(f"D{n}", special, labels, pairs)


def cuspidal_family(type_label: str, rank: int = 0, data_dir=None) -> FamilyData:
    """The unique cuspidal family, or an empty FamilyData if none exists.

    Exceptional families load from bundled data files; B/D families are
    generated from the symbol criterion; type A has none.
    """
    if type_label == "A":
        return FamilyData(f"A{rank}", "", (), {})
    if type_label == "B":
        return bn_cuspidal_family(rank)
    if type_label == "D":
        return dn_cuspidal_family(rank)
    from .tableio import default_data_dir

    base = Path(data_dir) if data_dir else default_data_dir()
    path = base / f"{type_label.lower()}.families"
    fd = load_family(path)
    if fd.group_label != type_label:
        from .tableio import TableFormatError

        raise TableFormatError(
            f"family file {path} is for {fd.group_label}, not {type_label}"
        )
    return fd


# ---------------------------------------------------------------------------
# Calogero-Moser cell reports


def zero_n_set(table: CharacterTable) -> list[str]:
    """Irreps on which Omega_{W,1} (equal parameters) acts by zero."""
    return [
        lbl for lbl in table.irrep_labels if table.n_invariant(lbl) == 0
    ]


def decompose_wedge_tensor(table: CharacterTable, label: str) -> dict[str, int]:
    """Constituents of sigma tensored with the full wedge of the
    reflection representation."""
    f = table.tensor(table.row(label), table.full_wedge_values())
    return table.decompose(f)


@dataclass(frozen=True)
class CuspidalCellReport:
    group_label: str
    classified: tuple[str, ...]
    constituents: frozenset[str]
    zero_n: frozenset[str] | None
    family: FamilyData
    lower_bound_in_family: bool
    family_in_lower_bound: bool
    zero_n_equals_family: bool | None

    def verdict(self) -> str:
        if not self.family.members:
            return "no cuspidal family"
        if self.lower_bound_in_family and self.family_in_lower_bound:
            lo = "lower bound = cuspidal family"
        elif self.lower_bound_in_family:
            lo = "lower bound inside cuspidal family"
        elif self.family_in_lower_bound:
            lo = "lower bound contains cuspidal family"
        else:
            lo = "lower bound incomparable with cuspidal family"
        if self.zero_n is None:
            return lo
        if self.zero_n_equals_family:
            return lo + "; zero-N upper bound = cuspidal family (equality)"
        extra = sorted(self.zero_n - set(self.family.members))
        return lo + f"; zero-N upper bound adds {{{', '.join(extra)}}}"


def cm_cell_report(
    type_label: str,
    rank: int = 0,
    table: CharacterTable | None = None,
    data_dir=None,
) -> CuspidalCellReport:
    """Equal-parameter report: classified sigmas, the constituent union of
    sigma (x) wedge h (lower bound for the cuspidal CM cell), the zero-N
    set (upper-bound filter), and containment verdicts."""
    family = cuspidal_family(type_label, rank, data_dir)
    if type_label == "A":
        zn = frozenset(zero_n_set(table)) if table is not None else None
        return CuspidalCellReport(
            group_label=family.group_label,
            classified=(),
            constituents=frozenset(),
            zero_n=zn,
            family=family,
            lower_bound_in_family=True,
            family_in_lower_bound=True,
            zero_n_equals_family=None,
        )
    if type_label in ("B", "D"):
        # rectangle rule at equal parameters; constituents via the LR rule
        classified = []
        rects = []
        d = 1
        while d * d <= rank:
            k = d + 1 if type_label == "B" else d
            if k * d == rank:
                rects.append(Partition((d,) * k))
            d += 1
        constituents: set[str] = set()
        for lam in rects:
            left = str(Bipartition.of(lam.parts, ()))
            classified.append(left)
            if type_label == "B":
                classified.append(
                    str(Bipartition.of((), transpose(lam).parts))
                )
            for bip in rectangle_constituents(lam, rank):
                if type_label == "D":
                    bip = _dn_canonical(bip)
                constituents.add(str(bip))
                if type_label == "B":
                    # the sgn-dual classified type contributes the duals
                    dual = Bipartition.of(
                        transpose(bip.right).parts, transpose(bip.left).parts
                    )
                    constituents.add(str(dual))
        zn = frozenset(zero_n_set(table)) if table is not None else None
    else:
        if table is None:
            raise ValueError("a character table is required for this type")
        from .onewtype import classify_exceptional
        from .ratlinalg import QuadNum

        res = classify_exceptional(table)
        one = QuadNum.make(1)
        classified = res.labels_at(one)
        constituents = set()
        for lbl in classified:
            constituents |= set(decompose_wedge_tensor(table, lbl))
        zn = frozenset(zero_n_set(table))
    fam = set(family.members)
    return CuspidalCellReport(
        group_label=family.group_label,
        classified=tuple(classified),
        constituents=frozenset(constituents),
        zero_n=zn,
        family=family,
        lower_bound_in_family=constituents <= fam,
        family_in_lower_bound=fam <= constituents,
        zero_n_equals_family=(None if zn is None else zn == fam),
    )
