"""Character tables of type D Weyl groups with bipartition labels.

W(D_n) is the even-signed-permutation subgroup of W(B_n); its irreducibles
are restrictions of the B_n ones: (lambda)x(mu) with lambda != mu restrict
irreducibly ((lambda)x(mu) and (mu)x(lambda) agreeing), while (lambda)x(lambda)
splits into two halves, labeled with _I/_II suffixes.

The table itself comes from the class-algebra method on the enumerated
group; this module only assigns the labels, by matching rows against
restricted B_n characters evaluated through signed cycle types.
"""

from __future__ import annotations

from fractions import Fraction

from .bnchars import (
    bn_character,
    bn_class_size,
    bn_classes,
    bn_irrep_labels,
    signed_class_action,
)
from .chartable import CharacterTable
from .partitions import Bipartition, Partition, bipartitions_of
from .snchars import sn_character
from .weylgroup import enumerate_group, matrix_of, word_to_perm


def signed_cycle_type(
    rs, word: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(positive cycles, negative cycles) of a signed permutation given by
    a word in the simple reflections."""
    m = matrix_of(rs, word_to_perm(rs, word))
    n = rs.rank
    image = {}
    for j in range(n):
        for i in range(n):
            e = m[i, j]
            if e:
                assert e in (1, -1)
                image[j] = (i, int(e))
                break
    seen = [False] * n
    pos, neg = [], []
    for start in range(n):
        if seen[start]:
            continue
        ln, sign, j = 0, 1, start
        while not seen[j]:
            seen[j] = True
            j, s = image[j]
            sign *= s
            ln += 1
        (pos if sign == 1 else neg).append(ln)
    return (
        tuple(sorted(pos, reverse=True)),
        tuple(sorted(neg, reverse=True)),
    )


def dn_canonical(bip: Bipartition) -> Bipartition:
    if bip.right.parts > bip.left.parts:
        return bip.swapped()
    return bip


def dn_splits(alpha: Partition, beta: Partition) -> bool:
    """Whether the B_n class (alpha, beta) splits into two D_n classes."""
    return not beta.parts and bool(alpha.parts) and all(
        p % 2 == 0 for p in alpha.parts
    )


def dn_classes(n: int) -> list[tuple[Partition, Partition, int]]:
    """D_n class labels (alpha, beta, part): the B_n classes with an even
    number of negative cycles, split ones listed twice with part 1/2."""
    out = []
    for a, b in bn_classes(n):
        if len(b.parts) % 2:
            continue
        if dn_splits(a, b):
            out.append((a, b, 1))
            out.append((a, b, 2))
        else:
            out.append((a, b, 0))
    return out


def dn_class_size(n: int, alpha: Partition, beta: Partition, part: int) -> int:
    size = bn_class_size(n, alpha, beta)
    return size // 2 if part else size


def dn_class_action(n: int, alpha: Partition, beta: Partition, part: int):
    """Class representative as a signed permutation action; part 2 is the
    part-1 representative conjugated by the sign flip of coordinate 0."""
    act = signed_class_action(n, alpha, beta)
    if part != 2:
        return act

    def flip(v):
        return (-v[0],) + tuple(v[1:])

    return lambda v: flip(act(flip(v)))


def _dn_split_value(
    lam: Partition, alpha: Partition, part: int, chi_b: int
) -> Fraction:
    """Value of a split character (lambda)x(lambda)_I/_II on a split class
    (alpha, 0) with all parts even; chi_b is the B_n character value."""
    nu = Partition(tuple(p // 2 for p in alpha.parts))
    delta = 2 ** len(nu.parts) * sn_character(lam, nu)
    sign = 1 if part == 1 else -1
    return Fraction(chi_b + sign * delta, 2)


def dn_combinatorial_table(n: int) -> CharacterTable:
    """Character table of W(D_n) built from B_n characters.

    Characters (lambda)x(mu) with lambda != mu are restrictions of the B_n
    ones; (lambda)x(lambda) splits into two halves whose difference is
    supported on the split classes, where it is +-2^{l(nu)} chi_lambda(nu)
    for the halved cycle type nu (the plus sign on the part-1 class for the
    _I half).
    """
    from .rootsystem import build_root_system
    from .weylgroup import word_from_action

    rs = build_root_system("D", n)
    classes = dn_classes(n)
    words = [
        word_from_action(rs, dn_class_action(n, a, b, p))
        for a, b, p in classes
    ]
    names = [f"{a}x{b}" + ("" if not p else f"_{p}") for a, b, p in classes]
    sizes = [dn_class_size(n, a, b, p) for a, b, p in classes]
    labels: list[str] = []
    values: list[list[int]] = []
    for bip in bn_irrep_labels(n):
        if bip.left != bip.right and dn_canonical(bip) != bip:
            continue
        base = [bn_character(bip, a, b) for a, b, _p in classes]
        if bip.left != bip.right:
            labels.append(str(bip))
            values.append(base)
        else:
            for part_label in ("_I", "_II"):
                row = []
                for (a, b, p), chi_b in zip(classes, base):
                    if p:
                        v = _dn_split_value(
                            bip.left, a, p if part_label == "_I" else 3 - p, chi_b
                        )
                    else:
                        v = Fraction(chi_b, 2)
                    assert v.denominator == 1, "non-integral split value"
                    row.append(int(v))
                labels.append(f"{bip}{part_label}")
                values.append(row)
    return CharacterTable(
        group_label=f"D{n}",
        rs=rs,
        class_names=names,
        class_sizes=sizes,
        class_words=words,
        irrep_labels=labels,
        values=values,
    )


def dn_table(n: int) -> CharacterTable:
    """Exact character table of W(D_n) with bipartition labels."""
    from .dixon import compute_table
    from .rootsystem import build_root_system

    rs = build_root_system("D", n)
    group = enumerate_group(rs)
    table = compute_table(group)
    # restricted B_n characters per class, via signed cycle types
    types = [
        signed_cycle_type(rs, w) for w in table.class_words
    ]
    restricted = {}
    for bip in bipartitions_of(n):
        if bip.swapped() in restricted and bip.left != bip.right:
            continue
        restricted[bip] = tuple(
            bn_character(bip, Partition(a), Partition(b)) for a, b in types
        )
    rows = {tuple(r): i for i, r in enumerate(table.values)}
    assert len(rows) + 2 * sum(
        1 for b in restricted if b.left == b.right
    ) >= len(restricted), "unexpected row collisions"
    labels = [None] * len(table.values)
    for bip, vals in restricted.items():
        if bip.left != bip.right:
            i = rows.get(vals)
            if i is None:
                raise AssertionError(f"no row matches restriction of {bip}")
            labels[i] = str(dn_canonical(bip))
        else:
            # split case: two rows summing to the restriction
            halves = [
                i
                for i, r in enumerate(table.values)
                if r[0] * 2 == vals[0] and labels[i] is None
            ]
            found = None
            for a in range(len(halves)):
                for b in range(a + 1, len(halves)):
                    ra, rb = table.values[halves[a]], table.values[halves[b]]
                    if all(x + y == v for x, y, v in zip(ra, rb, vals)):
                        found = (halves[a], halves[b])
                        break
                if found:
                    break
            if found is None:
                raise AssertionError(f"no row pair matches split {bip}")
            i, j = sorted(
                found, key=lambda k: table.values[k], reverse=True
            )
            labels[i] = f"{bip}_I"
            labels[j] = f"{bip}_II"
    assert all(lbl is not None for lbl in labels), "unlabeled rows remain"
    table.irrep_labels = labels
    table._cache.clear()
    return table
