from fractions import Fraction
from pathlib import Path

import pytest

from cherednik.chartable import (
    bn_table,
    check_orthogonality,
    sn_table,
)
from cherednik.dixon import compute_table
from cherednik.tableio import (
    TableFormatError,
    load_table,
    save_table,
    validate_table,
)
from cherednik.weylgroup import enumerate_group, word_to_perm


def _aligned_rows(table, group):
    perm = [0] * table.num_classes
    for c, word in enumerate(table.class_words):
        perm[group.class_index_of_perm(word_to_perm(table.rs, word))] = c
    return sorted(tuple(row[c] for c in perm) for row in table.values)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sn_vs_class_algebra(n):
    """Murnaghan-Nakayama values against the independent class-algebra
    eigenvector method on an enumerated group."""
    comb = sn_table(n)
    group = enumerate_group(comb.rs)
    dix = compute_table(group)
    assert _aligned_rows(comb, group) == _aligned_rows(dix, group)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bn_vs_class_algebra(n):
    comb = bn_table(n)
    group = enumerate_group(comb.rs)
    dix = compute_table(group)
    assert _aligned_rows(comb, group) == _aligned_rows(dix, group)


@pytest.mark.parametrize("code", ["A4", "B4", "G2", "F4"])
def test_orthogonality(code, table_of):
    check_orthogonality(table_of(code))


def test_sum_of_squares(table_of):
    t = table_of("F4")
    assert sum(t.dim(l) ** 2 for l in t.irrep_labels) == t.order


def test_b_invariant_extremes(table_of):
    for code in ("A3", "B3", "G2", "F4"):
        t = table_of(code)
        trivial = next(
            l for l in t.irrep_labels if all(v == 1 for v in t.row(l))
        )
        sgn = next(
            l for l in t.irrep_labels if tuple(t.row(l)) == t.sign_values()
        )
        assert t.b_invariant(trivial) == 0
        assert t.b_invariant(sgn) == len(t.rs.positive_roots)


def test_fake_degree_sums(table_of):
    # fake degree at q=1 is the dimension
    t = table_of("G2")
    for l in t.irrep_labels:
        assert sum(t.fake_degree(l)) == t.dim(l)


def test_n_invariant_basics(table_of):
    t = table_of("F4")
    for l in t.irrep_labels:
        n = t.n_invariant(l)
        assert n.denominator == 1
        assert t.n_invariant(t.tensor_sgn_label(l)) == -n


def test_wedge_decomposition_dimensions(table_of):
    t = table_of("B3")
    from math import comb

    for ell in range(4):
        f = t.wedge_values(ell)
        assert f[0] == comb(3, ell)
        dec = t.decompose(f)
        assert sum(m * t.dim(l) for l, m in dec.items()) == comb(3, ell)


def test_table_round_trip(tmp_path, table_of):
    t = table_of("G2")
    path = tmp_path / "g2.table"
    save_table(t, path)
    back = load_table(path)
    assert back.group_label == t.group_label
    assert back.values == t.values
    assert back.class_names == t.class_names
    assert back.irrep_labels == t.irrep_labels
    validate_table(back)


def test_single_bit_corruption_rejected(tmp_path, table_of):
    t = table_of("G2")
    path = tmp_path / "g2.table"
    save_table(t, path)
    blob = bytearray(path.read_bytes())
    # flip the low bit of the first character value
    pos = blob.index(b":", blob.index(b"irrep")) + 2
    blob[pos] ^= 1
    path.write_bytes(bytes(blob))
    with pytest.raises((TableFormatError, AssertionError, ValueError)):
        corrupt = load_table(path)
        check_orthogonality(corrupt)
        validate_table(corrupt)
