import pytest

from cherednik.chartable import check_orthogonality
from cherednik.dnchars import dn_combinatorial_table, dn_table
from cherednik.weylgroup import enumerate_group, word_to_perm


def _aligned_rows(table, group):
    perm = [0] * table.num_classes
    for c, word in enumerate(table.class_words):
        perm[group.class_index_of_perm(word_to_perm(table.rs, word))] = c
    return sorted(tuple(row[c] for c in perm) for row in table.values)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_combinatorial_vs_enumerated(n):
    """The closed-form D_n table (split classes and characters included)
    agrees with the table computed from a full enumeration."""
    comb = dn_combinatorial_table(n)
    enum = dn_table(n)
    group = enumerate_group(comb.rs)
    assert comb.order == enum.order
    assert _aligned_rows(comb, group) == _aligned_rows(enum, group)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_orthogonality(n):
    t = dn_combinatorial_table(n)
    check_orthogonality(t)
    assert sum(t.dim(l) ** 2 for l in t.irrep_labels) == t.order


def test_split_classes_d4():
    t = dn_combinatorial_table(4)
    # n even: rectangles (lambda, lambda) split; D4 has 13 classes
    assert t.num_classes == 13
    # split classes: (alpha, 0) with all parts of alpha even -> (4), (2,2)
    split = [n for n in t.class_names if n.endswith(("_1", "_2"))]
    assert len(split) == 4
    # split irreps come in _I/_II pairs of equal dimension
    for lbl in t.irrep_labels:
        if lbl.endswith("_I"):
            partner = lbl[:-2] + "_II"
            assert partner in t.irrep_labels
            assert t.dim(lbl) == t.dim(partner)


def test_class_sizes_sum(table_of):
    t = dn_combinatorial_table(5)
    assert sum(t.class_sizes) == t.order == 1920
