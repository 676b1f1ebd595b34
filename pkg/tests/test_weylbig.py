import numpy as np
import pytest

from cherednik.dixon import compute_table
from cherednik.rootsystem import build_root_system
from cherednik.weylbig import big_table, enumerate_big
from cherednik.weylgroup import enumerate_group, word_to_perm


@pytest.mark.parametrize("code,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_enumeration_matches_small_path(code, rank):
    rs = build_root_system(code, rank)
    big = enumerate_big(rs)
    small = enumerate_group(rs)
    assert big.order == small.order
    assert big.num_classes == small.num_classes
    # class sizes agree as multisets
    small_sizes = sorted(
        int(np.sum(small.class_of == c)) for c in range(small.num_classes)
    )
    assert sorted(int(s) for s in big.class_sizes) == small_sizes
    # words reproduce their elements
    for c in range(big.num_classes):
        w = big.class_rep_word(c)
        assert big.class_index_of_perm(word_to_perm(rs, w)) == c


@pytest.mark.parametrize("code,rank", [("A", 3), ("B", 3)])
def test_big_table_values(code, rank):
    rs = build_root_system(code, rank)
    big = enumerate_big(rs)
    tb = big_table(big)
    ts = compute_table(enumerate_group(rs))
    # compare as multisets of rows aligned by class
    small = enumerate_group(rs)

    def aligned(table):
        perm = [0] * table.num_classes
        for c, word in enumerate(table.class_words):
            perm[
                small.class_index_of_perm(word_to_perm(rs, word))
            ] = c
        return sorted(tuple(r[c] for c in perm) for r in table.values)

    assert aligned(tb) == aligned(ts)


def test_e6_order_and_classes():
    rs = build_root_system("E6")
    big = enumerate_big(rs)
    assert big.order == 51840
    assert big.num_classes == 25
