from fractions import Fraction

import pytest

from cherednik.onewtype import (
    character_criterion,
    classify_bn,
    classify_dn,
    classify_exceptional,
    commutator_sum,
    matrix_criterion_bulk,
    normalized_class_sums,
    square_and_group,
)
from cherednik.ratlinalg import INFINITE_RATIO, QuadNum
from cherednik.rootsystem import build_root_system
from cherednik.rootsystem import test_vectors as probe_vectors
from cherednik.weylgroup import enumerate_group


def _squares(code):
    kind = code if code[0] in "GFE" else code[0]
    rs = build_root_system(kind, int(code[1:]))
    tv = probe_vectors(kind, rs.rank)
    t1 = commutator_sum(rs, tv.y, tv.x1)
    t2 = commutator_sum(rs, tv.y, tv.x2)
    return rs, (t1, t2), (square_and_group(rs, t1), square_and_group(rs, t2))


def test_term_counts_g2_f4():
    _, terms, _ = _squares("G2")
    assert (len(terms[0]), len(terms[1])) == (5, 4)
    _, terms, _ = _squares("F4")
    assert (len(terms[0]), len(terms[1])) == (15, 9)


def test_grouped_sums_g2(table_of):
    t = table_of("G2")
    rs, _, (gs1, gs2) = _squares("G2")
    assert normalized_class_sums(t, gs1, rs) == {
        "1": (3, 0, 3),
        "A1+~A1": (0, 2, 0),
        "A2": (3, 0, 3),
        "G2": (0, 10, 0),
    }
    assert normalized_class_sums(t, gs2, rs) == {
        "1": (5, 0, 5),
        "A1+~A1": (0, 2, 0),
        "A2": (4, 0, 4),
        "G2": (0, 16, 0),
    }


def test_classification_g2(table_of):
    res = classify_exceptional(table_of("G2"))
    at = {e.label: str(e.constraints) for e in res.entries}
    assert at == {
        "phi{1,3}'": "cs/cl in {1}",
        "phi{1,3}''": "cs/cl in {1}",
        "phi{2,2}": "cs/cl in {1}",
        "phi{1,0}": "cs/cl in {-1}",
        "phi{1,6}": "cs/cl in {-1}",
        "phi{2,1}": "cs/cl in {-1}",
    }
    assert sorted(res.labels_at(QuadNum.make(1))) == [
        "phi{1,3}'",
        "phi{1,3}''",
        "phi{2,2}",
    ]


def test_classification_f4_regimes(table_of):
    res = classify_exceptional(table_of("F4"))
    at = {e.label: str(e.constraints) for e in res.entries}
    assert at["4_1"] == "all parameters"
    assert {l for l, c in at.items() if c == "cs/cl in {1}"} == {
        "1_2", "1_3", "6_1", "4_3", "4_4"
    }
    assert {l for l, c in at.items() if c == "cs/cl in {-1}"} == {
        "1_1", "1_4", "6_2", "4_2", "4_5"
    }
    assert {l for l, c in at.items() if c == "cl = 0"} == {"2_1", "2_2"}
    assert {l for l, c in at.items() if c == "cs = 0"} == {"2_3", "2_4"}
    assert {
        l for l, c in at.items() if c == "cs/cl in {-sqrt(-1), sqrt(-1)}"
    } == {"12_1", "16_1"}
    # the cl = 0 locus really is the infinite-ratio point
    assert set(res.labels_at(INFINITE_RATIO)) == {"2_1", "2_2", "4_1"}


def test_classify_bn():
    res = classify_bn(4)
    at = {e.label: str(e.constraints) for e in res.entries}
    assert at == {
        "(1,1,1,1)x(0)": "cs/cl in {3}",
        "(0)x(4)": "cs/cl in {3}",
        "(2,2)x(0)": "cs = 0",
        "(0)x(2,2)": "cs = 0",
        "(4)x(0)": "cs/cl in {-3}",
        "(0)x(1,1,1,1)": "cs/cl in {-3}",
    }


def test_classify_dn():
    assert [e.label for e in classify_dn(4).entries] == ["(2,2)x(0)"]
    assert [e.label for e in classify_dn(9).entries] == ["(3,3,3)x(0)"]
    assert classify_dn(5).entries == ()


def test_classification_d4_by_criterion(table_of):
    res = classify_exceptional(table_of("D4"))
    assert [(e.label, str(e.constraints)) for e in res.entries] == [
        ("(2,2)x(0)", "all parameters")
    ]


@pytest.mark.parametrize("code", ["A3", "B2", "B3", "G2", "D4"])
def test_criterion_oracle(code, table_of):
    """Character criterion == regular-representation matrix criterion at
    rational parameter points."""
    t = table_of(code)
    rs = t.rs
    group = enumerate_group(rs)
    _, _, (gs1, gs2) = _squares(code)
    points = [
        (Fraction(1), Fraction(1)),
        (Fraction(1), Fraction(-1)),
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(2), Fraction(-3)),
    ]
    for cl, cs in points:
        mat = matrix_criterion_bulk(group, t, cl, cs)
        for label in t.irrep_labels:
            assert (
                character_criterion(t, label, gs1, gs2, cl, cs)
                == mat[label]
            ), (code, label, cl, cs)


def test_bn_rule_agrees_with_criterion(table_of):
    """The rectangle rule for B_n against the character criterion at its
    own rational points, cross-checked on B3."""
    t = table_of("B3")
    group = enumerate_group(t.rs)
    res = classify_bn(3)
    for ratio in (Fraction(-2), Fraction(0), Fraction(2), Fraction(1)):
        expected = {
            e.label
            for e in res.entries
            if e.constraints.contains_ratio(QuadNum.make(ratio))
        }
        mat = matrix_criterion_bulk(group, t, Fraction(1), ratio)
        assert {l for l, ok in mat.items() if ok} == expected
