from fractions import Fraction
from math import prod

import pytest

from cherednik.chartable import invariant_degrees
from cherednik.ratlinalg import dot
from cherednik.rootsystem import (
    build_root_system,
    rank2_label,
    reflect,
    test_vectors as probe_vectors,
)

# (code, number of positive roots, |W|)
GROUPS = [
    ("A3", 6, 24),
    ("A5", 15, 720),
    ("B2", 4, 8),
    ("B4", 16, 384),
    ("D4", 12, 192),
    ("D5", 20, 1920),
    ("G2", 6, 12),
    ("F4", 24, 1152),
    ("E6", 36, 51840),
    ("E7", 63, 2903040),
    ("E8", 120, 696729600),
]


@pytest.mark.parametrize("code,npos,order", GROUPS)
def test_counts_and_order(code, npos, order):
    rs = build_root_system(code[0], int(code[1:])) if code[0] in "ABD" else build_root_system(code)
    assert len(rs.positive_roots) == npos
    assert rs.weyl_order() == order
    # invariant degrees: product = |W|, sum = #R+ + rank
    degs = invariant_degrees(rs)
    assert prod(degs) == order
    assert sum(degs) == npos + rs.rank


@pytest.mark.parametrize("code,npos,order", GROUPS[:9])
def test_root_system_closure(code, npos, order):
    rs = build_root_system(code[0], int(code[1:])) if code[0] in "ABD" else build_root_system(code)
    roots = set(rs.all_roots)
    assert len(roots) == 2 * npos
    for a in rs.positive_roots:
        assert tuple(-e for e in a) in roots
        # <a^v, a> = 2
        assert dot(rs.coroot(a), a) == 2
        for b in rs.positive_roots:
            assert reflect(b, a) in roots


def test_two_lengths():
    for code, expected in (("G2", True), ("F4", True), ("E6", False)):
        assert build_root_system(code).two_lengths == expected
    assert build_root_system("B", 3).two_lengths
    assert not build_root_system("D", 4).two_lengths


def test_rank2_labels_g2():
    rs = build_root_system("G2")
    seen = set()
    pos = rs.positive_roots
    for i, a in enumerate(pos):
        for b in pos[i + 1 :]:
            seen.add(rank2_label(rs, a, b))
    assert seen == {"A1+~A1", "A2", "~A2", "G2"}


def test_rank2_labels_b2():
    rs = build_root_system("B", 2)
    pos = rs.positive_roots
    labels = {
        rank2_label(rs, a, b)
        for i, a in enumerate(pos)
        for b in pos[i + 1 :]
    }
    assert labels <= {"2A1", "A1+~A1", "B2"}
    assert "B2" in labels


def test_probe_vectors_give_distinct_commutators():
    # the two probes must produce nonzero, distinct commutators
    for code in ("G2", "F4", "E6", "E7", "E8"):
        rs = build_root_system(code)
        tv = probe_vectors(code)
        c1 = {a for a in rs.positive_roots if dot(tv.y, a) * dot(rs.coroot(a), tv.x1)}
        c2 = {a for a in rs.positive_roots if dot(tv.y, a) * dot(rs.coroot(a), tv.x2)}
        assert c1 and c2 and c1 != c2


def test_fundamental_weights():
    rs = build_root_system("E6")
    for i in range(6):
        w = rs.fundamental_weight(i)
        for j, a in enumerate(rs.simple_roots):
            assert dot(w, rs.coroot(a)) == (1 if i == j else 0)
        wv = rs.fundamental_coweight(i)
        for j, a in enumerate(rs.simple_roots):
            assert dot(wv, a) == (1 if i == j else 0)
