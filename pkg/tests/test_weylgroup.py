import pytest

from cherednik.ratlinalg import QMatrix
from cherednik.rootsystem import build_root_system
from cherednik.rootsystem import test_vectors as probe_vectors
from cherednik.weylgroup import (
    compose,
    enumerate_group,
    identity_perm,
    inverse,
    matrix_of,
    perm_order,
    reduction_hypotheses,
    root_permutation,
    simple_generators,
    word_to_perm,
)

CLASS_COUNTS = {
    "A3": 5,
    "A4": 7,
    "B2": 5,
    "B3": 10,
    "D4": 13,
    "G2": 6,
    "F4": 25,
}


def _rs(code):
    if code[0] in "ABD":
        return build_root_system(code[0], int(code[1:]))
    return build_root_system(code)


@pytest.mark.parametrize("code", sorted(CLASS_COUNTS))
def test_enumeration(code):
    rs = _rs(code)
    g = enumerate_group(rs)
    assert g.order == rs.weyl_order()
    assert g.num_classes == CLASS_COUNTS[code]
    sizes = [0] * g.num_classes
    for i in range(g.order):
        sizes[int(g.class_of[i])] += 1
    assert sum(sizes) == g.order
    # class sizes divide |W|
    assert all(g.order % s == 0 for s in sizes)


@pytest.mark.parametrize("code", ["B3", "G2"])
def test_words_round_trip(code):
    rs = _rs(code)
    g = enumerate_group(rs)
    for i in range(0, g.order, 7):
        assert word_to_perm(rs, g.word(i)) == g.perm(i)


def test_reflection_matrix_homomorphism():
    rs = build_root_system("G2")
    gens = simple_generators(rs)
    p = compose(gens[0], gens[1])
    assert matrix_of(rs, p) == matrix_of(rs, gens[0]) * matrix_of(rs, gens[1])
    assert perm_order(p) == 6  # Coxeter element of G2
    assert compose(p, inverse(p)) == identity_perm(len(p))


def test_root_permutation_is_involution():
    rs = build_root_system("F4")
    for a in rs.positive_roots:
        p = root_permutation(rs, a)
        assert perm_order(p) == 2


@pytest.mark.parametrize(
    "code", ["A4", "B4", "D5", "G2", "F4", "E6", "E7", "E8"]
)
def test_reduction_hypotheses(code):
    kind = code if code[0] in "GFE" else code[0]
    rank = int(code[1:])
    rs = build_root_system(kind, rank)
    tv = probe_vectors(kind, rank)
    rep = reduction_hypotheses(rs, tv)
    assert rep.cond_a and rep.cond_b
