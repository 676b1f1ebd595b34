import numpy as np
import pytest

from cherednik.induction import (
    affine_deletion_subsystems,
    cheap_invariant,
    full_invariant,
    highest_root,
    orbit_model,
)
from cherednik.rootsystem import build_root_system
from cherednik.weylgroup import enumerate_group, word_to_perm


def _neg_array(rs):
    return np.array(
        [rs.root_position(tuple(-x for x in r)) for r in rs.all_roots],
        dtype=np.int32,
    )


def test_highest_root_properties():
    for code, rank in (("A", 3), ("B", 4), ("D", 5)):
        rs = build_root_system(code, rank)
        h = highest_root(rs)
        coeffs = rs.simple_coefficients(h)
        assert all(c >= 1 for c in coeffs)
    rs = build_root_system("E8")
    assert sum(rs.simple_coefficients(highest_root(rs))) == 29


@pytest.mark.parametrize(
    "code,expected",
    [
        ("G2", {"A1+A1", "A2"}),
        ("F4", {"A1+A3", "A1+B3", "A2+A2", "B4"}),
        ("B3", {"A1+A1+A1", "A3"}),
        ("D4", {"A1+A1+A1+A1"}),
    ],
)
def test_affine_deletion_labels(code, expected):
    rs = build_root_system(code[0], int(code[1])) if code[0] in "BD" else (
        build_root_system(code)
    )
    subs = affine_deletion_subsystems(rs)
    assert {s.label for s in subs} == expected
    for s in subs:
        # full rank and proper
        assert sum(f.rank for f in s.factors) == rs.rank
        assert len(s.root_indices) < len(rs.all_roots)


def test_e8_maximal_subsystems():
    rs = build_root_system("E8")
    labels = {s.label for s in affine_deletion_subsystems(rs)}
    assert labels == {
        "A1+E7", "D8", "A8", "A2+E6", "A4+A4",
        "A1+A2+A5", "A3+D5", "A1+A7",
    }


def test_factor_words_land_in_subsystem():
    rs = build_root_system("F4")
    subs = {s.label: s for s in affine_deletion_subsystems(rs)}
    b4 = subs["B4"]
    f = b4.factors[0]
    p = f.word_perm(rs, (0, 1, 2, 3))
    # a word in the factor stabilizes the subsystem's root set
    assert {p[i] for i in b4.root_indices} == set(b4.root_indices)
    # and the coset model sees exactly the stabilizer cosets it fixes
    model = orbit_model(rs, b4.root_indices, "B4")
    assert model.fixed_count(np.array(p, dtype=np.int32)) >= 1


def test_orbit_model_permutation_character():
    """Fixed points on the orbit = permutation character on cosets of the
    set stabilizer; totals over the group must be |W| times the number of
    orbits (Burnside)."""
    rs = build_root_system("B", 3)
    subs = {s.label: s for s in affine_deletion_subsystems(rs)}
    model = orbit_model(rs, subs["A3"].root_indices, "A3")
    g = enumerate_group(rs)
    total = sum(
        model.fixed_count(np.array(g.perm(i), dtype=np.int32))
        for i in range(g.order)
    )
    assert total % g.order == 0
    assert total // g.order >= 1  # at least the trivial orbit count


@pytest.mark.parametrize("code,rank,collisions", [("B", 3, 0), ("D", 4, 4)])
def test_invariant_separation(code, rank, collisions):
    """The full invariant separates all B3 classes; on D4 it conflates
    exactly four pairs (classes related by triality, which the single
    coset model available there cannot tell apart).  Both invariants are
    class functions."""
    rs = build_root_system(code, rank)
    g = enumerate_group(rs)
    neg = _neg_array(rs)
    models = [
        orbit_model(rs, s.root_indices, s.label)
        for s in affine_deletion_subsystems(rs)
    ]
    keys = [
        full_invariant(
            rs, np.array(g.class_rep_perm(c), dtype=np.int32), neg, models
        )
        for c in range(g.num_classes)
    ]
    assert g.num_classes - len(set(keys)) == collisions
    # class-constancy of the cheap invariant on a sample of elements
    for i in range(0, g.order, max(1, g.order // 50)):
        p = g.perm(i)
        rep = g.class_rep_perm(g.class_of[i])
        assert cheap_invariant(
            rs, np.array(p, dtype=np.int32), neg
        ) == cheap_invariant(rs, np.array(rep, dtype=np.int32), neg)
