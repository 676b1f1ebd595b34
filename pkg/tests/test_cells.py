from hypothesis import given, strategies as st

import pytest

from cherednik.cells import (
    FamilyData,
    Symbol,
    bn_cuspidal_family,
    bn_symbol,
    cm_cell_report,
    cuspidal_family,
    dn_cuspidal_family,
    dn_symbol,
    is_cuspidal_symbol,
    load_family,
    lr_coefficient,
    rectangle_constituents,
    save_family,
    zero_n_set,
)
from cherednik.partitions import Bipartition, Partition, partitions_of


def test_lr_known_values():
    # c^{(3,2,1)}_{(2,1),(2,1)} = 2, the classic example
    assert lr_coefficient(
        Partition.of(2, 1), Partition.of(2, 1), Partition.of(3, 2, 1)
    ) == 2
    assert lr_coefficient(
        Partition.of(2), Partition.of(1), Partition.of(2, 1)
    ) == 1
    assert lr_coefficient(
        Partition.of(2), Partition.of(1), Partition.of(1, 1, 1)
    ) == 0
    # Pieri: adding a horizontal strip
    assert lr_coefficient(
        Partition.of(2, 1), Partition.of(2), Partition.of(3, 2)
    ) == 1


@given(
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
)
def test_lr_symmetry(i, j):
    ps = [list(partitions_of(n)) for n in range(9)]
    for mu in ps[i]:
        for nu in ps[j]:
            for lam in ps[i + j]:
                assert lr_coefficient(mu, nu, lam) == lr_coefficient(
                    nu, mu, lam
                )


def test_rectangle_constituents_b6():
    lam = Partition.of(2, 2, 2)
    cons = rectangle_constituents(lam, 6)
    # every complement bipartition occurs
    for bip in cons:
        assert bip.size == 6
    assert Bipartition.of((2, 2, 2), ()) in cons
    assert Bipartition.of((), (3, 3)) in cons


def test_symbols():
    s = bn_symbol(Bipartition.of((1, 1), ()), 1)
    assert isinstance(s, Symbol)
    # B2 cuspidal family at d = 1: n = 2
    fam = bn_cuspidal_family(2)
    assert fam.members == ("(0)x(2)", "(1)x(1)", "(1,1)x(0)")
    assert fam.special == "(1)x(1)"
    assert bn_cuspidal_family(3).members == ()
    # D4 cuspidal family at d = 2
    fam = dn_cuspidal_family(4)
    assert "(2,2)x(0)" in fam.members
    assert fam.special == "(2,1)x(1)"
    assert dn_cuspidal_family(5).members == ()


def test_cuspidal_symbol_criterion():
    # the defining symbol of the B2 family is cuspidal
    assert is_cuspidal_symbol(bn_symbol(Bipartition.of((1,), (1,)), 1))
    # a symbol with a repeated entry across rows is not
    assert not is_cuspidal_symbol(bn_symbol(Bipartition.of((2,), ()), 1))


def test_family_round_trip(tmp_path):
    fd = FamilyData(
        "G2",
        "phi{2,1}",
        ("phi{2,1}", "phi{2,2}", "phi{1,3}'", "phi{1,3}''"),
        {
            "phi{2,1}": "phi{2,2}",
            "phi{2,2}": "phi{2,1}",
            "phi{1,3}'": "phi{1,3}''",
            "phi{1,3}''": "phi{1,3}'",
        },
    )
    path = tmp_path / "g2.families"
    save_family(fd, path)
    assert load_family(path) == fd


def test_bundled_families_match_tables(table_of):
    for code in ("G2", "F4", "E6"):
        t = table_of(code)
        fam = cuspidal_family(code, int(code[1]))
        assert set(fam.members) <= set(t.irrep_labels)
        # sgn-stable, with the recorded involution
        for a, b in fam.sgn_pairs.items():
            assert t.tensor_sgn_label(a) == b


def test_cell_report_equalities(table_of):
    for code in ("G2", "F4", "E6"):
        rep = cm_cell_report(code, int(code[1]), table=table_of(code))
        assert rep.lower_bound_in_family and rep.family_in_lower_bound
        assert rep.zero_n_equals_family
        assert "equality" in rep.verdict()


def test_cell_report_a_and_b():
    rep = cm_cell_report("A", 4)
    assert rep.verdict() == "no cuspidal family"
    rep = cm_cell_report("B", 6)
    fam = set(rep.family.members)
    assert fam and fam <= set(rep.constituents)


def test_zero_n_g2(table_of):
    t = table_of("G2")
    assert sorted(zero_n_set(t)) == sorted(
        ["phi{2,1}", "phi{2,2}", "phi{1,3}'", "phi{1,3}''"]
    )
