import pytest


def test_g2_labels(table_of):
    t = table_of("G2")
    assert sorted(t.irrep_labels) == sorted(
        ["phi{1,0}", "phi{1,6}", "phi{1,3}'", "phi{1,3}''",
         "phi{2,1}", "phi{2,2}"]
    )
    # b-invariant matches the second index
    for lbl in t.irrep_labels:
        inner = lbl.split("{")[1].split("}")[0]
        dim, b = (int(x) for x in inner.split(","))
        assert t.dim(lbl) == dim
        assert t.b_invariant(lbl) == b
    # phi{1,3}' restricts nontrivially on the long reflection class
    # convention: it is the one with value +1 on the long reflections
    cl = t.reflection_classes()
    assert len(cl) == 2


def test_f4_labels(table_of):
    t = table_of("F4")
    # dimension histogram of W(F4): 25 irreps
    dims = sorted(t.dim(l) for l in t.irrep_labels)
    assert dims == [1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4,
                    6, 6, 8, 8, 8, 8, 9, 9, 9, 9, 12, 16]
    # the d_b naming is consistent
    for lbl in t.irrep_labels:
        d = int(lbl.split("_")[0])
        assert t.dim(lbl) == d
    # pinned special labels
    assert t.b_invariant("1_1") == 0  # trivial
    assert t.b_invariant("1_4") == 24  # sign
    assert t.b_invariant("12_1") == 4


def test_e6_labels(table_of):
    t = table_of("E6")
    for lbl in ("10_s", "20_s", "60_s", "80_s", "90_s"):
        assert lbl in t.irrep_labels
        assert t.dim(lbl) == int(lbl.split("_")[0])
    # family b-invariants: the special one (80_s) has minimal b
    bs = {lbl: t.b_invariant(lbl) for lbl in
          ("80_s", "60_s", "90_s", "10_s", "20_s")}
    assert min(bs, key=bs.get) == "80_s"


def test_e7_labels(table_of):
    t = table_of("E7")
    assert {"512_a", "512_a'"} <= set(t.irrep_labels)
    assert t.dim("512_a") == t.dim("512_a'") == 512
    # the two differ in b-invariant; 512_a' carries the smaller one
    assert t.b_invariant("512_a'") < t.b_invariant("512_a")
    assert t.n_invariant("512_a") == 0
    assert t.n_invariant("512_a'") == 0


def test_e8_labels(table_of):
    t = table_of("E8")
    for lbl in ("168_y", "420_y", "4480_y", "2100_y", "7168_w"):
        assert lbl in t.irrep_labels
        assert t.dim(lbl) == int(lbl.split("_")[0])
