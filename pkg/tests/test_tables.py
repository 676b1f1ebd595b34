import pytest

from cherednik.tableio import TableFormatError, load_table, save_table
from cherednik.tables import (
    TableUnavailable,
    group_code,
    group_table,
    split_code,
)


def test_group_code():
    assert group_code("B", 6) == "B6"
    assert group_code("b6") == "B6"
    assert group_code("F4") == "F4"
    assert group_code("F", 4) == "F4"
    assert split_code("E7") == ("E7", 7)
    assert split_code("D8") == ("D", 8)
    with pytest.raises(ValueError):
        group_code("B")
    with pytest.raises(ValueError):
        group_code("Q", 3)


def test_cache_round_trip(tmp_path):
    t1 = group_table("G2", cache_dir=tmp_path)
    cached = list(tmp_path.glob("g2-*.table"))
    assert len(cached) == 1
    t2 = group_table("G2", cache_dir=tmp_path)
    assert t2.irrep_labels == t1.irrep_labels
    assert t2.values == t1.values
    assert t2.class_sizes == t1.class_sizes


def test_corrupted_cache_recomputed(tmp_path):
    group_table("G2", cache_dir=tmp_path)
    path = next(tmp_path.glob("g2-*.table"))
    raw = path.read_bytes()
    path.write_bytes(raw[: len(raw) // 2])  # truncate
    t = group_table("G2", cache_dir=tmp_path)
    assert t.group_label == "G2"
    assert len(t.irrep_labels) == 6


def test_loaded_types_require_data(tmp_path):
    for code in ("E7", "E8"):
        with pytest.raises(TableUnavailable):
            group_table(code, data_dir=tmp_path)


def test_table_file_round_trip(tmp_path):
    t = group_table("B", 2)
    path = tmp_path / "b2.table"
    save_table(t, path)
    t2 = load_table(path)
    assert t2.group_label == t.group_label
    assert t2.values == t.values
    assert t2.irrep_labels == t.irrep_labels


def test_wrong_label_in_data_dir(tmp_path):
    t = group_table("F4")
    save_table(t, tmp_path / "e7.table")
    with pytest.raises(TableFormatError):
        group_table("E7", data_dir=tmp_path)
