"""Reading and writing character tables in the line-oriented text format.

Format (``#`` starts a comment, all integers base 10):

    group <label> order <N>
    class <name> size <int> rep <simple-reflection indices...>
    ...
    irrep <label> dim <int> : <value per class, in class order>
    ...

Files are treated as untrusted input: the loader re-validates everything
checkable (integrality, squareness, both orthogonality relations, class
sizes summing to the group order, identity class first, and class
membership of the semantically named classes via their representative
words) and rejects rather than repairs.
"""

from __future__ import annotations

import os
from pathlib import Path

from .chartable import CharacterTable, check_orthogonality
from .rootsystem import build_root_system
from .weylgroup import (
    compose,
    perm_order,
    root_permutation,
    word_to_perm,
)

#: environment variable naming the default directory for bundled data files
DATA_DIR_ENV = "CHEREDNIK_DATA_DIR"


class TableFormatError(ValueError):
    pass


def default_data_dir() -> Path:
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def save_table(table: CharacterTable, path) -> None:
    lines = [f"group {table.group_label} order {table.order}"]
    for name, size, word in zip(
        table.class_names, table.class_sizes, table.class_words
    ):
        rep = " ".join(str(i) for i in word)
        lines.append(f"class {name} size {size} rep {rep}".rstrip())
    for label, row in zip(table.irrep_labels, table.values):
        vals = " ".join(str(v) for v in row)
        lines.append(f"irrep {label} dim {row[0]} : {vals}")
    Path(path).write_text("\n".join(lines) + "\n")


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TableFormatError(f"non-integer {what}: {tok!r}")


def load_table(path) -> CharacterTable:
    """Parse and fully validate a character table file."""
    group_label = None
    order = None
    class_names: list[str] = []
    class_sizes: list[int] = []
    class_words: list[tuple[int, ...]] = []
    irrep_labels: list[str] = []
    values: list[list[int]] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if toks[0] == "group":
                if toks[2] != "order":
                    raise TableFormatError("malformed group line")
                group_label = toks[1]
                order = _parse_int(toks[3], "group order")
            elif toks[0] == "class":
                if toks[2] != "size" or toks[4] != "rep":
                    raise TableFormatError("malformed class line")
                class_names.append(toks[1])
                class_sizes.append(_parse_int(toks[3], "class size"))
                class_words.append(
                    tuple(_parse_int(t, "rep index") for t in toks[5:])
                )
            elif toks[0] == "irrep":
                if toks[2] != "dim" or toks[4] != ":":
                    raise TableFormatError("malformed irrep line")
                irrep_labels.append(toks[1])
                dim = _parse_int(toks[3], "dim")
                row = [_parse_int(t, "character value") for t in toks[5:]]
                if not row or row[0] != dim:
                    raise TableFormatError(
                        f"irrep {toks[1]}: dim does not match first value"
                    )
                values.append(row)
            else:
                raise TableFormatError(f"unknown directive {toks[0]!r}")
        except IndexError:
            raise TableFormatError(f"{path}:{lineno}: truncated line")
    if group_label is None:
        raise TableFormatError("missing group line")
    rs = _root_system_for_label(group_label)
    table = CharacterTable(
        group_label=group_label,
        rs=rs,
        class_names=class_names,
        class_sizes=class_sizes,
        class_words=class_words,
        irrep_labels=irrep_labels,
        values=values,
    )
    validate_table(table, expected_order=order)
    return table


def _root_system_for_label(label: str):
    if label[0] in ("A", "B", "D") and label[1:].isdigit():
        return build_root_system(label[0], int(label[1:]))
    return build_root_system(label)


def validate_table(table: CharacterTable, expected_order=None) -> None:
    """All structural checks; raises TableFormatError on any failure."""
    rs = table.rs
    if expected_order is not None and expected_order != rs.weyl_order():
        raise TableFormatError("declared order does not match the group")
    if sum(table.class_sizes) != rs.weyl_order():
        raise TableFormatError("class sizes do not sum to the group order")
    if len(set(table.class_names)) != table.num_classes:
        raise TableFormatError("duplicate class names")
    if len(set(table.irrep_labels)) != len(table.irrep_labels):
        raise TableFormatError("duplicate irrep labels")
    if len(table.values) != table.num_classes:
        raise TableFormatError("table is not square")
    if table.class_words[0] != ():
        raise TableFormatError("first class must be the identity")
    if any(len(r) != table.num_classes for r in table.values):
        raise TableFormatError("row length does not match class count")
    if any(r[0] <= 0 for r in table.values):
        raise TableFormatError("non-positive character degree")
    try:
        check_orthogonality(table)
    except ValueError as exc:
        raise TableFormatError(str(exc))
    _check_named_class_words(table)


def _check_named_class_words(table: CharacterTable) -> None:
    """Representative words of semantically named classes must actually lie
    in the claimed class (identity, reflections, rank-2 products)."""
    rs = table.rs
    from .rootsystem import rank2_label
    from .weylgroup import matrix_of

    for name, word in zip(table.class_names, table.class_words):
        if name == "1":
            if word != ():
                raise TableFormatError("class 1 has a nonempty word")
            continue
        if name in ("A1", "~A1"):
            p = word_to_perm(rs, word)
            if perm_order(p) != 2:
                raise TableFormatError(f"class {name} rep is not an involution")
            m = matrix_of(rs, p)
            from .ratlinalg import QMatrix, mat_rank

            diff = m.add(QMatrix.identity(rs.ambient_dim).scale(-1))
            if mat_rank(diff) != 1:
                raise TableFormatError(f"class {name} rep is not a reflection")
        if name in ("2A1", "A1+~A1", "A2", "~A2", "B2", "G2"):
            p = word_to_perm(rs, word)
            found = _matches_rank2(rs, p, name)
            if not found:
                raise TableFormatError(
                    f"class {name} rep does not match its rank-2 label"
                )


def _matches_rank2(rs, p, name: str) -> bool:
    from .rootsystem import rank2_label

    pos = rs.positive_roots
    perms = [root_permutation(rs, a) for a in pos]
    for i, a in enumerate(pos):
        for j in range(i + 1, len(pos)):
            if compose(perms[i], perms[j]) == p:
                if rank2_label(rs, a, pos[j]) == name:
                    return True
    return False
