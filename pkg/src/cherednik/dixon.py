"""Character tables of enumerated groups by the class-algebra method.

The structure-constant matrices A_i (one per conjugacy class) commute, and
their simultaneous eigenvectors are, up to scale, the vectors
omega_k = |C_k| chi(g_k) / chi(1).  For Weyl groups all character values are
rational integers, so every eigenvalue is rational and the splitting can be
done exactly over Q; sympy supplies the rational eigendecomposition of the
restricted matrices.
"""

from __future__ import annotations

from math import isqrt

import numpy as np
import sympy

from .weylgroup import EnumeratedGroup, name_classes


def class_algebra_matrices(group: EnumeratedGroup) -> list[list[list[int]]]:
    """a[i][j][k] = #{(x, y) in C_i x C_j : x*y = rep_k}."""
    n = len(group.rs.all_roots)
    ncl = group.num_classes
    elems = np.frombuffer(b"".join(group.elements), dtype=np.uint8).reshape(
        -1, n
    )
    inv = np.argsort(elems, axis=1).astype(np.uint8)
    a = [[[0] * ncl for _ in range(ncl)] for _ in range(ncl)]
    class_of = group.class_of
    index = group.index
    for k in range(ncl):
        gk = np.array(group.class_rep_perm(k), dtype=np.intp)
        prods = inv[:, gk]  # row x -> x^{-1} g_k
        for x in range(prods.shape[0]):
            j = class_of[index[prods[x].tobytes()]]
            a[class_of[x]][j][k] += 1
    return a


def _restrict(a_mat: sympy.Matrix, p: sympy.Matrix) -> sympy.Matrix:
    """Matrix of a_mat on the invariant column space of p, in p's basis."""
    ap = a_mat * p
    return (p.T * p).solve(p.T * ap)


def simultaneous_eigenvectors(mats, ncl: int) -> list[list]:
    """One rational eigenvector per irreducible character, as omega-vectors
    normalized so the identity-class entry is 1.

    ``mats`` is any iterable of commuting sympy matrices from the class
    algebra; it is consumed lazily until the eigenspaces are all lines.
    """
    spaces = [sympy.eye(ncl)]
    for m in mats:
        if all(p.cols == 1 for p in spaces):
            break
        nxt = []
        for p in spaces:
            if p.cols == 1:
                nxt.append(p)
                continue
            r = _restrict(m, p)
            for _val, _mult, vecs in r.eigenvects():
                basis = sympy.Matrix.hstack(*(p * v for v in vecs))
                nxt.append(basis)
        spaces = nxt
    if any(p.cols != 1 for p in spaces):
        raise AssertionError("class algebra did not split into lines")
    out = []
    for p in spaces:
        v = [sympy.Rational(e) for e in p]
        out.append([e / v[0] for e in v])
    return out


def characters_from_eigenvectors(
    group: EnumeratedGroup, omegas: list[list]
) -> list[list[int]]:
    """Turn omega-vectors into integer character rows (identity column 0)."""
    order = group.order
    sizes = group.class_sizes
    # class of inverses, for the norm formula
    inv_class = []
    for c in range(group.num_classes):
        from .weylgroup import inverse

        p = inverse(group.class_rep_perm(c))
        inv_class.append(group.class_index_of_perm(p))
    rows = []
    for om in omegas:
        norm = sum(
            om[k] * om[inv_class[k]] / sizes[k] for k in range(len(om))
        )
        dim_sq = sympy.Rational(order) / norm
        d = isqrt(int(dim_sq))
        assert d * d == dim_sq, "non-square character degree"
        row = []
        for k, w in enumerate(om):
            val = sympy.Rational(d) * w / sizes[k]
            assert val.q == 1, "non-integral character value"
            row.append(int(val))
        rows.append(row)
    rows.sort(key=lambda r: (r[0], [-e for e in r]))
    return rows


def compute_table(group: EnumeratedGroup):
    """Full exact character table of an enumerated Weyl group.

    Irreps get provisional labels phi{dim,b} with prime marks on ties;
    group-specific naming conventions are applied by the labeling layer.
    """
    a = class_algebra_matrices(group)
    omegas = simultaneous_eigenvectors(
        (sympy.Matrix(m) for m in a), group.num_classes
    )
    rows = characters_from_eigenvectors(group, omegas)
    return table_from_characters(group, rows)


def table_from_characters(group, rows: list[list[int]]):
    """Assemble and validate a CharacterTable from computed character rows."""
    from .chartable import CharacterTable, check_orthogonality

    names = name_classes(group)
    table = CharacterTable(
        group_label=group.rs.label,
        rs=group.rs,
        class_names=names,
        class_sizes=list(group.class_sizes),
        class_words=[group.class_rep_word(c) for c in range(group.num_classes)],
        irrep_labels=[f"r{i}" for i in range(len(rows))],
        values=rows,
    )
    check_orthogonality(table)
    # final canonical labels need b-invariants, which need a working table
    order = sorted(
        range(len(rows)),
        key=lambda i: (rows[i][0], table.b_invariant(f"r{i}"), rows[i]),
    )
    labels = [None] * len(rows)
    seen: dict[tuple[int, int], int] = {}
    for i in order:
        d, b = rows[i][0], table.b_invariant(f"r{i}")
        seen[(d, b)] = seen.get((d, b), 0) + 1
        labels[i] = f"phi{{{d},{b}}}" + "'" * (seen[(d, b)] - 1)
    table.irrep_labels = labels
    table._cache.clear()
    return table
