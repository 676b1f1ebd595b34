"""Numpy-scaled enumeration and character tables for large Weyl groups.

The hash-table approach of ``weylgroup.enumerate_group`` tops out around
10^5 elements; this module handles W(E7) (2,903,040 elements) and W(D8) on
the same permutation model.  An element is a row of a uint8 array giving
the images of all roots; since a Weyl group element is determined by where
it sends the simple roots, each row gets an exact injective uint64 key
(the simple-root images packed base 256), and membership queries become
``searchsorted`` on the sorted key array.

The character table then comes from the class-algebra method, computing
structure-constant matrices only for the smallest classes, in increasing
size order, until the simultaneous eigenspaces split into lines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from .rootsystem import RootSystem
from .weylgroup import Perm, simple_generators


def _pack_columns(rs: RootSystem) -> np.ndarray:
    """Positions of the simple roots in the full root list."""
    cols = [rs.root_position(a) for a in rs.simple_roots]
    assert len(cols) <= 8, "key packing needs at most 8 simple roots"
    return np.array(cols, dtype=np.intp)


class _IndexProxy:
    """dict-like view mapping element bytes to element index."""

    def __init__(self, group: "BigGroup"):
        self._group = group

    def __getitem__(self, key: bytes) -> int:
        row = np.frombuffer(key, dtype=np.uint8)[None, :]
        return int(self._group.lookup(row)[0])


@dataclass
class BigGroup:
    """Fully enumerated Weyl group stored in bulk numpy arrays.

    Duck-types the parts of ``EnumeratedGroup`` that the class-naming and
    character-table code uses.
    """

    rs: RootSystem
    elems: np.ndarray  # (order, num_roots) uint8, row i = element i
    parent: np.ndarray  # int32, BFS parent (-1 for identity)
    via_gen: np.ndarray  # int8, generator applied to the parent
    sorted_keys: np.ndarray  # uint64, sorted packed keys
    key_order: np.ndarray  # int32, element index per sorted key
    class_of: np.ndarray  # int32, element -> class
    class_reps: list[int]
    class_sizes: list[int]

    @property
    def order(self) -> int:
        return self.elems.shape[0]

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    @property
    def index(self) -> _IndexProxy:
        return _IndexProxy(self)

    def keys_of(self, rows: np.ndarray) -> np.ndarray:
        cols = _pack_columns(self.rs)
        pows = (256 ** np.arange(len(cols))).astype(np.uint64)
        return rows[:, cols].astype(np.uint64) @ pows

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Element indices of the given permutation rows (must be members)."""
        k = self.keys_of(rows)
        pos = np.searchsorted(self.sorted_keys, k)
        if not np.all(self.sorted_keys[pos] == k):
            raise KeyError("row is not an element of the group")
        return self.key_order[pos]

    def perm(self, i: int) -> Perm:
        return tuple(int(e) for e in self.elems[i])

    def word(self, i: int) -> tuple[int, ...]:
        out = []
        while self.parent[i] != -1:
            out.append(int(self.via_gen[i]))
            i = int(self.parent[i])
        return tuple(out)

    def class_index_of_perm(self, p: Perm) -> int:
        row = np.array(p, dtype=np.uint8)[None, :]
        return int(self.class_of[self.lookup(row)[0]])

    def class_rep_perm(self, c: int) -> Perm:
        return self.perm(self.class_reps[c])

    def class_rep_word(self, c: int) -> tuple[int, ...]:
        return self.word(self.class_reps[c])

    def class_members(self, c: int) -> np.ndarray:
        return np.where(self.class_of == c)[0]


def enumerate_big(rs: RootSystem) -> BigGroup:
    """BFS enumeration with vectorized candidate generation."""
    expected = rs.weyl_order()
    n = len(rs.all_roots)
    gens = np.array(simple_generators(rs), dtype=np.uint8)
    ngens = gens.shape[0]
    cols = _pack_columns(rs)
    pows = (256 ** np.arange(len(cols))).astype(np.uint64)

    def keys(rows: np.ndarray) -> np.ndarray:
        return rows[:, cols].astype(np.uint64) @ pows

    ident = np.arange(n, dtype=np.uint8)[None, :]
    levels = [ident]
    parents = [np.array([-1], dtype=np.int32)]
    vias = [np.array([-1], dtype=np.int8)]
    known = keys(ident)  # sorted keys of everything seen so far
    frontier = ident
    frontier_idx = np.array([0], dtype=np.int64)
    count = 1
    while frontier.shape[0]:
        cand = np.concatenate([g[frontier] for g in gens])
        cand_parent = np.tile(frontier_idx, ngens)
        cand_via = np.repeat(
            np.arange(ngens, dtype=np.int8), frontier.shape[0]
        )
        ck, first = np.unique(keys(cand), return_index=True)
        pos = np.searchsorted(known, ck)
        pos = np.minimum(pos, known.shape[0] - 1)
        fresh = known[pos] != ck
        first = first[fresh]
        frontier = cand[first]
        levels.append(frontier)
        parents.append(cand_parent[first].astype(np.int32))
        vias.append(cand_via[first])
        frontier_idx = count + np.arange(frontier.shape[0], dtype=np.int64)
        count += frontier.shape[0]
        known = np.concatenate([known, ck[fresh]])
        known.sort()
    if count != expected:
        raise AssertionError(
            f"enumerated {count} elements of W({rs.label}), "
            f"expected {expected}"
        )
    elems = np.concatenate(levels)
    parent = np.concatenate(parents)
    via_gen = np.concatenate(vias)
    del levels, known

    all_keys = keys(elems)
    key_order = np.argsort(all_keys).astype(np.int64)
    sorted_keys = all_keys[key_order]
    group = BigGroup(
        rs=rs,
        elems=elems,
        parent=parent,
        via_gen=via_gen,
        sorted_keys=sorted_keys,
        key_order=key_order,
        class_of=np.full(count, -1, dtype=np.int32),
        class_reps=[],
        class_sizes=[],
    )
    _partition_classes(group, gens)
    return group


def _partition_classes(group: BigGroup, gens: np.ndarray) -> None:
    """Conjugation orbits, one batched BFS per class."""
    inv_gens = np.array(
        [np.argsort(g) for g in gens], dtype=np.intp
    )
    class_of = group.class_of
    n = group.order
    next_start = 0
    while True:
        while next_start < n and class_of[next_start] != -1:
            next_start += 1
        if next_start == n:
            break
        cls = len(group.class_reps)
        group.class_reps.append(next_start)
        class_of[next_start] = cls
        frontier = np.array([next_start], dtype=np.int64)
        size = 1
        while frontier.shape[0]:
            rows = group.elems[frontier]
            found = []
            for g, ginv in zip(gens, inv_gens):
                conj = g[rows[:, ginv]]  # g w g^{-1}
                found.append(group.lookup(conj))
            idx = np.unique(np.concatenate(found))
            idx = idx[class_of[idx] == -1]
            class_of[idx] = cls
            size += idx.shape[0]
            frontier = idx
        group.class_sizes.append(size)
    assert sum(group.class_sizes) == n


def structure_matrix(group: BigGroup, i: int) -> np.ndarray:
    """Class-algebra matrix of class i: entry (j, k) counts pairs
    (x, y) in C_i x C_j with x*y = rep_k."""
    ncl = group.num_classes
    members = group.class_members(i)
    rows = group.elems[members]
    inv_rows = np.argsort(rows, axis=1).astype(np.uint8)
    a = np.zeros((ncl, ncl), dtype=np.int64)
    for k in range(ncl):
        gk = group.elems[group.class_reps[k]].astype(np.intp)
        prods = inv_rows[:, gk]  # row x -> x^{-1} g_k
        j = group.class_of[group.lookup(prods)]
        a[:, k] = np.bincount(j, minlength=ncl)
    return a


def _lazy_matrices(group: BigGroup):
    """Structure matrices in increasing class size, skipping the identity."""
    order = sorted(
        range(group.num_classes), key=lambda c: (group.class_sizes[c], c)
    )
    for c in order:
        if group.class_sizes[c] == 1 and c == 0:
            continue
        yield sympy.Matrix(structure_matrix(group, c).tolist())


def big_table(group: BigGroup):
    """Exact character table of a BigGroup by the class-algebra method."""
    from .dixon import (
        characters_from_eigenvectors,
        simultaneous_eigenvectors,
        table_from_characters,
    )

    omegas = simultaneous_eigenvectors(
        _lazy_matrices(group), group.num_classes
    )
    rows = characters_from_eigenvectors(group, omegas)
    return table_from_characters(group, rows)
