"""Weyl group elements as permutations of the root list, plus enumeration,
conjugacy classes, vector stabilizers and the reduction-hypothesis checks.

Elements are permutations of ``rs.all_roots`` stored as tuples (or bytes in
bulk).  Bulk enumeration is numpy-accelerated; everything downstream of it
is exact integer combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .ratlinalg import QMatrix, Vector, dot, rank_of_span
from .rootsystem import LONG, A1, RootSystem, rank2_label, reflect

Perm = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 100_000


class EnumerationCapExceeded(RuntimeError):
    """The group is too large to enumerate; use bundled table data instead."""


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[j] for j in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def root_permutation(rs: RootSystem, root: Vector) -> Perm:
    """The reflection s_root as a permutation of rs.all_roots."""
    idx = rs.root_position
    return tuple(idx(reflect(r, root)) for r in rs.all_roots)


def simple_generators(rs: RootSystem) -> list[Perm]:
    return [root_permutation(rs, a) for a in rs.simple_roots]


def word_to_perm(rs: RootSystem, word: Sequence[int]) -> Perm:
    """Product s_{i1} s_{i2} ... s_{ik} of simple reflections (rightmost first)."""
    gens = simple_generators(rs)
    p = identity_perm(len(rs.all_roots))
    for i in word:
        p = compose(p, gens[i])
    return p


def perm_order(p: Perm) -> int:
    n = len(p)
    seen = [False] * n
    from math import lcm

    order = 1
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            order = lcm(order, length)
    return order


def matrix_of(rs: RootSystem, p: Perm) -> QMatrix:
    """Ambient matrix of a group element given as a root permutation.

    The element fixes the invariant complement of the root span pointwise.
    """
    basis: list[Vector] = []
    images: list[Vector] = []
    span: list[list[Fraction]] = []
    for i, r in enumerate(rs.all_roots):
        if rank_of_span(span + [list(r)]) > len(basis):
            basis.append(r)
            images.append(rs.all_roots[p[i]])
            span.append(list(r))
        if len(basis) == rs.rank:
            break
    for c in rs.invariant_complement():
        basis.append(c)
        images.append(c)
    b = QMatrix.from_rows(basis).transpose()
    u = QMatrix.from_rows(images).transpose()
    return u * _inverse_matrix(b)


def _inverse_matrix(m: QMatrix) -> QMatrix:
    n = m.rows
    a = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m.entries)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [e * inv for e in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [e - f * g for e, g in zip(a[i], a[c])]
    return QMatrix.from_rows([row[n:] for row in a])


@dataclass
class EnumeratedGroup:
    """Full element list of a Weyl group with conjugacy class data."""

    rs: RootSystem
    elements: list[bytes]  # permutations of all_roots, one byte per image
    index: dict[bytes, int]
    parent: list[int]  # BFS parent element index (-1 for identity)
    via_gen: list[int]  # generator applied to the parent (-1 for identity)
    class_of: np.ndarray  # element index -> class index
    class_reps: list[int]  # class index -> element index
    class_sizes: list[int]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def perm(self, i: int) -> Perm:
        return tuple(self.elements[i])

    def word(self, i: int) -> tuple[int, ...]:
        out = []
        while self.parent[i] != -1:
            out.append(self.via_gen[i])
            i = self.parent[i]
        return tuple(out)

    def class_index_of_perm(self, p: Perm) -> int:
        return int(self.class_of[self.index[bytes(p)]])

    def class_rep_perm(self, c: int) -> Perm:
        return self.perm(self.class_reps[c])

    def class_rep_word(self, c: int) -> tuple[int, ...]:
        return self.word(self.class_reps[c])


def enumerate_group(
    rs: RootSystem, cap: int = DEFAULT_ENUMERATION_CAP
) -> EnumeratedGroup:
    """Generate all elements from the simple reflections by closure."""
    expected = rs.weyl_order()
    if expected > cap:
        raise EnumerationCapExceeded(
            f"|W({rs.label})| = {expected} exceeds cap {cap}"
        )
    n = len(rs.all_roots)
    gens = [np.array(g, dtype=np.uint8) for g in simple_generators(rs)]
    ident = bytes(range(n))
    elements = [ident]
    index = {ident: 0}
    parent = [-1]
    via_gen = [-1]
    frontier = [0]
    while frontier:
        fr = np.frombuffer(
            b"".join(elements[i] for i in frontier), dtype=np.uint8
        ).reshape(len(frontier), n)
        nxt = []
        for gi, g in enumerate(gens):
            prods = g[fr]  # (g o w)(i) = g(w(i))
            for row_i, row in enumerate(prods):
                key = row.tobytes()
                if key not in index:
                    index[key] = len(elements)
                    elements.append(key)
                    parent.append(frontier[row_i])
                    via_gen.append(gi)
                    nxt.append(index[key])
        frontier = nxt
    if len(elements) != expected:
        raise AssertionError(
            f"enumerated {len(elements)} elements of W({rs.label}), "
            f"expected {expected}"
        )

    # conjugation orbits
    gen_perms = [tuple(g) for g in gens]
    gen_invs = [inverse(g) for g in gen_perms]
    class_of = np.full(len(elements), -1, dtype=np.int32)
    class_reps: list[int] = []
    class_sizes: list[int] = []
    for start in range(len(elements)):
        if class_of[start] != -1:
            continue
        cls = len(class_reps)
        class_reps.append(start)
        class_of[start] = cls
        stack = [start]
        size = 1
        while stack:
            i = stack.pop()
            w = elements[i]
            for g, ginv in zip(gen_perms, gen_invs):
                c = bytes(g[w[j]] for j in ginv)
                ci = index[c]
                if class_of[ci] == -1:
                    class_of[ci] = cls
                    size += 1
                    stack.append(ci)
        class_sizes.append(size)
    return EnumeratedGroup(
        rs=rs,
        elements=elements,
        index=index,
        parent=parent,
        via_gen=via_gen,
        class_of=class_of,
        class_reps=class_reps,
        class_sizes=class_sizes,
    )


def name_classes(group: EnumeratedGroup) -> list[str]:
    """Deterministic class names; reflection and rank-2 classes get their
    subsystem names, everything else gets order/size-based tags."""
    rs = group.rs
    names = [None] * group.num_classes
    ident = bytes(range(len(rs.all_roots)))
    names[int(group.class_of[group.index[ident]])] = "1"

    for a in rs.positive_roots:
        pa = root_permutation(rs, a)
        ca = group.class_index_of_perm(pa)
        label = A1 if rs.length_class(a) == LONG else "~A1"
        if names[ca] is None:
            names[ca] = label
    # A class can collect several rank-2 labels (in G2 the long-pair and
    # short-pair order-3 products are conjugate); pick by fixed preference.
    preference = ["A2", "~A2", "2A1", "A1+~A1", "B2", "G2"]
    pos = rs.positive_roots
    perms = {a: root_permutation(rs, a) for a in pos}
    for i, a in enumerate(pos):
        for b in pos[i + 1 :]:
            lbl = rank2_label(rs, a, b)
            c = group.class_index_of_perm(compose(perms[a], perms[b]))
            if names[c] is None or (
                names[c] in preference
                and preference.index(lbl) < preference.index(names[c])
            ):
                names[c] = lbl
    # remaining classes: order + size + deterministic counter
    counter: dict[tuple[int, int], int] = {}
    for c in range(group.num_classes):
        if names[c] is None:
            o = perm_order(group.class_rep_perm(c))
            key = (o, group.class_sizes[c])
            counter[key] = counter.get(key, 0) + 1
            suffix = f"_{counter[key]}" if counter[key] > 1 else ""
            names[c] = f"o{o}s{group.class_sizes[c]}{suffix}"
    seen = set()
    for c, nm in enumerate(names):
        while nm in seen:
            nm += "'"
        names[c] = nm
        seen.add(nm)
    return names


def word_from_action(rs: RootSystem, apply_fn) -> tuple[int, ...]:
    """Express a group element, given as an exact linear action on vectors,
    as a word in the simple reflections.

    Works by tracking a regular dominant vector back to the fundamental
    chamber; raises if the action does not belong to W.
    """
    v0 = tuple(
        sum(col) for col in zip(*(rs.fundamental_weight(i) for i in range(rs.rank)))
    )
    assert all(dot(v0, a) > 0 for a in rs.simple_roots)
    cur = apply_fn(v0)
    word = []
    while True:
        i = next(
            (k for k, a in enumerate(rs.simple_roots) if dot(cur, a) < 0), None
        )
        if i is None:
            break
        cur = reflect(cur, rs.simple_roots[i])
        word.append(i)
    if cur != v0:
        raise ValueError("action is not an element of the Weyl group")
    return tuple(word)


# ---------------------------------------------------------------------------
# stabilizers and the reduction hypotheses


def _descent_to_dominant(rs: RootSystem, v: Vector) -> tuple[Vector, list[Vector]]:
    """Apply simple reflections until v is dominant; returns (dominant,
    list of reflecting roots applied, first applied first)."""
    applied = []
    cur = v
    while True:
        neg = next(
            (a for a in rs.simple_roots if dot(cur, a) < 0),
            None,
        )
        if neg is None:
            return cur, applied
        cur = reflect(cur, neg)
        applied.append(neg)


def stabilizer_roots(rs: RootSystem, y: Vector) -> list[Vector]:
    """Roots beta with s_beta(y) = y; these reflections generate Z_W(y)."""
    dom, applied = _descent_to_dominant(rs, y)
    out = []
    for a in rs.simple_roots:
        if dot(dom, a) == 0:
            beta = a
            for r in reversed(applied):
                beta = reflect(beta, r)
            out.append(beta)
    return out


def vector_orbit(rs: RootSystem, v: Vector, roots: Iterable[Vector]) -> list[Vector]:
    """Orbit of v under the group generated by the given reflections."""
    roots = list(roots)
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for r in roots:
                img = reflect(u, r)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(seen)


def centralizer_orbit(rs: RootSystem, y: Vector, x: Vector) -> list[Vector]:
    """Orbit of x under the stabilizer Z_W(y)."""
    if all(e == 0 for e in y):
        return vector_orbit(rs, x, rs.simple_roots)
    return vector_orbit(rs, x, stabilizer_roots(rs, y))


@dataclass(frozen=True)
class ReductionReport:
    cond_a: bool
    cond_b: bool
    orbit_size_y: int
    orbit_sizes_x: tuple[int, int]


def reduction_hypotheses(rs: RootSystem, tv) -> ReductionReport:
    """Check the two orbit-span hypotheses for probe vectors (y, x1, x2).

    (a) the W-orbit of y spans the reflection representation (modulo the
        W-invariant directions);
    (b) the Z_W(y)-orbits of x1 and x2 together span it on the dual side.
    """
    fix = [list(b) for b in rs.invariant_complement()]
    full = rs.ambient_dim

    orbit_y = vector_orbit(rs, tv.y, rs.simple_roots)
    cond_a = rank_of_span([list(v) for v in orbit_y] + fix) == full

    o1 = centralizer_orbit(rs, tv.y, tv.x1)
    o2 = centralizer_orbit(rs, tv.y, tv.x2)
    cond_b = (
        rank_of_span([list(v) for v in o1 + o2] + fix) == full
    )
    return ReductionReport(
        cond_a=cond_a,
        cond_b=cond_b,
        orbit_size_y=len(orbit_y),
        orbit_sizes_x=(len(o1), len(o2)),
    )
