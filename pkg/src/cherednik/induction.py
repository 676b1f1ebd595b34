"""Maximal-rank reflection subgroups, class fusion, and induced characters.

The groups too large to enumerate (W(E8)) get their class data and character
table through their maximal-rank reflection subgroups: the subsystems found
by deleting a node from the affine diagram (Borel-de Siebenthal), whose
class data is known combinatorially or from smaller tables.  This module
provides the generic pieces:

- locating those subsystems and matching their simple roots to the standard
  Cartan matrices, so subgroup words make sense in the ambient group;
- coset models: the W-orbit of a subsystem's root-index set, giving the
  permutation character of W on the cosets of the subsystem's normalizer;
- conjugacy-class fingerprints for permutations of the root list, strong
  enough to separate classes without enumerating the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .ratlinalg import QMatrix, Vector, char_poly, dot
from .rootsystem import RootSystem, build_root_system
from .weylgroup import (
    Perm,
    compose,
    matrix_of,
    perm_order,
    root_permutation,
    simple_generators,
)


def highest_root(rs: RootSystem) -> Vector:
    """The root with maximal coefficient sum over the simple roots."""
    return max(
        rs.positive_roots, key=lambda r: sum(rs.simple_coefficients(r))
    )


def closed_subsystem(rs: RootSystem, gens: list[Vector]) -> list[Vector]:
    """All roots in the Z-span of the given independent roots."""
    m = QMatrix.from_rows([list(g) for g in gens]).transpose()
    out = []
    for r in rs.all_roots:
        coeffs = _solve_rational(m, list(r))
        if coeffs is not None and all(c.denominator == 1 for c in coeffs):
            out.append(r)
    return out


def _solve_rational(m: QMatrix, rhs: list) -> list[Fraction] | None:
    """Solve m x = rhs exactly; None if inconsistent."""
    rows = [list(row) + [Fraction(e)] for row, e in zip(m.entries, rhs)]
    nr, nc = len(rows), m.cols
    piv_cols = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [e - f * g for e, g in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == nr:
            break
    for i in range(r, nr):
        if rows[i][nc]:
            return None
    x = [Fraction(0)] * nc
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][nc]
    return x


def _cartan_entry(a: Vector, b: Vector) -> int:
    v = 2 * dot(a, b) / dot(b, b)
    assert v.denominator == 1
    return int(v)


def _coxeter_entry(a: Vector, b: Vector) -> int:
    """Order of s_a s_b from the Cartan integers (only crystallographic
    angles occur)."""
    n = _cartan_entry(a, b) * _cartan_entry(b, a)
    return {0: 2, 1: 3, 2: 4, 3: 6, 4: 1}[n]


def _match_cartan(roots: list[Vector], target: RootSystem) -> list[Vector]:
    """Order the given simple roots so their Coxeter matrix equals the
    target's (which fixes the Coxeter-group isomorphism generator by
    generator); raises if no assignment exists."""
    n = len(roots)
    tgt = [
        [_coxeter_entry(a, b) for b in target.simple_roots]
        for a in target.simple_roots
    ]
    cur = [[_coxeter_entry(a, b) for b in roots] for a in roots]
    assign: list[int] = []

    def ok(j: int) -> bool:
        k = len(assign)
        return all(
            cur[j][assign[i]] == tgt[k][i] and cur[assign[i]][j] == tgt[i][k]
            for i in range(k)
        ) and cur[j][j] == tgt[k][k]

    def search() -> bool:
        if len(assign) == n:
            return True
        for j in range(n):
            if j not in assign and ok(j):
                assign.append(j)
                if search():
                    return True
                assign.pop()
        return False

    if not search():
        raise ValueError("simple roots do not match the target Cartan matrix")
    return [roots[j] for j in assign]


@dataclass
class EmbeddedFactor:
    """An irreducible factor of a reflection subsystem, with its simple
    roots as ambient vectors ordered to match the standard Cartan matrix."""

    type_label: str
    rank: int
    simples: list[Vector]

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    def word_perm(self, rs: RootSystem, word: tuple[int, ...]) -> Perm:
        """Ambient root permutation of a word in this factor's simples."""
        p = tuple(range(len(rs.all_roots)))
        for i in word:
            p = compose(p, root_permutation(rs, self.simples[i]))
        return p


def _split_components(roots: list[Vector]) -> list[list[Vector]]:
    comps: list[list[Vector]] = []
    left = list(roots)
    while left:
        comp = [left.pop()]
        changed = True
        while changed:
            changed = False
            for r in list(left):
                if any(dot(r, c) != 0 for c in comp):
                    comp.append(r)
                    left.remove(r)
                    changed = True
        comps.append(comp)
    return comps


def _classify_component(comp: list[Vector], nroots: int) -> list[tuple[str, int]]:
    """Candidate (type, rank) pairs of an irreducible component from rank
    and root count; ties (A3/D3, B6/E6, ...) resolved by the caller against
    the Coxeter matrix."""
    rank = len(comp)
    counts = {
        ("A", rank): rank * (rank + 1),
        ("B", rank): 2 * rank * rank,
        ("D", rank): 2 * rank * (rank - 1),
        ("G", 2): 12,
        ("F", 4): 48,
        ("E", 6): 72,
        ("E", 7): 126,
        ("E", 8): 240,
    }
    out = [
        (t, r) for (t, r), c in counts.items() if r == rank and c == nroots
    ]
    if not out:
        raise ValueError(
            f"unrecognized component: rank {rank}, {nroots} roots"
        )
    return out


@dataclass
class Subsystem:
    """A full-rank closed subsystem with its factors and root-index set."""

    factors: list[EmbeddedFactor]
    root_indices: frozenset[int]

    @property
    def label(self) -> str:
        return "+".join(sorted(f.label for f in self.factors))


def affine_deletion_subsystems(rs: RootSystem) -> list[Subsystem]:
    """The proper full-rank subsystems from deleting one node of the affine
    diagram, deduplicated by root-index set."""
    nodes = list(rs.simple_roots) + [
        tuple(-e for e in highest_root(rs))
    ]
    seen: set[frozenset[int]] = set()
    out = []
    for drop in range(len(nodes) - 1):  # dropping the affine node is W itself
        gens = [r for i, r in enumerate(nodes) if i != drop]
        roots = closed_subsystem(rs, gens)
        idx = frozenset(rs.root_position(r) for r in roots)
        if idx in seen or len(idx) == len(rs.all_roots):
            continue
        seen.add(idx)
        factors = []
        pos_gens = _split_components(gens)
        for comp in pos_gens:
            comp_roots = [
                r
                for r in roots
                if _solve_and_int(comp, r)
            ]
            factor = None
            for t, r in _classify_component(comp, len(comp_roots)):
                target = (
                    build_root_system(t, r)
                    if t in "ABD"
                    else build_root_system(f"{t}{r}")
                )
                try:
                    factor = EmbeddedFactor(t, r, _match_cartan(comp, target))
                    break
                except ValueError:
                    continue
            if factor is None:
                raise ValueError("component matches no candidate type")
            factors.append(factor)
        out.append(Subsystem(factors=factors, root_indices=idx))
    return out


def _solve_and_int(gens: list[Vector], r: Vector) -> bool:
    m = QMatrix.from_rows([list(g) for g in gens]).transpose()
    coeffs = _solve_rational(m, list(r))
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


# ---------------------------------------------------------------------------
# coset models: the W-orbit of a subsystem's root-index set


@dataclass
class CosetModel:
    """W-orbit of a root-index set, as a sorted index matrix for fast
    fixed-point counting.  Fixed points of w on the orbit realize the
    permutation character of W on the cosets of the set's stabilizer."""

    label: str
    sets: np.ndarray  # (num_sets, set_size) int32, each row sorted

    @property
    def size(self) -> int:
        return self.sets.shape[0]

    def fixed_count(self, p: np.ndarray) -> int:
        moved = np.sort(p[self.sets], axis=1)
        return int(np.all(moved == self.sets, axis=1).sum())

    def action(self, p: np.ndarray) -> np.ndarray:
        """Permutation induced on the orbit by p (index array)."""
        moved = np.sort(p[self.sets], axis=1)
        order = np.lexsort(self.sets.T[::-1])
        srt = self.sets[order]
        pos = _rows_index(srt, moved)
        return order[pos]


def _rows_index(sorted_rows: np.ndarray, query: np.ndarray) -> np.ndarray:
    """Positions of query rows inside lexicographically sorted rows."""
    n = sorted_rows.shape[1]
    weights = (sorted_rows.max() + 1) ** np.arange(n - 1, -1, -1)
    # collapse rows to scalar keys; fits in int64 only for small models, so
    # use object dtype via python ints when needed
    maxkey = (int(sorted_rows.max()) + 1) ** n
    if maxkey < 2**62:
        keys = sorted_rows.astype(np.int64) @ weights.astype(np.int64)
        qk = query.astype(np.int64) @ weights.astype(np.int64)
        pos = np.searchsorted(keys, qk)
        if not np.all(keys[pos] == qk):
            raise KeyError("query row not in model")
        return pos
    index = {tuple(row): i for i, row in enumerate(sorted_rows.tolist())}
    return np.array([index[tuple(r)] for r in query.tolist()], dtype=np.int64)


def orbit_model(rs: RootSystem, root_indices: frozenset[int], label: str) -> CosetModel:
    """BFS orbit of a root-index set under the simple reflections."""
    gens = [np.array(g, dtype=np.int32) for g in simple_generators(rs)]
    start = tuple(sorted(root_indices))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            arr = np.array(s, dtype=np.int32)
            for g in gens:
                img = tuple(np.sort(g[arr]).tolist())
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    sets = np.array(sorted(seen), dtype=np.int32)
    return CosetModel(label=label, sets=sets)


# ---------------------------------------------------------------------------
# class fingerprints


def _negation_array(rs: RootSystem) -> np.ndarray:
    return np.array(
        [rs.root_position(tuple(-e for e in r)) for r in rs.all_roots],
        dtype=np.int32,
    )


def cycle_multiset(p: np.ndarray) -> tuple[tuple[int, int], ...]:
    """Sorted (length, count) pairs of the cycle type of p."""
    n = p.shape[0]
    seen = np.zeros(n, dtype=bool)
    counts: dict[int, int] = {}
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = int(p[j])
            ln += 1
        counts[ln] = counts.get(ln, 0) + 1
    return tuple(sorted(counts.items()))


def cheap_invariant(rs: RootSystem, p: np.ndarray, neg: np.ndarray):
    """Fast conjugation invariant: cycle type on roots plus per-power
    fixed/negated root counts."""
    cyc = cycle_multiset(p)
    order = 1
    for ln, _ in cyc:
        order = order * ln // gcd(order, ln)
    data = []
    q = p
    for _ in range(order):
        data.append((int((q == np.arange(len(q))).sum()), int((q == neg).sum())))
        q = p[q]
    return (cyc, tuple(data))


def medium_invariant(
    rs: RootSystem, p: np.ndarray, neg: np.ndarray, models: list[CosetModel]
):
    """Cheap invariant extended with per-power coset fixed counts; fast
    enough for bulk sampling, strong enough to separate classes that share
    the cheap invariant."""
    cheap = cheap_invariant(rs, p, neg)
    order = 1
    for ln, _ in cheap[0]:
        order = order * ln // gcd(order, ln)
    fixes = []
    q = p
    for _ in range(order):
        fixes.append(tuple(m.fixed_count(q) for m in models))
        q = p[q]
    return (cheap, tuple(fixes))


def full_invariant(
    rs: RootSystem, p: np.ndarray, neg: np.ndarray, models: list[CosetModel]
):
    """Conjugation invariant extending the cheap one with the reflection
    character polynomial and per-power coset fixed counts."""
    cheap = cheap_invariant(rs, p, neg)
    poly = tuple(char_poly(matrix_of(rs, tuple(int(e) for e in p))))
    fixes = []
    q = p
    order = perm_order(tuple(int(e) for e in p))
    for _ in range(order):
        fixes.append(tuple(m.fixed_count(q) for m in models))
        q = p[q]
    return (cheap, poly, tuple(fixes))
