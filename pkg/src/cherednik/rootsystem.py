"""Root systems of types A, B, D, G2, F4, E6, E7, E8 in explicit coordinates.

Coordinates follow the classical conventions: type A is modeled inside the
full n-dimensional gl(n) space, B_n has positive roots e_i +/- e_j and e_i,
D_n has e_i +/- e_j, and the exceptional systems use the explicit simple
roots listed in ``_SIMPLE_ROOTS`` (F4 scaled so the short roots are
e_i +/- e_j and the long roots 2e_i, e_1 +/- e_2 +/- e_3 +/- e_4).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .ratlinalg import QMatrix, Vector, dot, mat_rank, vec, vsub, vscale

LONG = "long"
SHORT = "short"

# rank-2 subsystem labels for pairs of reflections
A1 = "A1"
TWO_A1 = "2A1"
A1_TILDE_A1 = "A1+~A1"
A2 = "A2"
TILDE_A2 = "~A2"
B2 = "B2"
G2SUB = "G2"

_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,  # rank n means A_n, ambient n+1
    "B": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G2": lambda n: 6,
    "F4": lambda n: 24,
    "E6": lambda n: 36,
    "E7": lambda n: 63,
    "E8": lambda n: 120,
}

_WEYL_ORDERS = {
    "G2": 12,
    "F4": 1152,
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
}


def _simple_roots(type_label: str, rank: int) -> list[Vector]:
    q = Fraction
    if type_label == "A":
        n = rank + 1
        return [
            vec([1 if k == i else (-1 if k == i + 1 else 0) for k in range(n)])
            for i in range(rank)
        ]
    if type_label == "B":
        out = [
            vec([1 if k == i else (-1 if k == i + 1 else 0) for k in range(rank)])
            for i in range(rank - 1)
        ]
        out.append(vec([0] * (rank - 1) + [1]))
        return out
    if type_label == "D":
        out = [
            vec([1 if k == i else (-1 if k == i + 1 else 0) for k in range(rank)])
            for i in range(rank - 1)
        ]
        out.append(vec([0] * (rank - 2) + [1, 1]))
        return out
    if type_label == "G2":
        return [vec([q(2, 3), q(-1, 3), q(-1, 3)]), vec([-1, 1, 0])]
    if type_label == "F4":
        return [
            vec([1, -1, -1, -1]),
            vec([0, 0, 0, 2]),
            vec([0, 0, 1, -1]),
            vec([0, 1, -1, 0]),
        ]
    if type_label in ("E6", "E7", "E8"):
        h = q(1, 2)
        alphas = [
            vec([h, -h, -h, -h, -h, -h, -h, h]),
            vec([1, 1, 0, 0, 0, 0, 0, 0]),
            vec([-1, 1, 0, 0, 0, 0, 0, 0]),
            vec([0, -1, 1, 0, 0, 0, 0, 0]),
            vec([0, 0, -1, 1, 0, 0, 0, 0]),
            vec([0, 0, 0, -1, 1, 0, 0, 0]),
            vec([0, 0, 0, 0, -1, 1, 0, 0]),
            vec([0, 0, 0, 0, 0, -1, 1, 0]),
        ]
        return alphas[: {"E6": 6, "E7": 7, "E8": 8}[type_label]]
    raise ValueError(f"unsupported type {type_label}")


def reflect(v: Vector, root: Vector) -> Vector:
    """Reflection of v in the hyperplane orthogonal to root."""
    return vsub(v, vscale(2 * dot(v, root) / dot(root, root), root))


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a small square exact linear system by Gaussian elimination."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [e * inv for e in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [e - f * g for e, g in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]

    @property
    def label(self) -> str:
        if self.type_label in ("A", "B", "D"):
            return f"{self.type_label}{self.rank}"
        return self.type_label

    @property
    def all_roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(
            vscale(-1, a) for a in self.positive_roots
        )

    @property
    def num_reflections(self) -> int:
        return len(self.positive_roots)

    def coroot(self, root: Vector) -> Vector:
        return vscale(Fraction(2) / dot(root, root), root)

    def length_class(self, root: Vector) -> str:
        norms = _root_norms_cache(self)
        if len(norms) == 1:
            return LONG
        return LONG if dot(root, root) == max(norms) else SHORT

    @property
    def two_lengths(self) -> bool:
        return len(_root_norms_cache(self)) == 2

    def is_root(self, v: Vector) -> bool:
        return v in self._root_index

    @property
    def _root_index(self) -> dict[Vector, int]:
        return _root_index_cache(self)

    def root_position(self, v: Vector) -> int:
        return self._root_index[v]

    def simple_coefficients(self, root: Vector) -> list[Fraction]:
        """Coordinates of a root in the simple-root basis (exact)."""
        gram = [
            [dot(a, b) for b in self.simple_roots] for a in self.simple_roots
        ]
        rhs = [dot(a, root) for a in self.simple_roots]
        return _solve(gram, rhs)

    def weyl_order(self) -> int:
        if self.type_label == "A":
            from math import factorial

            return factorial(self.rank + 1)
        if self.type_label == "B":
            from math import factorial

            return 2**self.rank * factorial(self.rank)
        if self.type_label == "D":
            from math import factorial

            return 2 ** (self.rank - 1) * factorial(self.rank)
        return _WEYL_ORDERS[self.type_label]

    def fundamental_weight(self, i: int) -> Vector:
        """omega_i with <omega_i, alpha_j^vee> = delta_ij, inside the root span."""
        m = [
            [dot(a, self.coroot(b)) for b in self.simple_roots]
            for a in self.simple_roots
        ]
        # weight = sum_k c_k alpha_k with sum_k c_k <alpha_k, alpha_j^vee> = delta_ij
        mt = [[m[k][j] for k in range(self.rank)] for j in range(self.rank)]
        rhs = [Fraction(1 if j == i else 0) for j in range(self.rank)]
        c = _solve(mt, rhs)
        out = vec([0] * self.ambient_dim)
        for ck, a in zip(c, self.simple_roots):
            out = tuple(o + ck * x for o, x in zip(out, a))
        return out

    def fundamental_coweight(self, i: int) -> Vector:
        """omega_i^vee with <alpha_j, omega_i^vee> = delta_ij, in the coroot span."""
        m = [
            [dot(a, self.coroot(b)) for b in self.simple_roots]
            for a in self.simple_roots
        ]
        rhs = [Fraction(1 if j == i else 0) for j in range(self.rank)]
        c = _solve(m, rhs)
        out = vec([0] * self.ambient_dim)
        for ck, b in zip(c, self.simple_roots):
            cb = self.coroot(b)
            out = tuple(o + ck * x for o, x in zip(out, cb))
        return out

    def invariant_complement(self) -> list[Vector]:
        """Basis of the subspace fixed by W (orthogonal complement of root span)."""
        span = [list(r) for r in self.simple_roots]
        basis: list[Vector] = []
        from .ratlinalg import rank_of_span

        current = rank_of_span(span)
        for k in range(self.ambient_dim):
            cand = vec([1 if j == k else 0 for j in range(self.ambient_dim)])
            if rank_of_span(span + [list(cand)] + [list(b) for b in basis]) > current + len(basis):
                basis.append(cand)
        return basis


@lru_cache(maxsize=None)
def _root_index_cache_impl(type_label: str, rank: int):
    rs = build_root_system(type_label, rank)
    return {r: i for i, r in enumerate(rs.all_roots)}


def _root_index_cache(rs: RootSystem) -> dict[Vector, int]:
    return _root_index_cache_impl(rs.type_label, rs.rank)


@lru_cache(maxsize=None)
def _root_norms_cache_impl(type_label: str, rank: int) -> frozenset:
    rs = build_root_system(type_label, rank)
    return frozenset(dot(a, a) for a in rs.positive_roots)


def _root_norms_cache(rs: RootSystem) -> frozenset:
    return _root_norms_cache_impl(rs.type_label, rs.rank)


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int = 0) -> RootSystem:
    """Construct the root system by reflection closure of the simple roots."""
    if type_label in ("G2", "F4", "E6", "E7", "E8"):
        rank = int(type_label[1])
    if type_label == "A" and rank < 1:
        raise ValueError("type A needs rank >= 1")
    if type_label == "B" and rank < 2:
        raise ValueError("type B needs rank >= 2")
    if type_label == "D" and rank < 2:
        raise ValueError("type D needs rank >= 2")
    if type_label not in _POSITIVE_ROOT_COUNTS:
        raise ValueError(f"unsupported type {type_label}")

    simples = _simple_roots(type_label, rank)
    ambient = len(simples[0])
    roots = set(simples) | {vscale(-1, a) for a in simples}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for s in simples:
                img = reflect(r, s)
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt

    gram = [[dot(a, b) for b in simples] for a in simples]
    positives = []
    for r in sorted(roots):
        rhs = [dot(a, r) for a in simples]
        coeffs = _solve(gram, rhs)
        if all(c >= 0 for c in coeffs):
            positives.append(r)
    rs = RootSystem(
        type_label=type_label,
        rank=rank,
        ambient_dim=ambient,
        simple_roots=tuple(simples),
        positive_roots=tuple(sorted(positives)),
    )
    expected = _POSITIVE_ROOT_COUNTS[type_label](rank)
    if len(rs.positive_roots) != expected:
        raise AssertionError(
            f"{rs.label}: got {len(rs.positive_roots)} positive roots, "
            f"expected {expected}"
        )
    for a in rs.positive_roots:
        if dot(a, rs.coroot(a)) != 2:
            raise AssertionError("coroot normalization broken")
    return rs


def reflection_matrix(rs: RootSystem, root: Vector) -> QMatrix:
    """Matrix of the reflection s_root on the ambient space."""
    if not rs.is_root(root):
        raise ValueError(f"{root} is not a root of {rs.label}")
    n = rs.ambient_dim
    cols = []
    for j in range(n):
        e = vec([1 if k == j else 0 for k in range(n)])
        cols.append(reflect(e, root))
    return QMatrix(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def product_order(rs: RootSystem, alpha: Vector, beta: Vector) -> int:
    """Order of s_alpha s_beta, from the angle between the roots."""
    # cos^2(theta) = <a,b>^2 / (<a,a><b,b>) in {0, 1/4, 1/2, 3/4, 1}
    c2 = dot(alpha, beta) ** 2 / (dot(alpha, alpha) * dot(beta, beta))
    table = {
        Fraction(0): 2,
        Fraction(1, 4): 3,
        Fraction(1, 2): 4,
        Fraction(3, 4): 6,
        Fraction(1): 1,
    }
    if c2 not in table:
        raise ValueError("roots with non-crystallographic angle")
    return table[c2]


def rank2_label(rs: RootSystem, alpha: Vector, beta: Vector) -> str:
    """Type of the rank-2 subsystem generated by two positive roots."""
    if alpha == beta:
        return A1
    c2 = dot(alpha, beta) ** 2 / (dot(alpha, alpha) * dot(beta, beta))
    if c2 == 1:
        raise ValueError("proportional roots do not span a rank-2 subsystem")
    m = product_order(rs, alpha, beta)
    la, lb = rs.length_class(alpha), rs.length_class(beta)
    if m == 2:
        return TWO_A1 if la == lb else A1_TILDE_A1
    if m == 3:
        return A2 if la == LONG else TILDE_A2
    if m == 4:
        return B2
    if m == 6:
        return G2SUB
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class TestVectors:
    """The probe vectors (y, x1, x2) used by the reduction criterion."""

    y: Vector
    x1: Vector
    x2: Vector


def test_vectors(type_label: str, rank: int = 0) -> TestVectors:
    rs = build_root_system(type_label, rank)
    q = Fraction
    if type_label in ("A", "B", "D"):
        n = rs.ambient_dim
        e1 = vec([1] + [0] * (n - 1))
        e2 = vec([0, 1] + [0] * (n - 2))
        return TestVectors(y=e1, x1=e1, x2=e2)
    if type_label == "G2":
        return TestVectors(
            y=vec([1, 1, -2]),
            x1=vec([q(1, 3), q(1, 3), q(-2, 3)]),
            x2=vec([0, 1, -1]),
        )
    if type_label == "F4":
        return TestVectors(
            y=vec([1, 0, 0, 0]), x1=vec([1, 0, 0, 0]), x2=vec([1, 1, 1, 1])
        )
    index = {"E6": 1, "E7": 0, "E8": 7}[type_label]  # 0-based simple index
    w = rs.fundamental_weight(index)
    wv = rs.fundamental_coweight(index)
    x2 = reflect(w, rs.simple_roots[index])
    return TestVectors(y=wv, x1=w, x2=x2)
