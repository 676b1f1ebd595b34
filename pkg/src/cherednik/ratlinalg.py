"""Exact scalar, matrix and two-parameter quadratic arithmetic.

Scalars are ``fractions.Fraction`` throughout (always reduced, positive
denominator).  Matrices are small and dense; rank uses fraction-free
Bareiss elimination on a cleared-denominator integer matrix so no rational
blow-up occurs mid-elimination.

``ParamQuad`` models homogeneous quadratics a*cl^2 + b*cl*cs + d*cs^2 in the
long/short reflection parameters, and ``quad_solve`` returns the exact
common vanishing locus on the projective (cl : cs) line.  Irrational ratios
are quadratic numbers e + f*sqrt(D) with D squarefree (possibly negative).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

Rat = Fraction
Vector = tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


@dataclass(frozen=True)
class QMatrix:
    """Immutable exact rational matrix."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "QMatrix":
        return QMatrix(tuple(tuple(Fraction(e) for e in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(n))
                for i in range(n)
            )
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def __mul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return QMatrix(
            tuple(tuple(dot(r, c) for c in cols) for r in self.entries)
        )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return tuple(dot(r, v) for r in self.entries)

    def transpose(self) -> "QMatrix":
        return QMatrix(tuple(zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)

    def scale(self, c) -> "QMatrix":
        c = Fraction(c)
        return QMatrix(tuple(tuple(c * e for e in row) for row in self.entries))

    def add(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            )
        )

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))


def _integerize(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        denom = 1
        for e in row:
            denom = denom * e.denominator // gcd(denom, e.denominator)
        out.append([int(e * denom) for e in row])
    return out


def mat_rank(m: QMatrix) -> int:
    """Exact rank over Q, by fraction-free (Bareiss) elimination."""
    a = _integerize(m.entries)
    nrows, ncols = len(a), len(a[0]) if a else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def rank_of_span(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    return mat_rank(QMatrix.from_rows(vectors))


def char_poly(m: QMatrix) -> tuple[Fraction, ...]:
    """Coefficients of det(t*I - m), ascending in t, via Faddeev-LeVerrier."""
    n = m.rows
    if n != m.cols:
        raise ValueError("char_poly requires a square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = m
    ident = QMatrix.identity(n)
    for k in range(1, n + 1):
        ck = -mk.trace() / k
        coeffs[n - k] = ck
        if k < n:
            mk = m * mk.add(ident.scale(ck))
    return tuple(coeffs)


def det(m: QMatrix) -> Fraction:
    cp = char_poly(m)
    d = cp[0]
    return d if m.rows % 2 == 0 else -d


# ---------------------------------------------------------------------------
# quadratic numbers and parameter constraints


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n = s^2 * D with D squarefree; return (s, D).  n may be negative."""
    if n == 0:
        return 0, 1
    sign = 1 if n > 0 else -1
    n = abs(n)
    s, d = 1, 1
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            d *= f
        f += 1
    d *= n
    return s, sign * d


@dataclass(frozen=True, order=False)
class QuadNum:
    """Exact quadratic number e + f*sqrt(D), D squarefree, f=0 forces D=1."""

    e: Fraction
    f: Fraction
    D: int

    @staticmethod
    def make(e, f=0, D=1) -> "QuadNum":
        e, f = Fraction(e), Fraction(f)
        if f == 0:
            return QuadNum(e, Fraction(0), 1)
        s, d = squarefree_split(D)
        f = f * s
        if d == 1:
            return QuadNum(e + f, Fraction(0), 1)
        return QuadNum(e, f, d)

    @property
    def is_rational(self) -> bool:
        return self.f == 0

    def sort_key(self):
        return (self.D, self.e, self.f)

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.e)
        rad = f"sqrt({self.D})" if self.D > 0 else f"sqrt(-{-self.D})"
        parts = []
        if self.e:
            parts.append(str(self.e))
        coef = "" if self.f == 1 else ("-" if self.f == -1 else f"{self.f}*")
        parts.append(f"{coef}{rad}")
        return "+".join(parts).replace("+-", "-")


#: projective point cl = 0 on the (cl : cs) line, i.e. ratio cs/cl = infinity
INFINITE_RATIO = "inf"


@dataclass(frozen=True)
class ParamQuad:
    """Homogeneous quadratic a*cl^2 + b*cl*cs + d*cs^2, canonically scaled."""

    a: int
    b: int
    d: int

    @staticmethod
    def make(a: int, b: int, d: int) -> "ParamQuad":
        g = gcd(gcd(abs(a), abs(b)), abs(d))
        if g:
            a, b, d = a // g, b // g, d // g
            lead = a if a else (b if b else d)
            if lead < 0:
                a, b, d = -a, -b, -d
        return ParamQuad(a, b, d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.d == 0

    def evaluate(self, cl: Fraction, cs: Fraction) -> Fraction:
        return self.a * cl * cl + self.b * cl * cs + self.d * cs * cs

    def __str__(self) -> str:
        return f"{self.a}*cl^2 + {self.b}*cl*cs + {self.d}*cs^2"


ALL = "ALL"
NONE = "NONE"
RATIO_SET = "RATIO_SET"
CL_ZERO = "CL_ZERO"
CS_ZERO = "CS_ZERO"


@dataclass(frozen=True)
class ConstraintSet:
    """Common vanishing locus of parameter quadratics on the projective line.

    ``ratios`` holds finite ratios cs/cl as QuadNum plus possibly the marker
    INFINITE_RATIO for the point cl = 0.  Pure one-point loci at cl=0 or cs=0
    get the dedicated kinds CL_ZERO / CS_ZERO.
    """

    kind: str
    ratios: tuple = ()

    @staticmethod
    def from_points(points: frozenset) -> "ConstraintSet":
        if not points:
            return ConstraintSet(NONE)
        if points == {INFINITE_RATIO}:
            return ConstraintSet(CL_ZERO)
        if points == {QuadNum.make(0)}:
            return ConstraintSet(CS_ZERO)
        finite = sorted(
            (p for p in points if p is not INFINITE_RATIO),
            key=QuadNum.sort_key,
        )
        ordered = tuple(finite) + (
            (INFINITE_RATIO,) if INFINITE_RATIO in points else ()
        )
        return ConstraintSet(RATIO_SET, ordered)

    def is_empty(self) -> bool:
        return self.kind == NONE

    def contains_ratio(self, ratio) -> bool:
        """Membership of a single parameter point; ratio may be INFINITE_RATIO."""
        if self.kind == ALL:
            return True
        if self.kind == NONE:
            return False
        if self.kind == CL_ZERO:
            return ratio is INFINITE_RATIO or ratio == INFINITE_RATIO
        if not isinstance(ratio, QuadNum) and ratio != INFINITE_RATIO:
            ratio = QuadNum.make(Fraction(ratio))
        if self.kind == CS_ZERO:
            return ratio == QuadNum.make(0)
        return ratio in self.ratios

    def __str__(self) -> str:
        if self.kind == RATIO_SET:
            return "cs/cl in {%s}" % ", ".join(str(r) for r in self.ratios)
        return {
            ALL: "all parameters",
            NONE: "no parameters",
            CL_ZERO: "cl = 0",
            CS_ZERO: "cs = 0",
        }[self.kind]


def _quad_roots(q: ParamQuad) -> frozenset:
    """Projective zero set of a single nonzero quadratic."""
    pts = set()
    a, b, d = q.a, q.b, q.d
    if d == 0:
        pts.add(INFINITE_RATIO)  # q(0,1) = d
        # remaining factor is cl*(a*cl + b*cs)
        if b != 0:
            pts.add(QuadNum.make(Fraction(-a, b)))
        elif a == 0:
            raise AssertionError("zero quadratic")
        return frozenset(pts)
    disc = b * b - 4 * a * d
    s, D = squarefree_split(disc)
    if D == 1:
        pts.add(QuadNum.make(Fraction(-b + s, 2 * d)))
        pts.add(QuadNum.make(Fraction(-b - s, 2 * d)))
    else:
        pts.add(QuadNum.make(Fraction(-b, 2 * d), Fraction(s, 2 * d), D))
        pts.add(QuadNum.make(Fraction(-b, 2 * d), Fraction(-s, 2 * d), D))
    return frozenset(pts)


def quad_solve(q1: ParamQuad, q2: ParamQuad) -> ConstraintSet:
    """Exact common solution set of q1 = q2 = 0 on the (cl : cs) line."""
    z1, z2 = q1.is_zero(), q2.is_zero()
    if z1 and z2:
        return ConstraintSet(ALL)
    if z1:
        return ConstraintSet.from_points(_quad_roots(q2))
    if z2:
        return ConstraintSet.from_points(_quad_roots(q1))
    return ConstraintSet.from_points(_quad_roots(q1) & _quad_roots(q2))
