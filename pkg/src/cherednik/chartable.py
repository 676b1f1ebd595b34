"""Exact character tables and the class-function toolbox built on them.

A table stores integer character values indexed by named conjugacy classes,
each class carrying its size and a representative word in the simple
reflections.  Everything derived here (tensor decompositions, wedge
characters, fake degrees, the N-invariant) is computed exactly from those
words and the root system.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .bnchars import (
    bn_character,
    bn_class_size,
    bn_classes,
    bn_irrep_labels,
    signed_class_action,
    sn_class_action,
    sn_class_size,
    sn_classes,
)
from .partitions import Partition, partitions_of
from .ratlinalg import QMatrix, mat_rank
from .rootsystem import LONG, RootSystem, build_root_system, reflection_matrix
from .snchars import sn_character
from .weylgroup import word_from_action

#: degrees of the basic invariants, checked against order and reflection count
_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "G2": lambda n: [2, 6],
    "F4": lambda n: [2, 6, 8, 12],
    "E6": lambda n: [2, 5, 6, 8, 9, 12],
    "E7": lambda n: [2, 6, 8, 10, 12, 14, 18],
    "E8": lambda n: [2, 8, 12, 14, 18, 20, 24, 30],
}


def invariant_degrees(rs: RootSystem) -> list[int]:
    degs = _DEGREES[rs.type_label](rs.rank)
    assert prod(degs) == rs.weyl_order()
    assert sum(d - 1 for d in degs) == rs.num_reflections
    return degs


@dataclass
class CharacterTable:
    """Square exact character table; class 0 is the identity class."""

    group_label: str
    rs: RootSystem
    class_names: list[str]
    class_sizes: list[int]
    class_words: list[tuple[int, ...]]
    irrep_labels: list[str]
    values: list[list[int]]  # one row per irrep, one column per class

    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    @property
    def num_classes(self) -> int:
        return len(self.class_names)

    def class_index(self, name: str) -> int:
        return self.class_names.index(name)

    def irrep_index(self, label: str) -> int:
        try:
            return self.irrep_labels.index(label)
        except ValueError:
            raise KeyError(f"unknown irrep {label!r} in {self.group_label}")

    def row(self, label: str) -> tuple[int, ...]:
        return tuple(self.values[self.irrep_index(label)])

    def dim(self, label: str) -> int:
        return self.values[self.irrep_index(label)][0]

    def value(self, label: str, class_name: str) -> int:
        return self.values[self.irrep_index(label)][self.class_index(class_name)]

    # -- class matrices and derived class functions ------------------------

    def class_matrix(self, c: int) -> QMatrix:
        key = ("mat", c)
        if key not in self._cache:
            m = QMatrix.identity(self.rs.ambient_dim)
            for i in self.class_words[c]:
                m = m * reflection_matrix(self.rs, self.rs.simple_roots[i])
            self._cache[key] = m
        return self._cache[key]

    def reflection_char_poly(self, c: int) -> tuple[Fraction, ...]:
        """det(t*I - w|_h) on the reflection representation, ascending."""
        key = ("rcp", c)
        if key not in self._cache:
            from .ratlinalg import char_poly

            p = list(char_poly(self.class_matrix(c)))
            for _ in range(self.rs.ambient_dim - self.rs.rank):
                # exact synthetic division by (t - 1)
                q = [Fraction(0)] * (len(p) - 1)
                carry = Fraction(0)
                for j in range(len(p) - 1, 0, -1):
                    carry += p[j]
                    q[j - 1] = carry
                assert p[0] + carry == 0, "matrix does not fix the complement"
                p = q
            self._cache[key] = tuple(p)
        return self._cache[key]

    def sign_values(self) -> tuple[int, ...]:
        return tuple((-1) ** len(w) for w in self.class_words)

    def reflection_values(self) -> tuple[Fraction, ...]:
        r = self.rs.rank
        return tuple(-self.reflection_char_poly(c)[r - 1] for c in range(self.num_classes))

    def wedge_values(self, ell: int) -> tuple[Fraction, ...]:
        """Character of the ell-th exterior power of the reflection rep."""
        r = self.rs.rank
        if not 0 <= ell <= r:
            raise ValueError("wedge degree out of range")
        out = []
        for c in range(self.num_classes):
            p = self.reflection_char_poly(c)
            out.append((-1) ** ell * p[r - ell])
        return tuple(out)

    def full_wedge_values(self) -> tuple[Fraction, ...]:
        """Character of the whole exterior algebra (sum of all wedges)."""
        out = [Fraction(0)] * self.num_classes
        for ell in range(self.rs.rank + 1):
            for c, v in enumerate(self.wedge_values(ell)):
                out[c] += v
        return tuple(out)

    # -- inner products and decompositions ---------------------------------

    def inner(self, f, g) -> Fraction:
        tot = sum(
            (Fraction(s) * fv * gv for s, fv, gv in zip(self.class_sizes, f, g)),
            Fraction(0),
        )
        return tot / self.order

    def decompose(self, f) -> dict[str, int]:
        """Multiplicities of a genuine character; rejects non-characters."""
        out = {}
        for label, row in zip(self.irrep_labels, self.values):
            m = self.inner(f, row)
            if m.denominator != 1 or m < 0:
                raise ValueError(
                    f"not a character: multiplicity of {label} is {m}"
                )
            if m:
                out[label] = int(m)
        return out

    def tensor(self, f, g) -> tuple:
        return tuple(a * b for a, b in zip(f, g))

    def tensor_sgn_label(self, label: str) -> str:
        """Label of sigma tensor sgn."""
        twisted = self.tensor(self.row(label), self.sign_values())
        for lb, row in zip(self.irrep_labels, self.values):
            if tuple(row) == twisted:
                return lb
        raise AssertionError("sgn twist of an irrep must be an irrep")

    # -- fake degrees -------------------------------------------------------

    def _inverse_det_series(self, c: int, upto: int) -> list[Fraction]:
        key = ("inv", c, upto)
        if key not in self._cache:
            r = self.rs.rank
            p = self.reflection_char_poly(c)
            # det(1 - t w) has ascending coefficients a_{r-m}
            d = [p[r - m] if 0 <= r - m <= r else Fraction(0) for m in range(upto + 1)]
            inv = [Fraction(1)] + [Fraction(0)] * upto
            for m in range(1, upto + 1):
                inv[m] = -sum(
                    (d[j] * inv[m - j] for j in range(1, min(m, r) + 1)),
                    Fraction(0),
                )
            self._cache[key] = inv
        return self._cache[key]

    def fake_degree(self, label: str) -> list[int]:
        """Coefficients (ascending) of the fake degree polynomial R_sigma."""
        n = self.rs.num_reflections
        row = self.row(label)
        s = [Fraction(0)] * (n + 1)
        for c in range(self.num_classes):
            inv = self._inverse_det_series(c, n)
            w = self.class_sizes[c] * row[c]
            if w:
                for m in range(n + 1):
                    s[m] += w * inv[m]
        # multiply by prod(1 - t^{d_i}), truncated at degree n
        poly = [Fraction(0)] * (n + 1)
        poly[0] = Fraction(1)
        for d in invariant_degrees(self.rs):
            for m in range(n, d - 1, -1):
                poly[m] -= poly[m - d]
        out = [Fraction(0)] * (n + 1)
        for m in range(n + 1):
            out[m] = sum(
                (poly[j] * s[m - j] for j in range(m + 1)), Fraction(0)
            ) / self.order
        res = []
        for e in out:
            if e.denominator != 1 or e < 0:
                raise ValueError(f"fake degree of {label} is not polynomial: {out}")
            res.append(int(e))
        return res

    def b_invariant(self, label: str) -> int:
        fd = self.fake_degree(label)
        return next(m for m, e in enumerate(fd) if e)

    # -- reflection classes and the N-invariant ----------------------------

    def reflection_classes(self) -> list[tuple[int, str]]:
        """Indices of classes of reflections with their length class."""
        key = "reflcls"
        if key not in self._cache:
            out = []
            n = self.rs.ambient_dim
            ident = QMatrix.identity(n)
            for c in range(self.num_classes):
                m = self.class_matrix(c)
                diff = m.add(ident.scale(-1))
                if not diff.is_zero() and mat_rank(diff) == 1:
                    root = next(
                        col
                        for col in zip(*diff.entries)
                        if any(e != 0 for e in col)
                    )
                    scaled = _match_root(self.rs, root)
                    out.append((c, self.rs.length_class(scaled)))
            self._cache[key] = out
        return self._cache[key]

    def n_invariant_form(self, label: str) -> tuple[Fraction, Fraction]:
        """(coefficient of c_long, coefficient of c_short) in N_c(sigma)."""
        row = self.row(label)
        dim = row[0]
        cl = cs = Fraction(0)
        for c, length in self.reflection_classes():
            contrib = Fraction(self.class_sizes[c] * row[c], dim)
            if length == LONG:
                cl += contrib
            else:
                cs += contrib
        return cl, cs

    def n_invariant(self, label: str) -> Fraction:
        """N(sigma) at equal parameters."""
        cl, cs = self.n_invariant_form(label)
        return cl + cs


def _match_root(rs: RootSystem, v) -> tuple:
    """Scale a vector to a root of rs (the vector spans a reflection axis)."""
    for r in rs.positive_roots:
        k = next((i for i, e in enumerate(r) if e != 0))
        if v[k] == 0:
            continue
        t = r[k] / v[k]
        if tuple(t * e for e in v) == r:
            return r
    raise ValueError("vector is not proportional to any root")


# ---------------------------------------------------------------------------
# combinatorial builders for the classical types


def sn_table(n: int) -> CharacterTable:
    """Character table of S_n = W(A_{n-1}) in the gl(n) model."""
    rs = build_root_system("A", n - 1)
    classes = sn_classes(n)
    words = [
        word_from_action(rs, sn_class_action(n, rho)) for rho in classes
    ]
    labels = list(partitions_of(n))
    values = [
        [sn_character(lam, rho) for rho in classes] for lam in labels
    ]
    return CharacterTable(
        group_label=f"A{n - 1}",
        rs=rs,
        class_names=[str(r) for r in classes],
        class_sizes=[sn_class_size(n, r) for r in classes],
        class_words=words,
        irrep_labels=[str(p) for p in labels],
        values=values,
    )


def bn_table(n: int) -> CharacterTable:
    """Character table of the hyperoctahedral group W(B_n)."""
    rs = build_root_system("B", n)
    classes = bn_classes(n)
    words = [
        word_from_action(rs, signed_class_action(n, a, b)) for a, b in classes
    ]
    labels = bn_irrep_labels(n)
    values = [
        [bn_character(bip, a, b) for a, b in classes] for bip in labels
    ]
    return CharacterTable(
        group_label=f"B{n}",
        rs=rs,
        class_names=[f"{a}x{b}" for a, b in classes],
        class_sizes=[bn_class_size(n, a, b) for a, b in classes],
        class_words=words,
        irrep_labels=[str(bip) for bip in labels],
        values=values,
    )


def check_orthogonality(table: CharacterTable) -> None:
    """Both exact orthogonality relations; raises on any failure."""
    k = table.num_classes
    if len(table.irrep_labels) != k:
        raise ValueError("table is not square")
    order = table.order
    for i in range(k):
        for j in range(i, k):
            tot = sum(
                s * table.values[i][c] * table.values[j][c]
                for c, s in enumerate(table.class_sizes)
            )
            if tot != (order if i == j else 0):
                raise ValueError(
                    f"row orthogonality fails for irreps "
                    f"{table.irrep_labels[i]}, {table.irrep_labels[j]}"
                )
    for c in range(k):
        for d in range(c, k):
            tot = sum(
                table.values[i][c] * table.values[i][d] for i in range(k)
            )
            expect = order // table.class_sizes[c] if c == d else 0
            if tot != expect:
                raise ValueError(
                    f"column orthogonality fails for classes "
                    f"{table.class_names[c]}, {table.class_names[d]}"
                )
