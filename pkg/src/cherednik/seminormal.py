"""Young's seminormal form of symmetric-group irreducibles, over Q.

Used as an independent oracle for the rectangle criterion: the operator
sum_{i=2}^n rho_lambda(s_{1i}) is scalar exactly on rectangular shapes,
with scalar (width - height).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import Partition
from .ratlinalg import QMatrix, Rat


def standard_tableaux(lam: Partition) -> list[tuple[int, ...]]:
    """All standard tableaux of shape lam, each encoded as the tuple whose
    entry k (0-based) is the row index of k+1."""
    parts = lam.parts
    out: list[tuple[int, ...]] = []

    def grow(rows: list[int], placed: tuple[int, ...]):
        if len(placed) == lam.size:
            out.append(placed)
            return
        for r in range(len(parts)):
            if rows[r] < parts[r] and (r == 0 or rows[r] < rows[r - 1]):
                rows[r] += 1
                grow(rows, placed + (r,))
                rows[r] -= 1

    grow([0] * len(parts), ())
    return out


def _content(tab: tuple[int, ...], k: int) -> int:
    """Content (column - row) of the box holding k+1."""
    row = tab[k]
    col = sum(1 for j in range(k + 1) if tab[j] == row) - 1
    return col - row


def adjacent_transposition_matrix(
    lam: Partition, k: int, tabs: list[tuple[int, ...]]
) -> QMatrix:
    """rho_lambda(s_k) for the adjacent transposition (k, k+1), 1-based k,
    in the seminormal basis indexed by ``tabs``."""
    n = len(tabs)
    index = {t: i for i, t in enumerate(tabs)}
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, t in enumerate(tabs):
        d = _content(t, k) - _content(t, k - 1)  # axial distance
        swapped = list(t)
        swapped[k - 1], swapped[k] = swapped[k], swapped[k - 1]
        j = index.get(tuple(swapped))
        if j is None or j == i:
            # k, k+1 in the same row (d = 1) or same column (d = -1)
            rows[i][i] = Fraction(1, d)
        else:
            rows[i][i] = Fraction(1, d)
            if i < j:
                rows[i][j] = Fraction(1)
            else:
                rows[i][j] = 1 - Fraction(1, d * d)
    return QMatrix.from_rows(rows)


@lru_cache(maxsize=None)
def _gens(parts: tuple[int, ...]) -> tuple:
    lam = Partition(parts)
    tabs = standard_tableaux(lam)
    n = lam.size
    return tuple(
        adjacent_transposition_matrix(lam, k, tabs) for k in range(1, n)
    )


def transposition_matrix(lam: Partition, i: int, j: int) -> QMatrix:
    """rho_lambda of the transposition (i, j), 1-based, i < j."""
    assert 1 <= i < j <= lam.size
    gens = _gens(lam.parts)
    m = gens[j - 2]
    # (i, j) = s_{j-1} ... s_{i+1} s_i s_{i+1} ... s_{j-1}
    for k in range(j - 2, i - 1, -1):
        g = gens[k - 1]
        m = g * m * g
    return m


def harmonic_scalar(lam: Partition) -> Rat | None:
    """The scalar by which sum_{i=2}^n rho_lambda(s_{1i}) acts, or None if
    the operator is not scalar."""
    n = lam.size
    tabs = standard_tableaux(lam)
    dim = len(tabs)
    total = QMatrix.identity(dim).scale(0)
    for j in range(2, n + 1):
        total = total.add(transposition_matrix(lam, 1, j))
    s = total[0, 0]
    if total.add(QMatrix.identity(dim).scale(-s)).is_zero():
        return s
    return None
