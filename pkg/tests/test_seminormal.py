from fractions import Fraction

import pytest

from cherednik.partitions import Partition, dimension, partitions_of
from cherednik.ratlinalg import QMatrix
from cherednik.seminormal import (
    adjacent_transposition_matrix,
    harmonic_scalar,
    standard_tableaux,
    transposition_matrix,
)


@pytest.mark.parametrize("lam", [Partition.of(3, 1), Partition.of(2, 2, 1)])
def test_tableau_count(lam):
    assert len(standard_tableaux(lam)) == dimension(lam)


@pytest.mark.parametrize("lam", [Partition.of(2, 1), Partition.of(3, 2)])
def test_coxeter_relations(lam):
    n = lam.size
    tabs = standard_tableaux(lam)
    mats = [
        adjacent_transposition_matrix(lam, i, tabs) for i in range(1, n)
    ]
    d = dimension(lam)
    ident = QMatrix.identity(d)
    for m in mats:
        assert m * m == ident
    for i in range(len(mats) - 1):
        a, b = mats[i], mats[i + 1]
        assert a * b * a == b * a * b
    for i in range(len(mats)):
        for j in range(i + 2, len(mats)):
            assert mats[i] * mats[j] == mats[j] * mats[i]


def test_transposition_matrix_conjugation():
    lam = Partition.of(2, 2)
    # (1 3) = s2 s1 s2
    tabs = standard_tableaux(lam)
    s1 = adjacent_transposition_matrix(lam, 1, tabs)
    s2 = adjacent_transposition_matrix(lam, 2, tabs)
    assert transposition_matrix(lam, 1, 3) == s2 * s1 * s2


@pytest.mark.parametrize("n", range(2, 8))
def test_harmonic_scalar_rectangles(n):
    """sum_i sigma(s_{1i}) is scalar exactly for rectangles, with value
    d - k for a k x d rectangle (so the harmonic condition with parameter
    c = k - d holds)."""
    for lam in partitions_of(n):
        scalar = harmonic_scalar(lam)
        parts = set(lam.parts)
        if len(parts) == 1:
            k, d = len(lam.parts), lam.parts[0]
            assert scalar == Fraction(d - k)
        else:
            assert scalar is None


def test_harmonic_scalar_direct():
    # independent direct computation for (2,2): sum of sigma(s_{1i}) = 0
    lam = Partition.of(2, 2)
    total = transposition_matrix(lam, 1, 2)
    for j in (3, 4):
        total = total.add(transposition_matrix(lam, 1, j))
    assert total.is_zero()
