from hypothesis import given, strategies as st

from cherednik.partitions import (
    Bipartition,
    Partition,
    bipartitions_of,
    dimension,
    is_rectangle,
    partitions_of,
    rect_complement,
    subpartitions,
    transpose,
)

# p(0..10)
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_counts():
    for n, expected in enumerate(PARTITION_COUNTS):
        assert sum(1 for _ in partitions_of(n)) == expected


def test_bipartition_counts():
    # sum_k p(k) p(n-k)
    for n in range(7):
        expected = sum(
            PARTITION_COUNTS[k] * PARTITION_COUNTS[n - k]
            for k in range(n + 1)
        )
        assert sum(1 for _ in bipartitions_of(n)) == expected


partitions = st.integers(min_value=0, max_value=12).flatmap(
    lambda n: st.sampled_from(list(partitions_of(n)))
)


@given(partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


@given(partitions)
def test_transpose_rectangle(lam):
    rect = is_rectangle(lam)
    if rect:
        k, d = rect
        assert lam == Partition((d,) * k)
        assert is_rectangle(transpose(lam)) == (d, k)


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4))
def test_rect_complement_involution(k, d):
    lam = Partition((d,) * k)
    for mu in subpartitions(lam):
        nu = rect_complement(mu, k, d)
        assert mu.size + nu.size == k * d
        assert rect_complement(nu, k, d) == mu


def test_dimension_hook_lengths():
    assert dimension(Partition.of(1)) == 1
    assert dimension(Partition.of(2, 1)) == 2
    assert dimension(Partition.of(3, 2)) == 5
    assert dimension(Partition.of(2, 2, 1)) == 5
    # dimensions of S_5 irreps square-sum to 5!
    assert sum(dimension(p) ** 2 for p in partitions_of(5)) == 120


def test_str_forms():
    assert str(Partition.of(3, 1)) == "(3,1)"
    assert str(Partition.of()) == "(0)"
    assert str(Bipartition.of((2, 2), ())) == "(2,2)x(0)"
