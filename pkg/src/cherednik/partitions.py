"""Partitions, bipartitions, and the diagram operations used downstream."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    @staticmethod
    def of(*parts: int) -> "Partition":
        return Partition(tuple(p for p in parts if p))

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(
            self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)
        ):
            raise ValueError("parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "(0)"

    def row(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(other.row(i) <= self.row(i) for i in range(len(other)))


def transpose(p: Partition) -> Partition:
    """Conjugate diagram (flip rows and columns)."""
    if not p.parts:
        return p
    return Partition(
        tuple(
            sum(1 for r in p.parts if r > j) for j in range(p.parts[0])
        )
    )


def is_rectangle(p: Partition) -> tuple[int, int] | None:
    """Return (k rows, d columns) if p is the rectangle d^k, else None."""
    if not p.parts:
        return None
    if len(set(p.parts)) != 1:
        return None
    return len(p.parts), p.parts[0]


def rect_complement(mu: Partition, k: int, d: int) -> Partition:
    """Complement of mu inside the k x d rectangle, rotated by 180 degrees."""
    if len(mu) > k or any(r > d for r in mu.parts):
        raise ValueError(f"{mu} does not fit in a {k}x{d} rectangle")
    rows = sorted((d - mu.row(k - 1 - i) for i in range(k)), reverse=True)
    return Partition(tuple(r for r in rows if r))


def partitions_of(n: int, cap: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts bounded by cap, lexicographically decreasing."""

    def gen(rest: int, bound: int, acc: tuple[int, ...]):
        if rest == 0:
            yield acc
            return
        for first in range(min(rest, bound), 0, -1):
            yield from gen(rest - first, first, acc + (first,))

    yield from (Partition(t) for t in gen(n, cap if cap is not None else n, ()))


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions whose diagram fits inside lam."""

    def gen(i: int, bound: int, acc: tuple[int, ...]):
        if i == len(lam.parts):
            yield acc
            return
        yield acc
        for r in range(min(bound, lam.parts[i]), 0, -1):
            yield from gen(i + 1, r, acc + (r,))

    seen = set()
    for t in gen(0, lam.parts[0] if lam.parts else 0, ()):
        if t not in seen:
            seen.add(t)
            yield Partition(t)


@lru_cache(maxsize=None)
def hooks_product(parts: tuple[int, ...]) -> int:
    p = Partition(parts)
    t = transpose(p)
    prod = 1
    for i, row in enumerate(p.parts):
        for j in range(row):
            prod *= row - j + t.parts[j] - i - 1
    return prod


def dimension(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    if not p.parts:
        return 1
    from math import factorial

    return factorial(p.size) // hooks_product(p.parts)


@dataclass(frozen=True)
class Bipartition:
    """Ordered pair of partitions; labels hyperoctahedral irreducibles."""

    left: Partition
    right: Partition

    @staticmethod
    def of(left, right) -> "Bipartition":
        return Bipartition(Partition(tuple(left)), Partition(tuple(right)))

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    def swapped(self) -> "Bipartition":
        return Bipartition(self.right, self.left)

    def __str__(self) -> str:
        return f"{self.left}x{self.right}"


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    for k in range(n + 1):
        lefts = list(partitions_of(k)) if k else [Partition(())]
        rights = list(partitions_of(n - k)) if n - k else [Partition(())]
        for l in lefts:
            for r in rights:
                yield Bipartition(l, r)
