"""Hyperoctahedral group (signed permutations) characters and class data.

Irreducible characters are labeled by bipartitions (lambda, mu): lambda
carries the trivial character of the sign subgroup and mu the nontrivial
one, so (n)x(0) is trivial, (0)x(1^n) is sgn, and every s_{e_i} acts by the
identity on (lambda)x(0).  Conjugacy classes are labeled by pairs of
partitions (alpha, beta): cycle types of the positive and negative cycles.

Character values use the wreath-product Murnaghan-Nakayama recursion: a
positive k-cycle strips from either component with the usual height sign; a
negative k-cycle additionally multiplies strips taken from mu by -1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterator

from .partitions import Bipartition, Partition, partitions_of
from .snchars import border_strip_removals

Vector = tuple[Fraction, ...]


@lru_cache(maxsize=None)
def _bn_char(
    lam: tuple[int, ...],
    mu: tuple[int, ...],
    pos: tuple[int, ...],
    neg: tuple[int, ...],
) -> int:
    if pos:
        k, rest = pos[0], pos[1:]
        return sum(
            s * _bn_char(nl, mu, rest, neg)
            for nl, s in border_strip_removals(lam, k)
        ) + sum(
            s * _bn_char(lam, nm, rest, neg)
            for nm, s in border_strip_removals(mu, k)
        )
    if neg:
        k, rest = neg[0], neg[1:]
        return sum(
            s * _bn_char(nl, mu, pos, rest)
            for nl, s in border_strip_removals(lam, k)
        ) - sum(
            s * _bn_char(lam, nm, pos, rest)
            for nm, s in border_strip_removals(mu, k)
        )
    return 1 if not lam and not mu else 0


def bn_character(
    bip: Bipartition, alpha: Partition, beta: Partition
) -> int:
    """Character of (lambda)x(mu) on the class with positive cycle type
    alpha and negative cycle type beta."""
    if bip.size != alpha.size + beta.size:
        raise ValueError("sizes must match")
    return _bn_char(bip.left.parts, bip.right.parts, alpha.parts, beta.parts)


def bn_classes(n: int) -> list[tuple[Partition, Partition]]:
    """All (alpha, beta) class labels of B_n, identity first, deterministic."""
    out = []
    for k in range(n, -1, -1):
        alphas = list(partitions_of(k)) if k else [Partition(())]
        betas = list(partitions_of(n - k)) if n - k else [Partition(())]
        for a in alphas:
            for b in betas:
                out.append((a, b))
    # identity is alpha=(1^n), beta=(): put it first
    ident = (Partition((1,) * n), Partition(()))
    out.remove(ident)
    return [ident] + out


def _cycle_centralizer(gamma: Partition, factor: int) -> int:
    mult: dict[int, int] = {}
    for p in gamma.parts:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for k, m in mult.items():
        z *= (factor * k) ** m * factorial(m)
    return z


def bn_class_size(n: int, alpha: Partition, beta: Partition) -> int:
    order = 2**n * factorial(n)
    return order // (_cycle_centralizer(alpha, 2) * _cycle_centralizer(beta, 2))


def sn_classes(n: int) -> list[Partition]:
    """Cycle types of S_n, identity first."""
    out = [p for p in partitions_of(n)]
    ident = Partition((1,) * n)
    out.remove(ident)
    return [ident] + out


def sn_class_size(n: int, rho: Partition) -> int:
    return factorial(n) // _cycle_centralizer(rho, 1)


def signed_class_action(
    n: int, alpha: Partition, beta: Partition
) -> Callable[[Vector], Vector]:
    """A representative of the class (alpha, beta) as a signed permutation
    acting on exact coordinate vectors."""
    target = [0] * n  # image index of each coordinate
    sign = [1] * n
    pos = 0
    for k in list(alpha.parts) + list(beta.parts):
        for i in range(k):
            target[pos + i] = pos + (i + 1) % k
        pos += k
    pos = alpha.size
    for k in beta.parts:
        sign[pos + k - 1] = -1  # flip on the wrap-around edge of the cycle
        pos += k

    def act(v: Vector) -> Vector:
        out = [Fraction(0)] * len(v)
        for j in range(n):
            out[target[j]] += sign[j] * v[j]
        for j in range(n, len(v)):
            out[j] += v[j]
        return tuple(out)

    return act


def sn_class_action(n: int, rho: Partition) -> Callable[[Vector], Vector]:
    return signed_class_action(n, rho, Partition(()))


def bn_irrep_labels(n: int) -> list[Bipartition]:
    """All bipartitions of n in a fixed deterministic order."""
    out = []
    for k in range(n, -1, -1):
        lefts = list(partitions_of(k)) if k else [Partition(())]
        rights = list(partitions_of(n - k)) if n - k else [Partition(())]
        for l in lefts:
            for r in rights:
                out.append(Bipartition(l, r))
    return out
