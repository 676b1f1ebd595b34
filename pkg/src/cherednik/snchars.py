"""Symmetric group characters by the Murnaghan-Nakayama recursion.

Border strips are manipulated through beta-numbers (first-column hook
lengths), which makes strip removal a one-line set operation.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .partitions import Partition


def border_strip_removals(
    parts: tuple[int, ...], k: int
) -> Iterator[tuple[tuple[int, ...], int]]:
    """All ways to remove a border strip of size k; yields (rest, sign).

    sign = (-1)^height where height is one less than the number of rows the
    strip occupies.
    """
    m = len(parts)
    beta = [parts[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in bset - {b} | {nb}), reverse=True)
        rest = tuple(
            p
            for p in (nb2 - (m - 1 - j) for j, nb2 in enumerate(new_beta))
            if p > 0
        )
        yield rest, (-1) ** height


@lru_cache(maxsize=None)
def _sn_char(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    return sum(
        sign * _sn_char(nl, rest) for nl, sign in border_strip_removals(lam, k)
    )


def sn_character(lam: Partition, rho: Partition) -> int:
    """chi_lambda evaluated on the class of cycle type rho."""
    if lam.size != rho.size:
        raise ValueError("partition sizes must match")
    return _sn_char(lam.parts, rho.parts)
