"""Subset-enumeration oracles shared by the tree and poset counting code.

Everything here inspects all 2**n subsets of an n-element ground set, so the
routines refuse inputs above SUBSET_BOUND.  The enumeration is vectorised
with numpy but remains a plain exhaustive sweep, independent of the
recursive polynomial definitions it is used to cross-check.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import OracleBoundError

SUBSET_BOUND = 20


def check_subset_bound(n: int, what: str = "input", bound: int | None = None) -> None:
    limit = SUBSET_BOUND if bound is None else bound
    if n > limit:
        raise OracleBoundError(
            f"{what} has {n} elements; the subset oracle bound is {limit}"
        )


@lru_cache(maxsize=2)
def subset_bits(n: int) -> np.ndarray:
    """Boolean membership table of shape (2**n, n); row S lists the bits of S."""
    codes = np.arange(1 << n, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(n)) & 1).astype(bool)
    bits.setflags(write=False)
    return bits


def antichain_flags(n: int, conflict_pairs: Sequence[tuple[int, int]]) -> np.ndarray:
    """Flag per subset: contains no conflicting (comparable) pair."""
    bits = subset_bits(n)
    bad = np.zeros(1 << n, dtype=bool)
    for u, v in conflict_pairs:
        bad |= bits[:, u] & bits[:, v]
    return ~bad


def maximal_antichain_flags(
    n: int, conflict_pairs: Sequence[tuple[int, int]]
) -> np.ndarray:
    """Flag per subset: conflict-free and not extendable by any outside element."""
    bits = subset_bits(n)
    anti = antichain_flags(n, conflict_pairs)
    partners: list[list[int]] = [[] for _ in range(n)]
    for u, v in conflict_pairs:
        partners[u].append(v)
        partners[v].append(u)
    extendable = np.zeros(1 << n, dtype=bool)
    for v in range(n):
        if partners[v]:
            conflict = bits[:, partners[v]].any(axis=1)
            extendable |= ~bits[:, v] & ~conflict
        else:
            extendable |= ~bits[:, v]
    return anti & ~extendable


def hitting_flags(n: int, groups: Iterable[Sequence[int]]) -> np.ndarray:
    """Flag per subset: intersects every one of the given element groups."""
    bits = subset_bits(n)
    flags = np.ones(1 << n, dtype=bool)
    for group in groups:
        flags &= bits[:, list(group)].any(axis=1)
    return flags


def member_flags(n: int, elements: Sequence[int]) -> np.ndarray:
    """Flag per subset: contains at least one of the given elements."""
    if not elements:
        return np.zeros(1 << n, dtype=bool)
    bits = subset_bits(n)
    return bits[:, list(elements)].any(axis=1)


def weighted_pair_counts(
    n: int, flags: np.ndarray, w1: Sequence[int], w2: Sequence[int]
) -> Counter:
    """Count flagged subsets by the pair (sum of w1, sum of w2) over members."""
    chosen = subset_bits(n)[flags]
    a = chosen @ np.asarray(w1, dtype=np.int64)
    b = chosen @ np.asarray(w2, dtype=np.int64)
    return Counter(zip(a.tolist(), b.tolist()))


def flagged_subsets(flags: np.ndarray) -> list[int]:
    """Subset codes (as ints) whose flag is set, in increasing order."""
    return [int(code) for code in np.nonzero(flags)[0]]
