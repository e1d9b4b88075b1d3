"""Counting and enumeration: binomials, multisets, Mahonian numbers, subsets.

Multisets of size d on {1..n} are stored as exponent vectors of length n and
always enumerated in lexicographically decreasing order, so that

>>> enumerate_multisets(2, 2)
((2, 0), (1, 1), (0, 2))

Subsets are tuples of 1-based indices in lexicographic order.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations

from .exactmat import IntMatrix


def binomial(n, k):
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multiset_coeff(n, k):
    """Number of size-k multisets drawn from n symbols."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0:
        return 0
    return math.comb(n + k - 1, k)


@lru_cache(maxsize=None)
def mahonian_row(n):
    """Row n of the Mahonian triangle, built by the inductive rule."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (1,)
    prev = mahonian_row(n - 1)
    top = n * (n + 1) // 2
    return tuple(
        sum(prev[k - i] for i in range(n + 1) if 0 <= k - i < len(prev))
        for k in range(top + 1)
    )


def mahonian(n, k):
    """k-multisets on {1..n} in which i appears at most i times."""
    row = mahonian_row(n)
    return row[k] if 0 <= k < len(row) else 0


def mahonian_explicit(n, k):
    """Inclusion-exclusion over the forbidden multiplicities.

    Element i is forbidden from appearing i+1 times, so removing i+1 copies
    of each element in a chosen set of violators leaves an unconstrained
    multiset.  The sizes i+1 range over 2..n+1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0:
        return 0
    total = 0
    sizes = range(2, n + 2)

    def walk(start, used, sign):
        nonlocal total
        total += sign * multiset_coeff(n, k - used)
        for idx in range(start, len(sizes)):
            s = sizes[idx]
            if used + s > k:
                break
            walk(idx + 1, used + s, -sign)

    walk(0, 0, 1)
    return total


@lru_cache(maxsize=None)
def enumerate_multisets(n, d):
    """All exponent vectors of length n summing to d, lexicographically decreasing."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if d < 0:
        return ()
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        out.extend((first,) + rest for rest in enumerate_multisets(n - 1, d - first))
    return tuple(out)


@lru_cache(maxsize=None)
def multiset_index(n, d):
    """Position lookup for ``enumerate_multisets(n, d)``."""
    return {m: i for i, m in enumerate(enumerate_multisets(n, d))}


@lru_cache(maxsize=None)
def subsets(n, k):
    """k-subsets of {1..n} in lexicographic order."""
    return tuple(combinations(range(1, n + 1), k))


def enumerate_subsets(n, y):
    """Containment between y-subsets (columns) and (y+1)-subsets (rows).

    Returns ``(positions, incidence)``.  ``positions`` maps each contained
    pair ``(row, col)`` to the element added to the column subset to obtain
    the row subset.
    """
    if not 0 <= y <= n - 1:
        raise ValueError(f"y must lie in 0..{n - 1}")
    rows = subsets(n, y + 1)
    cols = subsets(n, y)
    col_index = {c: j for j, c in enumerate(cols)}
    positions = {}
    data = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for e in r:
            j = col_index[tuple(v for v in r if v != e)]
            data[i][j] = 1
            positions[(i, j)] = e
    return positions, IntMatrix.from_rows(data, cols=len(cols))
