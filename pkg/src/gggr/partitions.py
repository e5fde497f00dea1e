"""Integer partitions and the statistics attached to them.

Partitions index everything downstream: unipotent classes and maximal tori
of GL_n / GU_n, irreducible characters of S_n, and the rows/columns of the
Green polynomial table.  The canonical ordering used throughout the package
is descending lexicographic, e.g. for n = 4:

    (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

from .errors import CapExceededError

#: Default ceiling for pure partition combinatorics.  p(30) = 5604, which is
#: still cheap; anything far beyond that is a sign the caller is misusing the
#: library (the symmetric-function pipelines cap out much earlier).
DEFAULT_CAP = 30


class Partition(tuple):
    """A partition of a non-negative integer, stored as a weakly decreasing
    tuple of positive parts.  Immutable, hashable, compares lexicographically
    like the underlying tuple."""

    def __new__(cls, parts=()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        """The number being partitioned."""
        return sum(self)

    @property
    def length(self) -> int:
        """Number of (positive) parts."""
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def to_json(self) -> list[int]:
        return list(self)


def partitions_of(n: int, cap: int = DEFAULT_CAP) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap:
        raise CapExceededError(f"partitions_of({n}) exceeds cap {cap}")
    return list(_partitions_iter(n, n))


def _partitions_iter(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_iter(n - first, first):
            yield Partition((first,) + tuple(rest))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n), by the classical recurrence on largest part (used as a cheap
    cross-check that enumeration is complete)."""

    @lru_cache(maxsize=None)
    def count(m: int, largest: int) -> int:
        if m == 0:
            return 1
        return sum(count(m - k, k) for k in range(min(m, largest), 0, -1))

    return count(n, n)


def n_stat(la: Partition) -> int:
    """The partition statistic n(la) = sum_i (i-1) * la_i  (1-based rows).

    Equals the number of cells strictly below the first row when each row i
    is weighted by its index, and also sum_j C(la'_j, 2) over the conjugate.
    For a unipotent element of Jordan type la the centralizer dimension in
    GL_n is n + 2 * n_stat(la).
    """
    return sum(i * part for i, part in enumerate(la))


def conjugate(la: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not la:
        return Partition(())
    return Partition(tuple(sum(1 for p in la if p >= j) for j in range(1, la[0] + 1)))


def multiplicities(la: Partition) -> dict[int, int]:
    """Map part-size -> multiplicity, keys in decreasing order."""
    out: dict[int, int] = {}
    for p in la:
        out[p] = out.get(p, 0) + 1
    return out


def weyl_centralizer_order(rho: Partition) -> int:
    """|W_rho| = prod_i i^{m_i} * m_i!, the order of the centralizer in S_n of
    a permutation of cycle type rho (also the order of the relative Weyl group
    of the maximal torus labelled by rho)."""
    z = 1
    for part, mult in multiplicities(rho).items():
        z *= part**mult * math.factorial(mult)
    return z
