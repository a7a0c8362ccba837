"""Integer partitions, dominance order and Kostka numbers.

Partitions are immutable tuples of nonincreasing positive parts.  Kostka
numbers are obtained by counting semistandard tableaux one cell at a time,
which keeps the computation purely combinatorial.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator

from .errors import NilconeError, WeightMismatch
from .matrix import IntegerMatrix


class Partition(tuple):
    """A nonincreasing tuple of positive integers.  ``Partition(())`` is empty."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise NilconeError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise NilconeError(f"partition parts must be nonincreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def multiplicities(self) -> tuple[int, ...]:
        """``m[k-1]`` is the number of parts equal to ``k``, up to the largest part."""
        if not self:
            return ()
        return tuple(self.count(k) for k in range(1, self[0] + 1))

    @classmethod
    def from_multiplicities(cls, mults: Iterable[int]) -> Partition:
        parts = []
        for k, m in enumerate(mults, start=1):
            parts.extend([k] * m)
        return cls(sorted(parts, reverse=True))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in increasing lexicographic order, ``(1^d)`` first.

    Increasing lex order is a linear extension of dominance, so Kostka
    matrices listed this way are lower triangular.
    """
    if d < 0:
        raise NilconeError("cannot partition a negative integer")
    return sorted(_partitions_desc(d, d), key=tuple)


def _partitions_desc(d: int, largest: int) -> Iterator[Partition]:
    if d == 0:
        yield Partition()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_desc(d - first, first):
            yield Partition((first, *rest))


def partition_count(d: int) -> int:
    return len(partitions_of(d))


def _check_weights(a: Partition, b: Partition):
    if sum(a) != sum(b):
        raise WeightMismatch(f"partitions {tuple(a)} and {tuple(b)} have different weights")


def dominance_leq(nu: Iterable[int], lam: Iterable[int]) -> bool:
    """True iff ``nu`` is dominated by ``lam`` (prefix sums of nu never exceed lam's)."""
    nu, lam = Partition(nu), Partition(lam)
    _check_weights(nu, lam)
    n = max(len(nu), len(lam))
    return all(s <= t for s, t in zip(accumulate(_padded(nu, n)), accumulate(_padded(lam, n))))


def _padded(parts, n):
    parts = list(parts)
    return parts + [0] * (n - len(parts))


@lru_cache(maxsize=None)
def _kostka_cached(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    n = len(content)
    remaining = list(content)
    grid = [[0] * row for row in shape]

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        total = 0
        for v in range(lo, n + 1):
            if remaining[v - 1] == 0:
                continue
            # every cell below in this column needs a strictly larger value
            if v + (_column_depth(shape, i, j)) > n:
                break
            remaining[v - 1] -= 1
            grid[i][j] = v
            total += fill(k + 1)
            remaining[v - 1] += 1
        grid[i][j] = 0
        return total

    return fill(0)


def _column_depth(shape, i, j) -> int:
    depth = 0
    for row in shape[i + 1:]:
        if row > j:
            depth += 1
        else:
            break
    return depth


def kostka(lam: Iterable[int], nu: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``nu``."""
    lam, nu = Partition(lam), Partition(nu)
    _check_weights(lam, nu)
    return _kostka_cached(tuple(lam), tuple(nu))


@lru_cache(maxsize=None)
def kostka_matrix(d: int) -> IntegerMatrix:
    """Matrix of ``K[lam][nu]`` over partitions of ``d`` listed by :func:`partitions_of`."""
    if d < 1:
        raise NilconeError("kostka_matrix needs d >= 1")
    order = partitions_of(d)
    return IntegerMatrix.from_rows(order, [[kostka(lam, nu) for nu in order] for lam in order])


def endo_dim(lam: Iterable[int]) -> int:
    """Dimension of the endomorphism algebra of a nilpotent Jordan type ``lam``."""
    lam = Partition(lam)
    return sum(min(a, b) for a in lam for b in lam)
