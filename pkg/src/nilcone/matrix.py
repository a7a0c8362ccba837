"""Square integer matrices carrying explicit row/column labels.

Entries are Python ints, so arithmetic is exact at any size.  The label
sequence is shared by rows and columns and records the index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Sequence

from .errors import NilconeError, NotUnitriangular


@dataclass(frozen=True)
class IntegerMatrix:
    order: tuple[Hashable, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.order)
        if len(self.rows) != n or any(len(row) != n for row in self.rows):
            raise NilconeError(f"matrix must be {n}x{n} to match its labels")
        if len(set(self.order)) != n:
            raise NilconeError("matrix labels must be distinct")

    @classmethod
    def from_rows(cls, order: Sequence[Hashable], rows: Sequence[Sequence[int]]) -> IntegerMatrix:
        return cls(tuple(order), tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, order: Sequence[Hashable]) -> IntegerMatrix:
        n = len(order)
        return cls.from_rows(order, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.order)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def entry(self, row_label: Any, col_label: Any) -> int:
        index = {label: k for k, label in enumerate(self.order)}
        return self.rows[index[row_label]][index[col_label]]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.order != other.order:
            raise NilconeError("cannot multiply matrices indexed by different label orders")
        n = self.size
        cols = list(zip(*other.rows)) if n else []
        return IntegerMatrix.from_rows(
            self.order,
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows],
        )

    def is_lower_unitriangular(self) -> bool:
        n = self.size
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(i, n)
        )

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def kron(a: IntegerMatrix, b: IntegerMatrix, combine=None) -> IntegerMatrix:
    """Kronecker product ``a (x) b``; row ``(x, y)`` is ordered x-major.

    ``combine`` builds the product label from a pair of labels and defaults
    to the pair itself.
    """
    if combine is None:
        combine = lambda x, y: (x, y)  # noqa: E731
    order = [combine(x, y) for x in a.order for y in b.order]
    rows = [
        [a.rows[i][k] * b.rows[j][l] for k in range(a.size) for l in range(b.size)]
        for i in range(a.size)
        for j in range(b.size)
    ]
    return IntegerMatrix.from_rows(order, rows)


def kron_all(factors: Sequence[IntegerMatrix]) -> IntegerMatrix:
    """Iterated Kronecker product with labels flattened into tuples."""
    result = IntegerMatrix.identity([()])
    for m in factors:
        result = kron(result, m, combine=lambda x, y: x + (y,))
    return result


def invert_unitriangular(m: IntegerMatrix) -> IntegerMatrix:
    """Exact inverse of a lower unitriangular integer matrix.

    Solved column by column with forward substitution; no division occurs,
    so every entry of the result is an integer.
    """
    if not m.is_lower_unitriangular():
        raise NotUnitriangular("matrix is not lower unitriangular in its recorded order")
    n = m.size
    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1
        for i in range(j + 1, n):
            inv[i][j] = -sum(m.rows[i][k] * inv[k][j] for k in range(j, i))
    return IntegerMatrix.from_rows(m.order, inv)
