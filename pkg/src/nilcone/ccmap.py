"""Characteristic-cycle multiplicity matrices.

Rows are indexed by simple sheaves and columns by irreducible components,
both through their ``(hn, multipartition)`` labels; entry ``(x, y)`` is the
multiplicity of component ``y`` in the characteristic cycle of sheaf ``x``.

On a single HN stratum the matrix is the Kronecker product of the Kostka
matrices of the factors.  Entries between distinct strata are only known to
vanish when the column stratum is not in the closure of the row stratum;
everything else off the diagonal blocks is kept as an explicit unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .components import ComponentLabel, enumerate_components
from .errors import UnknownEntries
from .hn import HNType, as_hn, stratum_leq
from .matrix import IntegerMatrix, invert_unitriangular, kron_all
from .partitions import kostka_matrix


@dataclass(frozen=True)
class CCBlock:
    hn: HNType
    matrix: IntegerMatrix

    @property
    def labels(self) -> list[ComponentLabel]:
        return [ComponentLabel(self.hn, lam) for lam in self.matrix.order]


def cc_block(h) -> CCBlock:
    """Kronecker product, in factor order, of the Kostka matrices of ``gcd(alpha_i)``."""
    h = as_hn(h)
    return CCBlock(h, kron_all([kostka_matrix(g) for g in h.gcds]))


@dataclass(frozen=True)
class TruncatedCCMatrix:
    """CC matrix restricted to strata of bounded codimension.

    ``order`` lists components deepest stratum first, which is the reverse
    of :func:`enumerate_components`; with this order the diagonal blocks are
    exactly the :class:`CCBlock` matrices and every unknown entry lies below
    the diagonal.
    """

    order: tuple[ComponentLabel, ...]
    blocks: tuple[CCBlock, ...]

    def __post_init__(self):
        block_of, offsets, expected = [], [], []
        for k, b in enumerate(self.blocks):
            offsets.append(len(expected))
            expected.extend(b.labels)
            block_of.extend([k] * b.matrix.size)
        if tuple(expected) != self.order:
            raise ValueError("component order must concatenate the block labels")
        object.__setattr__(self, "_block_of", tuple(block_of))
        object.__setattr__(self, "_offsets", tuple(offsets))
        below = tuple(
            tuple(k != l and stratum_leq(a.hn, b.hn) for l, b in enumerate(self.blocks))
            for k, a in enumerate(self.blocks)
        )
        object.__setattr__(self, "_unknown_blocks", below)

    @property
    def size(self) -> int:
        return len(self.order)

    def is_unknown(self, i: int, j: int) -> bool:
        return self._unknown_blocks[self._block_of[i]][self._block_of[j]]

    def entry(self, i: int, j: int) -> Optional[int]:
        """Known integer entry, or ``None`` where the value is not determined."""
        bi, bj = self._block_of[i], self._block_of[j]
        if bi == bj:
            off = self._offsets[bi]
            return self.blocks[bi].matrix[i - off, j - off]
        return None if self.is_unknown(i, j) else 0

    def unknown_positions(self) -> list[tuple[int, int]]:
        n = self.size
        return [(i, j) for i in range(n) for j in range(n) if self.is_unknown(i, j)]

    @property
    def has_unknowns(self) -> bool:
        return bool(self.unknown_positions())

    def block_diagonal(self) -> IntegerMatrix:
        """The determined part with every unknown entry set to zero."""
        n = self.size
        rows = [[self.entry(i, j) or 0 for j in range(n)] for i in range(n)]
        return IntegerMatrix.from_rows(self.order, rows)


def cc_truncated(alpha: Iterable[int], max_codim: int, jobs: int = 1) -> TruncatedCCMatrix:
    comps = enumerate_components(alpha, max_codim, jobs=jobs)
    strata: list[HNType] = []
    for c in comps:
        if not strata or strata[-1] != c.hn:
            strata.append(c.hn)
    blocks = tuple(cc_block(h) for h in reversed(strata))
    return TruncatedCCMatrix(tuple(reversed(comps)), blocks)


def invert_known_part(m: TruncatedCCMatrix, block_diagonal: bool = False) -> IntegerMatrix:
    """Exact inverse of the block-diagonal part.

    Unless ``block_diagonal`` is set, a matrix with undetermined entries is
    rejected, since its true inverse would depend on them.
    """
    if m.has_unknowns and not block_diagonal:
        raise UnknownEntries(
            f"{len(m.unknown_positions())} cross-stratum entries are undetermined; "
            "pass block_diagonal=True to invert the diagonal blocks only"
        )
    inverses = [invert_unitriangular(b.matrix) for b in m.blocks]
    n = m.size
    rows = [[0] * n for _ in range(n)]
    off = 0
    for inv in inverses:
        for i in range(inv.size):
            for j in range(inv.size):
                rows[off + i][off + j] = inv[i, j]
        off += inv.size
    return IntegerMatrix.from_rows(m.order, rows)
