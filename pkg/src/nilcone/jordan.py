"""Jordan types of nilpotent Higgs sheaves and the small-rank dictionary.

A Jordan type of class ``alpha`` is a sequence ``(a_1, ..., a_s)`` of classes
(zero allowed except in last position) with ``sum_k k * a_k = alpha``.

The dictionary with HN labels is explicit for rank <= 3:

* rank 0 -- multiplicities of the parts of the torsion partition;
* rank 1 -- line bundle first, then the torsion multiplicities; the first
  degree is fixed by the mass identity;
* ranks 2 and 3 -- Higgs bundles only, via the tables in :data:`RULES`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

from .components import ComponentLabel
from .errors import (
    InvalidClass,
    MassMismatch,
    NegativeRank,
    NilconeError,
    NotInDictionary,
    TrailingZero,
    UnsupportedMixedType,
    UnsupportedRank,
)
from .hn import ZERO, ClassVector, HNType, as_class
from .partitions import Partition

MAX_RANK = 3


@dataclass(frozen=True)
class JordanType:
    entries: tuple[ClassVector, ...]

    def total(self) -> ClassVector:
        total = ZERO
        for k, a in enumerate(self.entries, start=1):
            total = total + a.scaled(k)
        return total

    def to_lists(self) -> list[list[int]]:
        return [list(a) for a in self.entries]

    def __len__(self):
        return len(self.entries)


def jordan_validate(entries: Iterable[Iterable[int]], alpha: Iterable[int]) -> JordanType:
    alpha = as_class(alpha)
    vecs = []
    for e in entries:
        r, d = e
        v = ClassVector(int(r), int(d))
        if v.rank < 0:
            raise NegativeRank(f"entry {tuple(v)} has negative rank")
        if not v.is_zero_or_class:
            raise InvalidClass(f"entry {tuple(v)} is neither zero nor a class")
        vecs.append(v)
    if vecs and vecs[-1] == ZERO:
        raise TrailingZero("the last entry of a Jordan type must be nonzero")
    j = JordanType(tuple(vecs))
    if j.total() != alpha:
        raise MassMismatch(f"sum of k*a_k is {tuple(j.total())}, expected {tuple(alpha)}")
    return j


def torsion_jordan(lam: Iterable[int]) -> JordanType:
    """Jordan type of a generic nilpotent field on a torsion sheaf of type ``lam``."""
    lam = Partition(lam)
    return JordanType(tuple(ClassVector(0, m) for m in lam.multiplicities()))


def generic_torsion_part(j: JordanType) -> tuple[ClassVector, ...]:
    """Entries after the last one of positive rank; empty iff the sheaf is a bundle."""
    last = max((k for k, a in enumerate(j.entries, start=1) if a.rank > 0), default=0)
    return j.entries[last:]


# --- rank 2 and 3 tables -----------------------------------------------------

Degrees = tuple[int, ...]
Entries = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DictionaryRule:
    """One row of a rank-2 or rank-3 table.

    The HN type has factor ranks ``ranks`` and degrees ``degrees``; the rule
    applies when ``lam`` matches and ``guard(degrees)`` holds.  ``inverse``
    recovers candidate degrees from a Jordan type, or returns ``None``.
    """

    rank: int
    item: int
    ranks: tuple[int, ...]
    lam: tuple[tuple[int, ...], ...]
    condition: str
    guard: Callable[[Degrees], bool]
    forward: Callable[[Degrees], Entries]
    inverse: Callable[[Entries], Optional[Degrees]]


def _shape(*pattern):
    """Match ``entries`` against a pattern of ``(rank, None|int)``; return free degrees."""
    def match(entries: Entries):
        if len(entries) != len(pattern):
            return None
        free = []
        for (r, d), (pr, pd) in zip(entries, pattern):
            if r != pr:
                return None
            if pd is None:
                free.append(d)
            elif d != pd:
                return None
        return tuple(free)
    return match


def _via(match, solve):
    def inverse(entries):
        free = match(entries)
        return None if free is None else solve(*free)
    return inverse


def _half(n: int) -> int:
    return n // 2


RULES: tuple[DictionaryRule, ...] = (
    # rank 2
    DictionaryRule(2, 1, (2,), ((1,),), "d odd",
                   lambda g: g[0] % 2 == 1,
                   lambda g: ((2, g[0]),),
                   _via(_shape((2, None)), lambda d: (d,))),
    DictionaryRule(2, 2, (2,), ((2,),), "d even",
                   lambda g: g[0] % 2 == 0,
                   lambda g: ((0, 0), (1, _half(g[0]))),
                   _via(_shape((0, 0), (1, None)), lambda y: (2 * y,))),
    DictionaryRule(2, 3, (2,), ((1, 1),), "d even",
                   lambda g: g[0] % 2 == 0,
                   lambda g: ((2, g[0]),),
                   _via(_shape((2, None)), lambda d: (d,))),
    DictionaryRule(2, 4, (1, 1), ((1,), (1,)), "d1 > d2",
                   lambda g: g[0] > g[1],
                   lambda g: ((0, g[0] - g[1]), (1, g[1])),
                   _via(_shape((0, None), (1, None)), lambda x, y: (x + y, y))),
    # rank 3
    DictionaryRule(3, 1, (3,), ((1,),), "gcd(3, d) = 1",
                   lambda g: gcd(3, g[0]) == 1,
                   lambda g: ((3, g[0]),),
                   _via(_shape((3, None)), lambda d: (d,))),
    DictionaryRule(3, 2, (3,), ((3,),), "d = 3e",
                   lambda g: g[0] % 3 == 0,
                   lambda g: ((0, 0), (0, 0), (1, g[0] // 3)),
                   _via(_shape((0, 0), (0, 0), (1, None)), lambda e: (3 * e,))),
    DictionaryRule(3, 3, (3,), ((2, 1),), "d = 3e",
                   lambda g: g[0] % 3 == 0,
                   lambda g: ((1, g[0] // 3), (1, g[0] // 3)),
                   _via(_shape((1, None), (1, None)), lambda a, b: (a + 2 * b,))),
    DictionaryRule(3, 4, (3,), ((1, 1, 1),), "d = 3e",
                   lambda g: g[0] % 3 == 0,
                   lambda g: ((3, g[0]),),
                   _via(_shape((3, None)), lambda d: (d,))),
    DictionaryRule(3, 5, (1, 2), ((1,), (1,)), "d2 odd, 2 d1 > d2",
                   lambda g: g[1] % 2 == 1 and 2 * g[0] > g[1],
                   lambda g: ((1, g[1] - g[0]), (1, g[0])),
                   _via(_shape((1, None), (1, None)), lambda a, b: (b, a + b))),
    DictionaryRule(3, 6, (2, 1), ((1,), (1,)), "d1 odd, d1 > 2 d2",
                   lambda g: g[0] % 2 == 1 and g[0] > 2 * g[1],
                   lambda g: ((1, g[0] - g[1]), (1, g[1])),
                   _via(_shape((1, None), (1, None)), lambda a, b: (a + b, b))),
    DictionaryRule(3, 7, (1, 2), ((1,), (2,)), "d2 even, 2 d1 > d2",
                   lambda g: g[1] % 2 == 0 and 2 * g[0] > g[1],
                   lambda g: ((0, g[0] - _half(g[1])), (0, 0), (1, _half(g[1]))),
                   _via(_shape((0, None), (0, 0), (1, None)), lambda x, y: (x + y, 2 * y))),
    DictionaryRule(3, 8, (1, 2), ((1,), (1, 1)), "d2 even, 2 d1 > d2",
                   lambda g: g[1] % 2 == 0 and 2 * g[0] > g[1],
                   lambda g: ((1, g[1] - g[0]), (1, g[0])),
                   _via(_shape((1, None), (1, None)), lambda a, b: (b, a + b))),
    DictionaryRule(3, 9, (2, 1), ((2,), (1,)), "d1 even, d1 > 2 d2",
                   lambda g: g[0] % 2 == 0 and g[0] > 2 * g[1],
                   lambda g: ((0, 0), (0, _half(g[0]) - g[1]), (1, g[1])),
                   _via(_shape((0, 0), (0, None), (1, None)), lambda z, y: (2 * (z + y), y))),
    DictionaryRule(3, 10, (2, 1), ((1, 1), (1,)), "d1 even, d1 > 2 d2",
                   lambda g: g[0] % 2 == 0 and g[0] > 2 * g[1],
                   lambda g: ((1, g[0] - g[1]), (1, g[1])),
                   _via(_shape((1, None), (1, None)), lambda a, b: (a + b, b))),
    DictionaryRule(3, 11, (1, 1, 1), ((1,), (1,), (1,)), "d1 > d2 > d3",
                   lambda g: g[0] > g[1] > g[2],
                   lambda g: ((0, g[0] - g[1]), (0, g[1] - g[2]), (1, g[2])),
                   _via(_shape((0, None), (0, None), (1, None)),
                        lambda p, q, y: (p + q + y, q + y, y))),
)


def _rule_applies(rule: DictionaryRule, c: ComponentLabel) -> bool:
    return (
        tuple(f.rank for f in c.hn) == rule.ranks
        and tuple(tuple(p) for p in c.lam) == rule.lam
        and rule.guard(tuple(f.degree for f in c.hn))
    )


def _check_rank(alpha: ClassVector):
    if alpha.rank > MAX_RANK:
        raise UnsupportedRank(f"the dictionary is only known up to rank {MAX_RANK}")


def hn_to_jordan(c: ComponentLabel) -> JordanType:
    """Jordan type of a generic Higgs sheaf on the component labelled ``c``."""
    alpha = c.total()
    _check_rank(alpha)
    h = c.hn
    if alpha.rank == 0:
        entries = torsion_jordan(c.lam[0]).entries
    elif alpha.rank == 1:
        if len(h) == 1:
            entries = (h.factors[0],)
        else:
            (_, _), (_, d2) = h.factors
            mults = c.lam[0].multiplicities()
            entries = (ClassVector(1, d2 - sum(mults)),) + tuple(ClassVector(0, m) for m in mults)
    else:
        if any(f.is_torsion for f in h):
            raise UnsupportedMixedType("ranks 2 and 3 are only tabulated for torsion-free HN types")
        matches = [r for r in RULES if r.rank == alpha.rank and _rule_applies(r, c)]
        if len(matches) != 1:
            raise NotInDictionary(f"no table row for {h.to_lists()} with {[tuple(p) for p in c.lam]}")
        entries = matches[0].forward(tuple(f.degree for f in h))
    # the mass identity is a hard postcondition
    return jordan_validate(entries, alpha)


def jordan_to_hn(j, alpha: Iterable[int]) -> ComponentLabel:
    """Inverse of :func:`hn_to_jordan` on its domain."""
    alpha = as_class(alpha)
    _check_rank(alpha)
    if not isinstance(j, JordanType):
        j = jordan_validate(j, alpha)
    else:
        j = jordan_validate(j.entries, alpha)
    entries = j.entries
    if alpha.rank == 0:
        return ComponentLabel(HNType((alpha,)), (Partition.from_multiplicities(a.degree for a in entries),))
    if alpha.rank == 1:
        line, tail = entries[0], entries[1:]
        if not tail:
            return ComponentLabel(HNType((line,)), (Partition((1,)),))
        lam = Partition.from_multiplicities(a.degree for a in tail)
        h = HNType.of((0, lam.weight), (1, line.degree + sum(a.degree for a in tail)))
        return ComponentLabel(h, (lam, Partition((1,))))
    plain = tuple(tuple(a) for a in entries)
    found = []
    for rule in RULES:
        if rule.rank != alpha.rank:
            continue
        degrees = rule.inverse(plain)
        if degrees is None:
            continue
        try:
            h = HNType(tuple(ClassVector(r, d) for r, d in zip(rule.ranks, degrees)))
            c = ComponentLabel(h, rule.lam)
        except NilconeError:
            continue
        if h.total() == alpha and rule.guard(degrees) and rule.forward(degrees) == plain:
            found.append(c)
    if not found:
        raise NotInDictionary(f"Jordan type {j.to_lists()} of class {tuple(alpha)} is not tabulated")
    if len(found) > 1:
        raise AssertionError(f"ambiguous dictionary entries for {j.to_lists()}: {found}")
    return found[0]


def supported_components(alpha: Iterable[int], labels: Sequence[ComponentLabel]) -> list[ComponentLabel]:
    """Filter ``labels`` to those :func:`hn_to_jordan` accepts."""
    alpha = as_class(alpha)
    if alpha.rank > MAX_RANK:
        return []
    if alpha.rank <= 1:
        return list(labels)
    return [c for c in labels if not any(f.is_torsion for f in c.hn)]
