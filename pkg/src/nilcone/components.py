"""Stratification data, dimension formulas and irreducible components.

A xi-function records the isomorphism type of a semistable sheaf (or a
torsion sheaf) as a multiset of partitions, one per support point.  On
an HN stratum the data is a tuple of xi-functions, one per factor.

Irreducible components of the nilpotent cone of class ``alpha`` are labelled
by an HN type together with one partition of ``gcd(alpha_i)`` per factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import IncompatibleXi, NilconeError
from .hn import ClassVector, HNType, as_hn, enumerate_hn, stratum_codim, stratum_leq
from .partitions import Partition, dominance_leq, endo_dim, partitions_of


@dataclass(frozen=True)
class XiFunction:
    """Finite map partition -> positive multiplicity, stored sorted."""

    items: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        merged: Counter = Counter()
        for lam, m in self.items:
            lam = Partition(lam)
            if not lam:
                raise NilconeError("xi-functions are supported on nonempty partitions")
            if m < 0:
                raise NilconeError("xi multiplicities must be nonnegative")
            merged[lam] += m
        items = tuple(sorted(((lam, m) for lam, m in merged.items() if m), key=lambda t: tuple(t[0])))
        object.__setattr__(self, "items", items)

    @classmethod
    def of(cls, mapping: Mapping[Iterable[int], int]) -> XiFunction:
        return cls(tuple((Partition(k), m) for k, m in mapping.items()))

    @classmethod
    def regular(cls, lam: Iterable[int]) -> XiFunction:
        """The regular xi-function ``(j) -> #{parts equal to j}`` of ``lam``."""
        return cls(tuple((Partition((j,)), m) for j, m in Counter(Partition(lam)).items()))

    @property
    def weight(self) -> int:
        return sum(m * lam.weight for lam, m in self.items)

    @property
    def points(self) -> int:
        return sum(m for _, m in self.items)

    def is_regular(self) -> bool:
        return all(lam.length == 1 for lam, _ in self.items)

    def to_partition(self) -> Partition:
        if not self.is_regular():
            raise NilconeError("only regular xi-functions correspond to a partition")
        return Partition(sorted((lam[0] for lam, m in self.items for _ in range(m)), reverse=True))


def enumerate_xi(d: int) -> list[XiFunction]:
    """Every xi-function of weight ``d``."""
    shapes = [lam for k in range(1, d + 1) for lam in partitions_of(k)]
    out = []

    def rec(start: int, left: int, chosen: list):
        if left == 0:
            out.append(XiFunction(tuple(Counter(chosen).items())))
            return
        for idx in range(start, len(shapes)):
            lam = shapes[idx]
            if lam.weight <= left:
                chosen.append(lam)
                rec(idx, left - lam.weight, chosen)
                chosen.pop()

    rec(0, d, [])
    return out


def _as_tuple(h: HNType, xi: Sequence[XiFunction]) -> tuple[XiFunction, ...]:
    xi = tuple(xi)
    if len(xi) != len(h):
        raise IncompatibleXi(f"{len(xi)} xi-functions for an HN type with {len(h)} factors")
    for f, x in zip(h.factors, xi):
        if x.weight != f.gcd:
            raise IncompatibleXi(f"xi of weight {x.weight} on factor {tuple(f)} of gcd {f.gcd}")
    return xi


def nilpotent_codim_in_end(xi: XiFunction) -> int:
    """Codimension of nilpotent endomorphisms: the number of indecomposable summands."""
    return sum(m * lam.length for lam, m in xi.items)


def automorphism_dim(xi: XiFunction) -> int:
    """Automorphism-group dimension; endomorphisms split over distinct support points."""
    return sum(m * endo_dim(lam) for lam, m in xi.items)


def dim_ss_stratum(xi: XiFunction) -> int:
    return xi.points - automorphism_dim(xi)


def dim_hn_stratum(h, xi: Sequence[XiFunction]) -> int:
    h = as_hn(h)
    xi = _as_tuple(h, xi)
    return sum(dim_ss_stratum(x) for x in xi) - stratum_codim(h)


def dim_nilcone_fiber(h, xi: Sequence[XiFunction]) -> int:
    """Dimension of the nilpotent Higgs fields over one sheaf in the stratum."""
    h = as_hn(h)
    xi = _as_tuple(h, xi)
    return stratum_codim(h) + sum(automorphism_dim(x) - nilpotent_codim_in_end(x) for x in xi)


def dim_nilcone_stratum(h, xi: Sequence[XiFunction]) -> int:
    """``sum_i sum_lam xi_i(lam) (1 - l(lam))``: never positive, zero iff regular."""
    h = as_hn(h)
    xi = _as_tuple(h, xi)
    return sum(m * (1 - lam.length) for x in xi for lam, m in x.items)


# --- components --------------------------------------------------------------


@dataclass(frozen=True)
class ComponentLabel:
    hn: HNType
    lam: tuple[Partition, ...]

    def __post_init__(self):
        hn = as_hn(self.hn)
        lam = tuple(Partition(p) for p in self.lam)
        if len(lam) != len(hn):
            raise NilconeError(f"need one partition per HN factor, got {len(lam)} for {len(hn)}")
        for f, p in zip(hn.factors, lam):
            if p.weight != f.gcd:
                raise NilconeError(f"partition {tuple(p)} must have weight gcd{tuple(f)} = {f.gcd}")
        object.__setattr__(self, "hn", hn)
        object.__setattr__(self, "lam", lam)

    def total(self) -> ClassVector:
        return self.hn.total()

    def xi(self) -> tuple[XiFunction, ...]:
        return tuple(XiFunction.regular(p) for p in self.lam)


def multipartitions(h: HNType) -> list[tuple[Partition, ...]]:
    """Multipartitions of a stratum, largest first in reverse-lex order on each factor."""
    per_factor = [list(reversed(partitions_of(g))) for g in h.gcds]
    return [tuple(ps) for ps in product(*per_factor)]


def components_of_stratum(h) -> list[ComponentLabel]:
    h = as_hn(h)
    return [ComponentLabel(h, lam) for lam in multipartitions(h)]


def enumerate_components(alpha: Iterable[int], max_codim: int, jobs: int = 1) -> list[ComponentLabel]:
    """Component labels on strata of codimension at most ``max_codim``.

    Strata come in :func:`enumerate_hn` order (dense stratum first); within a
    stratum the multipartitions descend, so ``(d)`` precedes ``(1^d)``.
    """
    return [c for h in enumerate_hn(alpha, max_codim, jobs=jobs) for c in components_of_stratum(h)]


def component_leq(a: ComponentLabel, b: ComponentLabel) -> bool:
    """Order on components: strict stratum inclusion, else antidominance factorwise."""
    if a.hn == b.hn:
        return all(dominance_leq(nu, lam) for lam, nu in zip(a.lam, b.lam))
    return stratum_leq(a.hn, b.hn)


def iter_xi_tuples(h: HNType) -> Iterator[tuple[XiFunction, ...]]:
    for xs in product(*(enumerate_xi(g) for g in h.gcds)):
        yield tuple(xs)
