"""Classes, slopes and Harder-Narasimhan types on an elliptic curve.

A class is a pair ``(rank, degree)``; the positive cone consists of pairs
with positive rank, or rank zero and positive degree.  An HN type is a
sequence of such classes with strictly decreasing slopes, torsion first.

The closure order on strata is read off from convex lattice paths: a stratum
lies in the closure of another exactly when its path lies below.  The
``SL2(Z)`` action is the column-vector action ``(r, d)^T -> g (r, d)^T``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import InvalidClass, InvalidGenus, NilconeError, TotalMismatch

Slope = Union[Fraction, float]

INF = inf


class ClassVector(NamedTuple):
    rank: int
    degree: int

    def __add__(self, other):
        return ClassVector(self.rank + other.rank, self.degree + other.degree)

    def __sub__(self, other):
        return ClassVector(self.rank - other.rank, self.degree - other.degree)

    def scaled(self, k: int) -> ClassVector:
        return ClassVector(k * self.rank, k * self.degree)

    @property
    def is_positive(self) -> bool:
        return self.rank > 0 or (self.rank == 0 and self.degree > 0)

    @property
    def is_zero_or_class(self) -> bool:
        return self == (0, 0) or self.is_positive

    @property
    def is_torsion(self) -> bool:
        return self.rank == 0

    @property
    def gcd(self) -> int:
        return gcd(self.rank, self.degree)


ZERO = ClassVector(0, 0)


def as_class(value: Iterable[int]) -> ClassVector:
    """Coerce a pair to a validated class in the positive cone."""
    r, d = value
    alpha = ClassVector(int(r), int(d))
    if not alpha.is_positive:
        raise InvalidClass(f"({r},{d}) is not a class: need r > 0, or r = 0 and d > 0")
    return alpha


def slope(alpha: Iterable[int]) -> Slope:
    r, d = as_class(alpha)
    return INF if r == 0 else Fraction(d, r)


def format_slope(mu: Slope) -> str:
    return "inf" if mu == INF else str(mu)


def parse_slope(text: str) -> Slope:
    return INF if text.strip() == "inf" else Fraction(text.strip())


def det(a: Sequence[int], b: Sequence[int]) -> int:
    """``r_b d_a - r_a d_b``; positive exactly when slope(a) > slope(b)."""
    return b[0] * a[1] - a[0] * b[1]


def euler_form(alpha: Iterable[int], beta: Iterable[int], genus: int) -> int:
    """Euler form ``(1-g) r1 r2 + (r1 d2 - r2 d1)`` on a curve of genus ``g``."""
    r1, d1 = as_class(alpha)
    r2, d2 = as_class(beta)
    return (1 - genus) * r1 * r2 + (r1 * d2 - r2 * d1)


@dataclass(frozen=True)
class HNType:
    factors: tuple[ClassVector, ...]

    def __post_init__(self):
        factors = tuple(as_class(f) for f in self.factors)
        if not factors:
            raise InvalidClass("an HN type needs at least one factor")
        slopes = [slope(f) for f in factors]
        if any(a <= b for a, b in zip(slopes, slopes[1:])):
            raise InvalidClass(f"slopes must strictly decrease: {[tuple(f) for f in factors]}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *factors: Iterable[int]) -> HNType:
        return cls(tuple(ClassVector(*f) for f in factors))

    def total(self) -> ClassVector:
        r = sum(f.rank for f in self.factors)
        d = sum(f.degree for f in self.factors)
        return ClassVector(r, d)

    @property
    def gcds(self) -> tuple[int, ...]:
        return tuple(f.gcd for f in self.factors)

    @property
    def torsion_degree(self) -> int:
        first = self.factors[0]
        return first.degree if first.is_torsion else 0

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def to_lists(self) -> list[list[int]]:
        return [list(f) for f in self.factors]

    def sort_key(self):
        return (stratum_codim(self), tuple(x for f in self.factors for x in f))


def as_hn(value) -> HNType:
    if isinstance(value, HNType):
        return value
    return HNType(tuple(ClassVector(*f) for f in value))


def stratum_codim(h: HNType) -> int:
    """Codimension of the HN stratum: sum over ``j < i`` of ``r_i d_j - r_j d_i``."""
    fs = h.factors
    return sum(det(fs[j], fs[i]) for i in range(len(fs)) for j in range(i))


# --- enumeration -------------------------------------------------------------


def _first_factor_choices(remaining: ClassVector, budget: int, bound: Optional[Slope]):
    """Candidate first factors ``a`` with ``remaining - a`` nonempty.

    Each yields ``(a, cost)`` where ``cost = det(a, remaining) >= 1``; the
    remainder must have positive rank, which bounds ``a``'s rank.
    """
    R, D = remaining
    if R == 0:
        return
    for ra in range(0, R):
        # 1 <= R*da - ra*D <= budget
        lo = -((-(1 + ra * D)) // R)
        hi = (budget + ra * D) // R
        for da in range(lo, hi + 1):
            a = ClassVector(ra, da)
            if not a.is_positive:
                continue
            if bound is not None and not slope(a) < bound:
                continue
            yield a, det(a, remaining)


def _complete(remaining: ClassVector, budget: int, bound: Optional[Slope]):
    """All slope-decreasing decompositions of ``remaining`` with codim <= budget."""
    if bound is None or slope(remaining) < bound:
        yield (remaining,)
    for a, cost in _first_factor_choices(remaining, budget, bound):
        for rest in _complete(remaining - a, budget - cost, slope(a)):
            yield (a, *rest)


def enumerate_hn(alpha: Iterable[int], max_codim: int, jobs: int = 1) -> list[HNType]:
    """HN types of ``alpha`` with codimension at most ``max_codim``.

    Sorted by codimension, then lexicographically on the flattened factors.
    ``jobs > 1`` spreads the first-factor choices over a thread pool; the
    result does not depend on it.
    """
    alpha = as_class(alpha)
    if max_codim < 0:
        raise NilconeError("max_codim must be nonnegative")
    found = [(alpha,)]
    branches = list(_first_factor_choices(alpha, max_codim, None))

    def expand(branch):
        a, cost = branch
        return [(a, *rest) for rest in _complete(alpha - a, max_codim - cost, slope(a))]

    if jobs > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(expand, branches):
                found.extend(chunk)
    else:
        for branch in branches:
            found.extend(expand(branch))
    return sorted((HNType(f) for f in found), key=HNType.sort_key)


# --- closure order -----------------------------------------------------------


def _vertices(h: HNType) -> list[tuple[int, int]]:
    """Lattice points of the convex path, torsion segment excluded."""
    x, y = 0, 0
    pts = [(0, 0)]
    for f in reversed(h.factors):
        if f.is_torsion:
            continue
        x, y = x + f.rank, y + f.degree
        pts.append((x, y))
    return pts


def _height(pts: list[tuple[int, int]], x: int) -> Fraction:
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            return y0 + Fraction((y1 - y0) * (x - x0), x1 - x0)
    return Fraction(pts[-1][1])


def _require_same_total(a: HNType, b: HNType):
    if a.total() != b.total():
        raise TotalMismatch(f"HN types of different classes: {a.total()} vs {b.total()}")


def path_below(a, b) -> bool:
    """True iff the convex path of ``a`` lies weakly below that of ``b``.

    Heights are compared on the union of both breakpoint sets; a torsion
    factor contributes a final vertical segment, so the height at the right
    end is the left limit ``d - torsion degree``.
    """
    a, b = as_hn(a), as_hn(b)
    _require_same_total(a, b)
    pa, pb = _vertices(a), _vertices(b)
    xs = sorted({x for x, _ in pa} | {x for x, _ in pb})
    return all(_height(pa, x) <= _height(pb, x) for x in xs)


def stratum_leq(a, b) -> bool:
    """``a <= b`` iff the stratum of ``b`` lies in the closure of that of ``a``."""
    return path_below(b, a)


# --- codimension one ---------------------------------------------------------


def codim_one_stratum(alpha: Iterable[int], genus: int = 1) -> Optional[HNType]:
    """The unique codimension-one HN type of ``alpha``, or ``None``.

    On an elliptic curve it exists iff ``gcd(r, d) = 1`` with ``r >= 1`` and is
    given by the Bezout relation ``r d1 - r1 d = 1`` with ``0 <= r1 < r``.  In
    genus >= 2 it exists iff ``r = 1`` and equals ``((0,1),(1,d-1))``.
    """
    r, d = as_class(alpha)
    if genus < 1:
        raise InvalidGenus(f"genus must be 1 or at least 2, got {genus}")
    if genus >= 2:
        return HNType.of((0, 1), (1, d - 1)) if r == 1 else None
    if r == 0 or gcd(r, d) != 1:
        return None
    r1 = (-pow(d, -1, r)) % r
    d1, rem = divmod(1 + r1 * d, r)
    assert rem == 0
    return HNType.of((r1, d1), (r - r1, d - d1))


# --- SL2(Z) ------------------------------------------------------------------


@dataclass(frozen=True)
class UnimodularMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise NilconeError(f"matrix {self.to_lists()} does not have determinant 1")

    @classmethod
    def from_lists(cls, rows) -> UnimodularMatrix:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def to_lists(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def apply(self, v: Sequence[int]) -> ClassVector:
        r, d = v
        return ClassVector(self.a * r + self.b * d, self.c * r + self.d * d)

    def __matmul__(self, other: UnimodularMatrix) -> UnimodularMatrix:
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def sl2_transport(gamma: UnimodularMatrix, h) -> Optional[HNType]:
    """Apply ``gamma`` to every factor; ``None`` if the image is not an HN type."""
    h = as_hn(h)
    image = [gamma.apply(f) for f in h.factors]
    if not all(v.is_positive for v in image):
        return None
    try:
        return HNType(tuple(image))
    except InvalidClass:
        return None
