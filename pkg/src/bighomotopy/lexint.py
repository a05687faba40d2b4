"""Finite-dimensional model of the lexicographic interval [0,1]^n.

Points carry exact rational coordinates.  The supremum of a finite set is
computed coordinate by coordinate: take the largest first coordinate, keep
only the points that attain it, and repeat on the next coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from ._common import ValidationError, Verdict, format_rational, parse_rational

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class LexPoint:
    """A point of [0,1]^n; Python tuple order on ``coords`` is the lex order."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(parse_rational(c) for c in self.coords)
        if not coords:
            raise ValidationError("a point needs at least one coordinate")
        for c in coords:
            if not 0 <= c <= 1:
                raise ValidationError(f"coordinate {c} outside [0,1]")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords) -> "LexPoint":
        return cls(tuple(coords))

    @property
    def dims(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coords]

    @classmethod
    def from_json(cls, data) -> "LexPoint":
        if not isinstance(data, (list, tuple)):
            raise ValidationError(f"a point is a list of 'p/q' strings, got {data!r}")
        return cls(tuple(parse_rational(c) for c in data))


@dataclass(frozen=True)
class LexInterval:
    dims: int

    def __post_init__(self):
        if not isinstance(self.dims, int) or self.dims < 1:
            raise ValidationError(f"dimension must be a positive integer, got {self.dims!r}")

    @property
    def bottom(self) -> LexPoint:
        return LexPoint((Fraction(0),) * self.dims)

    @property
    def top(self) -> LexPoint:
        return LexPoint((Fraction(1),) * self.dims)

    @property
    def middle(self) -> LexPoint:
        return LexPoint((HALF,) * self.dims)

    def contains(self, p: LexPoint) -> bool:
        return isinstance(p, LexPoint) and p.dims == self.dims

    def check(self, p: LexPoint) -> LexPoint:
        if not self.contains(p):
            raise ValidationError(f"{p} is not a point of the {self.dims}-dimensional interval")
        return p


def _same_dims(points: Sequence[LexPoint]) -> int:
    dims = {p.dims for p in points}
    if len(dims) != 1:
        raise ValidationError(f"points of different dimensions: {sorted(dims)}")
    return dims.pop()


def lex_compare(p: LexPoint, q: LexPoint) -> Verdict:
    """Decide by the first coordinate where p and q differ."""
    _same_dims([p, q])
    for a, b in zip(p.coords, q.coords):
        if a < b:
            return Verdict.LT
        if a > b:
            return Verdict.GT
    return Verdict.EQ


def sup_finite(points: Iterable[LexPoint]) -> LexPoint:
    """Coordinatewise supremum recursion; equals the lex maximum for finite sets."""
    pts = list(points)
    if not pts:
        raise ValidationError("supremum of an empty set")
    dims = _same_dims(pts)
    settled = []
    live = pts
    for beta in range(dims):
        if live:
            s = max(p.coords[beta] for p in live)
            live = [p for p in live if p.coords[beta] == s]
        else:
            s = Fraction(0)
        settled.append(s)
    return LexPoint(tuple(settled))


def inf_finite(points: Iterable[LexPoint]) -> LexPoint:
    pts = list(points)
    if not pts:
        raise ValidationError("infimum of an empty set")
    dims = _same_dims(pts)
    settled = []
    live = pts
    for beta in range(dims):
        if live:
            s = min(p.coords[beta] for p in live)
            live = [p for p in live if p.coords[beta] == s]
        else:
            s = Fraction(1)
        settled.append(s)
    return LexPoint(tuple(settled))


###############################################################################
# Dense eventually-zero sample
###############################################################################


def _is_prefix_supported(coords) -> bool:
    seen_zero = False
    for c in coords:
        if c == 0:
            seen_zero = True
        elif seen_zero:
            return False
    return True


def dense_sample(interval: LexInterval, depth: int) -> list[LexPoint]:
    """Dyadic points (denominator <= 2^depth) whose nonzero coordinates form a prefix.

    Returned in increasing lex order.
    """
    if depth < 1:
        raise ValidationError("sample depth must be at least 1")
    step = Fraction(1, 2**depth)
    nonzero = [step * k for k in range(1, 2**depth + 1)]
    out = []
    for support in range(interval.dims + 1):
        for head in product(nonzero, repeat=support):
            out.append(LexPoint(head + (Fraction(0),) * (interval.dims - support)))
    out.sort()
    return out


def dense_sample_count(dims: int, depth: int) -> int:
    """sum_{j=0}^{dims} (2^depth)^j."""
    m = 2**depth
    return sum(m**j for j in range(dims + 1))


def separating_point(a: LexPoint, b: LexPoint) -> LexPoint:
    """A point s with a < s < b: copy a up to the first differing coordinate,
    take the midpoint there, and zeros after it."""
    if lex_compare(a, b) is not Verdict.LT:
        raise ValidationError(f"need a < b, got {a} and {b}")
    beta = next(i for i, (x, y) in enumerate(zip(a.coords, b.coords)) if x != y)
    mid = (a.coords[beta] + b.coords[beta]) / 2
    return LexPoint(a.coords[:beta] + (mid,) + (Fraction(0),) * (a.dims - beta - 1))


###############################################################################
# Wedge and reversal reparameterizations
###############################################################################


@dataclass(frozen=True, order=True)
class WedgePoint:
    """A point of I v I: ``copy`` 1 or 2 and a point of that copy.

    The glued point is stored canonically as (1, top); (2, bottom) is
    normalized to it on construction.
    """

    copy: int
    point: LexPoint

    def __post_init__(self):
        if self.copy not in (1, 2):
            raise ValidationError(f"wedge copy must be 1 or 2, got {self.copy!r}")
        if self.copy == 2 and all(c == 0 for c in self.point.coords):
            object.__setattr__(self, "copy", 1)
            object.__setattr__(self, "point", LexInterval(self.point.dims).top)

    @property
    def is_glue(self) -> bool:
        return self.copy == 1 and all(c == 1 for c in self.point.coords)


def wedge_map(p: LexPoint) -> WedgePoint:
    """Order isomorphism I -> I v I on rational points.

    The first coordinate is doubled: t0 < 1/2 lands in copy 1 at 2*t0 and
    t0 > 1/2 in copy 2 at 2*t0 - 1.  The slab t0 = 1/2 is a copy of the
    (n-1)-dimensional interval and is split the same way, recursively, into
    the top slab of copy 1 and the bottom slab of copy 2; the all-1/2 point
    is the glue point.
    """
    copy, coords = _wedge(p.coords)
    return WedgePoint(copy, LexPoint(coords))


def _wedge(coords: tuple) -> tuple:
    t0, rest = coords[0], coords[1:]
    if t0 < HALF:
        return 1, (2 * t0,) + rest
    if t0 > HALF:
        return 2, (2 * t0 - 1,) + rest
    if not rest:
        return 1, (Fraction(1),)
    copy, image = _wedge(rest)
    return copy, ((Fraction(1),) if copy == 1 else (Fraction(0),)) + image


def wedge_section(w: WedgePoint) -> LexPoint:
    """Inverse of ``wedge_map``."""
    return LexPoint(_section(w.copy, w.point.coords))


def _section(copy: int, coords: tuple) -> tuple:
    q0, rest = coords[0], coords[1:]
    if copy == 1 and q0 < 1:
        return (q0 / 2,) + rest
    if copy == 2 and q0 > 0:
        return ((q0 + 1) / 2,) + rest
    if not rest:
        return (HALF,)
    return (HALF,) + _section(copy, rest)


def reverse_point(p: LexPoint) -> LexPoint:
    """t -> 1 - t in every coordinate; an order anti-isomorphism."""
    return LexPoint(tuple(1 - c for c in p.coords))
