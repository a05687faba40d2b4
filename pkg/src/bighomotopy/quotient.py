"""Quotient of a lexicographic interval by a finite breakpoint set.

Points s, t are related when the closed interval between them meets the
breakpoint set in at most one point.  For a sparse breakpoint set that
relation is not transitive; after inserting a formal copy of the rationals
into every gap it is, and the quotient becomes a "mixed interval": the
atoms glued to open unit segments, one segment per gap.

The quotient map sends an atom to its own class.  A point strictly inside
the gap (a_i, a_i+1) is located by the first coordinate d where the two
atoms differ: its position is the affine rescaling of its d-th coordinate
into [0, 1].  Position 0 (the slab sitting directly on a_i) belongs to the
class of a_i, position 1 to that of a_i+1, anything else to the segment.
Every trailing-coordinate fiber inside a gap collapses to one class.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from ._common import ValidationError, format_rational, parse_rational
from .lexint import LexInterval, LexPoint, lex_compare
from ._common import Verdict


@dataclass(frozen=True)
class BreakpointSet:
    """Sorted atoms of an ambient interval; both endpoints are always present."""

    ambient: LexInterval
    atoms: tuple

    def __post_init__(self):
        pts = set()
        for a in self.atoms:
            self.ambient.check(a)
            pts.add(a)
        pts.add(self.ambient.bottom)
        pts.add(self.ambient.top)
        object.__setattr__(self, "atoms", tuple(sorted(pts)))

    @classmethod
    def of(cls, dims: int, atoms: Iterable) -> "BreakpointSet":
        ambient = LexInterval(dims)
        return cls(ambient, tuple(a if isinstance(a, LexPoint) else LexPoint(tuple(a)) for a in atoms))

    def __len__(self):
        return len(self.atoms)

    @property
    def gaps(self) -> int:
        return len(self.atoms) - 1

    def atoms_in(self, s: LexPoint, t: LexPoint) -> list:
        lo, hi = (s, t) if s <= t else (t, s)
        return [a for a in self.atoms if lo <= a <= hi]


def related(s: LexPoint, t: LexPoint, breakpoints: BreakpointSet) -> bool:
    """s ~ t: the closed interval between them holds at most one atom."""
    breakpoints.ambient.check(s)
    breakpoints.ambient.check(t)
    lo, hi = (s, t) if lex_compare(s, t) is not Verdict.GT else (t, s)
    count = 0
    for a in breakpoints.atoms:
        if lex_compare(lo, a) is not Verdict.GT and lex_compare(a, hi) is not Verdict.GT:
            count += 1
    return count <= 1


###############################################################################
# Densification
###############################################################################


@dataclass(frozen=True)
class Block:
    """A formal copy of the rationals filling gap ``gap``; never enumerated."""

    gap: int


@dataclass(frozen=True)
class DensifiedSet:
    source: BreakpointSet
    items: tuple

    @property
    def blocks(self) -> list:
        return [x for x in self.items if isinstance(x, Block)]

    @property
    def atoms(self) -> tuple:
        return self.source.atoms


def densify(breakpoints: Union[BreakpointSet, DensifiedSet]) -> DensifiedSet:
    """Insert one formal rational block into every gap between consecutive atoms."""
    if isinstance(breakpoints, DensifiedSet):
        return breakpoints
    items = []
    for i, a in enumerate(breakpoints.atoms):
        if i:
            items.append(Block(i - 1))
        items.append(a)
    return DensifiedSet(breakpoints, tuple(items))


###############################################################################
# The mixed interval and the quotient map
###############################################################################


@dataclass(frozen=True, order=True)
class MixedPoint:
    """``atom i`` (pos None) or ``segment i`` at pos in (0, 1)."""

    slot: int
    pos: Fraction = Fraction(0)

    @classmethod
    def atom(cls, i: int) -> "MixedPoint":
        return cls(2 * i, Fraction(0))

    @classmethod
    def segment(cls, i: int, pos) -> "MixedPoint":
        pos = parse_rational(pos)
        if not 0 < pos < 1:
            raise ValidationError(f"segment position must lie strictly inside (0,1), got {pos}")
        return cls(2 * i + 1, pos)

    @property
    def is_atom(self) -> bool:
        return self.slot % 2 == 0

    @property
    def index(self) -> int:
        return self.slot // 2

    def __str__(self):
        if self.is_atom:
            return f"atom {self.index}"
        return f"segment {self.index} @ {self.pos}"

    def to_json(self) -> dict:
        if self.is_atom:
            return {"atom": self.index}
        return {"segment": self.index, "pos": format_rational(self.pos)}

    @classmethod
    def from_json(cls, data) -> "MixedPoint":
        if not isinstance(data, dict):
            raise ValidationError(f"bad mixed-interval point {data!r}")
        if "atom" in data:
            return cls.atom(int(data["atom"]))
        if "segment" in data:
            return cls.segment(int(data["segment"]), data["pos"])
        raise ValidationError(f"bad mixed-interval point {data!r}")


@dataclass(frozen=True)
class MixedInterval:
    """``atoms`` atoms glued alternately to ``atoms - 1`` open unit segments."""

    atoms: int

    def __post_init__(self):
        if self.atoms < 1:
            raise ValidationError("a mixed interval needs at least one atom")

    @property
    def segments(self) -> int:
        return self.atoms - 1

    @property
    def bottom(self) -> MixedPoint:
        return MixedPoint.atom(0)

    @property
    def top(self) -> MixedPoint:
        return MixedPoint.atom(self.atoms - 1)

    def contains(self, p: MixedPoint) -> bool:
        return isinstance(p, MixedPoint) and 0 <= p.slot <= 2 * (self.atoms - 1)

    def check(self, p: MixedPoint) -> MixedPoint:
        if not self.contains(p):
            raise ValidationError(f"{p} is not a point of a mixed interval with {self.atoms} atoms")
        return p


def first_difference(a: LexPoint, b: LexPoint) -> int:
    for i, (x, y) in enumerate(zip(a.coords, b.coords)):
        if x != y:
            return i
    raise ValueError("points are equal")


@dataclass(frozen=True)
class QuotientMap:
    """p: I -> J for a densified breakpoint set."""

    source: DensifiedSet
    target: MixedInterval

    @property
    def breakpoints(self) -> BreakpointSet:
        return self.source.source

    @property
    def ambient(self) -> LexInterval:
        return self.breakpoints.ambient

    @cached_property
    def _pivots(self) -> tuple:
        atoms = self.breakpoints.atoms
        return tuple(first_difference(a, b) for a, b in zip(atoms, atoms[1:]))

    def __call__(self, t: LexPoint) -> MixedPoint:
        if not self.ambient.contains(t):
            raise ValidationError(f"{t} lies outside the ambient interval")
        atoms = self.breakpoints.atoms
        i = bisect_left(atoms, t)
        if i < len(atoms) and atoms[i] == t:
            return MixedPoint.atom(i)
        gap = i - 1
        lo, hi = atoms[gap], atoms[i]
        d = self._pivots[gap]
        pos = (t.coords[d] - lo.coords[d]) / (hi.coords[d] - lo.coords[d])
        if pos == 0:
            return MixedPoint.atom(gap)
        if pos == 1:
            return MixedPoint.atom(i)
        return MixedPoint.segment(gap, pos)

    def fiber(self, y: MixedPoint) -> tuple[LexPoint, LexPoint]:
        """Closed preimage [lo, hi] of a point of J."""
        self.target.check(y)
        atoms = self.breakpoints.atoms
        dims = self.ambient.dims
        one, zero = Fraction(1), Fraction(0)
        if y.is_atom:
            i = y.index
            a = atoms[i]
            if i > 0:
                d = self._pivots[i - 1]
                lo = LexPoint(a.coords[: d + 1] + (zero,) * (dims - d - 1))
            else:
                lo = a
            if i < len(atoms) - 1:
                d = self._pivots[i]
                hi = LexPoint(a.coords[: d + 1] + (one,) * (dims - d - 1))
            else:
                hi = a
            return lo, hi
        i = y.index
        a, b = atoms[i], atoms[i + 1]
        d = self._pivots[i]
        v = a.coords[d] + y.pos * (b.coords[d] - a.coords[d])
        head = a.coords[:d] + (v,)
        return (LexPoint(head + (zero,) * (dims - d - 1)), LexPoint(head + (one,) * (dims - d - 1)))

    def representative(self, y: MixedPoint) -> LexPoint:
        """Atom classes are represented by the atom, segment classes by the
        bottom of their fiber."""
        if y.is_atom:
            return self.breakpoints.atoms[y.index]
        return self.fiber(y)[0]


def quotient_by_breakpoints(breakpoints: Union[BreakpointSet, DensifiedSet]) -> tuple[MixedInterval, QuotientMap]:
    dense = densify(breakpoints)
    J = MixedInterval(len(dense.atoms))
    return J, QuotientMap(dense, J)


###############################################################################
# Class structure checks
###############################################################################


def densified_class(t: LexPoint, dense: DensifiedSet) -> tuple:
    """Class key of t under the densified relation, computed by direct scan.

    Returns ("atom", i) or ("gap", i, position); independent of the bisect
    and cached pivots used by ``QuotientMap``.
    """
    atoms = dense.atoms
    for i, a in enumerate(atoms):
        if lex_compare(a, t) is Verdict.EQ:
            return ("atom", i)
    below = [i for i, a in enumerate(atoms) if lex_compare(a, t) is Verdict.LT]
    i = max(below)
    a, b = atoms[i], atoms[i + 1]
    d = 0
    while a.coords[d] == b.coords[d]:
        d += 1
    lo_slab = t.coords[: d + 1] == a.coords[: d + 1]
    hi_slab = t.coords[: d + 1] == b.coords[: d + 1]
    if lo_slab:
        return ("atom", i)
    if hi_slab:
        return ("atom", i + 1)
    span = b.coords[d] - a.coords[d]
    return ("gap", i, (t.coords[d] - a.coords[d]) / span)


def dense_related(s: LexPoint, t: LexPoint, dense: DensifiedSet) -> bool:
    """s ~ t against the densified set: count atoms plus formal block points
    in [s, t].  A block contributes infinitely many points unless s and t sit
    at the same position of the same gap."""
    lo, hi = (s, t) if s <= t else (t, s)
    count = len(dense.source.atoms_in(lo, hi))
    ks, kt = densified_class(lo, dense), densified_class(hi, dense)
    if ks == kt:
        return count <= 1
    return False


def fibers_match_classes(breakpoints, samples: Sequence[LexPoint]) -> bool:
    """p(s) == p(t) exactly when s and t share a densified class."""
    dense = densify(breakpoints)
    _, p = quotient_by_breakpoints(dense)
    images = [p(s) for s in samples]
    keys = [densified_class(s, dense) for s in samples]
    for i in range(len(samples)):
        for j in range(i, len(samples)):
            if (images[i] == images[j]) != (keys[i] == keys[j]):
                return False
    return True


def collapse_witness(p: QuotientMap):
    """Two distinct points with the same image, or None (only when dims = 1)."""
    dims = p.ambient.dims
    if dims < 2:
        return None
    lo, hi = p.fiber(MixedPoint.atom(0))
    if lo != hi:
        return lo, hi
    for i in range(p.target.segments):
        lo, hi = p.fiber(MixedPoint.segment(i, Fraction(1, 2)))
        if lo != hi:
            return lo, hi
    return None
