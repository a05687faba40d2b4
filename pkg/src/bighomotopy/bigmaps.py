"""Cellwise-constant maps from (interval x finite space) into a finite space.

A 1-dimensional cell complex on an ordered carrier is a sorted list of
atoms containing both endpoints; its cells are the atoms and the open gaps
between consecutive atoms.  A ``CellMap`` assigns a target point to every
(cell, u) with u in a finite parameter space C.  Paths and loops are cell
maps with a one-point C.

The module also carries the loop algebra (concatenation through the wedge
reparameterization, reversal, pull-back along a quotient map) and the
density reduction pipeline: quotient the interval by the map's atoms,
define g on the quotient by representatives, and check that
f(t, u) and g(p(t), u) are equivalent in the target.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from ._common import ValidationError
from .finspace import FinSpace, equiv_classes, point_space, preimage_continuous, product
from .lexint import (
    LexInterval,
    LexPoint,
    WedgePoint,
    reverse_point,
    separating_point,
    wedge_map,
    wedge_section,
)
from .quotient import BreakpointSet, MixedInterval, MixedPoint, QuotientMap, quotient_by_breakpoints

Carrier = Union[LexInterval, MixedInterval]


@dataclass(frozen=True, order=True)
class Cell:
    """Atom i is slot 2i, gap i (between atoms i and i+1) is slot 2i+1."""

    slot: int

    @classmethod
    def atom(cls, i: int) -> "Cell":
        return cls(2 * i)

    @classmethod
    def gap(cls, i: int) -> "Cell":
        return cls(2 * i + 1)

    @property
    def is_atom(self) -> bool:
        return self.slot % 2 == 0

    @property
    def index(self) -> int:
        return self.slot // 2

    def __str__(self):
        return f"{'atom' if self.is_atom else 'gap'}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Cell":
        kind, _, idx = text.partition(":")
        try:
            i = int(idx)
        except ValueError:
            raise ValidationError(f"bad cell name {text!r}") from None
        if kind == "atom":
            return cls.atom(i)
        if kind == "gap":
            return cls.gap(i)
        raise ValidationError(f"bad cell name {text!r}")


@dataclass(frozen=True)
class CellComplex1D:
    carrier: Carrier
    atoms: tuple

    def __post_init__(self):
        atoms = tuple(sorted(set(self.atoms)))
        for a in atoms:
            self.carrier.check(a)
        if not atoms or atoms[0] != self.carrier.bottom or atoms[-1] != self.carrier.top:
            raise ValidationError("a cell complex must have both endpoints as atoms")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def from_breakpoints(cls, breakpoints: BreakpointSet) -> "CellComplex1D":
        return cls(breakpoints.ambient, breakpoints.atoms)

    @classmethod
    def on_mixed(cls, J: MixedInterval) -> "CellComplex1D":
        return cls(J, tuple(MixedPoint.atom(i) for i in range(J.atoms)))

    @property
    def breakpoints(self) -> BreakpointSet:
        if not isinstance(self.carrier, LexInterval):
            raise ValidationError("breakpoints exist only on a lexicographic interval")
        return BreakpointSet(self.carrier, self.atoms)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    def cells(self) -> list:
        return [Cell(s) for s in range(2 * len(self.atoms) - 1)]

    def locate(self, point) -> Cell:
        self.carrier.check(point)
        i = bisect_left(self.atoms, point)
        if i < len(self.atoms) and self.atoms[i] == point:
            return Cell.atom(i)
        return Cell.gap(i - 1)

    def star(self, cell: Cell) -> list:
        """The cell plus the gaps every neighbourhood of it meets."""
        if not cell.is_atom:
            return [cell]
        i = cell.index
        out = [cell]
        if i > 0:
            out.append(Cell.gap(i - 1))
        if i < len(self.atoms) - 1:
            out.append(Cell.gap(i))
        return out

    def gap_sample(self, i: int):
        lo, hi = self.atoms[i], self.atoms[i + 1]
        if isinstance(self.carrier, LexInterval):
            return separating_point(lo, hi)
        return mixed_between(lo, hi)


def mixed_between(x: MixedPoint, y: MixedPoint) -> MixedPoint:
    """A point strictly between x < y in a mixed interval."""
    if not x < y:
        raise ValidationError("need x < y")
    half = Fraction(1, 2)
    if x.slot == y.slot:
        return MixedPoint(x.slot, (x.pos + y.pos) / 2)
    if not x.is_atom:
        return MixedPoint(x.slot, (x.pos + 1) / 2)
    if x.slot + 1 == y.slot:
        return MixedPoint(y.slot, y.pos / 2)
    return MixedPoint.segment(x.index, half)


def cell_space(complex_: CellComplex1D) -> FinSpace:
    """Finite model of the interval: gaps open, an atom's neighbourhood adds its gaps."""
    cells = complex_.cells()
    return FinSpace(tuple(cells), {c: set(complex_.star(c)) for c in cells})


@dataclass(frozen=True)
class CellMap:
    complex: CellComplex1D
    cspace: FinSpace
    target: FinSpace
    values: Mapping = field(hash=False, compare=False)

    def __post_init__(self):
        table = dict(self.values)
        for c in self.complex.cells():
            for u in self.cspace.points:
                if (c, u) not in table:
                    raise ValidationError(f"no value for ({c}, {u!r})")
                if table[(c, u)] not in self.target:
                    raise ValidationError(f"value {table[(c, u)]!r} at ({c}, {u!r}) is not in the target")
        if len(table) != len(self.complex.cells()) * len(self.cspace):
            raise ValidationError("values given for cells outside the complex")
        object.__setattr__(self, "values", table)

    def __eq__(self, other):
        return (
            isinstance(other, CellMap)
            and self.complex == other.complex
            and self.cspace == other.cspace
            and self.target == other.target
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.complex, self.cspace, self.target))

    def value(self, cell: Cell, u=None):
        return self.values[(cell, self._u(u))]

    def at(self, point, u=None):
        return self.values[(self.complex.locate(point), self._u(u))]

    def _u(self, u):
        if u is None:
            if len(self.cspace) != 1:
                raise ValidationError("a parameter point is required when C has several points")
            return self.cspace.points[0]
        return u

    @property
    def is_path(self) -> bool:
        return len(self.cspace) == 1

    def sequence(self, u=None) -> tuple:
        """Values along the cells: atom 0, gap 0, atom 1, ..., last atom."""
        u = self._u(u)
        return tuple(self.values[(c, u)] for c in self.complex.cells())

    @property
    def start(self):
        return self.sequence()[0]

    @property
    def end(self):
        return self.sequence()[-1]

    def is_loop(self, basepoint) -> bool:
        return self.is_path and self.start == basepoint and self.end == basepoint


def path(atoms: Sequence, sequence: Sequence, target: FinSpace, carrier: Optional[Carrier] = None) -> CellMap:
    """A path from its atoms and its value sequence (atom, gap, atom, ...)."""
    atoms = tuple(a if isinstance(a, (LexPoint, MixedPoint)) else LexPoint(tuple(a)) for a in atoms)
    if carrier is None:
        carrier = LexInterval(atoms[0].dims)
    complex_ = CellComplex1D(carrier, atoms)
    cells = complex_.cells()
    if len(sequence) != len(cells):
        raise ValidationError(f"{len(cells)} cell values expected, got {len(sequence)}")
    C = point_space()
    return CellMap(complex_, C, target, {(c, "*"): v for c, v in zip(cells, sequence)})


def loop(atoms, sequence, target, basepoint, carrier=None) -> CellMap:
    f = path(atoms, sequence, target, carrier)
    if not f.is_loop(basepoint):
        raise ValidationError(f"a loop must start and end at {basepoint!r}")
    return f


###############################################################################
# Continuity
###############################################################################


def check_continuity(f: CellMap) -> tuple[bool, Optional[tuple]]:
    """Exact criterion for cellwise-constant maps.

    For every cell c, parameter u, cell c' in the star of c and u' in N_u:
    f(c', u') must lie in N_{f(c, u)}.  Returns (ok, violating (c, u)).
    """
    C, X = f.cspace, f.target
    for c in f.complex.cells():
        star = f.complex.star(c)
        for u in C.points:
            allowed = X.nbhd[f.values[(c, u)]]
            for c2 in star:
                for u2 in C.nbhd[u]:
                    if f.values[(c2, u2)] not in allowed:
                        return False, (c, u)
    return True, None


def continuity_oracle(f: CellMap) -> bool:
    """Open-preimage continuity on (cell space) x C."""
    domain = product(cell_space(f.complex), f.cspace)
    return preimage_continuous(domain, f.target, lambda cu: f.values[cu])


###############################################################################
# Loop algebra
###############################################################################


def _require_path(f: CellMap):
    if not f.is_path:
        raise ValidationError("a path (one-point parameter space) is required")
    if not isinstance(f.complex.carrier, LexInterval):
        raise ValidationError("paths must live on a lexicographic interval")


def concat(f: CellMap, g: CellMap) -> CellMap:
    """f then g on the wedge, pulled back to I through the wedge isomorphism."""
    _require_path(f)
    _require_path(g)
    if f.complex.carrier != g.complex.carrier:
        raise ValidationError("paths live on intervals of different dimension")
    if f.target != g.target:
        raise ValidationError("paths map into different spaces")
    if f.end != g.start:
        raise ValidationError(f"endpoint mismatch: {f.end!r} != {g.start!r}")
    atoms = [wedge_section(WedgePoint(1, a)) for a in f.complex.atoms]
    atoms += [wedge_section(WedgePoint(2, b)) for b in g.complex.atoms[1:]]
    seq = f.sequence() + g.sequence()[1:]
    return path(atoms, seq, f.target, f.complex.carrier)


def split(h: CellMap) -> tuple[CellMap, CellMap]:
    """Inverse of ``concat``: read h through the wedge map on each copy."""
    _require_path(h)
    mid = h.complex.carrier.middle
    if mid not in h.complex.atoms:
        raise ValidationError("the middle point is not an atom; not a concatenation")
    k = h.complex.atoms.index(mid)
    seq = h.sequence()
    first = [wedge_map(a).point for a in h.complex.atoms[: k + 1]]
    second = [LexInterval(mid.dims).bottom] + [wedge_map(a).point for a in h.complex.atoms[k + 1 :]]
    return (
        path(first, seq[: 2 * k + 1], h.target, h.complex.carrier),
        path(second, seq[2 * k :], h.target, h.complex.carrier),
    )


def reverse(f: CellMap) -> CellMap:
    """Run the map backwards: atoms through t -> 1 - t, cells mirrored."""
    if not isinstance(f.complex.carrier, LexInterval):
        raise ValidationError("reversal is defined on a lexicographic interval")
    atoms = tuple(reverse_point(a) for a in f.complex.atoms)
    cx = CellComplex1D(f.complex.carrier, atoms)
    last = len(f.complex.cells()) - 1
    values = {(Cell(last - c.slot), u): v for (c, u), v in f.values.items()}
    return CellMap(cx, f.cspace, f.target, values)


def reparam(f: CellMap, p: QuotientMap) -> CellMap:
    """Pull f back along p: the value at t is f's value at p(t)."""
    if f.complex.carrier != p.target:
        raise ValidationError("f does not live on the target of p")
    if f.complex.atoms != tuple(MixedPoint.atom(i) for i in range(p.target.atoms)):
        raise ValidationError("f must have every atom of the quotient as an atom")
    atoms = []
    # source cell of f for every new cell, in order
    owners = []
    for j, y in enumerate(f.complex.atoms):
        lo, hi = p.fiber(y)
        if j:
            owners.append(Cell.gap(j - 1))
        atoms.append(lo)
        owners.append(Cell.atom(j))
        if hi != lo:
            owners += [Cell.atom(j), Cell.atom(j)]
            atoms.append(hi)
    cx = CellComplex1D(p.ambient, tuple(atoms))
    if len(cx.atoms) != len(atoms):
        raise ValidationError("fibers of p overlap; p is not compatible with f")
    values = {
        (c, u): f.value(owner, u)
        for c, owner in zip(cx.cells(), owners)
        for u in f.cspace.points
    }
    return CellMap(cx, f.cspace, f.target, values)


###############################################################################
# Density reduction
###############################################################################


@dataclass(frozen=True)
class Reduction:
    J: MixedInterval
    p: QuotientMap
    g: CellMap


def density_reduce(f: CellMap) -> Reduction:
    """Quotient I by f's atoms and define g on the quotient by representatives."""
    if not isinstance(f.complex.carrier, LexInterval):
        raise ValidationError("density reduction starts from a lexicographic interval")
    ok, witness = check_continuity(f)
    if not ok:
        raise ValidationError(f"f is not continuous at {witness[0]}, {witness[1]!r}")
    J, p = quotient_by_breakpoints(f.complex.breakpoints)
    cx = CellComplex1D.on_mixed(J)
    values = {}
    for c in cx.cells():
        y = MixedPoint.atom(c.index) if c.is_atom else MixedPoint.segment(c.index, Fraction(1, 2))
        t = p.representative(y)
        for u in f.cspace.points:
            values[(c, u)] = f.at(t, u)
    g = CellMap(cx, f.cspace, f.target, values)
    return Reduction(J, p, g)


def witness_points(f: CellMap, p: QuotientMap) -> list:
    """Atoms, one interior point per gap, and the fiber edges next to atoms.

    Both maps are constant on cells and p is constant on slabs, so these
    points meet every (f-cell, p-class) combination.
    """
    pts = set(f.complex.atoms) | set(p.breakpoints.atoms)
    merged = CellComplex1D(f.complex.carrier, tuple(pts))
    for i in range(merged.n_atoms - 1):
        pts.add(merged.gap_sample(i))
    for i in range(p.target.atoms):
        lo, hi = p.fiber(MixedPoint.atom(i))
        pts.update((lo, hi))
    return sorted(pts)


def verify_reduction(f: CellMap, g: CellMap, p: QuotientMap) -> bool:
    """f(t, u) and g(p(t), u) lie in the same equivalence class of the target."""
    if g.complex.carrier != p.target or f.complex.carrier != p.ambient:
        raise ValidationError("shapes of f, g and p do not fit together")
    if f.target != g.target or f.cspace != g.cspace:
        raise ValidationError("f and g must share parameter and target spaces")
    klass = {}
    for k, c in enumerate(equiv_classes(f.target)):
        for x in c:
            klass[x] = k
    for t in witness_points(f, p):
        y = p(t)
        for u in f.cspace.points:
            if klass[f.at(t, u)] != klass[g.at(y, u)]:
                return False
    return True


def collapses(p: QuotientMap, samples: Sequence[LexPoint]) -> Optional[tuple]:
    """Two distinct samples with the same image under p, if any."""
    seen = {}
    for s in samples:
        y = p(s)
        if y in seen and seen[y] != s:
            return seen[y], s
        seen.setdefault(y, s)
    return None
