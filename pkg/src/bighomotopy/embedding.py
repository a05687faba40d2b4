"""Order embedding of a finite chain into the lexicographic interval.

Elements are placed one at a time in a chosen insertion sequence.  For the
next element, L is the largest coordinate-0 value among already placed
smaller elements and U the smallest among larger ones (0 and 1 when there
are none).  If a value strictly between L and U can be emitted, it becomes
coordinate 0 and every later coordinate is 1/2.  Otherwise coordinate 0 is
set to L and the same step runs on coordinate 1, restricted to placed
elements that agree with the coordinates settled so far.  Exhausting every
coordinate raises ``CapacityExceeded``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence

from ._common import RefusalError, ValidationError, format_rational, parse_rational
from .lexint import HALF, LexInterval, LexPoint
from .orders import FinOrder


class CapacityExceeded(RefusalError):
    def __init__(self, label, bounds):
        self.label = label
        self.bounds = bounds
        super().__init__(f"no room for {label!r}: every coordinate saturated (bounds {bounds})")


class TraceError(ValidationError):
    """A trace that does not replay to a consistent embedding."""


@dataclass(frozen=True)
class GridPolicy:
    """EXACT emits midpoints; DYADIC(k) emits multiples of 2^-k only."""

    resolution: Optional[int] = None

    def __post_init__(self):
        if self.resolution is not None and (not isinstance(self.resolution, int) or self.resolution < 1):
            raise ValidationError(f"dyadic resolution must be >= 1, got {self.resolution!r}")

    @classmethod
    def exact(cls) -> "GridPolicy":
        return cls(None)

    @classmethod
    def dyadic(cls, k: int) -> "GridPolicy":
        return cls(k)

    @classmethod
    def parse(cls, text: str) -> "GridPolicy":
        text = text.strip().lower()
        if text == "exact":
            return cls.exact()
        if text.startswith("dyadic:"):
            try:
                return cls.dyadic(int(text.split(":", 1)[1]))
            except ValueError:
                pass
        raise ValidationError(f"grid must be 'exact' or 'dyadic:K', got {text!r}")

    @property
    def is_exact(self) -> bool:
        return self.resolution is None

    def __str__(self):
        return "exact" if self.is_exact else f"dyadic:{self.resolution}"

    def emit(self, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
        """A value strictly inside (lo, hi), or None when there is none."""
        if not lo < hi:
            return None
        mid = (lo + hi) / 2
        if self.is_exact:
            return mid
        scale = 2**self.resolution
        # nearest grid point to mid, lower on ties
        below = Fraction(floor(mid * scale), scale)
        above = below if below == mid else below + Fraction(1, scale)
        if mid - below <= above - mid:
            order = (below, above)
        else:
            order = (above, below)
        for cand in order:
            if lo < cand < hi:
                return cand
        # both neighbours of mid fall outside (lo, hi) only when no grid point is inside
        return None


@dataclass(frozen=True)
class InsertionOrder:
    base: FinOrder
    sequence: tuple

    def __post_init__(self):
        seq = tuple(self.sequence)
        if sorted(map(repr, seq)) != sorted(map(repr, self.base.labels)) or len(set(seq)) != len(seq):
            raise ValidationError("insertion sequence must be a permutation of the order's labels")
        object.__setattr__(self, "sequence", seq)

    @classmethod
    def in_order(cls, base: FinOrder) -> "InsertionOrder":
        return cls(base, base.labels)


@dataclass(frozen=True)
class Step:
    """How one element was placed.

    ``bounds`` holds (L, U) for each coordinate visited; every coordinate
    before ``coordinate`` saturated (was set to its L).
    """

    label: object
    coordinate: int
    bounds: tuple
    value: Fraction

    @property
    def saturations(self) -> int:
        return self.coordinate

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "coordinate": self.coordinate,
            "bounds": [[format_rational(lo), format_rational(hi)] for lo, hi in self.bounds],
            "value": format_rational(self.value),
        }

    @classmethod
    def from_json(cls, data) -> "Step":
        try:
            return cls(
                data["label"],
                int(data["coordinate"]),
                tuple((parse_rational(lo), parse_rational(hi)) for lo, hi in data["bounds"]),
                parse_rational(data["value"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise TraceError(f"malformed trace step {data!r}") from exc


@dataclass(frozen=True)
class EmbeddingTrace:
    order: FinOrder
    dims: int
    grid: GridPolicy
    steps: tuple = field(default=())

    @property
    def sequence(self) -> tuple:
        return tuple(s.label for s in self.steps)

    def saturation_count(self) -> int:
        return sum(s.saturations for s in self.steps)

    def to_json(self) -> dict:
        return {
            "labels": list(self.order.labels),
            "dims": self.dims,
            "grid": str(self.grid),
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, data) -> "EmbeddingTrace":
        try:
            return cls(
                FinOrder(tuple(data["labels"])),
                int(data["dims"]),
                GridPolicy.parse(data["grid"]),
                tuple(Step.from_json(s) for s in data["steps"]),
            )
        except (KeyError, TypeError) as exc:
            raise TraceError("malformed trace document") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "EmbeddingTrace":
        return cls.from_json(json.loads(text))


def _bounds(order: FinOrder, label, placed: dict, settled: Sequence[Fraction], coord: int):
    lo, hi = Fraction(0), Fraction(1)
    lower = upper = False
    prefix = tuple(settled)
    for other, point in placed.items():
        if point.coords[:coord] != prefix:
            continue
        v = point.coords[coord]
        if order.lt(other, label):
            lo = v if not lower else max(lo, v)
            lower = True
        else:
            hi = v if not upper else min(hi, v)
            upper = True
    return lo, hi


def _place(order, label, placed, dims, grid) -> tuple[LexPoint, Step]:
    settled: list = []
    bounds = []
    for coord in range(dims):
        lo, hi = _bounds(order, label, placed, settled, coord)
        bounds.append((lo, hi))
        value = grid.emit(lo, hi)
        if value is not None:
            point = LexPoint(tuple(settled) + (value,) + (HALF,) * (dims - coord - 1))
            return point, Step(label, coord, tuple(bounds), value)
        settled.append(lo)
    raise CapacityExceeded(label, tuple(bounds))


def embed_order(
    insertion: InsertionOrder | FinOrder,
    target: LexInterval | int,
    grid: GridPolicy | None = None,
) -> tuple[dict, EmbeddingTrace]:
    """Embed ``insertion.base`` into ``target`` processing ``insertion.sequence``.

    Returns the label -> point map and the trace of bounds used per element.
    The first element always lands on the all-1/2 point.
    """
    if isinstance(insertion, FinOrder):
        insertion = InsertionOrder.in_order(insertion)
    if isinstance(target, int):
        target = LexInterval(target)
    grid = grid or GridPolicy.exact()
    order = insertion.base
    if len(order) < 1:
        raise ValidationError("cannot embed an empty order")
    placed: dict = {}
    steps = []
    for label in insertion.sequence:
        point, step = _place(order, label, placed, target.dims, grid)
        placed[label] = point
        steps.append(step)
    return placed, EmbeddingTrace(order, target.dims, grid, tuple(steps))


def replay(trace: EmbeddingTrace) -> dict:
    """Rebuild the map from a trace, re-deriving and checking every bound."""
    if trace.dims < 1:
        raise TraceError("trace dimension must be positive")
    if sorted(map(repr, trace.sequence)) != sorted(map(repr, trace.order.labels)):
        raise TraceError("trace does not place every element exactly once")
    placed: dict = {}
    for step in trace.steps:
        if not 0 <= step.coordinate < trace.dims or len(step.bounds) != step.coordinate + 1:
            raise TraceError(f"inconsistent coordinate record for {step.label!r}")
        settled = []
        for coord, recorded in enumerate(step.bounds):
            derived = _bounds(trace.order, step.label, placed, settled, coord)
            if derived != tuple(recorded):
                raise TraceError(f"bound mismatch for {step.label!r} at coordinate {coord}: recorded {recorded}, derived {derived}")
            value = trace.grid.emit(*derived)
            if coord < step.coordinate:
                if value is not None:
                    raise TraceError(f"{step.label!r} recorded as saturated at coordinate {coord} but room exists")
                settled.append(derived[0])
            else:
                if value is None or value != step.value:
                    raise TraceError(f"emitted value mismatch for {step.label!r}")
        placed[step.label] = LexPoint(tuple(settled) + (step.value,) + (HALF,) * (trace.dims - step.coordinate - 1))
    return placed


def is_order_embedding(order: FinOrder, mapping: dict) -> bool:
    """Oracle: sorting the images reproduces the order's ranks."""
    if set(mapping) != set(order.labels):
        return False
    by_image = sorted(order.labels, key=lambda x: mapping[x].coords)
    if by_image != list(order.labels):
        return False
    images = [mapping[x].coords for x in order.labels]
    return all(a < b for a, b in zip(images, images[1:]))
