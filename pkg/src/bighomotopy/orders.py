"""Finite total orders and monotone maps between them.

Includes both directions of the injection/surjection duality: a monotone
injection h: A -> J (A a subset of I) yields the surjection
g(j) = max{i in A | h(i) <= j} (falling back to the minimum of I), and a
monotone surjection g: J -> I yields the injection f(t) = max g^-1(t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable, Optional

from ._common import ValidationError


class Extension(Enum):
    NONE = "none"
    SUP = "sup"
    INF = "inf"


@dataclass(frozen=True)
class FinOrder:
    """A finite chain; the order is the order of ``labels``."""

    labels: tuple
    rank: dict = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        rank = {x: i for i, x in enumerate(labels)}
        if len(rank) != len(labels):
            raise ValidationError("order labels must be distinct")
        object.__setattr__(self, "rank", rank)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, x):
        return x in self.rank

    @property
    def bottom(self):
        if not self.labels:
            raise ValidationError("empty order has no minimum")
        return self.labels[0]

    @property
    def top(self):
        if not self.labels:
            raise ValidationError("empty order has no maximum")
        return self.labels[-1]

    def le(self, x, y) -> bool:
        return self.rank[x] <= self.rank[y]

    def lt(self, x, y) -> bool:
        return self.rank[x] < self.rank[y]

    def max_of(self, xs: Iterable):
        xs = list(xs)
        return max(xs, key=self.rank.__getitem__) if xs else None

    def min_of(self, xs: Iterable):
        xs = list(xs)
        return min(xs, key=self.rank.__getitem__) if xs else None

    def check_member(self, x):
        if x not in self.rank:
            raise ValidationError(f"{x!r} is not an element of the order")


def chain(n: int, prefix: str = "x") -> FinOrder:
    return FinOrder(tuple(f"{prefix}{i}" for i in range(n)))


def reverse(order: FinOrder) -> FinOrder:
    """Same elements, opposite order: rank'(x) = n-1-rank(x)."""
    return FinOrder(tuple(reversed(order.labels)))


@dataclass(frozen=True)
class MonotoneMap:
    """A map given by a finite graph; off-graph values come from ``extension``.

    With SUP the value at x is the largest graph image at or below x (the
    codomain minimum if none); INF is the dual; NONE leaves x undefined.
    """

    domain: FinOrder
    codomain: FinOrder
    graph: tuple
    extension: Extension = Extension.NONE

    def __post_init__(self):
        pairs = tuple((a, b) for a, b in (tuple(p) for p in self.graph))
        object.__setattr__(self, "graph", pairs)
        if not isinstance(self.extension, Extension):
            object.__setattr__(self, "extension", Extension(self.extension))

    @classmethod
    def from_dict(cls, domain, codomain, mapping: dict, extension=Extension.NONE):
        return cls(domain, codomain, tuple(mapping.items()), extension)

    @property
    def table(self) -> dict:
        return dict(self.graph)

    def __call__(self, x):
        self.domain.check_member(x)
        table = self.table
        if x in table:
            return table[x]
        if self.extension is Extension.SUP:
            below = [table[a] for a in table if self.domain.le(a, x)]
            return self.codomain.max_of(below) if below else self.codomain.bottom
        if self.extension is Extension.INF:
            above = [table[a] for a in table if self.domain.le(x, a)]
            return self.codomain.min_of(above) if above else self.codomain.top
        raise ValidationError(f"map is undefined at {x!r}")

    def is_defined(self, x) -> bool:
        return x in self.table or self.extension is not Extension.NONE

    def image(self) -> set:
        return {b for _, b in self.graph}


@dataclass(frozen=True)
class Violation:
    kind: str
    pair: tuple

    def __str__(self):
        return f"{self.kind}: {self.pair!r}"


def validate(m: MonotoneMap) -> tuple[bool, Optional[Violation]]:
    """Check single-valuedness, membership and monotonicity on the graph."""
    seen = {}
    for a, b in m.graph:
        if a not in m.domain:
            return False, Violation("not in domain", (a, b))
        if b not in m.codomain:
            return False, Violation("not in codomain", (a, b))
        if a in seen:
            return False, Violation("duplicate input", ((a, seen[a]), (a, b)))
        seen[a] = b
    items = sorted(seen.items(), key=lambda p: m.domain.rank[p[0]])
    for (x, fx), (y, fy) in zip(items, items[1:]):
        if m.codomain.lt(fy, fx):
            return False, Violation("order reversed", ((x, fx), (y, fy)))
    return True, None


def is_strictly_monotone(m: MonotoneMap) -> bool:
    ok, _ = validate(m)
    if not ok:
        return False
    items = sorted(m.graph, key=lambda p: m.domain.rank[p[0]])
    return all(m.codomain.lt(fx, fy) for (_, fx), (_, fy) in zip(items, items[1:]))


def is_surjective(m: MonotoneMap) -> bool:
    return all(any(m(x) == y for x in m.domain if m.is_defined(x)) for y in m.codomain)


def _require_valid(m: MonotoneMap):
    ok, violation = validate(m)
    if not ok:
        raise ValidationError(f"not a monotone map ({violation})")


def surjection_from_injection(h: MonotoneMap, source: Optional[FinOrder] = None) -> MonotoneMap:
    """g(j) = max S_j where S_j = {i in A | h(i) <= j}; empty S_j gives min(I).

    ``h`` is an order-preserving injection from a subset A of ``source`` (its
    domain by default) into its codomain J; A is the set of graph inputs.
    """
    source = source if source is not None else h.domain
    _require_valid(h)
    if not is_strictly_monotone(h):
        raise ValidationError("h must be strictly monotone (injective)")
    for a, _ in h.graph:
        source.check_member(a)
    target = h.codomain
    graph = []
    for j in target:
        s_j = [i for i, hi in h.graph if target.le(hi, j)]
        graph.append((j, source.max_of(s_j) if s_j else source.bottom))
    return MonotoneMap(target, source, tuple(graph))


def injection_from_surjection(g: MonotoneMap) -> MonotoneMap:
    """f(t) = max of the fiber g^-1(t); requires every fiber to be nonempty."""
    _require_valid(g)
    fibers = {t: [] for t in g.codomain}
    for s in g.domain:
        if g.is_defined(s):
            fibers[g(s)].append(s)
    graph = []
    for t, fiber in fibers.items():
        if not fiber:
            raise ValidationError(f"g is not surjective: empty fiber over {t!r}")
        graph.append((t, g.domain.max_of(fiber)))
    return MonotoneMap(g.codomain, g.domain, tuple(graph))


def compose(m1: MonotoneMap, m2: MonotoneMap) -> MonotoneMap:
    """m2 after m1, on the part of m1's graph where m2 is defined."""
    if m1.codomain != m2.domain:
        raise ValidationError("cannot compose: codomain of the first map is not the domain of the second")
    graph = tuple((a, m2(b)) for a, b in m1.graph if m2.is_defined(b))
    return MonotoneMap(m1.domain, m2.codomain, graph)


def identity(order: FinOrder) -> MonotoneMap:
    return MonotoneMap(order, order, tuple((x, x) for x in order))


def restrict(m: MonotoneMap, subset: Iterable[Hashable]) -> MonotoneMap:
    keep = set(subset)
    return MonotoneMap(m.domain, m.codomain, tuple(p for p in m.graph if p[0] in keep), m.extension)


###############################################################################
# Enumeration (oracles and tests)
###############################################################################


def strictly_monotone_injections(source: FinOrder, target: FinOrder, subset=None):
    """All strictly monotone maps subset -> target (subset defaults to source)."""
    from itertools import combinations

    dom = list(subset) if subset is not None else list(source)
    dom.sort(key=source.rank.__getitem__)
    for image in combinations(target.labels, len(dom)):
        yield MonotoneMap(source, target, tuple(zip(dom, image)))


def monotone_surjections(source: FinOrder, target: FinOrder):
    """All monotone surjections between chains: compositions of len(source)."""
    from itertools import combinations

    n, k = len(source), len(target)
    if k == 0 or k > n:
        return
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        graph = []
        for t, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
            graph.extend((source.labels[s], target.labels[t]) for s in range(lo, hi))
        yield MonotoneMap(source, target, tuple(graph))
