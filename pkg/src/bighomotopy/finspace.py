"""Finite topological spaces stored by their minimal open neighbourhoods.

For a finite space the intersection N_x of all open sets containing x is
itself open, so the family {N_x} is the smallest basis and determines the
topology.  Continuity, the equivalence generated by y in N_x, and homotopy
certificates for maps that switch at t = 1/2 are all decided from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import chain, combinations
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from ._common import RefusalError, ValidationError


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class FinSpace:
    points: tuple
    nbhd: Mapping = field(compare=False, hash=False)
    _key: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        points = tuple(self.points)
        if len(set(points)) != len(points):
            raise ValidationError("space points must be distinct")
        nbhd = {}
        for x in points:
            if x not in self.nbhd:
                raise ValidationError(f"no minimal neighbourhood given for {x!r}")
            u = frozenset(self.nbhd[x])
            if x not in u:
                raise ValidationError(f"{x!r} is missing from its own minimal neighbourhood")
            if not u <= set(points):
                raise ValidationError(f"neighbourhood of {x!r} leaves the space")
            nbhd[x] = u
        for x in points:
            for y in nbhd[x]:
                if not nbhd[y] <= nbhd[x]:
                    raise ValidationError(f"{y!r} in N({x!r}) but N({y!r}) is not inside N({x!r})")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "nbhd", nbhd)
        object.__setattr__(self, "_key", frozenset((x, nbhd[x]) for x in points))

    def __eq__(self, other):
        return isinstance(other, FinSpace) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in self.nbhd

    def is_open(self, subset) -> bool:
        s = frozenset(subset)
        return all(self.nbhd[x] <= s for x in s)

    def opens(self) -> list:
        """Every open set (unions of minimal neighbourhoods)."""
        result = {frozenset()}
        for u in set(self.nbhd.values()):
            result |= {v | u for v in result}
        return sorted(result, key=lambda s: (len(s), sorted(map(repr, s))))


def from_opens(points: Sequence, opens: Iterable[Iterable]) -> FinSpace:
    """Validate a topology given by its open sets and keep its minimal basis."""
    points = tuple(points)
    full = frozenset(points)
    family = {frozenset(o) for o in opens}
    for o in family:
        if not o <= full:
            raise ValidationError(f"open set {sorted(map(repr, o))} leaves the space")
    if frozenset() not in family:
        raise ValidationError("the empty set must be open")
    if full not in family:
        raise ValidationError("the whole space must be open")
    for a in family:
        for b in family:
            if a | b not in family:
                raise ValidationError("open sets are not closed under union")
            if a & b not in family:
                raise ValidationError("open sets are not closed under intersection")
    nbhd = {}
    for x in points:
        u = full
        for o in family:
            if x in o:
                u = u & o
        nbhd[x] = u
    return FinSpace(points, nbhd)


def from_preorder(points: Sequence, below: Mapping) -> FinSpace:
    """N_x = every y reachable from x through ``below`` (reflexive-transitive)."""
    nbhd = {}
    for x in points:
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in below.get(y, ()):
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        nbhd[x] = seen
    return FinSpace(tuple(points), nbhd)


def discrete(points: Sequence) -> FinSpace:
    return FinSpace(tuple(points), {x: {x} for x in points})


def indiscrete(points: Sequence) -> FinSpace:
    return FinSpace(tuple(points), {x: set(points) for x in points})


def sierpinski(closed="0", open_="1") -> FinSpace:
    """Two points; only ``open_`` is an open singleton."""
    return FinSpace((closed, open_), {closed: {closed, open_}, open_: {open_}})


def point_space(label="*") -> FinSpace:
    return FinSpace((label,), {label: {label}})


def product(X: FinSpace, Y: FinSpace) -> FinSpace:
    pts = tuple((x, y) for x in X for y in Y)
    return FinSpace(pts, {(x, y): {(a, b) for a in X.nbhd[x] for b in Y.nbhd[y]} for x, y in pts})


def min_nbhd(X: FinSpace, x) -> frozenset:
    if x not in X:
        raise ValidationError(f"{x!r} is not a point of the space")
    return X.nbhd[x]


def equiv_classes(X: FinSpace) -> list:
    """Components of the relation generated by y in N_x."""
    uf = UnionFind(X.points)
    for x in X.points:
        for y in X.nbhd[x]:
            uf.union(x, y)
    classes: dict = {}
    for x in X.points:
        classes.setdefault(uf.find(x), set()).add(x)
    return [frozenset(c) for c in classes.values()]


def equivalent(X: FinSpace, x, y) -> bool:
    for c in equiv_classes(X):
        if x in c:
            return y in c
    raise ValidationError(f"{x!r} is not a point of the space")


def is_T1(X: FinSpace) -> bool:
    return all(len(X.nbhd[x]) == 1 for x in X.points)


def is_T0(X: FinSpace) -> bool:
    return len(set(X.nbhd.values())) == len(X.points)


def weight(X: FinSpace) -> int:
    """Size of the minimal basis {N_x}; equals the compact weight for finite X."""
    return len(set(X.nbhd.values()))


compact_weight = weight


###############################################################################
# Maps
###############################################################################


@dataclass(frozen=True)
class SpaceMap:
    source: FinSpace
    target: FinSpace
    assignment: Mapping = field(hash=False)

    def __post_init__(self):
        table = dict(self.assignment)
        for x in self.source.points:
            if x not in table:
                raise ValidationError(f"map is undefined at {x!r}")
            if table[x] not in self.target:
                raise ValidationError(f"{x!r} is sent outside the target")
        extra = set(table) - set(self.source.points)
        if extra:
            raise ValidationError(f"map assigns points outside the source: {sorted(map(repr, extra))}")
        object.__setattr__(self, "assignment", table)

    def __call__(self, x):
        return self.assignment[x]

    def __eq__(self, other):
        return (
            isinstance(other, SpaceMap)
            and self.source == other.source
            and self.target == other.target
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.assignment.items())))


def is_continuous(m: SpaceMap) -> bool:
    """m(N_x) inside N_{m(x)} for every x."""
    return all(
        m(y) in m.target.nbhd[m(x)] for x in m.source.points for y in m.source.nbhd[x]
    )


def preimage_continuous(source: FinSpace, target: FinSpace, fn) -> bool:
    """Oracle: every open set of the target pulls back to an open set."""
    for v in target.opens():
        pre = frozenset(x for x in source.points if fn(x) in v)
        if not source.is_open(pre):
            return False
    return True


def all_maps(X: FinSpace, Y: FinSpace):
    from itertools import product as cartesian

    for values in cartesian(Y.points, repeat=len(X.points)):
        yield SpaceMap(X, Y, dict(zip(X.points, values)))


def continuous_maps(X: FinSpace, Y: FinSpace) -> list:
    return [m for m in all_maps(X, Y) if is_continuous(m)]


###############################################################################
# Step homotopies
###############################################################################


class Tag(Enum):
    UP = "UP"  # h_i(x) in N_{h_i+1(x)}: switch to h_i+1 at t >= 1/2
    DOWN = "DOWN"  # h_i+1(x) in N_{h_i(x)}: keep h_i through t = 1/2


class HomotopyRefusal(RefusalError):
    def __init__(self, witness, link: int = 0):
        self.witness = witness
        self.link = link
        super().__init__(f"no step homotopy at link {link}: witness point {witness!r}")


@dataclass(frozen=True)
class HomotopyCertificate:
    maps: tuple
    tags: tuple

    @property
    def start(self) -> SpaceMap:
        return self.maps[0]

    @property
    def end(self) -> SpaceMap:
        return self.maps[-1]

    @property
    def fixed(self) -> frozenset:
        """Points held still by every stage of the homotopy."""
        src = self.maps[0].source
        return frozenset(x for x in src.points if len({m(x) for m in self.maps}) == 1)

    def __len__(self):
        return len(self.tags)


def _link_holds(f: SpaceMap, g: SpaceMap, tag: Tag):
    """First point breaking the link condition, or None."""
    for x in f.source.points:
        if tag is Tag.UP and f(x) not in g.target.nbhd[g(x)]:
            return x
        if tag is Tag.DOWN and g(x) not in f.target.nbhd[f(x)]:
            return x
    return None


def _check_pair(f: SpaceMap, g: SpaceMap):
    if f.source != g.source or f.target != g.target:
        raise ValidationError("maps must share source and target")
    for m in (f, g):
        if not is_continuous(m):
            raise ValidationError("homotopies connect continuous maps only")


def step_homotopy_check(f: SpaceMap, g: SpaceMap) -> HomotopyCertificate:
    """Certificate for H = f on t < 1/2, g on t >= 1/2, valid when f(x) in N_g(x)."""
    _check_pair(f, g)
    witness = _link_holds(f, g, Tag.UP)
    if witness is not None:
        raise HomotopyRefusal(witness)
    return HomotopyCertificate((f, g), (Tag.UP,))


def homotopy_chain(maps: Sequence[SpaceMap]) -> HomotopyCertificate:
    """Tag each consecutive pair UP when possible, else DOWN; refuse otherwise."""
    maps = tuple(maps)
    if not maps:
        raise ValidationError("a chain needs at least one map")
    tags = []
    for i, (f, g) in enumerate(zip(maps, maps[1:])):
        _check_pair(f, g)
        if _link_holds(f, g, Tag.UP) is None:
            tags.append(Tag.UP)
        elif _link_holds(f, g, Tag.DOWN) is None:
            tags.append(Tag.DOWN)
        else:
            raise HomotopyRefusal(_link_holds(f, g, Tag.UP), i)
    if len(maps) == 1:
        _check_pair(maps[0], maps[0])
    return HomotopyCertificate(maps, tuple(tags))


def switch_space(tag: Tag) -> FinSpace:
    """Two-point model of [0,1] around t = 1/2: the side that owns 1/2 is closed."""
    if tag is Tag.UP:
        return sierpinski(closed="late", open_="early")
    return sierpinski(closed="early", open_="late")


def switch_oracle(f: SpaceMap, g: SpaceMap, tag: Tag) -> bool:
    """Continuity of H(x, early) = f(x), H(x, late) = g(x) on X x S by open preimages."""
    S = switch_space(tag)
    XS = product(f.source, S)
    return preimage_continuous(XS, f.target, lambda p: f(p[0]) if p[1] == "early" else g(p[0]))


def verify_certificate(cert: HomotopyCertificate) -> tuple[bool, Optional[int]]:
    """Check every map, every tagged link, and each link against the switch oracle.

    Returns (ok, index of the first failing link or map).
    """
    if len(cert.maps) != len(cert.tags) + 1:
        return False, 0
    for i, m in enumerate(cert.maps):
        if not is_continuous(m) or m.source != cert.maps[0].source or m.target != cert.maps[0].target:
            return False, i
    for i, (f, g, tag) in enumerate(zip(cert.maps, cert.maps[1:], cert.tags)):
        if _link_holds(f, g, tag) is not None:
            return False, i
        if not switch_oracle(f, g, tag):
            return False, i
    return True, None


###############################################################################
# Enumeration of small topologies
###############################################################################


def close_subbase(points: Sequence, subbase: Iterable[Iterable]) -> frozenset:
    """Smallest topology containing the given sets."""
    full = frozenset(points)
    sets = {frozenset(s) for s in subbase} | {full}
    basis = {full}
    for s in sets:
        basis |= {b & s for b in basis}
    opens = {frozenset()}
    for b in basis:
        opens |= {o | b for o in opens}
    return frozenset(opens)


def all_subsets(points: Sequence) -> list:
    pts = list(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(pts, r) for r in range(len(pts) + 1))]
