"""Random small instances for oracle checks.

All generators take a ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as cartesian

from .bigmaps import Cell, CellComplex1D, CellMap
from .finspace import FinSpace, all_subsets, close_subbase, continuous_maps, from_opens
from .lexint import LexInterval, LexPoint
from .orders import FinOrder


def random_order(rng: random.Random, size: int) -> FinOrder:
    labels = [f"e{i}" for i in range(size)]
    rng.shuffle(labels)
    return FinOrder(tuple(labels))


def random_rational(rng: random.Random, max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, den), den)


def random_point(rng: random.Random, dims: int, max_den: int = 8) -> LexPoint:
    return LexPoint(tuple(random_rational(rng, max_den) for _ in range(dims)))


def random_space(rng: random.Random, n: int, subbase_size: int | None = None) -> FinSpace:
    """Topology generated by a random subbase on points x0..x{n-1}."""
    points = [f"x{i}" for i in range(n)]
    subsets = all_subsets(points)
    k = rng.randint(0, 2 * n) if subbase_size is None else subbase_size
    subbase = [rng.choice(subsets) for _ in range(k)]
    return from_opens(points, close_subbase(points, subbase))


def topology_corpus(max_points: int = 4, seed: int = 0, rounds: int = 20000) -> list:
    """Distinct topologies (as open-set families) on 1..max_points labeled points.

    Subbases are drawn at random and closed; exhaustive single-set and
    pair subbases are included so small cases are always covered.
    """
    rng = random.Random(seed)
    seen = set()
    out = []
    for n in range(1, max_points + 1):
        points = tuple(f"x{i}" for i in range(n))
        subsets = all_subsets(points)
        candidates = [[s] for s in subsets] + [[a, b] for a in subsets for b in subsets]
        for _ in range(rounds):
            candidates.append([rng.choice(subsets) for _ in range(rng.randint(1, 2 * n + 2))])
        for sb in candidates:
            opens = close_subbase(points, sb)
            key = (points, opens)
            if key not in seen:
                seen.add(key)
                out.append((points, opens))
    return out


def random_complex(rng: random.Random, dims: int, n_atoms: int, collapse_bias: float = 0.4) -> CellComplex1D:
    """Random atoms including both endpoints.

    With probability ``collapse_bias`` a new atom reuses the first
    coordinate of an existing one, which forces a nontrivial pivot.
    """
    I = LexInterval(dims)
    atoms = {I.bottom, I.top}
    tries = 0
    while len(atoms) < n_atoms and tries < 50 * n_atoms:
        tries += 1
        p = random_point(rng, dims)
        if dims > 1 and rng.random() < collapse_bias:
            base = rng.choice(sorted(atoms))
            p = LexPoint((base.coords[0],) + p.coords[1:])
        atoms.add(p)
    return CellComplex1D(I, tuple(atoms))


def random_cellmap(rng: random.Random, complex_: CellComplex1D, C: FinSpace, X: FinSpace) -> CellMap:
    """A random continuous cell map.

    Gap slices are random continuous maps C -> X.  Each atom slice is drawn
    among continuous maps compatible with both adjacent gaps; when none
    exists the right gap is replaced by a copy of the left one, for which
    the left gap itself is compatible.
    """
    maps = [m.assignment for m in continuous_maps(C, X)]
    n = complex_.n_atoms
    gaps = [rng.choice(maps) for _ in range(n - 1)]

    def compatible(a, neighbours):
        for u in C.points:
            allowed = X.nbhd[a[u]]
            for u2 in C.nbhd[u]:
                if any(g[u2] not in allowed for g in neighbours):
                    return False
        return True

    atoms = []
    for i in range(n):
        neighbours = [gaps[j] for j in (i - 1, i) if 0 <= j < n - 1]
        options = [a for a in maps if compatible(a, neighbours)]
        if not options:
            gaps[i] = gaps[i - 1]
            options = [a for a in maps if compatible(a, [gaps[i - 1]])]
        atoms.append(rng.choice(options))
    values = {}
    for i, a in enumerate(atoms):
        for u in C.points:
            values[(Cell.atom(i), u)] = a[u]
    for i, g in enumerate(gaps):
        for u in C.points:
            values[(Cell.gap(i), u)] = g[u]
    return CellMap(complex_, C, X, values)


def all_cellmaps(complex_: CellComplex1D, C: FinSpace, X: FinSpace):
    """Every cell map (continuous or not) on a small complex."""
    keys = [(c, u) for c in complex_.cells() for u in C.points]
    for values in cartesian(X.points, repeat=len(keys)):
        yield CellMap(complex_, C, X, dict(zip(keys, values)))


__all__ = [
    "all_cellmaps",
    "random_cellmap",
    "random_complex",
    "random_order",
    "random_point",
    "random_rational",
    "random_space",
    "topology_corpus",
]
