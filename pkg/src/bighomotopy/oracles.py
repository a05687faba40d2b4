"""Brute-force reference implementations.

These follow the definitions directly, with no shared code paths with the
fast implementations they check, and are only meant for tiny inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .embedding import CapacityExceeded, GridPolicy, InsertionOrder, embed_order
from .orders import chain


def lex_max(points):
    """Largest point by pairwise first-difference comparison."""
    best = None
    for p in points:
        if best is None:
            best = p
            continue
        for a, b in zip(p.coords, best.coords):
            if a != b:
                if a > b:
                    best = p
                break
    return best


def min_nbhd(points, opens, x) -> frozenset:
    """Intersection of every open set containing x."""
    out = frozenset(points)
    for o in opens:
        if x in o:
            out &= o
    return out


def classes(points, opens) -> set:
    """Transitive closure of R and its inverse, where x R y iff y is in N_x."""
    points = list(points)
    rel = {(x, y) for x in points for y in min_nbhd(points, opens, x)}
    rel |= {(y, x) for x, y in rel}
    rel |= {(x, x) for x in points}
    changed = True
    while changed:
        changed = False
        for x, y in list(rel):
            for y2, z in list(rel):
                if y == y2 and (x, z) not in rel:
                    rel.add((x, z))
                    changed = True
    return {frozenset(y for y in points if (x, y) in rel) for x in points}


def is_T1(points, opens) -> bool:
    """Specialization preorder is equality: x below y only when x = y."""
    for x in points:
        for y in points:
            if x != y and all(x in o for o in opens if y in o):
                return False
    return True


def weight(points, opens) -> int:
    """Size of the smallest subfamily whose unions give every open set."""
    family = [o for o in opens if o]
    targets = set(opens)
    for k in range(len(family) + 1):
        for basis in combinations(family, k):
            unions = {frozenset()}
            for b in basis:
                unions |= {u | b for u in unions}
            if targets <= unions:
                return k
    raise AssertionError("the open sets are a basis of themselves")


def min_failing_chain(k: int, d: int, limit: int = 10):
    """Shortest chain with some insertion sequence that exhausts DYADIC(k) in d dims."""
    grid = GridPolicy.dyadic(k)
    for n in range(1, limit + 1):
        order = chain(n)
        for seq in permutations(order.labels):
            try:
                embed_order(InsertionOrder(order, seq), d, grid)
            except CapacityExceeded:
                return n
    return None
