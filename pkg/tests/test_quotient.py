import random
from fractions import Fraction
from itertools import combinations

import pytest

from bighomotopy import ValidationError
from bighomotopy.generate import random_point
from bighomotopy.lexint import LexInterval, LexPoint, dense_sample
from bighomotopy.quotient import (
    Block,
    BreakpointSet,
    MixedInterval,
    MixedPoint,
    collapse_witness,
    dense_related,
    densified_class,
    densify,
    fibers_match_classes,
    quotient_by_breakpoints,
    related,
)


def P(*coords):
    return LexPoint(tuple(Fraction(c) for c in coords))


def bp(dims, *atoms):
    return BreakpointSet.of(dims, [P(*a) if isinstance(a, tuple) else P(a) for a in atoms])


A1 = bp(1, "1/4", "1/2")


def test_endpoints_are_adjoined():
    assert A1.atoms == (P(0), P("1/4"), P("1/2"), P(1))
    assert A1.gaps == 3


def test_related_examples():
    assert related(P("3/10"), P("2/5"), A1)
    assert related(P("1/10"), P("1/4"), A1)
    assert not related(P(0), P("1/4"), A1)


def test_raw_relation_is_not_transitive():
    A = bp(1, "1/4", "1/3", "1/2")
    s, t, u = P("1/10"), P("3/10"), P("2/5")
    assert related(s, t, A) and related(t, u, A)
    assert not related(s, u, A)


def test_densify_structure():
    d = densify(bp(1))
    assert d.items == (P(0), Block(0), P(1))
    assert len(densify(bp(1, "1/2")).blocks) == 2
    assert densify(d) is d


def test_quotient_examples():
    J, p = quotient_by_breakpoints(A1)
    assert J == MixedInterval(4)
    assert p(P("1/4")) == MixedPoint.atom(1)
    assert p(P("3/10")) == MixedPoint.segment(1, Fraction(1, 5))
    assert p(P(0)) == MixedPoint.atom(0)
    assert p(P(1)) == MixedPoint.atom(3)
    with pytest.raises(ValidationError):
        p(P(0, 0))


def test_fiber_collapse_in_two_dims():
    A = bp(2, ("1/4", 0), ("1/2", 0))
    _, p = quotient_by_breakpoints(A)
    assert p(P("3/8", "1/4")) == p(P("3/8", "3/4")) == MixedPoint.segment(1, Fraction(1, 2))
    lo, hi = p.fiber(MixedPoint.segment(1, Fraction(1, 2)))
    assert (lo, hi) == (P("3/8", 0), P("3/8", 1))
    a, b = collapse_witness(p)
    assert a != b and p(a) == p(b)


def test_no_collapse_in_one_dim():
    _, p = quotient_by_breakpoints(A1)
    assert collapse_witness(p) is None
    sample = dense_sample(LexInterval(1), 4)
    images = [p(s) for s in sample]
    assert len(set(images)) == len(images)


def test_atom_slab_belongs_to_the_atom():
    # atoms (0,0) < (1/2,1/2) < (1,1): the slab t0 = 1/2 collapses onto the middle atom
    _, p = quotient_by_breakpoints(bp(2, ("1/2", "1/2")))
    assert p(P("1/2", 0)) == p(P("1/2", 1)) == MixedPoint.atom(1)
    assert p.fiber(MixedPoint.atom(1)) == (P("1/2", 0), P("1/2", 1))


def test_pivot_on_second_coordinate():
    # atoms share their first coordinate, so the gap is parameterized by the second
    _, p = quotient_by_breakpoints(bp(2, ("1/2", "1/4"), ("1/2", "3/4")))
    assert p(P("1/2", "1/2")) == MixedPoint.segment(1, Fraction(1, 2))
    assert p(P("1/2", "3/8")) == MixedPoint.segment(1, Fraction(1, 4))


def test_mixed_point_codec():
    for y in [MixedPoint.atom(3), MixedPoint.segment(0, Fraction(2, 7))]:
        assert MixedPoint.from_json(y.to_json()) == y
    with pytest.raises(ValidationError):
        MixedPoint.segment(0, Fraction(1))
    with pytest.raises(ValidationError):
        MixedPoint.from_json({"segment": 0, "pos": 0.5})


def test_mixed_order():
    assert MixedPoint.atom(0) < MixedPoint.segment(0, Fraction(1, 3)) < MixedPoint.segment(0, Fraction(1, 2)) < MixedPoint.atom(1)


def _random_breakpoints(rng, dims):
    return BreakpointSet.of(dims, [random_point(rng, dims, 4) for _ in range(rng.randint(0, 5))])


def test_p_monotone_on_random_pairs():
    rng = random.Random(17)
    for _ in range(2000):
        dims = rng.randint(1, 3)
        A = _random_breakpoints(rng, dims)
        _, p = quotient_by_breakpoints(A)
        s, t = sorted([random_point(rng, dims, 8), random_point(rng, dims, 8)])
        assert p(s) <= p(t)


def test_atoms_map_bijectively_and_fibers_contain_preimages():
    rng = random.Random(5)
    for _ in range(200):
        dims = rng.randint(1, 3)
        A = _random_breakpoints(rng, dims)
        J, p = quotient_by_breakpoints(A)
        assert [p(a) for a in A.atoms] == [MixedPoint.atom(i) for i in range(J.atoms)]
        for _ in range(10):
            t = random_point(rng, dims, 8)
            lo, hi = p.fiber(p(t))
            assert lo <= t <= hi
            assert p(lo) == p(hi) == p(t)


def test_fibers_match_classes_on_samples():
    rng = random.Random(23)
    for _ in range(40):
        dims = rng.randint(1, 2)
        A = _random_breakpoints(rng, dims)
        sample = dense_sample(LexInterval(dims), 2) + list(A.atoms)
        assert fibers_match_classes(A, sample)


def test_densified_classes_are_an_equivalence():
    A = bp(2, ("1/4", 0), ("1/4", "1/2"), ("3/4", 1))
    dense = densify(A)
    sample = dense_sample(LexInterval(2), 2)
    for s, t, u in combinations(sample[::3], 3):
        if dense_related(s, t, dense) and dense_related(t, u, dense):
            assert dense_related(s, u, dense)
    for s in sample:
        assert dense_related(s, s, dense)


def test_densified_class_keys():
    dense = densify(A1)
    assert densified_class(P("1/4"), dense) == ("atom", 1)
    assert densified_class(P("3/10"), dense) == ("gap", 1, Fraction(1, 5))
