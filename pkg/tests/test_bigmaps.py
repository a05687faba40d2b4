import random
from fractions import Fraction
from itertools import permutations

import pytest

from bighomotopy import ValidationError
from bighomotopy.bigmaps import (
    Cell,
    CellComplex1D,
    CellMap,
    check_continuity,
    collapses,
    concat,
    continuity_oracle,
    density_reduce,
    loop,
    path,
    reparam,
    reverse,
    split,
    verify_reduction,
)
from bighomotopy.finspace import FinSpace, discrete, from_opens, point_space, sierpinski
from bighomotopy.generate import all_cellmaps, random_cellmap, random_complex, random_space, topology_corpus
from bighomotopy.lexint import LexInterval, LexPoint, dense_sample
from bighomotopy.quotient import BreakpointSet, MixedPoint, quotient_by_breakpoints

S = sierpinski()
D3 = discrete(["a", "b", "c"])
# Sierpinski plus an isolated point: two equivalence classes
S_PLUS = FinSpace(("0", "1", "z"), {"0": {"0", "1"}, "1": {"1"}, "z": {"z"}})


def P(*coords):
    return LexPoint(tuple(Fraction(c) for c in coords))


def atoms1(*xs):
    return [P(x) for x in xs]


def cell_values_along(f, points):
    return [f.at(t) for t in points]


####################################################################
# Continuity


def test_continuity_examples():
    ok, _ = check_continuity(path(atoms1(0, 1), ["0", "1", "0"], S))
    assert ok
    ok, witness = check_continuity(path(atoms1(0, 1), ["1", "0", "1"], S))
    assert not ok and witness == (Cell.atom(0), "*")
    assert check_continuity(path(atoms1(0, "1/3", 1), ["a"] * 5, D3))[0]


def test_cell_names():
    assert str(Cell.gap(2)) == "gap:2"
    assert Cell.parse("atom:3") == Cell.atom(3)
    with pytest.raises(ValidationError):
        Cell.parse("edge:1")


def test_cellmap_must_be_total():
    cx = CellComplex1D(LexInterval(1), tuple(atoms1(0, 1)))
    with pytest.raises(ValidationError):
        CellMap(cx, point_space(), S, {(Cell.atom(0), "*"): "0"})
    with pytest.raises(ValidationError):
        path(atoms1(0, 1), ["0", "1"], S)
    with pytest.raises(ValidationError):
        CellComplex1D(LexInterval(1), tuple(atoms1("1/2", 1)))


def _canonical(points, opens):
    X = from_opens(points, opens)
    best = None
    for perm in permutations(range(len(points))):
        relabel = {points[i]: perm[i] for i in range(len(points))}
        key = tuple(sorted((relabel[x], tuple(sorted(relabel[y] for y in X.nbhd[x]))) for x in points))
        best = key if best is None or key < best else best
    return best


def _small_spaces():
    seen, out = set(), []
    for points, opens in topology_corpus(3, rounds=500):
        key = _canonical(points, opens)
        if key not in seen:
            seen.add(key)
            out.append(from_opens(points, opens))
    return out


def test_up_to_homeomorphism_count():
    assert len(_small_spaces()) == 1 + 3 + 9


EXHAUSTIVE_LIMIT = 3**8


def test_continuity_matches_oracle():
    spaces = _small_spaces()
    rng = random.Random(4)
    exhaustive = sampled = 0
    for C in spaces:
        for X in spaces:
            for n in range(2, 5):
                cx = CellComplex1D(LexInterval(1), tuple(P(Fraction(i, n - 1)) for i in range(n)))
                keys = len(cx.cells()) * len(C)
                if len(X) ** keys <= EXHAUSTIVE_LIMIT:
                    maps = all_cellmaps(cx, C, X)
                    exhaustive += 1
                else:
                    cells = [(c, u) for c in cx.cells() for u in C.points]
                    maps = [CellMap(cx, C, X, {k: rng.choice(X.points) for k in cells}) for _ in range(40)]
                    maps += [random_cellmap(rng, cx, C, X) for _ in range(10)]
                    sampled += 1
                for f in maps:
                    assert check_continuity(f)[0] == continuity_oracle(f)
    assert exhaustive > 60 and sampled > 0


####################################################################
# Loop algebra


def test_concat_example():
    f = path(atoms1(0, 1), ["0", "1", "0"], S)
    g = path(atoms1(0, 1), ["0", "1", "1"], S)
    h = concat(f, g)
    assert h.complex.atoms == tuple(atoms1(0, "1/2", 1))
    assert h.sequence() == ("0", "1", "0", "1", "1")
    assert check_continuity(h)[0]


def test_concat_of_constants_is_constant():
    c = path(atoms1(0, 1), ["a"] * 3, D3)
    assert set(concat(c, c).sequence()) == {"a"}


def test_concat_endpoint_mismatch():
    f = path(atoms1(0, 1), ["a", "a", "a"], D3)
    g = path(atoms1(0, 1), ["b", "b", "b"], D3)
    with pytest.raises(ValidationError):
        concat(f, g)


def test_concat_in_two_dims_shares_middle():
    f = path([P(0, 0), P("1/2", "1/4"), P(1, 1)], ["1", "1", "0", "1", "1"], S)
    h = concat(f, f)
    assert P("1/2", "1/2") in h.complex.atoms
    # the first copy halves t0, so f's middle atom lands at (1/4, 1/4)
    assert P("1/4", "1/4") in h.complex.atoms
    assert h.at(P("1/4", "1/4")) == f.at(P("1/2", "1/4")) == "0"
    assert h.at(P("3/4", "1/4")) == "0"


def _random_path(rng, X, n_atoms, dims=1, start=None):
    cx = random_complex(rng, dims, n_atoms)
    f = random_cellmap(rng, cx, point_space(), X)
    if start is not None and f.start != start:
        seq = list(f.sequence())
        seq[0] = start
        seq[1] = start
        f = path(cx.atoms, seq, X)
    return f


def test_concat_is_associative_after_refinement():
    rng = random.Random(9)
    for _ in range(100):
        f = _random_path(rng, S, rng.randint(2, 5))
        g = path(atoms1(0, rng.choice(["1/3", "1/2"]), 1), [f.end, "1", "1", "1", "0"], S)
        h = path(atoms1(0, 1), ["0", "1", "1"], S)
        left, right = concat(concat(f, g), h), concat(f, concat(g, h))
        grid = sorted(set(left.complex.atoms) | set(right.complex.atoms))
        refined = CellComplex1D(LexInterval(1), tuple(grid))
        samples = list(grid) + [refined.gap_sample(i) for i in range(len(grid) - 1)]
        # the two bracketings run the same value sequence at different speeds
        assert _runs(cell_values_along(left, sorted(samples))) == _runs(cell_values_along(right, sorted(samples)))


def _runs(values):
    out = []
    for v in values:
        if not out or out[-1] != v:
            out.append(v)
    return out


def test_reverse_examples():
    c = path(atoms1(0, 1), ["a"] * 3, D3)
    assert reverse(c) == c
    pal = path(atoms1(0, 1), ["a", "b", "a"], D3)
    assert reverse(pal).sequence() == ("a", "b", "a")
    five = path(atoms1(0, "1/4", 1), ["a", "b", "c", "b", "a"], D3)
    r = reverse(five)
    assert r.complex.atoms == tuple(atoms1(0, "3/4", 1))
    assert r.sequence() == ("a", "b", "c", "b", "a")[::-1]


def test_reverse_three_cell_sequence():
    X = discrete(["a", "b", "c", "d", "e"])
    f = path(atoms1(0, "1/4", 1), ["a", "b", "c", "d", "e"], X)
    assert reverse(f).sequence() == ("e", "d", "c", "b", "a")


def test_reverse_involution_and_concat_law():
    rng = random.Random(12)
    for _ in range(200):
        dims = rng.randint(1, 2)
        X = random_space(rng, rng.randint(1, 4))
        C = random_space(rng, rng.randint(1, 2))
        f = random_cellmap(rng, random_complex(rng, dims, rng.randint(2, 6)), C, X)
        assert reverse(reverse(f)) == f
        assert check_continuity(reverse(f))[0]
    for _ in range(200):
        f = _random_path(rng, S, rng.randint(2, 6))
        g = _random_path(rng, S, rng.randint(2, 6), start=f.end)
        assert reverse(concat(f, g)).sequence() == concat(reverse(g), reverse(f)).sequence()


def test_loops():
    lp = loop(atoms1(0, 1), ["0", "1", "0"], S, "0")
    assert lp.is_loop("0")
    with pytest.raises(ValidationError):
        loop(atoms1(0, 1), ["0", "1", "1"], S, "0")
    assert concat(lp, lp).is_loop("0")


def test_split_inverts_concat():
    rng = random.Random(2)
    for _ in range(200):
        dims = rng.randint(1, 2)
        f = _random_path(rng, S, rng.randint(2, 6), dims)
        g = _random_path(rng, S, rng.randint(2, 6), dims, start=f.end)
        a, b = split(concat(f, g))
        assert (a, b) == (f, g)


def test_reparam_identity_shaped():
    f = path(atoms1(0, "1/4", 1), ["1", "1", "0", "1", "1"], S)
    J, p = quotient_by_breakpoints(f.complex.breakpoints)
    g = density_reduce(f).g
    back = reparam(g, p)
    assert back == f


def test_reparam_is_constant_on_collapsed_fibers():
    A = BreakpointSet.of(2, [P("1/4", 0), P("1/2", 0)])
    J, p = quotient_by_breakpoints(A)
    g = path([MixedPoint.atom(i) for i in range(J.atoms)], ["1", "1", "0", "1", "0", "1", "1"], S, J)
    f = reparam(g, p)
    assert check_continuity(f)[0]
    for t in dense_sample(LexInterval(2), 3):
        lo, hi = p.fiber(p(t))
        assert f.at(lo) == f.at(hi) == f.at(t) == g.at(p(t))


def test_reparam_rejects_foreign_map():
    _, p = quotient_by_breakpoints(BreakpointSet.of(1, []))
    f = path(atoms1(0, 1), ["0", "0", "0"], S)
    with pytest.raises(ValidationError):
        reparam(f, p)


####################################################################
# Density reduction


def test_reduce_constant():
    f = path(atoms1(0, 1), ["a"] * 3, D3)
    r = density_reduce(f)
    assert r.J.atoms == 2
    assert set(r.g.sequence()) == {"a"}
    assert verify_reduction(f, r.g, r.p)


def test_reduce_sierpinski_path_keeps_values():
    f = path(atoms1(0, 1), ["0", "1", "0"], S)
    r = density_reduce(f)
    assert r.g.sequence() == f.sequence()
    for a in f.complex.atoms:
        assert r.g.at(r.p(a)) == f.at(a)
    assert verify_reduction(f, r.g, r.p)


def test_reduce_in_two_dims_collapses():
    f = path([P(0, 0), P("1/2", "1/4"), P(1, 1)], ["1", "1", "0", "1", "1"], S)
    r = density_reduce(f)
    assert r.J.atoms == f.complex.n_atoms == 3
    assert check_continuity(r.g)[0]
    assert verify_reduction(f, r.g, r.p)
    assert collapses(r.p, dense_sample(LexInterval(2), 2)) is not None


def test_reduce_rejects_discontinuous():
    with pytest.raises(ValidationError):
        density_reduce(path(atoms1(0, 1), ["1", "0", "1"], S))


def test_verify_detects_single_cell_perturbation():
    # a path stays in one class, so the second class is reached through C
    C = discrete(["u", "v"])
    cx = CellComplex1D(LexInterval(1), tuple(atoms1(0, "1/3", "2/3", 1)))
    seq = ["1", "1", "0", "0", "0", "1", "1"]
    values = {(c, "u"): x for c, x in zip(cx.cells(), seq)}
    values.update({(c, "v"): "z" for c in cx.cells()})
    f = CellMap(cx, C, S_PLUS, values)
    r = density_reduce(f)
    assert verify_reduction(f, r.g, r.p)
    for c in r.g.complex.cells():
        for u in C.points:
            values = dict(r.g.values)
            values[(c, u)] = "z" if values[(c, u)] != "z" else "0"
            bad = CellMap(r.g.complex, r.g.cspace, r.g.target, values)
            assert not verify_reduction(f, bad, r.p), (c, u)


def test_verify_identity_shaped():
    f = path(atoms1(0, "1/2", 1), ["1", "1", "0", "1", "1"], S)
    r = density_reduce(f)
    assert verify_reduction(reparam(r.g, r.p), r.g, r.p)


def test_random_pipeline_with_endpoints():
    rng = random.Random(31)
    collapsed = 0
    for _ in range(150):
        dims = rng.randint(1, 2)
        X = random_space(rng, rng.randint(1, 5))
        C = random_space(rng, rng.randint(1, 3))
        f = random_cellmap(rng, random_complex(rng, dims, rng.randint(2, 12)), C, X)
        r = density_reduce(f)
        assert check_continuity(r.g)[0]
        assert verify_reduction(f, r.g, r.p)
        I = f.complex.carrier
        for u in C.points:
            assert r.g.at(r.p(I.bottom), u) == f.at(I.bottom, u)
            assert r.g.at(r.p(I.top), u) == f.at(I.top, u)
        if dims == 1:
            images = [r.p(a) for a in f.complex.atoms]
            assert len(set(images)) == len(images)
        elif collapses(r.p, dense_sample(I, 2)):
            collapsed += 1
    assert collapsed > 0
