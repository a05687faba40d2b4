import pytest

from bighomotopy import ValidationError
from bighomotopy import oracles
from bighomotopy.finspace import (
    FinSpace,
    HomotopyCertificate,
    HomotopyRefusal,
    SpaceMap,
    Tag,
    all_maps,
    continuous_maps,
    discrete,
    equiv_classes,
    from_opens,
    from_preorder,
    homotopy_chain,
    indiscrete,
    is_continuous,
    is_T0,
    is_T1,
    min_nbhd,
    point_space,
    preimage_continuous,
    product,
    sierpinski,
    step_homotopy_check,
    switch_oracle,
    verify_certificate,
    weight,
)
from bighomotopy.generate import topology_corpus

S = from_opens(["0", "1"], [[], ["1"], ["0", "1"]])
CHAIN = from_opens(["a", "b", "c"], [[], ["a"], ["a", "b"], ["a", "b", "c"]])
P = point_space()


def const(X, Y, y):
    return SpaceMap(X, Y, {x: y for x in X})


####################################################################
# Neighbourhoods, classes, separation, weight


def test_sierpinski_from_opens():
    assert min_nbhd(S, "0") == {"0", "1"}
    assert min_nbhd(S, "1") == {"1"}
    assert S == sierpinski()


def test_chain_space():
    assert min_nbhd(CHAIN, "c") == {"a", "b", "c"}
    assert min_nbhd(CHAIN, "b") == {"a", "b"}
    assert equiv_classes(CHAIN) == [frozenset("abc")]
    assert not is_T1(CHAIN)
    assert weight(CHAIN) == 3


def test_discrete_and_indiscrete():
    D = discrete(["p", "q", "r"])
    assert all(min_nbhd(D, x) == {x} for x in D)
    assert len(equiv_classes(D)) == 3 and is_T1(D) and weight(D) == 3
    assert weight(indiscrete(["p", "q", "r"])) == 1
    assert len(equiv_classes(S)) == 1 and not is_T1(S) and weight(S) == 2


def test_from_opens_errors():
    with pytest.raises(ValidationError):
        from_opens(["a", "b"], [[], ["a"], ["b"], ["a", "b"], ["c"]])
    with pytest.raises(ValidationError):
        from_opens(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])  # missing {a, b}
    with pytest.raises(ValidationError):
        from_opens(["a", "b"], [["a"], ["a", "b"]])
    with pytest.raises(ValidationError):
        from_opens(["a", "b"], [[], ["a"]])
    with pytest.raises(ValidationError):
        min_nbhd(S, "z")


def test_neighbourhood_family_must_be_a_basis():
    with pytest.raises(ValidationError):
        FinSpace(("a", "b"), {"a": {"a", "b"}, "b": {"a", "b", "c"}})
    with pytest.raises(ValidationError):
        FinSpace(("a", "b"), {"a": {"a", "b"}, "b": {"a"}})


def test_from_preorder_matches_chain():
    assert from_preorder("abc", {"c": ["b"], "b": ["a"]}) == CHAIN


@pytest.fixture(scope="module")
def corpus():
    return topology_corpus(4)


def test_corpus_size(corpus):
    by_size = {}
    for points, _ in corpus:
        by_size[len(points)] = by_size.get(len(points), 0) + 1
    assert by_size == {1: 1, 2: 4, 3: 29, 4: 355}


def test_corpus_against_oracles(corpus):
    for points, opens in corpus:
        X = from_opens(points, opens)
        assert all(min_nbhd(X, x) == oracles.min_nbhd(points, opens, x) for x in points)
        assert set(equiv_classes(X)) == oracles.classes(points, opens)
        assert is_T1(X) == oracles.is_T1(points, opens) == all(len(X.nbhd[x]) == 1 for x in points)
        assert set(X.opens()) == set(opens)


def test_weight_bounds_on_corpus(corpus):
    for points, opens in corpus:
        X = from_opens(points, opens)
        assert weight(X) <= len(points)
        assert (weight(X) == len(points)) == is_T0(X)
    for points, opens in corpus[:60]:
        assert weight(from_opens(points, opens)) == oracles.weight(points, opens)


####################################################################
# Continuity


def test_continuity_examples():
    assert is_continuous(SpaceMap(S, S, {"0": "0", "1": "1"}))
    assert is_continuous(const(CHAIN, S, "0"))
    assert not is_continuous(SpaceMap(S, S, {"0": "1", "1": "0"}))


def test_continuity_matches_preimages():
    spaces = [from_opens(p, o) for p, o in topology_corpus(3, rounds=0)]
    for X in spaces[:12]:
        for Y in spaces:
            for m in all_maps(X, Y):
                assert is_continuous(m) == preimage_continuous(X, Y, m)


def test_map_must_be_total():
    with pytest.raises(ValidationError):
        SpaceMap(S, S, {"0": "0"})
    with pytest.raises(ValidationError):
        SpaceMap(S, S, {"0": "0", "1": "z"})


####################################################################
# Step homotopies


def test_identity_homotopy_fixes_everything():
    f = SpaceMap(CHAIN, CHAIN, {x: x for x in CHAIN})
    cert = step_homotopy_check(f, f)
    assert cert.fixed == frozenset(CHAIN.points)
    assert verify_certificate(cert) == (True, None)


def test_step_from_open_point_to_closed_point():
    cert = step_homotopy_check(const(P, S, "1"), const(P, S, "0"))
    assert cert.tags == (Tag.UP,)
    assert cert.fixed == frozenset()
    assert verify_certificate(cert) == (True, None)


def test_refusal_has_witness_and_chain_goes_down():
    f, g = const(P, S, "0"), const(P, S, "1")
    with pytest.raises(HomotopyRefusal) as info:
        step_homotopy_check(f, g)
    assert info.value.witness == "*"
    assert f(info.value.witness) not in S.nbhd[g(info.value.witness)]
    cert = homotopy_chain([f, g])
    assert cert.tags == (Tag.DOWN,)
    assert verify_certificate(cert) == (True, None)


def test_length_zero_chain():
    f = const(P, S, "0")
    cert = homotopy_chain([f])
    assert len(cert) == 0
    assert verify_certificate(cert) == (True, None)


def test_chain_with_discontinuous_intermediate_fails():
    ident = SpaceMap(S, S, {"0": "0", "1": "1"})
    swap = SpaceMap(S, S, {"0": "1", "1": "0"})
    cert = HomotopyCertificate((ident, swap, ident), (Tag.UP, Tag.DOWN))
    assert verify_certificate(cert) == (False, 1)
    with pytest.raises(ValidationError):
        homotopy_chain([ident, swap])


def test_chain_refusal_reports_link():
    D = discrete(["p", "q"])
    with pytest.raises(HomotopyRefusal) as info:
        homotopy_chain([const(P, D, "p"), const(P, D, "p"), const(P, D, "q")])
    assert info.value.link == 1


def test_tampered_certificate_fails():
    cert = HomotopyCertificate((const(P, S, "0"), const(P, S, "1")), (Tag.UP,))
    assert verify_certificate(cert) == (False, 0)
    assert verify_certificate(HomotopyCertificate((const(P, S, "0"),), (Tag.UP,)))[0] is False


def test_step_check_matches_switch_oracle_small():
    # full sweep over three-point spaces lives in the acceptance suite
    spaces = [from_opens(p, o) for p, o in topology_corpus(2, rounds=0)]
    spaces += [CHAIN, product(S, P)]
    for X in spaces:
        for Y in spaces:
            maps = continuous_maps(X, Y)
            for f in maps:
                for g in maps:
                    try:
                        cert = step_homotopy_check(f, g)
                    except HomotopyRefusal as r:
                        assert not switch_oracle(f, g, Tag.UP)
                        assert f(r.witness) not in Y.nbhd[g(r.witness)]
                        continue
                    assert switch_oracle(f, g, Tag.UP)
                    assert verify_certificate(cert) == (True, None)
