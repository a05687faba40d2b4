import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bighomotopy import Tri, ValidationError, Verdict
from bighomotopy.cardinal import (
    ALEPH_0,
    OMEGA,
    ONE,
    ZERO,
    Aleph,
    AxiomMode,
    Beth,
    DepthLimitError,
    Finite,
    Hat,
    Ordinal,
    PowSet,
    Succ,
    compare,
    expressions_up_to_depth,
    gch_value,
    hat,
    is_strong_limit,
    least_perfect_bound,
    normalize,
    parse_cardinal,
    parse_ordinal,
)


def c(text):
    return parse_cardinal(text)


####################################################################
# Ordinals in Cantor normal form


def test_ordinal_parse_and_print():
    for text in ["0", "3", "w", "w+1", "w*2+3", "w^2", "w^(w+1)", "w^w"]:
        assert str(parse_ordinal(text)) == text


def test_ordinal_addition_absorbs_smaller_terms():
    assert Ordinal.of(1) + OMEGA == OMEGA
    assert OMEGA + ONE != ONE + OMEGA
    assert str(OMEGA + OMEGA) == "w*2"


def test_ordinal_successor_and_limit():
    assert OMEGA.is_limit() and not OMEGA.is_successor()
    assert (OMEGA + ONE).is_successor()
    assert (OMEGA + ONE).pred() == OMEGA
    assert ZERO < ONE < OMEGA < OMEGA + ONE < parse_ordinal("w^2")


####################################################################
# Normalization


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("beth(0)", "aleph(0)"),
        ("hat(beth(w))", "beth(w)"),
        ("hat(aleph(0))", "aleph(0)"),
        ("pow(beth(w))", "beth(w+1)"),
        ("pow(aleph(0))", "beth(1)"),
        ("pow(5)", "32"),
        ("succ(aleph(1))", "aleph(2)"),
        ("hat(aleph(1))", "hat(aleph(1))"),
        ("hat(3)", "4"),
    ],
)
def test_normal_forms(expr, expected):
    assert str(normalize(c(expr))) == expected


def test_hat_of_successor_beth_is_left_symbolic():
    # 2^(beth_1) need not be the sup of smaller powers without extra axioms
    assert normalize(Hat(Beth(ONE))) == Hat(Beth(ONE))


def test_depth_limit():
    e = ALEPH_0
    for _ in range(20):
        e = Succ(PowSet(e))
    with pytest.raises(DepthLimitError):
        normalize(e, depth_limit=8)


def test_hat_rejects_finite():
    with pytest.raises(ValidationError):
        hat(Finite(3))


def _random_expr(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        kind = rng.randrange(3)
        index = rng.choice([ZERO, ONE, Ordinal.of(2), OMEGA, OMEGA + ONE])
        if kind == 0:
            return Finite(rng.randrange(5))
        return Aleph(index) if kind == 1 else Beth(index)
    ctor = rng.choice([PowSet, Succ, Hat])
    return ctor(_random_expr(rng, depth - 1))


def test_normalize_idempotent_on_random_trees():
    rng = random.Random(2024)
    checked = 0
    for _ in range(10_000):
        e = _random_expr(rng, rng.randint(0, 6))
        try:
            n = normalize(e)
        except ValidationError:
            # towers of finite powers past 2^62 are refused by design
            continue
        assert normalize(n) == n
        checked += 1
    assert checked > 9_000


####################################################################
# Comparison


def test_spec_comparisons():
    assert compare(c("pow(aleph(0))"), c("aleph(0)")) is Verdict.GT
    assert compare(c("pow(aleph(0))"), c("aleph(1)"), "zfc") is Verdict.UNKNOWN
    assert compare(c("pow(aleph(0))"), c("aleph(1)"), "gch") is Verdict.EQ


def test_basic_orderings():
    assert compare(c("aleph(1)"), c("beth(1)")) is Verdict.UNKNOWN
    assert compare(c("aleph(1)"), c("beth(2)")) is Verdict.LT
    assert compare(c("aleph(w)"), c("beth(w)")) is Verdict.UNKNOWN
    assert compare(Finite(3), ALEPH_0) is Verdict.LT
    # aleph_1 <= 2^aleph_0 is all ZFC proves
    assert compare(c("succ(aleph(0))"), c("pow(aleph(0))")) is Verdict.UNKNOWN
    assert compare(c("succ(pow(aleph(0)))"), c("pow(aleph(0))")) is Verdict.GT


def test_comparison_is_antisymmetric_on_universe():
    exprs = expressions_up_to_depth(2)
    for a in exprs:
        for b in exprs:
            assert compare(a, b) is compare(b, a).flip()


def test_cantor_on_universe():
    for e in expressions_up_to_depth(3):
        if not normalize(e).is_finite():
            assert compare(PowSet(e), e) is Verdict.GT


def test_gch_refines_zfc_depth_three():
    exprs = expressions_up_to_depth(3)
    for a in exprs:
        for b in exprs:
            z = compare(a, b, AxiomMode.ZFC)
            g = compare(a, b, AxiomMode.GCH)
            assert g is not Verdict.UNKNOWN
            if z is not Verdict.UNKNOWN:
                assert g is z, (a, b)


def test_gch_value():
    assert gch_value(c("pow(aleph(0))")) == Aleph(ONE)
    assert gch_value(c("beth(w)")) == Aleph(OMEGA)
    assert gch_value(c("hat(aleph(1))")) == Aleph(ONE)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40))
def test_finite_comparison_matches_integers(m, n):
    expected = Verdict.LT if m < n else Verdict.GT if m > n else Verdict.EQ
    assert compare(Finite(m), Finite(n)) is expected


####################################################################
# Strong limits and perfect bounds


def test_strong_limit_examples():
    assert is_strong_limit(ALEPH_0) is Tri.TRUE
    assert is_strong_limit(Beth(OMEGA)) is Tri.TRUE
    assert is_strong_limit(Beth(ONE)) is Tri.FALSE
    assert is_strong_limit(c("succ(aleph(w))")) is Tri.FALSE
    assert is_strong_limit(Aleph(OMEGA)) is Tri.UNKNOWN
    assert is_strong_limit(Aleph(OMEGA), "gch") is Tri.TRUE
    assert is_strong_limit(Aleph(ONE), "gch") is Tri.FALSE


def test_strong_limit_rejects_finite():
    with pytest.raises(ValidationError):
        is_strong_limit(Finite(4))


def test_least_perfect_bound_examples():
    assert least_perfect_bound(Beth(OMEGA)) == Beth(OMEGA)
    assert least_perfect_bound(Aleph(ONE)) is Tri.UNKNOWN
    assert least_perfect_bound(Aleph(ONE), "gch") == Aleph(ONE)
    assert least_perfect_bound(ALEPH_0) == ALEPH_0


def test_least_perfect_bound_needs_a_decided_comparison():
    # succ(beth_w) <= beth_(w+1) is provable but not strict, so no bound is claimed
    assert least_perfect_bound(c("succ(beth(w))")) is Tri.UNKNOWN
    # pow(beth_w) normalizes to beth_(w+1) and is returned as is
    assert least_perfect_bound(c("pow(beth(w))")) == Beth(OMEGA + ONE)


def test_least_perfect_bound_is_above_input():
    for e in expressions_up_to_depth(2):
        k = normalize(e)
        if k.is_finite():
            continue
        b = least_perfect_bound(k)
        if b is not Tri.UNKNOWN:
            assert compare(k, b) in (Verdict.LT, Verdict.EQ)
