"""Core data model: normalization, accumulate, constant, equality, JSON."""

import math

import pytest
from hypothesis import given

import strategies
from sparsepoly import (
    Mvp,
    PowerOverflowError,
    accumulate,
    canonical_json,
    constant,
    equals,
    equals_approx,
    from_json,
    normalize_term,
    parse,
    subvec,
    validate,
)


def test_normalize_drops_zero_power():
    assert normalize_term([("x", 2), ("y", 0)]) == (("x", 2),)


def test_normalize_merges_repeated_symbol():
    assert normalize_term([("x", 1), ("x", 1)]) == (("x", 2),)


def test_normalize_empty_is_constant_term():
    assert normalize_term([]) == ()


def test_normalize_sorts_symbols():
    assert normalize_term([("y", 1), ("x", 2)]) == (("x", 2), ("y", 1))


def test_normalize_accepts_mapping():
    assert normalize_term({"x": 2, "y": -1}) == (("x", 2), ("y", -1))


def test_normalize_rejects_bad_symbol():
    with pytest.raises(ValueError):
        normalize_term([("1x", 2)])
    with pytest.raises(ValueError):
        normalize_term([("", 2)])


def test_normalize_rejects_non_integer_power():
    with pytest.raises(TypeError):
        normalize_term([("x", 1.5)])


def test_normalize_power_overflow():
    with pytest.raises(PowerOverflowError):
        normalize_term([("x", 2**63)])
    with pytest.raises(PowerOverflowError):
        normalize_term([("x", 2**62), ("x", 2**62)])


def test_accumulate_into_zero():
    p = accumulate(Mvp.zero(), [("x", 1)], 3)
    assert p == parse("3 x")


def test_accumulate_cancellation():
    p = accumulate(parse("3 x"), [("x", 1)], -3)
    assert p.is_zero
    assert len(p) == 0


def test_accumulate_constant_insertion():
    assert accumulate(parse("3 x"), [], -4) == parse("-4 + 3 x")


def test_accumulate_zero_is_noop():
    p = parse("2 a b")
    assert accumulate(p, [("a", 1)], 0) == p


@given(strategies.mvps, strategies.terms, strategies.int_coeffs)
def test_accumulate_inverse(p, t, c):
    assert accumulate(accumulate(p, t, c), t, -c) == p


def test_constant_of_zero():
    assert constant(Mvp.zero()) == 0


def test_constant_picks_empty_term():
    m = parse("3 stoat goat^6 -4 + 7 stoatboat^3 bloat -9 float boat goat gloat^6")
    assert constant(m) == -4


@given(strategies.nonneg_mvps)
def test_constant_equals_evaluation_at_zero(p):
    # For nonnegative powers, setting every symbol to 0 isolates the
    # constant term; cross-checked through the vectorised evaluator.
    point = {s: [0.0] for s in p.symbols()}
    assert subvec(p, point)[0] == constant(p)


def test_equals_reflexive_and_exact():
    p = parse("1 + 2 x")
    assert equals(p, p)
    assert not equals(p, parse("1 + 2.0000001 x"))


def test_equals_approx_tolerance():
    p = parse("1 + 2 x")
    q = parse("1 + 2.0000000000001 x")
    assert equals_approx(p, q, rel=1e-9)
    assert not equals_approx(p, q, rel=1e-15)
    assert not equals_approx(p, parse("1 + 2 y"), rel=1e-6)


def test_eq_against_numbers():
    assert parse("5") == 5
    assert parse("0") == 0
    assert parse("x") != 1


def test_mvp_constructor_merges_and_drops():
    p = Mvp([({"x": 1}, 2.0), ({"x": 1}, -2.0), ({}, 4.0)])
    assert p == 4


def test_json_golden():
    p = parse("-3 x^2 y^3 + 2")
    assert (
        canonical_json(p)
        == '{"terms":[{"powers":{},"coeff":2.0},{"powers":{"x":2,"y":3},"coeff":-3.0}]}'
    )


@given(strategies.mvps)
def test_json_roundtrip(p):
    assert from_json(canonical_json(p)) == p


def test_from_json_rejects_garbage():
    with pytest.raises(ValueError):
        from_json("[1, 2]")
    with pytest.raises(ValueError):
        from_json('{"terms":[{"powers":{"x":1.5},"coeff":1.0}]}')


@given(strategies.mvps, strategies.mvps)
def test_storage_invariants_hold(p, q):
    from sparsepoly import deriv, invert

    validate(p)
    validate(p * q)
    validate(p + q)
    validate(p - q)
    validate(p**2)
    validate(deriv(p, ["a"]))
    validate(invert(p))


def test_operations_do_not_mutate():
    p = parse("1 + x")
    q = parse("2 y")
    before = canonical_json(p)
    _ = p + q, p * q, -p, p**3
    assert canonical_json(p) == before


def test_coefficient_lookup():
    p = parse("3 x y + z^3")
    assert p.coefficient({"x": 1, "y": 1}) == 3
    assert p.coefficient({"z": 3}) == 1
    assert p.coefficient({"q": 2}) == 0
    assert math.isclose(p.coefficient([("y", 1), ("x", 1)]), 3.0)


def test_symbols_listing():
    assert parse("3 x y + z^3").symbols() == ("x", "y", "z")
    assert Mvp.zero().symbols() == ()
