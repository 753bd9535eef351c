import json

import pytest

from petit.chainring import F4, F8, GR42, ChainRing
from petit.errors import NotBasicIrreducible, ParseError, ValidationFailed
from petit.parsing import (
    default_modulus,
    parse_context,
    parse_delta,
    parse_element,
    parse_poly,
    parse_ring,
    parse_sigma,
    parse_vector,
)


def test_ring_formats(tmp_path):
    assert parse_ring("F4") == F4()
    assert parse_ring("gr42") == GR42()
    assert parse_ring("ring { p = 2, e = 2, n = 2, modulus = [1,1,1] }") == GR42()
    assert parse_ring('{"p": 2, "e": 1, "n": 3, "modulus": [1,1,0,1]}') == F8()
    assert parse_ring('{"p": 2, "n": 3}') == F8()
    assert parse_ring("ring { p = 2, e = 2 }") == ChainRing(2, 2)
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(GR42().to_json()))
    assert parse_ring(f"@{path}") == GR42()
    assert parse_ring(GR42().spec_text()) == GR42()


def test_ring_errors():
    with pytest.raises(ParseError) as err:
        parse_ring("ring { p = 2, e == 2 }")
    assert err.value.column is not None
    with pytest.raises(ParseError):
        parse_ring("nonsense")
    with pytest.raises(ParseError):
        parse_ring('{"p": 2, "q": 1}')
    with pytest.raises(NotBasicIrreducible):
        parse_ring("ring { p = 2, e = 2, modulus = [1,0,1] }")


def test_default_modulus():
    assert default_modulus(2, 2) == [1, 1, 1]
    assert default_modulus(2, 3) == [1, 1, 0, 1]


def test_elements():
    R = GR42()
    assert parse_element(R, "[3,1]") == R([3, 1])
    assert parse_element(R, "3 + x") == R([3, 1])
    assert parse_element(F4(), "w^2 + 1") == F4().gen
    assert parse_vector(R, "[[1,0],[0,1]]") == [R.one, R.gen]
    assert parse_vector(R, "1, x") == [R.one, R.gen]
    with pytest.raises(ParseError):
        parse_element(R, "t")
    with pytest.raises(ParseError):
        parse_element(R, "[1,2,3]")


def test_polys():
    ctx = parse_context("F4", "frobenius:1")
    t, w = ctx.t, ctx.constant(ctx.ring.gen)
    assert parse_poly(ctx, "t^2 - w") == t**2 - w
    assert parse_poly(ctx, "t w") == t * w
    assert parse_poly(ctx, "w t") == w * t != t * w
    assert parse_poly(ctx, "(t + 1)(t + w)") == (t + 1) * (t + w)
    assert parse_poly(ctx, "poly [[0,1],[0,0],[1,0]]") == t**2 + w
    assert parse_poly(ctx, "[[1,0]]") == ctx.one
    assert parse_poly(ctx, "-t^3 + 2*t + 1") == t**3 + 1
    assert parse_poly(ctx, "w") == w


@pytest.mark.parametrize("text, col", [("t^^2", 3), ("t^2 - q", 7), ("t % 2", 3), ("", 1)])
def test_poly_errors(text, col):
    ctx = parse_context("F4")
    with pytest.raises(ParseError) as err:
        parse_poly(ctx, text)
    assert err.value.column == col


def test_morphism_specs(tmp_path):
    R = GR42()
    s = parse_sigma(R, "frobenius:1")
    assert s(R.gen) == R([3, 3])
    assert parse_sigma(R, "id").is_identity()
    assert parse_sigma(R, None) == s
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps({"x": [3, 3]}))
    assert parse_sigma(R, f"@{path}") == s
    path.write_text(json.dumps(s.to_json()))
    assert parse_sigma(R, f"@{path}") == s
    d = parse_delta(s, "inner:x")
    assert d(R.gen) == R.gen * (R.gen - s(R.gen))
    assert parse_delta(s, "zero").is_zero()
    dpath = tmp_path / "delta.json"
    dpath.write_text(json.dumps(d.to_json()))
    assert parse_delta(s, f"@{dpath}").table == d.table
    with pytest.raises(ValidationFailed):
        parse_sigma(R, json.dumps({"x": [1, 1]}))
    with pytest.raises(ParseError):
        parse_sigma(R, "frobenius:x")
