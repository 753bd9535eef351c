import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petit.chainring import GR42, identity
from petit.errors import ContextMismatch, DeltaNotZero, LeadingCoeffNotUnit
from petit.naive import naive_mul
from petit.skewpoly import (
    NEG_INF,
    SkewPolyContext,
    base_irreducible,
    delta_map,
    gcrd,
    is_irreducible_over_field,
    is_two_sided,
    left_divmod,
    mul,
    mul_via_delta,
    project_poly,
    psi,
    right_divmod,
)


def rand_poly(ctx, rng, deg):
    return ctx.poly([ctx.ring.element_from_code(rng.randrange(ctx.ring.size)) for _ in range(deg + 1)])


def polys(ctx, max_deg=3):
    n = ctx.ring.size
    return st.lists(st.integers(0, n - 1), max_size=max_deg + 1).map(
        lambda cs: ctx.poly([ctx.ring.element_from_code(c) for c in cs]))


def test_twisted_rule(f4):
    R = f4.ring
    w = f4.constant(R.gen)
    assert f4.t * w == f4.constant(R.gen**2) * f4.t
    assert (f4.t + 1) * (f4.t + w) == f4.t**2 + w * f4.t + w
    g = f4.t**2 + w
    assert g * f4.one == g == f4.one * g


def test_degree_sentinel(f4):
    assert f4.zero.deg == NEG_INF
    assert f4.zero.deg < 0 and f4.zero.deg < -10**9


def test_delta_operators(gr42, gr42_inner):
    R = GR42()
    for a in R.elements():
        assert delta_map(gr42, 2, 2, a) == gr42.sigma(gr42.sigma(a))
        assert delta_map(gr42, 2, 1, a).is_zero()
        assert delta_map(gr42_inner, 1, 0, a) == gr42_inner.delta(a)
        assert delta_map(gr42_inner, 1, 1, a) == gr42_inner.sigma(a)


def test_mul_matches_naive_oracle(gr42_inner, f4):
    rng = random.Random(3)
    for ctx in (gr42_inner, f4):
        for _ in range(300):
            g, h = rand_poly(ctx, rng, 3), rand_poly(ctx, rng, 3)
            assert mul(g, h) == naive_mul(g, h) == mul_via_delta(g, h)


def test_division_examples(f4):
    t, w = f4.t, f4.constant(f4.ring.gen)
    f = t**2 - w
    q, r = right_divmod(t**3, f)
    assert (q, r) == (t, f4.constant(f4.ring.gen**2) * t)
    assert naive_mul(q, f) + r == t**3
    q, r = left_divmod(t**3, f)
    assert naive_mul(f, q) + r == t**3 and r.deg < 2
    assert right_divmod(w, f) == (f4.zero, w)
    assert right_divmod(f, f) == (f4.one, f4.zero)


def test_two_sided_remainders_agree(f4):
    t = f4.t
    f = t**4 - 1
    for g in f4.polys(4):
        qr, rr = right_divmod(g, f)
        ql, rl = left_divmod(g, f)
        assert rr == rl
        assert naive_mul(qr, f) == naive_mul(f, ql)


def test_division_over_gr42(gr42_inner):
    rng = random.Random(5)
    f = gr42_inner.t**3 + gr42_inner.constant(GR42().gen) * gr42_inner.t + 1
    for _ in range(2000):
        g = rand_poly(gr42_inner, rng, rng.randrange(7))
        q, r = right_divmod(g, f)
        assert naive_mul(q, f) + r == g and r.deg < 3
        q, r = left_divmod(g, f)
        assert naive_mul(f, q) + r == g and r.deg < 3


def test_division_needs_unit_lc(gr42):
    with pytest.raises(LeadingCoeffNotUnit):
        right_divmod(gr42.t**3, gr42.constant(2) * gr42.t**2 + 1)


def test_two_sided(f4, gr42):
    t, w = f4.t, f4.constant(f4.ring.gen)
    assert is_two_sided(t**4 - 1)
    assert not is_two_sided(t**2 - w)
    plain = SkewPolyContext(GR42(), identity(GR42()))
    rng = random.Random(1)
    for _ in range(20):
        f = rand_poly(plain, rng, 3) + plain.t**4
        assert is_two_sided(f)


def test_irreducibility(f4, gr42):
    t, w = f4.t, f4.constant(f4.ring.gen)
    assert is_irreducible_over_field(t**2 - w)
    assert not is_irreducible_over_field(t**4 - 1)
    assert naive_mul(t**2 + 1, t**2 + 1) == t**4 - 1
    f = gr42.t**2 - gr42.constant(GR42().gen)
    assert base_irreducible(f)
    assert not base_irreducible(gr42.t**2 - 1)


def test_projection(gr42):
    G = GR42()
    x = gr42.constant(G.gen)
    K = gr42.residue()
    assert project_poly(gr42.t**2 - x) == K.t**2 - K.constant(K.ring.gen)
    assert project_poly(gr42.constant(2) * gr42.t + x) == K.constant(K.ring.gen)
    rng = random.Random(2)
    for _ in range(1000):
        g, h = rand_poly(gr42, rng, 3), rand_poly(gr42, rng, 3)
        assert project_poly(g * h) == project_poly(g) * project_poly(h)


def test_gcrd(f4):
    t = f4.t
    f = (t**2 + 1) * (t**2 + 1)
    assert gcrd(f, t**2 + 1) == t**2 + 1
    assert gcrd(f, f4.one) == f4.one
    assert gcrd(f4.constant(f4.ring.gen) * f, f4.zero) == f


def test_psi(f4, gr42_inner):
    w = f4.constant(f4.ring.gen)
    target = f4.psi_target()
    assert psi(f4.one) == target.one and psi(f4.t) == target.t
    assert psi(w * f4.t**2) == target.constant(f4.ring.gen) * target.t**2
    with pytest.raises(DeltaNotZero):
        psi(gr42_inner.t)


def test_context_mismatch(f4, gr42):
    with pytest.raises(ContextMismatch):
        f4.t * gr42.t


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_ore_ring_laws(data):
    from petit.chainring import frobenius_lift, inner_derivation
    R = GR42()
    s = frobenius_lift(R, 1)
    ctx = SkewPolyContext(R, s, inner_derivation(R.gen, s))
    g, h, k = (data.draw(polys(ctx)) for _ in range(3))
    assert (g * h) * k == g * (h * k)
    assert g * (h + k) == g * h + g * k
    if not h.is_zero() and h.lc.is_unit() and not g.is_zero():
        assert (g * h).deg == g.deg + h.deg


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_psi_anti_multiplicative(data):
    from petit.chainring import F4, frobenius_lift
    R = F4()
    ctx = SkewPolyContext(R, frobenius_lift(R, 1))
    g, h = data.draw(polys(ctx)), data.draw(polys(ctx))
    assert psi(g * h) == psi(h) * psi(g)
