import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import f4_tables, poly_ring_mul
from petit.chainring import (
    DERIVATION,
    F4,
    F8,
    GR42,
    ChainRing,
    RingMorphism,
    constant_set,
    fixed_set,
    frobenius_lift,
    identity,
    inner_derivation,
    zero_derivation,
)
from petit.errors import (
    NonMonicModulus,
    NotAUnit,
    NotBasicIrreducible,
    NotPrime,
    TooLarge,
    ValidationFailed,
)

RINGS = [F4(), GR42(), F8(), ChainRing(2, 2), ChainRing(3, 2, (1, 0, 1)), ChainRing(2, 3, (1, 1, 1))]


def test_construction_sizes():
    assert F4().size == 4 and F4().is_field()
    G = GR42()
    assert G.size == 16 and not G.is_field()
    assert G.residue_field() == F4()
    assert ChainRing(2, 3, (1, 1, 1)).size == 64


@pytest.mark.parametrize("args, exc", [
    ((2, 2, (1, 0, 1)), NotBasicIrreducible),
    ((4, 1), NotPrime),
    ((2, 1, (1, 1, 2)), NonMonicModulus),
])
def test_construction_errors(args, exc):
    with pytest.raises(exc):
        ChainRing(*args)


def test_f4_against_hand_tables():
    R = F4()
    elems, mul = f4_tables()
    for u, v in itertools.product(elems, repeat=2):
        assert (R(list(u)) * R(list(v))).coeffs == mul(u, v)
    w = R.gen
    assert w * w**2 == R.one and w**3 == 1


@pytest.mark.parametrize("R", RINGS, ids=repr)
def test_multiplication_matches_schoolbook(R):
    mod = R.modulus or (0, 1)
    for a, b in itertools.product(R.elements()[:40], repeat=2):
        expect = poly_ring_mul(R.p, R.e, mod, list(a.coeffs), list(b.coeffs))
        assert list((a * b).coeffs) == expect


def test_units_and_projection():
    G = GR42()
    assert not G(2).is_unit() and G.gen.is_unit()
    assert G.project(G([3, 3])) == F4()([1, 1])
    assert G.project(G([3, 3])) == F4().gen ** 2
    assert G.units_count == 12
    with pytest.raises(NotAUnit):
        G(2).inverse()


@pytest.mark.parametrize("R", RINGS, ids=repr)
def test_unit_zero_divisor_trichotomy(R):
    els = R.elements()
    for a in els:
        zd = a.is_zero() or any((a * b).is_zero() for b in els if not b.is_zero())
        assert (a.is_unit() and not zd) or (not a.is_unit() and zd)
    assert sum(a.is_unit() for a in els) == R.size - R.p ** ((R.e - 1) * R.n)


@pytest.mark.parametrize("R", RINGS, ids=repr)
def test_projection_is_homomorphism_with_kernel_p(R):
    K = R.residue_field()
    for a, b in itertools.product(R.elements()[:30], repeat=2):
        assert R.project(a * b) == R.project(a) * R.project(b)
        assert R.project(a + b) == R.project(a) + R.project(b)
    kernel = {a.code for a in R.elements() if R.project(a).is_zero()}
    assert kernel == set(R.ideal_codes(1))
    assert {R.project(R.lift(k)) for k in K.elements()} == set(K.elements())


def test_frobenius_examples():
    s = frobenius_lift(F4(), 1)
    assert s(F4().gen) == F4().gen ** 2 and s.order == 2
    G = GR42()
    sg = frobenius_lift(G, 1)
    assert sg(G.gen) == G([3, 3])
    assert sg.power_table(2) == list(range(16))
    assert [a.code for a in fixed_set(sg)] == [G(k).code for k in range(4)]
    assert frobenius_lift(F8(), 1).order == 3
    assert [a.code for a in fixed_set(s)] == [0, F4().one_code]


@pytest.mark.parametrize("R", RINGS, ids=repr)
def test_frobenius_commutes_with_projection(R):
    if R.n == 1:
        return
    s = frobenius_lift(R, 1)
    sbar = s.residue()
    for a in R.elements():
        assert R.project(s(a)) == sbar(R.project(a))
        assert s(a) in R.elements()


def test_inner_derivation_examples():
    R = F4()
    s = frobenius_lift(R, 1)
    d = inner_derivation(R.gen, s)
    assert d(R.one).is_zero()
    assert d(R.gen) == R.gen
    assert inner_derivation(R.zero, s).is_zero()
    assert len(constant_set(zero_derivation(s))) == 4


@pytest.mark.parametrize("R", [F4(), GR42(), F8()], ids=repr)
def test_derivation_laws(R):
    s = frobenius_lift(R, 1)
    for beta in R.elements()[:6]:
        d = inner_derivation(beta, s)
        for a, b in itertools.product(R.elements(), repeat=2):
            assert d(a + b) == d(a) + d(b)
            assert d(a * b) == s(a) * d(b) + d(a) * b
        ideal = set(R.ideal_codes(1))
        assert all(d.table[c] in ideal for c in ideal)


def test_bad_tables_rejected():
    R = F4()
    with pytest.raises(ValidationFailed):
        RingMorphism(R, [0, 1, 1, 3])
    with pytest.raises(ValidationFailed):
        RingMorphism(R, [0, 1, 3, 2], DERIVATION, identity(R))


def test_enumeration_cap():
    R = ChainRing(2, 2, (1, 1, 1), cap=8)
    with pytest.raises(TooLarge):
        R.elements()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_gr42_ring_axioms(a, b, c):
    R = GR42()
    x, y, z = (R.element_from_code(v) for v in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x.is_unit():
        assert x * x.inverse() == R.one
