import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import leibniz_det
from petit.algebra import PetitAlgebra
from petit.chainring import F4, GR42
from petit.errors import NotMonic, NotSquare, ShapeMismatch
from petit.pseudolinear import (
    Matrix,
    PseudoLinearMap,
    apply_Tf,
    check_Lh_identity,
    companion,
    det,
    invariant_submodules,
    is_invariant,
    is_irreducible_plt,
    left_mul_matrix,
    lt_preimage,
    poly_of_Tf,
    right_mul_matrix,
    surjectivity_report,
)


@pytest.fixture(scope="module")
def A(f4):
    return PetitAlgebra(f4.t**2 - f4.constant(f4.ring.gen))


@pytest.fixture(scope="module")
def B(f4):
    return PetitAlgebra(f4.t**4 - 1)


@pytest.fixture(scope="module")
def G(gr42_inner):
    return PetitAlgebra(gr42_inner.t**2 - gr42_inner.constant(GR42().gen))


def rows(M):
    return [[M[i, j] for j in range(M.ncols)] for i in range(M.nrows)]


def test_companion(f4, gr42):
    R = f4.ring
    w = R.gen
    assert rows(companion(f4.t**2 - f4.constant(w))) == [[R(0), R(1)], [w, R(0)]]
    C = companion(f4.t**4 - 1)
    assert rows(C)[3] == [R(1), R(0), R(0), R(0)]
    G = GR42()
    # f = t^2 - x has d_0 = -x, so the last row is (x, 0): T_f(t) must equal t o t = x
    Cg = companion(gr42.t**2 - gr42.constant(G.gen))
    assert rows(Cg) == [[G(0), G(1)], [G.gen, G(0)]]
    with pytest.raises(NotMonic):
        companion(f4.constant(w) * f4.t**2 + 1)


def test_Tf_examples(A, f4):
    R = f4.ring
    w = R.gen
    P = PseudoLinearMap.from_poly(A.f)
    assert apply_Tf(P, [R(0), R(0)]) == (R(0), R(0))
    assert apply_Tf(P, [R(1), w]) == (R(1), R(1))
    assert A.t * A([R(1), w]) == A([R(1), R(1)])
    with pytest.raises(ShapeMismatch):
        P((0, 0, 0))


@pytest.mark.parametrize("name", ["A", "B", "G"])
def test_Tf_is_left_multiplication_by_t(name, request):
    alg = request.getfixturevalue(name)
    P = PseudoLinearMap.from_poly(alg.f)
    for x in alg.elements():
        assert P(x.codes) == (alg.t * x).codes


def test_Tf_pseudolinear(G):
    P = PseudoLinearMap.from_poly(G.f)
    R = G.ring
    s, d = G.ctx.sigma, G.ctx.delta
    for a in R.elements():
        for h in G.elements():
            lhs = P(h.scale(a).codes)
            Th = G.element(P(h.codes))
            rhs = Th.scale(s(a)) + h.scale(d(a))
            assert lhs == rhs.codes


def test_Tf_additive(G):
    P = PseudoLinearMap.from_poly(G.f)
    xs = G.elements()
    for x, y in zip(xs, reversed(xs)):
        assert P((x + y).codes) == (G.element(P(x.codes)) + G.element(P(y.codes))).codes


def test_gamma_examples(A, f4):
    R = f4.ring
    assert right_mul_matrix(A, A.one) == Matrix.identity(R, 2)
    assert rows(right_mul_matrix(A, A.t)) == [[R(0), R(1)], [R.gen, R(0)]]
    assert det(right_mul_matrix(A, A.t)) == R.gen


def test_gamma_additive_and_injective(G):
    rng = random.Random(4)
    xs = G.elements()
    seen = set()
    for x in xs:
        seen.add(right_mul_matrix(G, x))
    assert len(seen) == G.size
    for _ in range(2000):
        g, h = rng.choice(xs), rng.choice(xs)
        assert right_mul_matrix(G, g + h) == right_mul_matrix(G, g) + right_mul_matrix(G, h)


def test_row_convention(G):
    for x in G.elements()[::7]:
        for h in G.elements()[::5]:
            assert right_mul_matrix(G, h).vecmul(x.codes) == (x * h).codes


def test_gamma_multiplicative_iff_associative(A, B):
    for g, h in itertools.product(B.elements()[::9], repeat=2):
        assert right_mul_matrix(B, g * h) == right_mul_matrix(B, g) @ right_mul_matrix(B, h)
    bad = [(g, h) for g in A.elements() for h in A.elements()
           if right_mul_matrix(A, g * h) != right_mul_matrix(A, g) @ right_mul_matrix(A, h)]
    assert (A.t, A.t) in bad


def test_lambda(A):
    for h in A.elements():
        L = left_mul_matrix(A, h)
        for i in range(A.m):
            assert L.row(i) == (h * A.t_power(i)).codes


def test_det_examples():
    R = GR42()
    assert det(Matrix.identity(R, 3)) == R.one
    with pytest.raises(NotSquare):
        det(Matrix.zeros(R, 2, 3))


def test_det_matches_leibniz(B, G):
    for alg in (B, G):
        for h in alg.elements()[::3]:
            M = right_mul_matrix(alg, h)
            assert det(M) == leibniz_det(M)


def test_det_multiplicative():
    R = GR42()
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.choice([2, 3])
        X = Matrix.from_codes(R, [[rng.randrange(16) for _ in range(n)] for _ in range(n)])
        Y = Matrix.from_codes(R, [[rng.randrange(16) for _ in range(n)] for _ in range(n)])
        assert det(X @ Y) == det(X) * det(Y)


def test_right_zero_divisors_have_singular_gamma(B):
    for g, h in B.zero_divisor_pairs():
        assert det(right_mul_matrix(B, h)).is_zero()


def test_Lh_identity(A, B):
    R = A.ring
    for h in A.elements():
        assert check_Lh_identity(A, h)
    assert check_Lh_identity(B, B(B.f.ctx.t**3 + 1))
    op = poly_of_Tf(A, A.one)
    assert all(op(x.codes) == x.codes for x in A.elements())
    op = poly_of_Tf(A, A.t)
    P = PseudoLinearMap.from_poly(A.f)
    assert all(op(x.codes) == P(x.codes) for x in A.elements())
    h = A([R.gen, R(1)])
    op = poly_of_Tf(A, h)
    for x in A.elements():
        expect = x.scale(R.gen) + A.element(P(x.codes))
        assert op(x.codes) == (h * x).codes == expect.codes


def test_invariant_submodules(A, B, f4):
    subs = invariant_submodules(A)
    assert [len(N) for N in subs] == [1, 16]
    assert is_irreducible_plt(A)
    assert not is_irreducible_plt(B)
    R = f4.ring
    assert is_invariant(B, [(R.one_code, 0, R.one_code, 0), (0, R.one_code, 0, R.one_code)])
    assert not is_invariant(B, [(R.one_code, R.gen.code, 0, 0)])
    assert is_invariant(B, [])


def test_semifield_implies_irreducible_plt(f4):
    for f in f4.monic_polys(2):
        alg = PetitAlgebra(f)
        if alg.is_semifield():
            assert is_irreducible_plt(alg)


def test_surjectivity(A, B, G):
    for alg in (A, B, G):
        rep = surjectivity_report(alg)
        assert rep["sigma_surjective"]
        assert rep["Lt_surjective"] == rep["Lt_injective"]
    assert surjectivity_report(A)["Lt_surjective"]
    for g in A.elements():
        u = lt_preimage(A, g)
        assert A.t * u == g


def test_explicit_preimage_gr42(gr42):
    alg = PetitAlgebra(gr42.t**3 + gr42.constant(GR42().gen) * gr42.t + gr42.constant(3))
    for g in alg.additive_generators() + alg.elements()[::97]:
        assert alg.t * lt_preimage(alg, g) == g


def test_Lt_not_surjective_when_d0_nonunit(gr42):
    alg = PetitAlgebra(gr42.t**2 + gr42.constant(2))
    assert not surjectivity_report(alg)["Lt_surjective"]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 15), min_size=9, max_size=9))
def test_det_transpose_invariant(cs):
    R = GR42()
    M = Matrix.from_codes(R, [cs[0:3], cs[3:6], cs[6:9]])
    T = Matrix.from_codes(R, [list(c) for c in zip(*M.codes)])
    assert det(M) == det(T) == leibniz_det(M)
