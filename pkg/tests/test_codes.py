import itertools

import pytest

from oracles import span
from petit.algebra import PetitAlgebra
from petit.chainring import GR42
from petit.codes import build_code, code_from_rows, right_divisors
from petit.errors import DomainError, EmptyCode, MissingCofactor, NotARightDivisor
from petit.naive import naive_mul
from petit.pseudolinear import Matrix, right_mul_matrix


@pytest.fixture(scope="module")
def B(f4):
    return PetitAlgebra(f4.t**4 - 1)


@pytest.fixture(scope="module")
def C(B, f4):
    return build_code(B, f4.t**2 + 1)


def test_right_divisors(f4, B):
    t = f4.t
    divs = right_divisors(B.f, 2)
    assert t**2 + 1 in divs
    for g in divs:
        q = right_divisors.__globals__["right_divmod"](B.f, g)[0]
        assert naive_mul(q, g) == B.f
    assert right_divisors(t**2 - f4.constant(f4.ring.gen), 1) == []
    with pytest.raises(DomainError):
        right_divisors(B.f, 4)


def test_generator_and_control(C, f4):
    R = f4.ring
    assert C.gen_matrix == Matrix(R, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert C.h == f4.t**2 + 1 and C.h_prime == f4.t**2 + 1
    assert (C.gen_matrix @ C.ctrl_matrix).is_zero()
    assert len(C) == 16 == R.size ** (4 - 2)


def test_rowspace_against_oracle(C, B):
    rows = [[B.ring.element_from_code(c) for c in r] for r in C.gen_matrix.codes]
    assert span(B.ring, rows) == set(C.codewords())


def test_membership(C, B):
    ann = {x.codes for x in B.elements() if C.is_codeword(x, "annihilator")}
    row = {x.codes for x in B.elements() if C.is_codeword(x, "rowspace")}
    assert ann == row == set(C.codewords())
    assert len(ann) == 16
    for r in C.gen_matrix.codes:
        assert C.is_codeword(B.element(r))
    assert C.is_codeword(B.zero)
    assert not C.is_codeword(B.one)
    gamma_h = C.ctrl_matrix
    kernel = {x.codes for x in B.elements() if not any(gamma_h.vecmul(x.codes))}
    assert kernel == set(C.codewords())


def test_whole_space_code(B, f4):
    C1 = build_code(B, f4.one)
    assert C1.gen_matrix == Matrix.identity(f4.ring, 4)
    assert C1.min_distance() == 1
    assert len(C1) == 256


def test_not_a_divisor(B, f4):
    with pytest.raises(NotARightDivisor):
        build_code(B, f4.t**2 + f4.constant(f4.ring.gen))


def test_closures(C, f4):
    assert C.constacyclic_check(1)
    assert C.left_ideal_check()
    assert C.Lt_closure_check()


def test_non_ideal_subspace(B, f4):
    w = f4.ring.gen
    bad = code_from_rows(B, [[1, w, 0, 0], [0, 0, 1, 1]])
    assert bad.constacyclic_witness(1) is not None
    a, c = bad.left_ideal_witness()
    assert (a * c).codes not in set(bad.codewords())
    assert not bad.Lt_closure_check()
    with pytest.raises(MissingCofactor):
        bad.is_codeword(B.zero, mode="annihilator")


def test_distance_and_enumerator(C, B):
    assert C.min_distance() == 2
    enum = C.weight_enumerator()
    assert sum(enum.values()) == len(C) and enum[0] == 1
    with pytest.raises(EmptyCode):
        code_from_rows(B, []).min_distance()
    assert code_from_rows(B, []).constacyclic_check(1)


def test_encode(C, f4):
    R = f4.ring
    word = C.encode([R.one, R.gen])
    assert word.codes in set(C.codewords())
    assert word == C.algebra([R.one, R.gen]) * C.algebra(C.g)


def test_all_divisor_codes_f4(f4):
    """Every divisor-built code of t^4 - 1 is free, sigma-cyclic and an ideal."""
    B = PetitAlgebra(f4.t**4 - 1)
    for r in (1, 2, 3):
        for g in right_divisors(B.f, r):
            code = build_code(B, g)
            assert len(code) == 4 ** (4 - r)
            assert code.constacyclic_check(1)
            assert code.left_ideal_check()
            if code.h is not None:
                assert (code.gen_matrix @ code.ctrl_matrix).is_zero()
                ann = {x.codes for x in B.elements() if code.is_codeword(x, "annihilator")}
                assert ann == set(code.codewords())


def test_constacyclic_with_unit_d(f4):
    w = f4.ring.gen
    B = PetitAlgebra(f4.t**2 - f4.constant(w**2))
    for g in right_divisors(B.f, 1):
        code = build_code(B, g)
        assert code.constacyclic_check(w**2)
        assert code.left_ideal_check()


def test_one_sided_annihilation(gr42):
    """With only f = h' g, every codeword u o g still satisfies (u o g) o h' = 0 when f = g h'."""
    G = GR42()
    alg = PetitAlgebra(gr42.t**2 - gr42.constant(G.gen))
    A2 = PetitAlgebra(gr42.t**2 - 1)
    for g in right_divisors(A2.f, 1):
        code = build_code(A2, g)
        assert len(code) == 16 ** 1
        assert code.left_ideal_check()
        if code.h is not None:
            for c in code.codewords():
                assert code.is_codeword(A2.element(c), "annihilator")
    assert right_divisors(alg.f, 1) == []


def test_control_matrix_is_gamma_of_h(C, B):
    assert C.ctrl_matrix == right_mul_matrix(B, B(C.h))
