"""Petit algebras over Galois rings: reduction modulo p, the generalized
Galois ring test, lifting of the top factor, and the norm ``M = det o gamma``.

Zero divisors are taken one-sided (left or right) and the set includes 0, so
a GGR is exactly an algebra whose zero-divisor set equals ``pA``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgElem, PetitAlgebra
from .chainring import ChainRing, RingElement, is_prime
from .errors import (
    CheckFailed,
    DeltaNotZero,
    DInS0,
    DNotInvertible,
    DomainError,
    GammaNotFixed,
    NotAGaloisRing,
    NotCommutativeBase,
    NotGGR,
    SigmaOrderMismatch,
    TooLarge,
)
from .pseudolinear import Matrix, _det_codes, det, right_mul_matrix
from .skewpoly import SkewPoly, SkewPolyContext, base_irreducible, project_poly

SCAN, LINEAR = "scan", "linear"


class Reduction:
    """Coefficient-wise reduction ``A -> A/pA``."""

    def __init__(self, source: PetitAlgebra, target: PetitAlgebra):
        self.source = source
        self.target = target
        self._proj = [source.ring.project_code(c) for c in range(source.ring.size)]

    def __call__(self, x: AlgElem) -> AlgElem:
        return AlgElem(self.target, self.image_codes(self.source(x).codes))

    def image_codes(self, codes) -> tuple[int, ...]:
        return tuple(self._proj[c] for c in codes)


def _p_code(R: ChainRing) -> int:
    return R(R.p).code


def p_multiples(A: PetitAlgebra) -> set[tuple[int, ...]]:
    """The set ``pA`` as coordinate tuples."""
    R = A.ring
    p = _p_code(R)
    return {tuple(R.cmul(p, c) for c in x.codes) for x in A.elements()}


def reduce_algebra(A: PetitAlgebra, verify: bool = True) -> tuple[PetitAlgebra, Reduction]:
    """Top factor ``S_fbar`` and the reduction map, optionally verified.

    Multiplicativity is checked on all pairs when that is at most ``2**16``
    products, otherwise on additive generators (exact by bi-additivity).
    """
    R, ctx = A.ring, A.ctx
    p = _p_code(R)
    if ctx.sigma.table[p] != p or ctx.delta.table[p] != 0:
        raise GammaNotFixed("p must be fixed by sigma and killed by delta")
    top = PetitAlgebra(project_poly(A.f), side=A.side)
    psi = Reduction(A, top)
    if verify:
        xs = A.elements() if A.size**2 <= 2**16 else A.additive_generators()
        for g, h in itertools.product(xs, repeat=2):
            if psi.image_codes(A._mul_codes(g.codes, h.codes)) != \
                    top._mul_codes(psi.image_codes(g.codes), psi.image_codes(h.codes)):
                raise CheckFailed(f"reduction is not multiplicative at ({g}, {h})")
        zero = top.zero.codes
        kernel = {x.codes for x in A.elements() if psi.image_codes(x.codes) == zero}
        if kernel != p_multiples(A):
            raise CheckFailed("kernel of the reduction differs from pA")
    return top, psi


# ------------------------------------------------------------- zero divisors
def zero_divisors_scan(A: PetitAlgebra) -> set[tuple[int, ...]]:
    """Elements annihilating some nonzero element on either side (0 included)."""
    A._require_enumerable(A.size**2)
    nz = [x.codes for x in A.elements() if x]
    zero = A.zero.codes
    out = {zero}
    for g in nz:
        for h in nz:
            if A._mul_codes(g, h) == zero:
                out.add(g)
                out.add(h)
    return out


def _structure(A: PetitAlgebra):
    """Additive basis ``x^j t^i`` over ``Z/p^e`` and the products of basis pairs."""
    R = A.ring
    gens = A.additive_generators()
    Z = ChainRing(R.p, R.e)
    table = {(a, b): A._mul_codes(gens[a].codes, gens[b].codes)
             for a in range(len(gens)) for b in range(len(gens))}
    return Z, gens, table


def _to_ints(R: ChainRing, codes) -> list[int]:
    """Coordinates of an algebra element on the basis ``x^j t^i``."""
    return [v for c in codes for v in R.coords(c)]


def zero_divisors_linear(A: PetitAlgebra) -> set[tuple[int, ...]]:
    """Zero divisors through determinants of ``L_g`` and ``R_g`` over ``Z/p^e``.

    Both maps are linear over ``Z/p^e``; on a finite module they are injective
    exactly when the determinant is a unit.
    """
    R = A.ring
    Z, gens, table = _structure(A)
    N = len(gens)
    # row b of the matrix of L_x holds the coordinates of x o gens[b]
    prod = {key: _to_ints(R, v) for key, v in table.items()}
    q = R.p**R.e
    out = set()
    for x in A.elements():
        xi = _to_ints(R, x.codes)
        left = [[sum(xi[a] * prod[(a, b)][k] for a in range(N)) % q for k in range(N)]
                for b in range(N)]
        right = [[sum(xi[a] * prod[(b, a)][k] for a in range(N)) % q for k in range(N)]
                 for b in range(N)]
        dl = _det_codes(Z, [[Z.encode([v]) for v in row] for row in left])
        dr = _det_codes(Z, [[Z.encode([v]) for v in row] for row in right])
        if not (Z.code_is_unit(dl) and Z.code_is_unit(dr)):
            out.add(x.codes)
    return out


# ------------------------------------------------------------------ GGR
@dataclass
class GGRReport:
    algebra: PetitAlgebra
    element_count: int
    zero_divisor_set_size: int
    pA_size: int
    is_ggr: bool
    top_factor: PetitAlgebra
    top_is_semifield: bool
    is_lifting: bool
    base_irreducible: bool
    method: str = SCAN
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        R = self.algebra.ring
        return {
            "ring": R.to_json(),
            "f": self.algebra.f.to_json(),
            "element_count": self.element_count,
            "zero_divisor_set_size": self.zero_divisor_set_size,
            "pA_size": self.pA_size,
            "is_ggr": self.is_ggr,
            "top_factor_f": self.top_factor.f.to_json(),
            "top_is_semifield": self.top_is_semifield,
            "is_lifting": self.is_lifting,
            "base_irreducible": self.base_irreducible,
            "method": self.method,
        }


def ggr_check(A: PetitAlgebra, method: str = SCAN) -> GGRReport:
    R = A.ring
    if not isinstance(R, ChainRing):
        raise NotAGaloisRing("base ring must be a Galois ring")
    count = R.p ** (R.e * R.n * A.m)
    if A.size != count:
        raise CheckFailed(f"|A| = {A.size}, expected {count}")
    if method == SCAN:
        zd = zero_divisors_scan(A)
    elif method == LINEAR:
        zd = zero_divisors_linear(A)
    else:
        raise DomainError(f"unknown method {method!r}")
    pA = p_multiples(A)
    top, _ = reduce_algebra(A)
    is_ggr = zd == pA
    b_irr = base_irreducible(A.f)
    if b_irr and not is_ggr:
        raise CheckFailed(f"f = {A.f} is base irreducible but S_f is not a GGR")
    report = GGRReport(A, A.size, len(zd), len(pA), is_ggr, top,
                       top.is_semifield(), False, b_irr, method)
    if is_ggr:
        report.is_lifting = lifting_check(A, report)
    return report


def lifting_check(A: PetitAlgebra, report: GGRReport | None = None) -> bool:
    """``psi(C(A)) == C(top)`` and ``C(A) n pA == pC(A)``."""
    if report is None:
        if zero_divisors_linear(A) != p_multiples(A):
            raise NotGGR("lifting is only defined for a GGR")
    elif not report.is_ggr:
        raise NotGGR("lifting is only defined for a GGR")
    top, psi = reduce_algebra(A, verify=False)
    R = A.ring
    p = _p_code(R)
    cA = {x.codes for x in A.center()}
    cTop = {x.codes for x in top.center()}
    image = {psi.image_codes(c) for c in cA}
    zero = top.zero.codes
    kernel = {c for c in cA if psi.image_codes(c) == zero}
    p_cA = {tuple(R.cmul(p, a) for a in c) for c in cA}
    return image == cTop and kernel == p_cA


# ----------------------------------------------------------- family
def _independent_powers(K: ChainRing, F: list[int], d: int, k: int) -> bool:
    """Whether ``1, d, ..., d^{k-1}`` are linearly independent over the subfield F."""
    powers = [K.one_code]
    for _ in range(k - 1):
        powers.append(K.cmul(powers[-1], d))
    for cs in itertools.product(F, repeat=k):
        if any(cs):
            acc = 0
            for c, w in zip(cs, powers):
                acc = K.cadd(acc, K.cmul(c, w))
            if acc == 0:
                return False
    return True


def cor18_family(ctx: SkewPolyContext, d, h: SkewPoly | None = None,
                 m: int | None = None) -> PetitAlgebra:
    """``S_f`` for ``f = t^m + p h(t) - d`` with d a unit outside ``Fix(sigma)``.

    The GGR and lifting properties are verified whenever m is prime or
    ``1, dbar, ..., dbar^{m-1}`` are independent over ``Fix(sigma-bar)``.
    """
    if not ctx.is_twisted:
        raise DeltaNotZero("the family is defined over S[t; sigma]")
    R = ctx.ring
    order = ctx.sigma.order
    m = order if m is None else m
    if m != order:
        raise SigmaOrderMismatch(f"sigma has order {order}, expected {m}")
    d = R(d)
    if not d.is_unit():
        raise DNotInvertible(f"d = {d} is not a unit")
    if ctx.sigma(d) == d:
        raise DInS0(f"d = {d} lies in the fixed ring")
    h = ctx.zero if h is None else h
    if h.deg >= m:
        raise DomainError(f"deg h = {h.deg} must be < {m}")
    f = ctx.monomial(R.one, m) + ctx.constant(R(R.p)) * h - ctx.constant(d)
    A = PetitAlgebra(f)
    res = ctx.residue()
    K = res.ring
    dbar = K.element_from_code(R.project_code(d.code))
    if project_poly(f) != res.monomial(K.one, m) - res.constant(dbar):
        raise CheckFailed("reduction of f is not t^m - dbar")
    F = [c for c in range(K.size) if res.sigma.table[c] == c]
    if is_prime(m) or _independent_powers(K, F, dbar.code, m):
        report = ggr_check(A)
        if not (report.is_ggr and report.is_lifting):
            raise CheckFailed(f"S_f for f = {f} is not a GGR lifting its top factor")
    return A


# ------------------------------------------------------------------ norm
def norm_map(A: PetitAlgebra, h) -> RingElement:
    """``M(h) = det(gamma(h))``."""
    if not getattr(A.ring, "commutative", True):
        raise NotCommutativeBase("determinants need a commutative base ring")
    return det(right_mul_matrix(A, A(h)))


def field_norm(sigma, a: RingElement, m: int) -> RingElement:
    out = a.ring.one
    for _ in range(m):
        out = out * a
        a = sigma(a)
    return out


def field_trace(sigma, a: RingElement, m: int) -> RingElement:
    out = a.ring.zero
    for _ in range(m):
        out = out + a
        a = sigma(a)
    return out


def covered_shape(A: PetitAlgebra) -> bool:
    """``f = t^m - d_0`` or ``f = t^2 - d_1 t - d_0`` (delta = 0)."""
    if not A.ctx.is_twisted:
        return False
    return A.m == 2 or not any(A.f.codes[1:A.m])


def semi_mult_check(A: PetitAlgebra) -> bool:
    """``gamma(a) gamma(g) == gamma(a o g)`` for a in S, plus ``M(a v) = a^m M(v)`` on S_0.

    Exhaustive over g when |S| |A| is small, otherwise over additive
    generators (both sides are additive in g).  Only the covered shapes of f
    raise on failure; other f simply return False.
    """
    R = A.ring
    gs = A.elements() if R.size * A.size <= 2**14 else A.additive_generators()
    gammas = {}

    def gamma(x: AlgElem) -> Matrix:
        if x.codes not in gammas:
            gammas[x.codes] = right_mul_matrix(A, x)
        return gammas[x.codes]

    ok = True
    for a in A.scalars():
        ga = gamma(a)
        for g in gs:
            if ga @ gamma(g) != gamma(a * g):
                ok = False
                break
        if not ok:
            break
    if ok:
        S0 = A.scalar_ring()
        vs = A.elements() if A.size <= 2**10 else A.additive_generators()
        for a in S0:
            am = a**A.m
            for v in vs:
                if norm_map(A, v.scale(a)) != am * norm_map(A, v):
                    ok = False
                    break
    if not ok and covered_shape(A):
        raise CheckFailed(f"semi-multiplicativity fails for f = {A.f}")
    return ok


def cubic_norm_closed_form(A: PetitAlgebra, h) -> RingElement:
    """``N(h0) + d N(h1) + d^2 N(h2) - d T(h0 h1 h2)`` for ``f = t^3 - d``."""
    d, sigma = _cubic_data(A)
    h0, h1, h2 = A(h).coeffs
    N = lambda a: field_norm(sigma, a, 3)
    T = lambda a: field_trace(sigma, a, 3)
    return N(h0) + d * N(h1) + d * d * N(h2) - d * T(h0 * h1 * h2)


def cubic_norm_expansion(A: PetitAlgebra, h) -> RingElement:
    """Leibniz expansion of ``det(gamma(h))`` for ``f = t^3 - d``."""
    d, s = _cubic_data(A)
    h0, h1, h2 = A(h).coeffs
    N = lambda a: field_norm(s, a, 3)
    ss = lambda a: s(s(a))
    return (N(h0) + d * N(h1) + d * s(d) * N(h2)
            - s(d) * h0 * s(h1) * ss(h2)
            - d * h1 * s(h2) * ss(h0)
            - d * h2 * s(h0) * ss(h1))


def _cubic_data(A: PetitAlgebra):
    f = A.f
    if A.m != 3 or f.codes[1] or f.codes[2] or not A.ctx.is_twisted:
        raise DomainError(f"expected f = t^3 - d over S[t; sigma], got {f}")
    return -f.coeffs[0], A.ctx.sigma
