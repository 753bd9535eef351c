"""The acceptance suite: ten criteria, each a list of named exact checks.

Used by ``petit selftest`` and by ``tests/test_acceptance.py``.  Each
criterion also carries a wall-clock budget, reported as its own check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import PetitAlgebra
from .chainring import F4, F8, GR42, frobenius_lift, inner_derivation
from .codes import build_code
from .ggr import (
    cubic_norm_closed_form,
    ggr_check,
    lifting_check,
    norm_map,
    p_multiples,
    reduce_algebra,
    zero_divisors_scan,
)
from .naive import naive_mul
from .pseudolinear import (
    PseudoLinearMap,
    check_Lh_identity,
    det,
    invariant_submodules,
    right_mul_matrix,
)
from .skewpoly import (
    SkewPolyContext,
    is_irreducible_over_field,
    is_two_sided,
    left_divmod,
    mul,
    mul_via_delta,
    psi,
    right_divmod,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CriterionResult:
    number: int
    title: str
    budget: float
    elapsed: float = 0.0
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "elapsed_s": round(self.elapsed, 3),
            "budget_s": self.budget,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
        }


def _f4():
    R = F4()
    ctx = SkewPolyContext(R, frobenius_lift(R, 1))
    return R, ctx


def _gr42(inner: bool = False):
    R = GR42()
    s = frobenius_lift(R, 1)
    d = inner_derivation(R.gen, s) if inner else None
    return R, SkewPolyContext(R, s, d)


def _random_poly(ctx, rng: random.Random, max_deg: int):
    R = ctx.ring
    return ctx.poly([R.element_from_code(rng.randrange(R.size)) for _ in range(max_deg + 1)])


# ------------------------------------------------------------- criteria
def criterion_1() -> list[Check]:
    R, ctx = _f4()
    t, w = ctx.t, ctx.constant(R.gen)
    fs = [t**2 - w, t**4 - 1]
    right_ok = left_ok = True
    count = 0
    for g in ctx.polys(4):
        for f in fs:
            count += 1
            q, r = right_divmod(g, f)
            if not (naive_mul(q, f) + r == g and r.deg < f.deg):
                right_ok = False
            q, r = left_divmod(g, f)
            if not (naive_mul(f, q) + r == g and r.deg < f.deg):
                left_ok = False
    return [Check("right division g = q f + r, deg r < deg f", right_ok, f"{count} pairs"),
            Check("left division g = f q + r, deg r < deg f", left_ok, f"{count} pairs")]


def criterion_2() -> list[Check]:
    R, ctx = _f4()
    t, w = ctx.t, ctx.constant(R.gen)
    A = PetitAlgebra(t**2 - w)
    T = A.t
    checks = [Check("[t,t,t] = t in S_{t^2-w}", A.associator(T, T, T) == T),
              Check("t^2-w is not two-sided", not is_two_sided(A.f))]
    B = PetitAlgebra(t**4 - 1)
    checks.append(Check("t^4-1 is two-sided", is_two_sided(B.f)))
    t2 = B.t_power(2)
    slice_ = [B.one.scale(a) + t2.scale(b) for a in R.elements() for b in R.elements()]
    closed = all((x * y).codes in {s.codes for s in slice_} for x in slice_ for y in slice_)
    zero_slice = all(not B.associator(x, y, z)
                     for x in slice_ for y in slice_ for z in slice_)
    checks.append(Check("span{1, t^2} is a 16-element subalgebra", closed and len(slice_) == 16))
    checks.append(Check("zero associator on all 4096 slice triples", zero_slice))
    witness = B.find_associator_witness("sampled", samples=10**5, seed=0)
    checks.append(Check("zero associator on 10^5 seeded random triples", witness is None))
    return checks


def criterion_3() -> list[Check]:
    R, ctx = _f4()
    quads = list(ctx.monic_polys(2))
    unit_const = [f for f in quads if R.code_is_unit(f.codes[0])]
    agree = all(PetitAlgebra(f).is_semifield() == is_irreducible_over_field(f) for f in quads)
    w = ctx.constant(R.gen)
    A = PetitAlgebra(ctx.t**2 - w)
    nz = [x for x in A.elements() if x]
    pairs = len(nz) ** 2
    zd = len(A.zero_divisor_pairs())
    return [
        Check("semifield <=> irreducible on all 16 monic quadratics", agree and len(quads) == 16,
              f"{len(quads)} monic quadratics, {len(unit_const)} with unit constant term"),
        Check("S_{t^2-w}: 0 zero-divisor pairs among 225", zd == 0 and pairs == 225,
              f"{zd} of {pairs}"),
    ]


def criterion_4() -> list[Check]:
    R, ctx = _f4()
    A = PetitAlgebra(ctx.t**2 - ctx.constant(R.gen))
    nuc_r = {x.codes for x in A.nucleus("right", mode="exhaustive")}
    eig = {x.codes for x in A.eigenring()}
    S = {x.codes for x in A.scalars()}
    return [Check("Nuc_r = eigenring", nuc_r == eig, f"|Nuc_r| = {len(nuc_r)}"),
            Check("S in Nuc_l", S <= {x.codes for x in A.nucleus("left", mode="exhaustive")}),
            Check("S in Nuc_m", S <= {x.codes for x in A.nucleus("middle", mode="exhaustive")})]


def criterion_5() -> list[Check]:
    R, ctx = _f4()
    A = PetitAlgebra(ctx.t**2 - ctx.constant(R.gen))
    P = PseudoLinearMap.from_poly(A.f)
    tf_f4 = all(P(x.codes) == (A.t * x).codes for x in A.elements())
    G, gctx = _gr42(inner=True)
    B = PetitAlgebra(gctx.t**2 - gctx.constant(G.gen))
    Q = PseudoLinearMap.from_poly(B.f)
    tf_gr = all(Q(x.codes) == (B.t * x).codes for x in B.elements())
    lh = all(check_Lh_identity(A, h) for h in A.elements())
    subs = invariant_submodules(A)
    only_trivial = [len(N) for N in subs] == [1, A.size]
    return [Check("T_f = L_t on all 16 elements of S_{t^2-w}", tf_f4),
            Check("T_f = L_t on all 256 elements of S_{t^2-x} over GR(4,2)", tf_gr),
            Check("L_h = h(T_f) on all 256 pairs", lh),
            Check("invariant submodules are exactly {0, S^2}", only_trivial,
                  f"sizes {[len(N) for N in subs]}")]


def criterion_6() -> list[Check]:
    G, ctx = _gr42()
    A = PetitAlgebra(ctx.t**2 - ctx.constant(G.gen))
    zd = zero_divisors_scan(A)
    pA = p_multiples(A)
    top, psi_map = reduce_algebra(A)
    R4, ctx4 = _f4()
    target = PetitAlgebra(ctx4.t**2 - ctx4.constant(R4.gen))
    same_top = top.f.to_json() == target.f.to_json() and top.ring == target.ring
    report = ggr_check(A)
    return [
        Check("|S_f| = 256", A.size == 256),
        Check("zero-divisor set = 2 S_f", zd == pA),
        Check("|2 S_f| = 64", len(pA) == 64, f"|2 S_f| = {len(pA)}"),
        Check("top factor is S_{t^2-w} over F4 (reduction verified, kernel 2 S_f)",
              same_top and report.top_is_semifield),
        Check("lifting check", report.is_ggr and lifting_check(A, report)),
    ]


def criterion_7() -> list[Check]:
    R, ctx = _f4()
    t = ctx.t
    A = PetitAlgebra(t**4 - 1)
    C = build_code(A, t**2 + 1)
    G_expected = [[R(1), R(0), R(1), R(0)], [R(0), R(1), R(0), R(1)]]
    gen_ok = [[R.element_from_code(c) for c in row] for row in C.gen_matrix.codes] == G_expected
    ann = {x.codes for x in A.elements() if C.is_codeword(x, mode="annihilator")}
    rows = set(C.codewords())
    return [
        Check("generator matrix [[1,0,1,0],[0,1,0,1]]", gen_ok),
        Check("|C| = 16", len(C) == 16),
        Check("annihilator set = row space over all 256 vectors", ann == rows,
              f"{len(ann)} annihilated"),
        Check("G gamma(h) = 0", (C.gen_matrix @ C.ctrl_matrix).is_zero()),
        Check("sigma-cyclic closure (d = 1)", C.constacyclic_check(1)),
        Check("left-ideal closure", C.left_ideal_check()),
        Check("minimum distance 2", C.min_distance() == 2),
    ]


def criterion_8() -> list[Check]:
    R, ctx = _f4()
    A = PetitAlgebra(ctx.t**2 - ctx.constant(R.gen))
    lemma = mult = True
    for a in A.scalars():
        ga = right_mul_matrix(A, a)
        for g in A.elements():
            ag = a * g
            if ga @ right_mul_matrix(A, g) != right_mul_matrix(A, ag):
                lemma = False
            if norm_map(A, ag) != norm_map(A, a) * norm_map(A, g):
                mult = False
    K = F8()
    s = frobenius_lift(K, 1)
    kctx = SkewPolyContext(K, s)
    mismatches = total = 0
    for d in K.elements():
        if s(d) == d:
            continue
        B = PetitAlgebra(kctx.t**3 - kctx.constant(d))
        for h in B.elements():
            total += 1
            if det(right_mul_matrix(B, h)) != cubic_norm_closed_form(B, h):
                mismatches += 1
    return [Check("gamma(a) gamma(g) = gamma(a o g), 4 x 16 pairs", lemma),
            Check("M(a o g) = M(a) M(g)", mult),
            Check("F8/F2, f = t^3 - d: closed-form norm = det gamma(h)", mismatches == 0,
                  f"{mismatches} of {total} evaluations differ")]


def criterion_9() -> list[Check]:
    R, ctx = _f4()
    rng = random.Random(9)
    ok = True
    for _ in range(10**4):
        g, h = _random_poly(ctx, rng, 3), _random_poly(ctx, rng, 3)
        if psi(g * h) != psi(h) * psi(g):
            ok = False
            break
    return [Check("psi(g h) = psi(h) psi(g) on 10^4 random pairs", ok)]


def criterion_10() -> list[Check]:
    R, ctx = _gr42(inner=True)
    rng = random.Random(10)
    ok = True
    for _ in range(10**4):
        g, h = _random_poly(ctx, rng, 3), _random_poly(ctx, rng, 3)
        if mul_via_delta(g, h) != mul(g, h):
            ok = False
            break
    return [Check("Delta-operator product = product on 10^4 random pairs", ok)]


CRITERIA: list[tuple[int, str, float, Callable[[], list[Check]]]] = [
    (1, "division over F4[t;sigma]", 5.0, criterion_1),
    (2, "associativity iff two-sided", 10.0, criterion_2),
    (3, "semifield iff irreducible", 5.0, criterion_3),
    (4, "right nucleus = eigenring", 5.0, criterion_4),
    (5, "pseudolinear identities", 10.0, criterion_5),
    (6, "generalized Galois ring", 30.0, criterion_6),
    (7, "skew cyclic code", 10.0, criterion_7),
    (8, "norm map", 10.0, criterion_8),
    (9, "anti-automorphism psi", 5.0, criterion_9),
    (10, "Delta-operator product", 5.0, criterion_10),
]


def run_criterion(number: int) -> CriterionResult:
    for n, title, budget, fn in CRITERIA:
        if n == number:
            res = CriterionResult(n, title, budget)
            start = time.perf_counter()
            res.checks = fn()
            res.elapsed = time.perf_counter() - start
            res.checks.append(Check(f"runtime within {budget:g} s", res.elapsed <= budget,
                                    f"{res.elapsed:.2f} s"))
            return res
    raise KeyError(number)


def run_all(numbers=None) -> list[CriterionResult]:
    numbers = [n for n, *_ in CRITERIA] if not numbers else numbers
    return [run_criterion(n) for n in numbers]


def format_table(results: list[CriterionResult]) -> str:
    lines = []
    for res in results:
        mark = "PASS" if res.passed else "FAIL"
        lines.append(f"[{mark}] {res.number:>2}  {res.title}  ({res.elapsed:.2f} s)")
        for c in res.checks:
            sub = "ok  " if c.passed else "FAIL"
            detail = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"        {sub} {c.name}{detail}")
    return "\n".join(lines)
