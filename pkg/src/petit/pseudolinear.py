"""Matrices over a chain ring, the companion matrix, the pseudolinear map T_f
and the multiplication matrices of a Petit algebra.

Vectors are rows: ``vec(x o h) = vec(x) . gamma(h)``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .algebra import AlgElem, PetitAlgebra
from .chainring import ChainRing, RingElement
from .errors import (
    CheckFailed,
    DomainError,
    NotMonic,
    NotSquare,
    RingMismatch,
    ShapeMismatch,
    TooLarge,
)
from .skewpoly import SkewPoly, SkewPolyContext

Vec = tuple[int, ...]


class Matrix:
    """Dense row-major matrix; entries are stored as ring codes."""

    def __init__(self, ring: ChainRing, rows: Sequence[Sequence]):
        self.ring = ring
        self.codes = tuple(tuple(ring(x).code for x in row) for row in rows)
        widths = {len(r) for r in self.codes}
        if len(widths) > 1:
            raise ShapeMismatch("ragged rows")
        self.nrows = len(self.codes)
        self.ncols = widths.pop() if widths else 0

    @classmethod
    def from_codes(cls, ring: ChainRing, codes: Sequence[Sequence[int]]) -> "Matrix":
        M = cls.__new__(cls)
        M.ring = ring
        M.codes = tuple(tuple(r) for r in codes)
        M.nrows = len(M.codes)
        M.ncols = len(M.codes[0]) if M.codes else 0
        return M

    @classmethod
    def identity(cls, ring: ChainRing, n: int) -> "Matrix":
        one = ring.one_code
        return cls.from_codes(ring, [[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: ChainRing, r: int, c: int) -> "Matrix":
        return cls.from_codes(ring, [[0] * c for _ in range(r)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        i, j = ij
        return self.ring.element_from_code(self.codes[i][j])

    def row(self, i: int) -> Vec:
        return self.codes[i]

    def _check(self, other: "Matrix") -> None:
        if other.ring != self.ring:
            raise RingMismatch("matrices over different rings")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        add = self.ring.cadd
        return Matrix.from_codes(self.ring, [[add(a, b) for a, b in zip(r, s)]
                                             for r, s in zip(self.codes, other.codes)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        sub = self.ring.csub
        return Matrix.from_codes(self.ring, [[sub(a, b) for a, b in zip(r, s)]
                                             for r, s in zip(self.codes, other.codes)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.shape} x {other.shape}")
        cols = list(zip(*other.codes)) if other.codes else []
        return Matrix.from_codes(self.ring, [[_dot(self.ring, r, c) for c in cols]
                                             for r in self.codes])

    __mul__ = __matmul__

    def vecmul(self, v: Sequence[int]) -> Vec:
        """Row vector (codes) times this matrix."""
        if len(v) != self.nrows:
            raise ShapeMismatch(f"vector of length {len(v)} against {self.shape}")
        R = self.ring
        out = [0] * self.ncols
        for a, row in zip(v, self.codes):
            if a:
                for j, b in enumerate(row):
                    if b:
                        out[j] = R.cadd(out[j], R.cmul(a, b))
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.codes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def to_json(self) -> list[list[list[int]]]:
        R = self.ring
        return [[list(R.coords(c)) for c in row] for row in self.codes]

    def to_text(self) -> str:
        cells = [[self.ring.fmt(c) for c in row] for row in self.codes]
        if not cells:
            return ""
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def __repr__(self) -> str:
        return f"Matrix({[[self.ring.fmt(c) for c in r] for r in self.codes]})"


def _dot(R: ChainRing, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = R.cadd(acc, R.cmul(x, y))
    return acc


def det(M: Matrix) -> RingElement:
    """Cofactor expansion along the first row (commutative ring, small n)."""
    if M.nrows != M.ncols:
        raise NotSquare(f"determinant of a {M.nrows}x{M.ncols} matrix")
    return M.ring.element_from_code(_det_codes(M.ring, M.codes))


def _det_codes(R: ChainRing, rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return R.one_code
    if n == 1:
        return rows[0][0]
    if n == 2:
        return R.csub(R.cmul(rows[0][0], rows[1][1]), R.cmul(rows[0][1], rows[1][0]))
    acc = 0
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = R.cmul(a, _det_codes(R, minor))
        acc = R.cadd(acc, term) if j % 2 == 0 else R.csub(acc, term)
    return acc


# ------------------------------------------------------------------ T_f
def companion(f: SkewPoly) -> Matrix:
    """Rows ``e_1, ..., e_{m-1}`` then ``(-d_0, ..., -d_{m-1})``."""
    if not f.is_monic():
        raise NotMonic(f"companion matrix needs monic f, got {f}")
    m = int(f.deg)
    if m < 2:
        raise DomainError("companion matrix needs deg f >= 2")
    R = f.ctx.ring
    one = R.one_code
    rows = [[one if j == i + 1 else 0 for j in range(m)] for i in range(m - 1)]
    rows.append([R.cneg(f.codes[j]) for j in range(m)])
    return Matrix.from_codes(R, rows)


class PseudoLinearMap:
    """``T_f(v) = sigma(v) C_f + delta(v)`` on row vectors of length m."""

    def __init__(self, ctx: SkewPolyContext, C: Matrix):
        if C.nrows != C.ncols:
            raise NotSquare("companion must be square")
        self.ctx = ctx
        self.companion = C
        self.m = C.nrows

    @classmethod
    def from_poly(cls, f: SkewPoly) -> "PseudoLinearMap":
        return cls(f.ctx, companion(f))

    @property
    def sigma(self):
        return self.ctx.sigma

    @property
    def delta(self):
        return self.ctx.delta

    def __call__(self, v: Sequence[int]) -> Vec:
        if len(v) != self.m:
            raise ShapeMismatch(f"T_f expects length {self.m}, got {len(v)}")
        sig, dl = self.ctx.sigma.table, self.ctx.delta.table
        out = self.companion.vecmul([sig[a] for a in v])
        add = self.ctx.ring.cadd
        return tuple(add(x, dl[a]) for x, a in zip(out, v))

    def power(self, k: int, v: Sequence[int]) -> Vec:
        v = tuple(v)
        for _ in range(k):
            v = self(v)
        return v


def apply_Tf(P: PseudoLinearMap, v: Sequence) -> tuple[RingElement, ...]:
    R = P.ctx.ring
    return tuple(R.element_from_code(c) for c in P(tuple(R(a).code for a in v)))


# ------------------------------------------------- multiplication matrices
def _same(A: PetitAlgebra, h: AlgElem) -> AlgElem:
    return A(h)


def right_mul_matrix(A: PetitAlgebra, h) -> Matrix:
    """gamma(h): row i holds the coordinates of ``t^i o h``."""
    h = _same(A, h)
    return Matrix.from_codes(A.ring, [(A.t_power(i) * h).codes for i in range(A.m)])


def left_mul_matrix(A: PetitAlgebra, h) -> Matrix:
    """lambda(h): row i holds the coordinates of ``h o t^i``."""
    h = _same(A, h)
    return Matrix.from_codes(A.ring, [(h * A.t_power(i)).codes for i in range(A.m)])


def poly_of_Tf(A: PetitAlgebra, h) -> Callable[[Sequence[int]], Vec]:
    """The operator ``h(T_f) = sum a_i T_f^i`` acting on coordinate vectors."""
    h = _same(A, h)
    P = PseudoLinearMap.from_poly(A.f)
    R = A.ring

    def op(v: Sequence[int]) -> Vec:
        out = [0] * A.m
        w = tuple(v)
        for i, a in enumerate(h.codes):
            if i:
                w = P(w)
            if a:
                out = [R.cadd(o, R.cmul(a, x)) for o, x in zip(out, w)]
        return tuple(out)

    return op


def check_Lh_identity(A: PetitAlgebra, h, xs: Sequence[AlgElem] | None = None) -> bool:
    """``h o x == h(T_f)(x)`` and ``L_t^i(x) == t^i o x`` for every x in ``xs``."""
    if A.side != "right":
        raise DomainError("the T_f identities describe S_f (side='right')")
    h = _same(A, h)
    op = poly_of_Tf(A, h)
    xs = A.elements() if xs is None else xs
    t = A.t
    for x in xs:
        if (h * x).codes != op(x.codes):
            return False
        y = x
        for i in range(1, A.m):
            y = t * y
            if y != A.t_power(i) * x:
                return False
    return True


# ------------------------------------------------- invariant submodules
def _span_add(R: ChainRing, M: frozenset, v: Vec) -> frozenset:
    return frozenset(tuple(R.cadd(x, R.cmul(a, y)) for x, y in zip(w, v))
                     for w in M for a in range(R.size))


def _closure(P: PseudoLinearMap, gens: Sequence[Vec]) -> frozenset:
    """Smallest T_f-invariant submodule containing ``gens``.

    Pseudolinearity gives ``T(sum a_i g_i) = sum sigma(a_i) T(g_i) + delta(a_i) g_i``,
    so invariance only has to be enforced on a generating set.
    """
    R = P.ctx.ring
    M = frozenset([(0,) * P.m])
    todo = list(gens)
    seen: list[Vec] = []
    while todo:
        v = todo.pop()
        if v in M and v in seen:
            continue
        if v not in M:
            M = _span_add(R, M, v)
        seen.append(v)
        w = P(v)
        if w not in M:
            todo.append(w)
    return M


def invariant_submodules(A: PetitAlgebra) -> list[frozenset]:
    """Every T_f-invariant left S-submodule of S^m, smallest first.

    Any invariant submodule N is the sum of the cyclic closures of its
    elements, so closing the set of cyclic closures under sums is complete.
    """
    if A.size > 256:
        raise TooLarge(f"submodule search is limited to |S|^m <= 256, got {A.size}")
    P = PseudoLinearMap.from_poly(A.f)
    R = A.ring
    vectors = [tuple(cs[::-1]) for cs in itertools.product(range(R.size), repeat=A.m)]
    found: set[frozenset] = {_closure(P, [v]) for v in vectors}
    frontier = list(found)
    while frontier:
        new = []
        for N in frontier:
            for K in list(found):
                if N <= K or K <= N:
                    continue
                S = frozenset(tuple(R.cadd(a, b) for a, b in zip(x, y)) for x in N for y in K)
                if S not in found:
                    found.add(S)
                    new.append(S)
        frontier = new
    return sorted(found, key=lambda N: (len(N), sorted(N)))


def is_invariant(A: PetitAlgebra, vectors) -> bool:
    """Whether the S-span of ``vectors`` is mapped into itself by T_f."""
    P = PseudoLinearMap.from_poly(A.f)
    R = A.ring
    M = frozenset([(0,) * A.m])
    for v in vectors:
        M = _span_add(R, M, tuple(v))
    return all(P(v) in M for v in vectors)


def is_irreducible_plt(A: PetitAlgebra) -> bool:
    return len(invariant_submodules(A)) == 2


# ------------------------------------------------------- surjectivity
def lt_preimage(A: PetitAlgebra, g) -> AlgElem:
    """Explicit u with ``t o u = g`` (delta = 0, d_0 a unit, f monic)."""
    ctx, R = A.ctx, A.ring
    if not ctx.is_twisted:
        raise DomainError("explicit preimage needs delta = 0")
    d = A.f.codes
    if not R.code_is_unit(d[0]):
        raise DomainError("explicit preimage needs d_0 to be a unit")
    g = A(g)
    inv = ctx.sigma_pow(-1)
    m = A.m
    u = [0] * m
    u[m - 1] = inv[R.cneg(R.cmul(g.codes[0], R.cinv(d[0])))]
    for i in range(1, m):
        u[i - 1] = R.cadd(inv[g.codes[i]], R.cmul(u[m - 1], inv[d[i]]))
    out = AlgElem(A, u)
    if A.t * out != g:
        raise CheckFailed(f"preimage formula failed for {g}")
    return out


def surjectivity_report(A: PetitAlgebra) -> dict:
    t = A.t
    image = {(t * x).codes for x in A.elements()}
    sig = A.ctx.sigma.table
    report = {
        "Lt_surjective": len(image) == A.size,
        "Lt_injective": len(image) == A.size,
        "sigma_surjective": len(set(sig)) == len(sig),
    }
    if report["sigma_surjective"] and A.ctx.is_twisted and A.ring.code_is_unit(A.f.codes[0]):
        if not report["Lt_surjective"]:
            raise CheckFailed("sigma bijective and d_0 a unit, yet L_t is not surjective")
    if report["Lt_surjective"] and not report["sigma_surjective"]:
        raise CheckFailed("L_t surjective but sigma is not")
    return report
