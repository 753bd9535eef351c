"""Linear codes inside a Petit algebra ``S_f``.

A monic right divisor g of f (deg r) gives the code of left multiples
``{u o g : deg u < m - r}``, a free S-module of rank ``m - r`` with basis
``t^k o g``.  Vectors are coefficient tuples on ``1, t, ..., t^{m-1}``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Sequence

from .algebra import AlgElem, PetitAlgebra
from .errors import (
    CheckFailed,
    DeltaNotZero,
    DomainError,
    EmptyCode,
    MissingCofactor,
    NotARightDivisor,
    ShapeMismatch,
    TooLarge,
)
from .pseudolinear import Matrix, right_mul_matrix
from .skewpoly import SkewPoly, left_divmod, right_divmod

ANNIHILATOR, ROWSPACE = "annihilator", "rowspace"


def right_divisors(f: SkewPoly, r: int) -> list[SkewPoly]:
    """All monic g of degree r with ``f = q g``."""
    m = int(f.deg)
    if not 1 <= r <= m - 1:
        raise DomainError(f"divisor degree must lie in 1..{m - 1}, got {r}")
    ctx = f.ctx
    if ctx.ring.size**r > ctx.ring.cap:
        raise TooLarge(f"{ctx.ring.size**r} candidates exceed the cap")
    return [g for g in ctx.monic_polys(r) if right_divmod(f, g)[1].is_zero()]


class LinearCode:
    """The left S-span of the generator rows, as a subset of ``S^m``."""

    def __init__(self, algebra: PetitAlgebra, gen_matrix: Matrix):
        if gen_matrix.nrows and gen_matrix.ncols != algebra.m:
            raise ShapeMismatch(f"rows of length {gen_matrix.ncols}, expected {algebra.m}")
        self.algebra = algebra
        self.ring = algebra.ring
        self.gen_matrix = gen_matrix
        self._words: list[tuple[int, ...]] | None = None

    @property
    def n(self) -> int:
        return self.algebra.m

    @property
    def k(self) -> int:
        return self.gen_matrix.nrows

    def _combine(self, msg: Sequence[int]) -> tuple[int, ...]:
        return self.gen_matrix.vecmul(msg) if self.k else (0,) * self.n

    def codewords(self) -> list[tuple[int, ...]]:
        """Distinct codewords (coordinate codes) in message order."""
        if self._words is None:
            q = self.ring.size
            if q**self.k > self.ring.cap:
                raise TooLarge(f"{q ** self.k} messages exceed the cap {self.ring.cap}")
            seen: dict[tuple[int, ...], None] = {}
            for msg in itertools.product(range(q), repeat=self.k):
                seen.setdefault(self._combine(msg[::-1]), None)
            self._words = list(seen)
        return self._words

    def __len__(self) -> int:
        return len(self.codewords())

    def rowspace_contains(self, c: Sequence[int]) -> bool:
        return tuple(c) in set(self.codewords())

    def is_codeword(self, c, mode: str = ROWSPACE) -> bool:
        if mode != ROWSPACE:
            raise MissingCofactor("annihilator membership needs f = g h = h' g")
        return self.rowspace_contains(self._vec(c))

    def _vec(self, c) -> tuple[int, ...]:
        if isinstance(c, AlgElem):
            return c.codes
        return self.algebra(c).codes

    def elem(self, c: Sequence[int]) -> AlgElem:
        return AlgElem(self.algebra, c)

    # ----------------------------------------------------------- closure
    def shift(self, c: Sequence[int], d) -> tuple[int, ...]:
        """``(sigma(c_{m-1}) d, sigma(c_0), ..., sigma(c_{m-2}))``."""
        R = self.ring
        sig = self.algebra.ctx.sigma.table
        d = R(d).code
        return (R.cmul(sig[c[-1]], d),) + tuple(sig[a] for a in c[:-1])

    def constacyclic_witness(self, d):
        if not self.algebra.ctx.is_twisted:
            raise DeltaNotZero("constacyclic shifts are defined for delta = 0")
        words = set(self.codewords())
        for c in self.codewords():
            if self.shift(c, d) not in words:
                return self.elem(c)
        return None

    def constacyclic_check(self, d) -> bool:
        return self.constacyclic_witness(d) is None

    def left_ideal_witness(self):
        """A pair (a, c) with ``a o c`` outside the code, or None."""
        words = set(self.codewords())
        A = self.algebra
        for a in A.elements():
            for c in self.codewords():
                if A._mul_codes(a.codes, c) not in words:
                    return a, self.elem(c)
        return None

    def left_ideal_check(self) -> bool:
        return self.left_ideal_witness() is None

    def Lt_closure_witness(self):
        words = set(self.codewords())
        t = self.algebra.t.codes
        for c in self.codewords():
            if self.algebra._mul_codes(t, c) not in words:
                return self.elem(c)
        return None

    def Lt_closure_check(self) -> bool:
        return self.Lt_closure_witness() is None

    # ---------------------------------------------------------- distance
    def weight(self, c: Sequence[int]) -> int:
        return sum(1 for a in c if a)

    def weight_enumerator(self) -> dict[int, int]:
        counts = Counter(self.weight(c) for c in self.codewords())
        return {w: counts.get(w, 0) for w in range(self.n + 1)}

    def min_distance(self) -> int:
        weights = [self.weight(c) for c in self.codewords() if any(c)]
        if not weights:
            raise EmptyCode("the zero code has no minimum distance")
        return min(weights)


class SkewCode(LinearCode):
    """Code generated by a monic right divisor g of f."""

    def __init__(self, algebra: PetitAlgebra, g: SkewPoly):
        f = algebra.f
        algebra.ctx.check(g.ctx)
        if not g.is_monic():
            raise DomainError(f"generator polynomial must be monic, got {g}")
        h_prime, rem = right_divmod(f, g)
        if not rem.is_zero():
            raise NotARightDivisor(f"{g} does not right-divide {f}")
        if h_prime * g != f:
            raise CheckFailed("f = h' g failed re-verification")
        self.g = g
        self.r = int(g.deg)
        self.h_prime = h_prime
        h, lrem = left_divmod(f, g)
        self.h = h if lrem.is_zero() else None
        if self.h is not None and g * self.h != f:
            raise CheckFailed("f = g h failed re-verification")
        m = algebra.m
        gamma_g = right_mul_matrix(algebra, algebra(g)) if self.r < m else None
        rows = gamma_g.codes[: m - self.r] if gamma_g is not None else []
        super().__init__(algebra, Matrix.from_codes(algebra.ring, rows))
        self.ctrl_matrix = self._control() if self.h is not None else None

    def _h_elem(self) -> AlgElem:
        A = self.algebra
        return A.zero if self.h.deg >= A.m else A(self.h)

    def _control(self) -> Matrix:
        return right_mul_matrix(self.algebra, self._h_elem())

    @property
    def two_sided_factorization(self) -> bool:
        return self.h is not None

    def encode(self, msg: Sequence) -> AlgElem:
        """Message u (length m - r) to ``u(t) o g``."""
        if len(msg) != self.k:
            raise ShapeMismatch(f"message of length {len(msg)}, expected {self.k}")
        A = self.algebra
        u = A(list(msg))
        return u * A(self.g) if self.r < A.m else u

    def is_codeword(self, c, mode: str = "auto") -> bool:
        if mode == "auto":
            mode = ANNIHILATOR if self.h is not None else ROWSPACE
        c = self._vec(c)
        if mode == ROWSPACE:
            return self.rowspace_contains(c)
        if mode != ANNIHILATOR:
            raise DomainError(f"unknown membership mode {mode!r}")
        if self.h is None:
            raise MissingCofactor(f"no h with f = g h for g = {self.g}")
        return not any(self.algebra._mul_codes(c, self._h_elem().codes))

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "g": self.g.to_json(),
            "h_prime": self.h_prime.to_json(),
            "h": self.h.to_json() if self.h is not None else None,
            "generator_matrix": self.gen_matrix.to_json(),
            "control_matrix": self.ctrl_matrix.to_json() if self.ctrl_matrix is not None else None,
        }
        return out


def build_code(A: PetitAlgebra, g: SkewPoly) -> SkewCode:
    return SkewCode(A, g)


def code_from_rows(A: PetitAlgebra, rows: Sequence[Sequence]) -> LinearCode:
    """Span of arbitrary rows (used for non-ideal comparisons)."""
    return LinearCode(A, Matrix(A.ring, rows) if rows else Matrix.from_codes(A.ring, []))
