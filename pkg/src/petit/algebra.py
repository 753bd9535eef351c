"""Petit algebras ``S_f = S[t;sigma,delta] / S[t;sigma,delta] f``.

The elements are the skew polynomials of degree ``< m = deg f`` and the
product is the remainder of the Ore product under right division by ``f``
(``side="left"`` uses left division, giving ``_fS``).

Quantified structure checks (associativity, nuclei, commuter) can run over
every element or only over the additive generators ``x^j t^i``.  Both are
exact because the product is bi-additive, hence the associator is additive in
each slot.
"""

from __future__ import annotations

import itertools
import logging
import random
from typing import Iterable, Sequence

from .chainring import RingElement
from .errors import (
    AlgebraMismatch,
    CheckFailed,
    DeltaNotZero,
    DomainError,
    InconsistentWithTwoSidedTest,
    SigmaOrderMismatch,
    TooLarge,
)
from .skewpoly import (
    SkewPoly,
    SkewPolyContext,
    _pmul,
    _psub,
    _trim,
    is_two_sided,
    monic,
    right_divmod,
)

log = logging.getLogger(__name__)

RIGHT, LEFT = "right", "left"
EXHAUSTIVE, GENERATORS, SAMPLED = "exhaustive", "generators", "sampled"
# quantify over all elements while |A|^3 stays below this
EXHAUSTIVE_TRIPLES = 2**16
PRODUCT_CACHE_LIMIT = 2**17


class AlgElem:
    """Element of a Petit algebra: coordinates on ``1, t, ..., t^{m-1}``."""

    __slots__ = ("alg", "codes")

    def __init__(self, alg: "PetitAlgebra", codes: Sequence[int]):
        self.alg = alg
        self.codes = tuple(codes)

    @property
    def coeffs(self) -> tuple[RingElement, ...]:
        R = self.alg.ring
        return tuple(R.element_from_code(c) for c in self.codes)

    @property
    def poly(self) -> SkewPoly:
        return SkewPoly(self.alg.ctx, self.codes)

    def _other(self, other) -> "AlgElem":
        if isinstance(other, AlgElem):
            if other.alg is not self.alg and other.alg != self.alg:
                raise AlgebraMismatch("elements of different algebras")
            return other
        return self.alg(other)

    def __add__(self, other):
        o = self._other(other)
        add = self.alg.ring.cadd
        return AlgElem(self.alg, [add(a, b) for a, b in zip(self.codes, o.codes)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        sub = self.alg.ring.csub
        return AlgElem(self.alg, [sub(a, b) for a, b in zip(self.codes, o.codes)])

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        neg = self.alg.ring.cneg
        return AlgElem(self.alg, [neg(a) for a in self.codes])

    def __mul__(self, other):
        return self.alg.amul(self, self._other(other))

    def __rmul__(self, other):
        return self.alg.amul(self._other(other), self)

    def scale(self, a) -> "AlgElem":
        """Left scalar multiple ``a * self`` for ``a`` in S."""
        R = self.alg.ring
        c = R(a).code
        return AlgElem(self.alg, [R.cmul(c, v) for v in self.codes])

    def is_zero(self) -> bool:
        return not any(self.codes)

    def __bool__(self) -> bool:
        return any(self.codes)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgElem):
            return self.codes == other.codes and self.alg == other.alg
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        return repr(self.poly)

    def to_json(self) -> list[list[int]]:
        R = self.alg.ring
        return [list(R.coords(c)) for c in self.codes]


class PetitAlgebra:
    """``S_f`` (``side="right"``) or ``_fS`` (``side="left"``) for monic ``f``, deg >= 2."""

    def __init__(self, f: SkewPoly, side: str = RIGHT):
        if side not in (RIGHT, LEFT):
            raise DomainError(f"side must be 'right' or 'left', got {side!r}")
        if f.deg < 2:
            raise DomainError(f"need deg f >= 2, got {f.deg}")
        if not f.is_monic():
            log.info("normalising f to monic (S_f = S_{af} for units a)")
            f = monic(f)
        self.ctx: SkewPolyContext = f.ctx
        self.ring = f.ctx.ring
        self.f = f
        self.m = int(f.deg)
        self.side = side
        self.size = self.ring.size**self.m
        self._fc = f.codes
        self._inv_m = self.ctx.sigma_pow(-self.m)
        self._products: dict[tuple, tuple] = {}
        self._two_sided: bool | None = None

    # ---------------------------------------------------------- elements
    def __call__(self, value) -> AlgElem:
        if isinstance(value, AlgElem):
            if value.alg != self:
                raise AlgebraMismatch("element of a different algebra")
            return value
        if isinstance(value, SkewPoly):
            self.ctx.check(value.ctx)
            if value.deg >= self.m:
                raise DomainError(f"degree {value.deg} >= m = {self.m}")
            codes = value.codes
        elif isinstance(value, (RingElement, int)):
            codes = (self.ring(value).code,)
        else:
            codes = tuple(self.ring(c).code for c in value)
            if len(codes) > self.m:
                raise DomainError(f"{len(codes)} coordinates for an algebra of rank {self.m}")
        return AlgElem(self, tuple(codes) + (0,) * (self.m - len(codes)))

    def element(self, codes: Sequence[int]) -> AlgElem:
        return AlgElem(self, codes)

    @property
    def zero(self) -> AlgElem:
        return AlgElem(self, (0,) * self.m)

    @property
    def one(self) -> AlgElem:
        return self(self.ring.one)

    @property
    def t(self) -> AlgElem:
        return self.t_power(1)

    def t_power(self, i: int) -> AlgElem:
        if not 0 <= i < self.m:
            raise DomainError(f"t^{i} is not a basis element")
        codes = [0] * self.m
        codes[i] = self.ring.one_code
        return AlgElem(self, codes)

    def basis(self) -> list[AlgElem]:
        return [self.t_power(i) for i in range(self.m)]

    def scalars(self) -> list[AlgElem]:
        """S embedded as the degree-0 elements."""
        return [AlgElem(self, (c,) + (0,) * (self.m - 1)) for c in range(self.ring.size)]

    def _require_enumerable(self, n: int | None = None) -> None:
        n = self.size if n is None else n
        if n > self.ring.cap:
            raise TooLarge(f"{n} items exceed the enumeration cap {self.ring.cap}")

    def elements(self) -> list[AlgElem]:
        self._require_enumerable()
        return [AlgElem(self, cs[::-1])
                for cs in itertools.product(range(self.ring.size), repeat=self.m)]

    def additive_generators(self) -> list[AlgElem]:
        """``x^j t^i``: they generate A as an abelian group."""
        out = []
        for i in range(self.m):
            for g in self.ring.additive_generators():
                codes = [0] * self.m
                codes[i] = g
                out.append(AlgElem(self, codes))
        return out

    def _quantifier(self, mode: str) -> list[AlgElem]:
        if mode == EXHAUSTIVE:
            return self.elements()
        if mode == GENERATORS:
            return self.additive_generators()
        raise DomainError(f"unknown quantifier mode {mode!r}")

    def _auto_mode(self, mode: str) -> str:
        if mode != "auto":
            return mode
        return EXHAUSTIVE if self.size**3 <= EXHAUSTIVE_TRIPLES else GENERATORS

    # ------------------------------------------------------ multiplication
    def _reduce(self, prod: Sequence[int]) -> tuple[int, ...]:
        """Remainder of ``prod`` by the monic ``f`` (right or left division)."""
        ctx, R, m, fc = self.ctx, self.ring, self.m, self._fc
        r = list(_trim(prod))
        right = self.side == RIGHT
        while len(r) - 1 >= m:
            l = len(r) - 1
            s = r[l]
            if right:
                sub = _pmul(ctx, (0,) * (l - m) + (s,), fc)
            else:
                sub = _pmul(ctx, fc, (0,) * (l - m) + (self._inv_m[s],))
            r = list(_trim(_psub(R, r, sub)))
        return tuple(r) + (0,) * (m - len(r))

    def _mul_codes(self, a: tuple, b: tuple) -> tuple:
        key = (a, b)
        out = self._products.get(key)
        if out is None:
            out = self._reduce(_pmul(self.ctx, _trim(a), _trim(b)))
            if len(self._products) < PRODUCT_CACHE_LIMIT:
                self._products[key] = out
        return out

    def amul(self, g: AlgElem, h: AlgElem) -> AlgElem:
        if g.alg is not self and g.alg != self or h.alg is not self and h.alg != self:
            raise AlgebraMismatch("operands belong to a different algebra")
        return AlgElem(self, self._mul_codes(g.codes, h.codes))

    def ore_product(self, g: AlgElem, h: AlgElem) -> SkewPoly:
        """The unreduced product in ``S[t;sigma,delta]``."""
        return g.poly * h.poly

    # ------------------------------------------------------- associativity
    def associator(self, x: AlgElem, y: AlgElem, z: AlgElem) -> AlgElem:
        return (x * y) * z - x * (y * z)

    def two_sided(self) -> bool:
        if self._two_sided is None:
            self._two_sided = is_two_sided(self.f)
        return self._two_sided

    def find_associator_witness(self, mode: str = "auto", samples: int = 10**5,
                                seed: int = 0):
        """A triple with nonzero associator, or None."""
        mode = self._auto_mode(mode)
        if mode == SAMPLED:
            rng = random.Random(seed)
            q, m = self.ring.size, self.m
            for _ in range(samples):
                x, y, z = (AlgElem(self, [rng.randrange(q) for _ in range(m)])
                           for _ in range(3))
                if self.associator(x, y, z):
                    return x, y, z
            return None
        Q = self._quantifier(mode)
        for x, y, z in itertools.product(Q, repeat=3):
            if self.associator(x, y, z):
                return x, y, z
        return None

    def is_associative(self, mode: str = "auto", samples: int = 10**5, seed: int = 0) -> bool:
        """Associator test, cross-checked against two-sidedness of ``f``.

        In an exact mode a disagreement raises :class:`InconsistentWithTwoSidedTest`.
        A sampled run without a witness defers to the two-sidedness test.
        """
        mode = self._auto_mode(mode)
        assoc = self.find_associator_witness(mode, samples, seed) is None
        two = self.two_sided()
        if mode != SAMPLED and assoc != two:
            raise InconsistentWithTwoSidedTest(
                f"associator test says {assoc}, two-sidedness says {two} for f = {self.f}")
        if mode == SAMPLED and not assoc and two:
            raise InconsistentWithTwoSidedTest(
                f"nonzero associator found although f = {self.f} is two-sided")
        return assoc and two

    # ---------------------------------------------------------- nuclei etc.
    def _candidates(self, candidates: Iterable[AlgElem] | None) -> list[AlgElem]:
        return list(candidates) if candidates is not None else self.elements()

    def nucleus(self, which: str = "all", mode: str = "auto",
                candidates: Iterable[AlgElem] | None = None) -> list[AlgElem]:
        """``Nuc_l``, ``Nuc_m``, ``Nuc_r`` (``which`` in left/middle/right) or their intersection."""
        if which not in ("left", "middle", "right", "all"):
            raise DomainError(f"unknown nucleus {which!r}")
        Q = self._quantifier(self._auto_mode(mode))
        pairs = list(itertools.product(Q, repeat=2))
        slots = ("left", "middle", "right") if which == "all" else (which,)
        out = []
        for x in self._candidates(candidates):
            ok = True
            for slot in slots:
                for y, z in pairs:
                    triple = {"left": (x, y, z), "middle": (y, x, z), "right": (y, z, x)}[slot]
                    if self.associator(*triple):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(x)
        return out

    def eigenring(self, candidates: Iterable[AlgElem] | None = None) -> list[AlgElem]:
        """``{g : deg g < m, f g in R f}``."""
        f = self.f
        return [g for g in self._candidates(candidates)
                if right_divmod(f * g.poly, f)[1].is_zero()]

    def commuter(self, mode: str = "auto",
                 candidates: Iterable[AlgElem] | None = None) -> list[AlgElem]:
        Q = self._quantifier(self._auto_mode(mode))
        return [x for x in self._candidates(candidates)
                if all(x * y == y * x for y in Q)]

    def center(self, mode: str = "auto") -> list[AlgElem]:
        comm = self.commuter(mode)
        return self.nucleus("all", mode, candidates=comm)

    def scalar_ring(self, mode: str = "auto") -> list[RingElement]:
        """``S_0 = {a in S : a h = h a for all h}``."""
        comm = self.commuter(mode, candidates=self.scalars())
        return [x.coeffs[0] for x in comm]

    def commuter_lower_bound(self) -> list[AlgElem]:
        """``{sum a_i t^i : a_i in Fix(sigma), c a_i = a_i sigma^i(c) for all c}`` (delta = 0)."""
        if not self.ctx.is_twisted:
            raise DeltaNotZero("the coefficient description of the commuter needs delta = 0")
        R = self.ring
        sig = self.ctx.sigma.table
        allowed = []
        for i in range(self.m):
            si = self.ctx.sigma_pow(i)
            allowed.append([a for a in range(R.size) if sig[a] == a and all(
                R.cmul(c, a) == R.cmul(a, si[c]) for c in range(R.size))])
        self._require_enumerable(_prod(len(a) for a in allowed))
        return [AlgElem(self, cs) for cs in itertools.product(*allowed)]

    # ------------------------------------------------------- zero divisors
    def zero_divisor_pairs(self) -> list[tuple[AlgElem, AlgElem]]:
        self._require_enumerable(self.size**2)
        nz = [x for x in self.elements() if x]
        zero = self.zero.codes
        return [(g, h) for g in nz for h in nz if self._mul_codes(g.codes, h.codes) == zero]

    def has_zero_divisors(self) -> bool:
        self._require_enumerable(self.size**2)
        nz = [x.codes for x in self.elements() if x]
        zero = self.zero.codes
        return any(self._mul_codes(g, h) == zero for g in nz for h in nz)

    def is_semifield(self) -> bool:
        """Finite, unital and free of zero divisors."""
        return not self.has_zero_divisors()

    def t_left_invertible(self) -> tuple[bool, AlgElem | None]:
        """Whether some ``g`` has ``g t = 1``; the witness is ``sum -d_0^{-1} d_{i+1} t^i``."""
        R = self.ring
        d = self.f.codes
        if self.side == RIGHT and R.code_is_unit(d[0]):
            h = R.cneg(R.cinv(d[0]))
            g = AlgElem(self, [R.cmul(h, d[i + 1]) for i in range(self.m)])
            if g * self.t != self.one:
                raise CheckFailed("left inverse witness for t failed verification")
            return True, g
        if self.ctx.is_twisted and self.side == RIGHT:
            return False, None
        t = self.t
        for g in self.elements():
            if g * t == self.one:
                return True, g
        return False, None

    def powers_of_t_associative(self) -> bool:
        """``t^m t == t t^m`` with ``t^m = t^{m-1} t`` computed in the algebra."""
        t = self.t
        tm = self.t_power(self.m - 1) * t
        return tm * t == t * tm

    # ------------------------------------------------------------- misc
    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (isinstance(other, PetitAlgebra) and self.side == other.side
                and self.f == other.f)

    def __hash__(self) -> int:
        return hash((self.side, self.f.codes))

    def __repr__(self) -> str:
        name = "S_f" if self.side == RIGHT else "_fS"
        return f"<{name} over {self.ctx!r}, f = {self.f}>"


def _prod(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def cyclic_algebra(ctx: SkewPolyContext, c, m: int | None = None) -> PetitAlgebra:
    """The generalized cyclic algebra ``(S/S_0, sigma, c) = S_{t^m - c}``.

    ``m`` defaults to the order of sigma.  The case-split product rule on
    ``(a t^i)(b t^j)`` is checked against the algebra product.
    """
    if not ctx.is_twisted:
        raise DeltaNotZero("cyclic algebras are defined for delta = 0")
    order = ctx.sigma.order
    m = order if m is None else m
    if m != order:
        raise SigmaOrderMismatch(f"sigma has order {order}, not {m}")
    if m < 2:
        raise SigmaOrderMismatch("sigma must have order >= 2")
    R = ctx.ring
    c = R(c)
    A = PetitAlgebra(ctx.monomial(R.one, m) - ctx.constant(c))
    if R.size**2 <= 2**12:
        coeffs = list(range(R.size))
    else:
        coeffs = R.additive_generators()
    for i, j in itertools.product(range(m), repeat=2):
        si = ctx.sigma_pow(i)
        for a, b in itertools.product(coeffs, repeat=2):
            lhs = A(ctx.monomial(R.element_from_code(a), i)) * A(ctx.monomial(R.element_from_code(b), j))
            coef = R.cmul(a, si[b])
            if i + j < m:
                k = i + j
            else:
                k = i + j - m
                coef = R.cmul(coef, ctx.sigma_pow(k)[c.code])
            expected = [0] * m
            expected[k] = coef
            if lhs.codes != tuple(expected):
                raise CheckFailed(f"cyclic rule fails for (a t^{i})(b t^{j})")
    return A
