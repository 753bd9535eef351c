"""Skew polynomial rings ``S[t; sigma, delta]`` over a chain ring.

Multiplication follows ``t a = sigma(a) t + delta(a)``.  Polynomials are
immutable little-endian coefficient tuples in canonical form (no trailing
zeros); the zero polynomial has degree ``-inf``.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from .chainring import (
    AUTOMORPHISM,
    DERIVATION,
    ChainRing,
    RingElement,
    RingMorphism,
    identity,
    zero_derivation,
)
from .errors import (
    BothZero,
    ContextMismatch,
    DeltaNotZero,
    DomainError,
    IndexOutOfRange,
    LeadingCoeffNotUnit,
    NotAField,
    NotRegular,
    TooLarge,
)

NEG_INF = -math.inf


class SkewPolyContext:
    """The ring ``S[t; sigma, delta]``."""

    def __init__(self, ring: ChainRing, sigma: RingMorphism | None = None,
                 delta: RingMorphism | None = None):
        sigma = sigma if sigma is not None else identity(ring)
        if sigma.kind != AUTOMORPHISM:
            raise DomainError("sigma must be an automorphism")
        delta = delta if delta is not None else zero_derivation(sigma)
        if delta.kind != DERIVATION:
            raise DomainError("delta must be a sigma-derivation")
        if sigma.ring != ring or delta.ring != ring:
            raise ContextMismatch("sigma/delta are defined on a different ring")
        if delta.sigma is not sigma and delta.sigma != sigma:
            raise ContextMismatch("delta is a derivation for a different sigma")
        self.ring, self.sigma, self.delta = ring, sigma, delta
        self._sig = sigma.table
        self._del = delta.table
        self._sigma_powers: dict[int, list[int]] = {}
        self._delta_tables: dict[tuple[int, int], list[int]] = {}
        self._residue: SkewPolyContext | None = None
        self._psi_target: SkewPolyContext | None = None

    @property
    def is_twisted(self) -> bool:
        """True when ``delta == 0``."""
        return self.delta.is_zero()

    def sigma_pow(self, k: int) -> list[int]:
        tab = self._sigma_powers.get(k)
        if tab is None:
            tab = self._sigma_powers[k] = self.sigma.power_table(k)
        return tab

    # ----------------------------------------------------------- builders
    def poly(self, coeffs: Sequence) -> "SkewPoly":
        R = self.ring
        return SkewPoly(self, tuple(R(c).code for c in coeffs))

    def constant(self, a) -> "SkewPoly":
        return SkewPoly(self, (self.ring(a).code,))

    def monomial(self, a, k: int) -> "SkewPoly":
        return SkewPoly(self, (0,) * k + (self.ring(a).code,))

    @property
    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    @property
    def one(self) -> "SkewPoly":
        return SkewPoly(self, (self.ring.one_code,))

    @property
    def t(self) -> "SkewPoly":
        return SkewPoly(self, (0, self.ring.one_code))

    def monic_polys(self, degree: int) -> Iterator["SkewPoly"]:
        """All monic polynomials of the given degree, in enumeration order."""
        R = self.ring
        if R.size**degree > R.cap:
            raise TooLarge(f"{R.size}^{degree} candidates exceed cap {R.cap}")
        for tail in itertools.product(range(R.size), repeat=degree):
            yield SkewPoly(self, tail + (R.one_code,))

    def polys(self, max_degree: int) -> Iterator["SkewPoly"]:
        """All polynomials of degree <= max_degree (including 0)."""
        R = self.ring
        if R.size**(max_degree + 1) > R.cap:
            raise TooLarge(f"{R.size}^{max_degree + 1} polynomials exceed cap {R.cap}")
        for cs in itertools.product(range(R.size), repeat=max_degree + 1):
            yield SkewPoly(self, cs)

    # ------------------------------------------------------- derived rings
    def residue(self) -> "SkewPolyContext":
        """``K[t; sigma-bar, delta-bar]`` over the residue field."""
        if self.ring.e == 1:
            return self
        if self._residue is None:
            sig = self.sigma.residue()
            dtab = self.delta.residue().table
            K = sig.ring
            delta = RingMorphism(K, dtab, DERIVATION, sig, name=self.delta.name)
            self._residue = SkewPolyContext(K, sig, delta)
        return self._residue

    def psi_target(self) -> "SkewPolyContext":
        """``S[t; sigma^-1]``, the target of the anti-automorphism for delta = 0."""
        if self._psi_target is None:
            self._psi_target = SkewPolyContext(self.ring, self.sigma.inverse())
        return self._psi_target

    def check(self, other: "SkewPolyContext") -> None:
        if other is not self and other != self:
            raise ContextMismatch("polynomials belong to different skew polynomial rings")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (isinstance(other, SkewPolyContext) and self.ring == other.ring
                and self.sigma == other.sigma and self.delta == other.delta)

    def __hash__(self) -> int:
        return hash((self.ring, self.sigma, self.delta))

    def __repr__(self) -> str:
        s = self.sigma.name or "sigma"
        d = self.delta.name or "delta"
        return f"{self.ring!r}[t; {s}, {d}]"


def _trim(c: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


class SkewPoly:
    """An element of ``S[t; sigma, delta]``; ``codes[i]`` is the coefficient of t^i."""

    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: SkewPolyContext, codes: Sequence[int]):
        self.ctx = ctx
        self.codes = _trim(codes)

    @property
    def coeffs(self) -> tuple[RingElement, ...]:
        R = self.ctx.ring
        return tuple(R.element_from_code(c) for c in self.codes)

    @property
    def deg(self):
        return len(self.codes) - 1 if self.codes else NEG_INF

    @property
    def lc(self) -> RingElement:
        if not self.codes:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.ctx.ring.element_from_code(self.codes[-1])

    def coeff(self, i: int) -> RingElement:
        c = self.codes[i] if 0 <= i < len(self.codes) else 0
        return self.ctx.ring.element_from_code(c)

    def is_zero(self) -> bool:
        return not self.codes

    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == self.ctx.ring.one_code

    def _coerce(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            self.ctx.check(other.ctx)
            return other
        if isinstance(other, (RingElement, int)):
            return self.ctx.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SkewPoly(self.ctx, _padd(self.ctx.ring, self.codes, other.codes))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SkewPoly(self.ctx, _psub(self.ctx.ring, self.codes, other.codes))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        neg = self.ctx.ring.cneg
        return SkewPoly(self.ctx, [neg(c) for c in self.codes])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __pow__(self, k: int):
        out = self.ctx.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SkewPoly):
            return self.codes == other.codes and self.ctx == other.ctx
        if isinstance(other, (RingElement, int)):
            return self == self.ctx.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        return format_poly(self)

    def to_json(self) -> list[list[int]]:
        R = self.ctx.ring
        return [list(R.coords(c)) for c in self.codes]


def format_poly(f: SkewPoly, var: str = "x") -> str:
    R = f.ctx.ring
    if not f.codes:
        return "0"
    terms = []
    for i in range(len(f.codes) - 1, -1, -1):
        c = f.codes[i]
        if not c:
            continue
        cs = R.fmt(c, var)
        if i == 0:
            terms.append(cs)
            continue
        mon = "t" if i == 1 else f"t^{i}"
        if c == R.one_code:
            terms.append(mon)
        elif "+" in cs:
            terms.append(f"({cs}){mon}")
        else:
            terms.append(f"{cs}{mon}")
    return " + ".join(terms)


# ------------------------------------------------------------ code-level ops
def _padd(R: ChainRing, a, b) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = R.cadd
    for i, c in enumerate(b):
        if c:
            out[i] = add(out[i], c)
    return out


def _psub(R: ChainRing, a, b) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    sub = R.csub
    for i, c in enumerate(b):
        if c:
            out[i] = sub(out[i], c)
    return out


def _lt(ctx: SkewPolyContext, c: Sequence[int]) -> list[int]:
    """Coefficients of ``t * c(t)``."""
    sig, dl, add = ctx._sig, ctx._del, ctx.ring.cadd
    out = [0] * (len(c) + 1)
    for j, b in enumerate(c):
        if b:
            out[j + 1] = add(out[j + 1], sig[b])
            d = dl[b]
            if d:
                out[j] = add(out[j], d)
    return out


def _pmul(ctx: SkewPolyContext, g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """Ore product via repeated left multiplication of ``h`` by ``t``."""
    if not g or not h:
        return ()
    R = ctx.ring
    add, mul_ = R.cadd, R.cmul
    res = [0] * (len(g) + len(h) - 1)
    cur: Sequence[int] = h
    for i, a in enumerate(g):
        if i:
            cur = _lt(ctx, cur)
        if a:
            for j, b in enumerate(cur):
                if b:
                    res[j] = add(res[j], mul_(a, b))
    return _trim(res)


def mul(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    g.ctx.check(h.ctx)
    out = SkewPoly(g.ctx, _pmul(g.ctx, g.codes, h.codes))
    if h.codes and g.codes and g.ctx.ring.code_is_unit(h.codes[-1]):
        assert out.deg == g.deg + h.deg, "degree additivity violated"
    return out


# ---------------------------------------------------------- Delta operators
def _delta_table(ctx: SkewPolyContext, n: int, j: int) -> list[int]:
    key = (n, j)
    tab = ctx._delta_tables.get(key)
    if tab is not None:
        return tab
    R = ctx.ring
    if n == 0:
        tab = list(range(R.size)) if j == 0 else [0] * R.size
    else:
        sig, dl = ctx._sig, ctx._del
        tab = [0] * R.size
        if j <= n - 1:
            prev = _delta_table(ctx, n - 1, j)
            tab = [dl[v] for v in prev]
        if j >= 1:
            prev = _delta_table(ctx, n - 1, j - 1)
            tab = [R.cadd(a, sig[v]) for a, v in zip(tab, prev)]
    ctx._delta_tables[key] = tab
    return tab


def delta_map(ctx: SkewPolyContext, n: int, j: int, a) -> RingElement:
    """``Delta_{n,j}(a)``, the sum of words in sigma (j times) and delta (n-j times)."""
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"need 0 <= j <= n, got n={n}, j={j}")
    R = ctx.ring
    return R.element_from_code(_delta_table(ctx, n, j)[R(a).code])


def mul_via_delta(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """Product through ``a t^n b t^m = sum_j a Delta_{n,j}(b) t^{m+j}``."""
    ctx = g.ctx
    ctx.check(h.ctx)
    if g.is_zero() or h.is_zero():
        return ctx.zero
    R = ctx.ring
    res = [0] * (len(g.codes) + len(h.codes) - 1)
    for n, a in enumerate(g.codes):
        if not a:
            continue
        for m, b in enumerate(h.codes):
            if not b:
                continue
            for j in range(n + 1):
                v = _delta_table(ctx, n, j)[b]
                if v:
                    res[m + j] = R.cadd(res[m + j], R.cmul(a, v))
    return SkewPoly(ctx, res)


# ---------------------------------------------------------------- division
def _unit_lc(f: SkewPoly) -> int:
    if f.is_zero():
        raise LeadingCoeffNotUnit("cannot divide by the zero polynomial")
    R = f.ctx.ring
    c = f.codes[-1]
    if not R.code_is_unit(c):
        raise LeadingCoeffNotUnit(f"leading coefficient {R.fmt(c)} is not a unit")
    return R.cinv(c)


def right_divmod(g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``g = q f + r`` with ``deg r < deg f``.

    Each step subtracts ``s_l sigma^{l-m}(d_m^{-1}) t^{l-m} f``, which kills
    the leading term ``s_l t^l`` of the running remainder.
    """
    ctx = g.ctx
    ctx.check(f.ctx)
    R = ctx.ring
    dm_inv = _unit_lc(f)
    m = len(f.codes) - 1
    r = list(g.codes)
    q = [0] * max(0, len(r) - m)
    fc = f.codes
    while len(r) - 1 >= m:
        l = len(r) - 1
        s = r[l]
        c = R.cmul(s, ctx.sigma_pow(l - m)[dm_inv])
        q[l - m] = R.cadd(q[l - m], c)
        sub = _pmul(ctx, (0,) * (l - m) + (c,), fc)
        r = list(_trim(_psub(R, r, sub)))
        assert len(r) - 1 < l, "elimination step did not lower the degree"
    return SkewPoly(ctx, q), SkewPoly(ctx, r)


def left_divmod(g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``g = f q + r`` with ``deg r < deg f``.

    Each step subtracts ``f sigma^{-m}(s_l) sigma^{-m}(d_m^{-1}) t^{l-m}``.
    sigma is always invertible on a finite ring.
    """
    ctx = g.ctx
    ctx.check(f.ctx)
    R = ctx.ring
    dm_inv = _unit_lc(f)
    m = len(f.codes) - 1
    inv_m = ctx.sigma_pow(-m)
    r = list(g.codes)
    q = [0] * max(0, len(r) - m)
    fc = f.codes
    while len(r) - 1 >= m:
        l = len(r) - 1
        s = r[l]
        c = R.cmul(inv_m[s], inv_m[dm_inv])
        q[l - m] = R.cadd(q[l - m], c)
        sub = _pmul(ctx, fc, (0,) * (l - m) + (c,))
        r = list(_trim(_psub(R, r, sub)))
        assert len(r) - 1 < l, "elimination step did not lower the degree"
    return SkewPoly(ctx, q), SkewPoly(ctx, r)


def rem_right(g: SkewPoly, f: SkewPoly) -> SkewPoly:
    return right_divmod(g, f)[1]


def monic(f: SkewPoly) -> SkewPoly:
    """``LC(f)^{-1} f``; generates the same left ideal ``Rf``."""
    inv = _unit_lc(f)
    R = f.ctx.ring
    return SkewPoly(f.ctx, [R.cmul(inv, c) for c in f.codes])


def right_divides(g: SkewPoly, f: SkewPoly) -> bool:
    """True when ``f = q g`` for some q (g must have unit leading coefficient)."""
    return right_divmod(f, g)[1].is_zero()


def is_two_sided(f: SkewPoly) -> bool:
    """Whether ``Rf`` is a two-sided ideal.

    It suffices that ``f t`` and ``f x^j`` lie in ``Rf``: the ``x^j`` generate
    S additively and ``t`` together with S generates R as a ring.
    """
    f = monic(f)
    ctx = f.ctx
    if right_divmod(f * ctx.t, f)[1].codes:
        return False
    for g in ctx.ring.additive_generators():
        if right_divmod(SkewPoly(ctx, _pmul(ctx, f.codes, (g,))), f)[1].codes:
            return False
    return True


# ---------------------------------------------------------- irreducibility
def _require_field(ctx: SkewPolyContext) -> None:
    if ctx.ring.e != 1:
        raise NotAField(f"{ctx.ring!r} is not a field")


def find_right_factor(f: SkewPoly) -> SkewPoly | None:
    """Some monic right divisor of degree 1..m-1, or None (field coefficients)."""
    _require_field(f.ctx)
    m = f.deg
    for d in range(1, int(m)):
        for h in f.ctx.monic_polys(d):
            if right_divides(h, f):
                return h
    return None


def is_irreducible_over_field(f: SkewPoly) -> bool:
    """Exhaustive search for a monic right divisor of each intermediate degree.

    Over a field every factorisation ``f = g h`` can be rescaled so that the
    right factor ``h`` is monic, so this search is complete.
    """
    _require_field(f.ctx)
    if f.deg < 1:
        return False
    return find_right_factor(f) is None


def project_poly(f: SkewPoly) -> SkewPoly:
    """Coefficient-wise reduction into ``K[t; sigma-bar, delta-bar]``."""
    ctx = f.ctx
    K = ctx.residue()
    R = ctx.ring
    return SkewPoly(K, [R.project_code(c) for c in f.codes])


def base_irreducible(f: SkewPoly) -> bool:
    fbar = project_poly(f)
    if fbar.deg != f.deg:
        raise NotRegular("the reduction of f drops degree (leading coefficient not a unit)")
    return is_irreducible_over_field(monic(fbar))


def gcrd(f: SkewPoly, u: SkewPoly) -> SkewPoly:
    """Monic ``v`` with ``Rf + Ru = Rv`` (right Euclidean algorithm)."""
    _require_field(f.ctx)
    f.ctx.check(u.ctx)
    if f.is_zero() and u.is_zero():
        raise BothZero("gcrd(0, 0) is undefined")
    a, b = f, u
    while not b.is_zero():
        a, b = b, right_divmod(a, b)[1]
    return monic(a)


# ------------------------------------------------------ anti-automorphism
def psi(g: SkewPoly) -> SkewPoly:
    """``sum a_k t^k -> sum sigma^{-k}(a_k) t^k`` into ``S[t; sigma^-1]`` (delta = 0)."""
    ctx = g.ctx
    if not ctx.is_twisted:
        raise DeltaNotZero("psi is only implemented for delta = 0")
    target = ctx.psi_target()
    return SkewPoly(target, [ctx.sigma_pow(-k)[c] for k, c in enumerate(g.codes)])
