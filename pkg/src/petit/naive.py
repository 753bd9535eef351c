"""Reference Ore multiplication by term rewriting.

Independent of the table-driven product: polynomials are dicts
``{degree: RingElement}``, sigma and delta are applied as callables, and
``t^i * b`` is rewritten one ``t`` at a time with ``t b = sigma(b) t + delta(b)``.
"""

from __future__ import annotations

from functools import lru_cache

from .skewpoly import SkewPoly, SkewPolyContext


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero()}


def naive_mul(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    ctx: SkewPolyContext = g.ctx
    sigma, delta = ctx.sigma, ctx.delta
    R = ctx.ring

    @lru_cache(maxsize=None)
    def t_pow_times(i: int, b_code: int) -> tuple:
        """``t^i * b`` as sorted (degree, code) pairs."""
        b = R.element_from_code(b_code)
        if i == 0:
            return ((0, b.code),) if not b.is_zero() else ()
        acc: dict = {}
        for k, c in ((1, sigma(b)), (0, delta(b))):
            if c.is_zero():
                continue
            for deg, code in t_pow_times(i - 1, c.code):
                acc[deg + k] = acc.get(deg + k, R.zero) + R.element_from_code(code)
        return tuple(sorted((d, v.code) for d, v in _clean(acc).items()))

    out: dict = {}
    for i, a in enumerate(g.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(h.coeffs):
            if b.is_zero():
                continue
            for deg, code in t_pow_times(i, b.code):
                term = a * R.element_from_code(code)
                out[deg + j] = out.get(deg + j, R.zero) + term
    out = _clean(out)
    top = max(out) if out else -1
    return ctx.poly([out.get(k, R.zero) for k in range(top + 1)])
