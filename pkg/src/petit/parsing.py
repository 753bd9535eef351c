"""Text formats for rings, morphisms, elements and skew polynomials.

Rings::

    F4 | GR42 | F8 | F2 | Z4
    ring { p = 2, e = 2, n = 2, modulus = [1,1,1] }
    {"p": 2, "e": 2, "n": 2, "modulus": [1, 1, 1]}
    @path/to/file

Elements are little-endian coordinate arrays (``[3,1]`` is ``3+x``) or
expressions in ``w``/``x`` such as ``w^2 + 1``.  Polynomials are
``poly [c0, ..., cm]`` or expressions such as ``t^2 - w``; juxtaposition
multiplies in the skew ring, so ``t w`` is ``sigma(w) t``.
"""

from __future__ import annotations

import itertools
import json
import re
from pathlib import Path

from .chainring import (
    AUTOMORPHISM,
    DERIVATION,
    FIXTURES,
    ChainRing,
    RingElement,
    RingMorphism,
    frobenius_lift,
    identity,
    inner_derivation,
    irreducible_mod_p,
    zero_derivation,
)
from .errors import DomainError, ParseError
from .skewpoly import SkewPoly, SkewPolyContext


def _read_ref(text: str) -> str:
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            return path.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return text


def default_modulus(p: int, n: int) -> list[int]:
    """Monic irreducible of degree n over F_p with the smallest value at p."""
    best = None
    for tail in itertools.product(range(p), repeat=n):
        poly = list(tail) + [1]
        if poly[0] == 0 and n > 1:
            continue
        if irreducible_mod_p(poly, p):
            key = sum(c * p**i for i, c in enumerate(poly))
            if best is None or key < best[0]:
                best = (key, poly)
    if best is None:
        raise DomainError(f"no irreducible of degree {n} over F_{p}")
    return best[1]


def _ring_from_fields(fields: dict, cap: int | None) -> ChainRing:
    unknown = set(fields) - {"p", "e", "n", "modulus"}
    if unknown:
        raise ParseError(f"unknown ring field(s): {', '.join(sorted(unknown))}")
    if "p" not in fields:
        raise ParseError("ring description needs p")
    p, e = int(fields["p"]), int(fields.get("e", 1))
    modulus = fields.get("modulus")
    n = fields.get("n")
    if modulus is None and n is not None and int(n) > 1:
        modulus = default_modulus(p, int(n))
    if modulus is not None and n is not None and len(modulus) - 1 != int(n):
        raise ParseError(f"modulus of degree {len(modulus) - 1} but n = {n}")
    kw = {} if cap is None else {"cap": cap}
    return ChainRing(p, e, modulus, **kw)


_RING_TEXT = re.compile(r"\s*ring\s*\{(?P<body>.*)\}\s*$", re.S)
_FIELD = re.compile(r"\s*(?P<key>[a-z]+)\s*=\s*(?P<val>\[[^\]]*\]|-?\d+)\s*(,|$)")


def parse_ring(text: str, cap: int | None = None) -> ChainRing:
    text = _read_ref(text.strip())
    name = text.strip()
    for key, make in FIXTURES.items():
        if name.upper() == key:
            R = make()
            if cap is not None:
                R.cap = cap
            return R
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            fields = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad ring JSON: {exc.msg}", stripped, exc.pos) from None
        return _ring_from_fields(fields, cap)
    m = _RING_TEXT.match(text)
    if not m:
        raise ParseError("expected a fixture name, `ring { ... }` or JSON", text, 0)
    body, pos, fields = m.group("body"), 0, {}
    offset = m.start("body")
    while pos < len(body) and body[pos:].strip():
        fm = _FIELD.match(body, pos)
        if not fm:
            raise ParseError("expected `key = value`", text, offset + pos)
        val = fm.group("val")
        fields[fm.group("key")] = json.loads(val)
        pos = fm.end()
    return _ring_from_fields(fields, cap)


# ---------------------------------------------------------- expressions
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()\[\],]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", text,
                             pos + len(text[pos:]) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over ``expr := term (+|- term)*`` with implicit products."""

    def __init__(self, text: str, ctx: SkewPolyContext | None, ring: ChainRing):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def lift(self, value):
        if self.ctx is not None and isinstance(value, RingElement):
            return self.ctx.constant(value)
        return value

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = None
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = self.take()[1]
        value = self.term()
        if sign == "-":
            value = -value
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = self.add(value, rhs) if op == "+" else self.add(value, -rhs)
        return value

    def add(self, a, b):
        if isinstance(a, SkewPoly) or isinstance(b, SkewPoly):
            return self.lift(a) + self.lift(b)
        return a + b

    def mul(self, a, b):
        if isinstance(a, SkewPoly) or isinstance(b, SkewPoly):
            return self.lift(a) * self.lift(b)
        return a * b

    def starts_factor(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("num", "name") or (kind == "op" and val in "(*")

    def term(self):
        value = self.power()
        while self.starts_factor():
            if self.peek()[1] == "*":
                self.take()
            value = self.mul(value, self.power())
        return value

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                self.fail("expected an integer exponent", (kind, val, pos))
            base = base ** int(val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return self.ring(int(val))
        if kind == "name":
            if val in ("w", "x"):
                return self.ring.gen
            if val == "t":
                if self.ctx is None:
                    self.fail("`t` is not allowed in a ring element", (kind, val, pos))
                return self.ctx.t
            self.fail(f"unknown symbol {val!r}", (kind, val, pos))
        if val == "(":
            inner = self.expr()
            if self.take()[1] != ")":
                self.fail("expected `)`", self.toks[self.i - 1])
            return inner
        self.fail(f"unexpected {val!r}", (kind, val, pos))


def _coords_element(ring: ChainRing, value, text: str) -> RingElement:
    if isinstance(value, int):
        return ring(value)
    if isinstance(value, list) and all(isinstance(c, int) for c in value):
        if len(value) > ring.n:
            raise ParseError(f"{len(value)} coordinates for a ring of rank {ring.n}", text)
        return ring(value)
    raise ParseError(f"expected a coordinate array, got {value!r}", text)


def parse_element(ring: ChainRing, text: str) -> RingElement:
    text = text.strip()
    if text.startswith("["):
        try:
            value = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad coordinate array: {exc.msg}", text, exc.pos) from None
        return _coords_element(ring, value, text)
    return _Parser(text, None, ring).parse()


def parse_vector(ring: ChainRing, text: str) -> list[RingElement]:
    """``[[c..], [c..], ...]`` or a comma list of element expressions."""
    text = text.strip()
    if text.startswith("["):
        try:
            value = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad vector: {exc.msg}", text, exc.pos) from None
        if not isinstance(value, list):
            raise ParseError("expected a list", text, 0)
        return [_coords_element(ring, v, text) for v in value]
    return [parse_element(ring, part) for part in text.split(",")]


def parse_poly(ctx: SkewPolyContext, text: str) -> SkewPoly:
    text = _read_ref(text.strip())
    body = text
    if body.startswith("poly"):
        body = body[4:].strip()
        if not body.startswith("["):
            raise ParseError("expected `[` after `poly`", text, len(text) - len(body))
    if body.startswith("["):
        try:
            value = json.loads(body)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad coefficient list: {exc.msg}", body, exc.pos) from None
        if not isinstance(value, list):
            raise ParseError("expected a list of coefficients", body, 0)
        return ctx.poly([_coords_element(ctx.ring, c, body) for c in value])
    value = _Parser(text, ctx, ctx.ring).parse()
    return value if isinstance(value, SkewPoly) else ctx.constant(value)


# ------------------------------------------------------------ morphisms
def _table_from_json(ring: ChainRing, data, text: str) -> list[int]:
    if isinstance(data, dict) and "table" in data:
        rows = data["table"]
        if len(rows) != ring.size:
            raise ParseError(f"table has {len(rows)} rows, ring has {ring.size} elements", text)
        out = [0] * ring.size
        for row in rows:
            if isinstance(row, list) and len(row) == 2 and isinstance(row[0], list):
                out[ring(row[0]).code] = ring(row[1]).code
            else:
                raise ParseError("table rows must be [argument, image] coordinate pairs", text)
        return out
    raise ParseError("expected an object with a `table` field", text)


def parse_sigma(ring: ChainRing, text: str | None) -> RingMorphism:
    if text is None:
        return frobenius_lift(ring, 1) if ring.n > 1 else identity(ring)
    text = text.strip()
    if text in ("id", "identity"):
        return identity(ring)
    m = re.fullmatch(r"frobenius(?::(\d+))?", text)
    if m:
        return frobenius_lift(ring, int(m.group(1) or 1))
    if text.startswith("@") or text.startswith("{"):
        raw = _read_ref(text)
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad sigma JSON: {exc.msg}", raw, exc.pos) from None
        if isinstance(data, dict) and "x" in data:
            y = ring(data["x"])
            powers = [ring.one]
            for _ in range(1, ring.n):
                powers.append(powers[-1] * y)
            table = []
            for c in range(ring.size):
                acc = ring.zero
                for coef, pw in zip(ring.coords(c), powers):
                    acc = acc + ring(coef) * pw
                table.append(acc.code)
        else:
            table = _table_from_json(ring, data, raw)
        return RingMorphism(ring, table, AUTOMORPHISM, name="table")
    raise ParseError("sigma must be `id`, `frobenius:k` or a table file", text, 0)


def parse_delta(sigma: RingMorphism, text: str | None) -> RingMorphism:
    ring = sigma.ring
    if text is None or text.strip() in ("0", "zero"):
        return zero_derivation(sigma)
    text = text.strip()
    if text.startswith("inner:"):
        return inner_derivation(parse_element(ring, text[6:]), sigma)
    if text.startswith("@") or text.startswith("{"):
        raw = _read_ref(text)
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad delta JSON: {exc.msg}", raw, exc.pos) from None
        return RingMorphism(ring, _table_from_json(ring, data, raw), DERIVATION, sigma,
                            name="table")
    raise ParseError("delta must be `zero`, `inner:<elt>` or a table file", text, 0)


def parse_context(ring: str, sigma: str | None = None, delta: str | None = None,
                  cap: int | None = None) -> SkewPolyContext:
    R = parse_ring(ring, cap)
    s = parse_sigma(R, sigma)
    return SkewPolyContext(R, s, parse_delta(s, delta))
