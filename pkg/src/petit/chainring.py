"""Finite chain rings ``Z_{p^e}[x]/(h(x))`` with ``h`` basic irreducible.

Elements are coordinate vectors over ``Z_{p^e}`` in the power basis
``1, x, ..., x^{n-1}``.  Internally every element is also an integer *code*;
codes are ordered lexicographically on the coordinate vector, so iterating
``range(ring.size)`` is the deterministic enumeration order.

Small rings (``size <= TABLE_LIMIT``) precompute addition, multiplication and
inverse tables; the skew-polynomial and algebra layers work on codes and hit
those tables directly.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from .errors import (
    NonMonicModulus,
    NotAUnit,
    NotBasicIrreducible,
    NotPrime,
    RingMismatch,
    TooLarge,
    ValidationFailed,
    DomainError,
)

DEFAULT_CAP = 2**20
TABLE_LIMIT = 256
# pair checks above this many pairs switch to generator-based checks (still exact)
PAIR_CHECK_LIMIT = 2**16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _fp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``b`` over F_p (little-endian)."""
    a = [c % p for c in a]
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return a[:db]


def irreducible_mod_p(poly: Sequence[int], p: int) -> bool:
    """Brute-force irreducibility over F_p of a monic polynomial."""
    poly = [c % p for c in poly]
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_fp_rem(poly, list(tail) + [1], p)):
                return False
    return True


class ChainRing:
    """The Galois-type chain ring ``Z_{p^e}[x]/(modulus)``.

    ``modulus`` is a little-endian coefficient sequence of a monic polynomial
    whose reduction mod ``p`` is irreducible; ``None`` gives ``Z_{p^e}``.
    Finite fields are the case ``e == 1``.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None,
                 *, cap: int = DEFAULT_CAP):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise DomainError(f"nilpotency index must be >= 1, got {e}")
        self.p, self.e, self.q = p, e, p**e
        self.cap = cap
        if modulus is None:
            self.n = 1
            self.modulus = None
            self._mod = (0, 1)
        else:
            mod = tuple(int(c) % self.q for c in modulus)
            if len(mod) < 2:
                raise NonMonicModulus("modulus must have degree >= 1")
            if mod[-1] != 1:
                raise NonMonicModulus(f"modulus {list(modulus)} is not monic")
            if not irreducible_mod_p(mod, p):
                raise NotBasicIrreducible(
                    f"modulus {list(mod)} factors over F_{p}")
            self.n = len(mod) - 1
            self.modulus = mod
            self._mod = mod
        self.size = self.q**self.n
        self._weights = [self.q**(self.n - 1 - i) for i in range(self.n)]
        self.zero_code = 0
        self.one_code = self._weights[0]
        self._coord_cache: list[tuple[int, ...]] | None = None
        self._elements: list[RingElement] | None = None
        self._residue: ChainRing | None = None
        if self.size <= TABLE_LIMIT:
            self._build_tables()
        else:
            self.cadd = self._add_direct
            self.csub = self._sub_direct
            self.cmul = self._mul_direct
            self.cneg = lambda a: self._sub_direct(0, a)
            self.cinv = self._inv_direct

    # ----------------------------------------------------------- encoding
    def coords(self, code: int) -> tuple[int, ...]:
        if self._coord_cache is not None:
            return self._coord_cache[code]
        out = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            code, out[i] = divmod(code, self.q)
        return tuple(out)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) > self.n:
            raise DomainError(
                f"element {list(coords)} has more than {self.n} coordinates")
        code = 0
        for w, c in zip(self._weights, coords):
            code += w * (int(c) % self.q)
        return code

    # -------------------------------------------------------- arithmetic
    def _add_direct(self, a: int, b: int) -> int:
        q = self.q
        return self.encode([(x + y) % q for x, y in zip(self.coords(a), self.coords(b))])

    def _sub_direct(self, a: int, b: int) -> int:
        q = self.q
        return self.encode([(x - y) % q for x, y in zip(self.coords(a), self.coords(b))])

    def _mul_direct(self, a: int, b: int) -> int:
        n, q, mod = self.n, self.q, self._mod
        u, v = self.coords(a), self.coords(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    prod[i + j] += x * y
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % q
            if c:
                for j in range(n):
                    prod[k - n + j] -= c * mod[j]
        return self.encode([c % q for c in prod[:n]])

    def _pow_direct(self, a: int, k: int) -> int:
        result, base = self.one_code, a
        while k:
            if k & 1:
                result = self._mul_direct(result, base)
            base = self._mul_direct(base, base)
            k >>= 1
        return result

    def _inv_direct(self, a: int) -> int:
        if not self.code_is_unit(a):
            raise NotAUnit(f"{self.fmt(a)} is not a unit")
        return self._pow_direct(a, self.units_count - 1)

    def _build_tables(self) -> None:
        N = self.size
        self._coord_cache = [self.coords(c) for c in range(N)]
        add = [self._add_direct(a, b) for a in range(N) for b in range(N)]
        mul = [self._mul_direct(a, b) for a in range(N) for b in range(N)]
        neg = [self._sub_direct(0, a) for a in range(N)]
        inv = [self._inv_direct(a) if self.code_is_unit(a) else -1 for a in range(N)]
        self._tables = (add, mul, neg, inv)
        self._elements = [RingElement(self, c) for c in range(N)]

        def cadd(a, b, T=add, N=N):
            return T[a * N + b]

        def cmul(a, b, T=mul, N=N):
            return T[a * N + b]

        def csub(a, b, T=add, G=neg, N=N):
            return T[a * N + G[b]]

        def cinv(a, T=inv):
            r = T[a]
            if r < 0:
                raise NotAUnit(f"{self.fmt(a)} is not a unit")
            return r

        self.cadd, self.cmul, self.csub = cadd, cmul, csub
        self.cneg = neg.__getitem__
        self.cinv = cinv

    def code_is_unit(self, a: int) -> bool:
        p = self.p
        return any(c % p for c in self.coords(a))

    @property
    def units_count(self) -> int:
        return self.size - self.p**((self.e - 1) * self.n)

    # ---------------------------------------------------------- elements
    def __call__(self, value) -> "RingElement":
        """Coerce an int, a coordinate sequence or an element of this ring."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatch("element belongs to a different ring")
            return value
        if isinstance(value, int):
            return self.element_from_code(self.encode([value]))
        return self.element_from_code(self.encode(list(value)))

    def element_from_code(self, code: int) -> "RingElement":
        if self._elements is not None:
            return self._elements[code]
        return RingElement(self, code)

    @property
    def zero(self) -> "RingElement":
        return self.element_from_code(0)

    @property
    def one(self) -> "RingElement":
        return self.element_from_code(self.one_code)

    @property
    def gen(self) -> "RingElement":
        """The class of ``x`` (``1`` when ``n == 1``)."""
        if self.n == 1:
            return self.one
        return self(tuple(1 if i == 1 else 0 for i in range(self.n)))

    def elements(self) -> list["RingElement"]:
        if self.size > self.cap:
            raise TooLarge(f"ring has {self.size} elements (cap {self.cap})")
        if self._elements is None:
            self._elements = [RingElement(self, c) for c in range(self.size)]
        return self._elements

    enumerate = elements

    def additive_generators(self) -> list[int]:
        """Codes of ``x^j``; they generate the additive group."""
        return [self._weights[j] for j in range(self.n)]

    def ideal_codes(self, k: int = 1) -> list[int]:
        """Codes of the ideal ``(p^k)``."""
        pk = self.p**k
        return sorted({self.encode([pk * c for c in cs])
                       for cs in itertools.product(range(self.q), repeat=self.n)})

    # ------------------------------------------------- residue projection
    def residue_field(self) -> "ChainRing":
        if self.e == 1:
            return self
        if self._residue is None:
            mod = None if self.modulus is None else [c % self.p for c in self.modulus]
            self._residue = ChainRing(self.p, 1, mod, cap=self.cap)
        return self._residue

    def project_code(self, a: int) -> int:
        K = self.residue_field()
        return K.encode([c % self.p for c in self.coords(a)])

    def lift_code(self, a: int, field: "ChainRing | None" = None) -> int:
        K = field or self.residue_field()
        return self.encode(K.coords(a))

    def project(self, a: "RingElement") -> "RingElement":
        a = self(a)
        K = self.residue_field()
        return K.element_from_code(self.project_code(a.code))

    def lift(self, abar: "RingElement") -> "RingElement":
        K = self.residue_field()
        abar = K(abar)
        return self.element_from_code(self.lift_code(abar.code))

    def is_unit(self, a) -> bool:
        return self.code_is_unit(self(a).code)

    def is_field(self) -> bool:
        return self.e == 1

    # ------------------------------------------------------- formatting
    def fmt(self, code: int, var: str = "x") -> str:
        cs = self.coords(code)
        terms = []
        for i, c in enumerate(cs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = var if i == 1 else f"{var}^{i}"
                terms.append(mon if c == 1 else f"{c}{mon}")
        return "+".join(terms) if terms else "0"

    def spec_text(self) -> str:
        mod = "" if self.modulus is None else f", modulus = {list(self.modulus)}"
        return f"ring {{ p = {self.p}, e = {self.e}, n = {self.n}{mod} }}"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "n": self.n,
                "modulus": None if self.modulus is None else list(self.modulus)}

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (isinstance(other, ChainRing) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.n == 1:
            return f"Z_{self.q}" if self.e > 1 else f"F_{self.p}"
        if self.e == 1:
            return f"F_{self.size}[{list(self.modulus)}]"
        return f"GR({self.q},{self.n})[{list(self.modulus)}]"


class RingElement:
    """Immutable element of a :class:`ChainRing`."""

    __slots__ = ("ring", "code")

    def __init__(self, ring: ChainRing, code: int):
        self.ring = ring
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ring.coords(self.code)

    def _other(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other.code
        if isinstance(other, int):
            return self.ring.encode([other])
        return NotImplemented

    def _wrap(self, code: int) -> "RingElement":
        return self.ring.element_from_code(code)

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.ring.cadd(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.ring.csub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.ring.csub(b, self.code))

    def __neg__(self):
        return self._wrap(self.ring.cneg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.ring.cmul(self.code, b))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "RingElement":
        return self._wrap(self.ring.cinv(self.code))

    def is_unit(self) -> bool:
        return self.ring.code_is_unit(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.code == other.code and self.ring == other.ring
        if isinstance(other, int):
            return self.code == self.ring.encode([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.q, self.ring.n, self.code))

    def __repr__(self) -> str:
        return self.ring.fmt(self.code)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def make_ring(p: int, e: int = 1, modulus: Sequence[int] | None = None,
              *, cap: int = DEFAULT_CAP) -> ChainRing:
    return ChainRing(p, e, modulus, cap=cap)


# ---------------------------------------------------------------- morphisms
AUTOMORPHISM = "automorphism"
DERIVATION = "derivation"


class RingMorphism:
    """An automorphism or a sigma-derivation of a chain ring, as a value table.

    The table is validated exhaustively (or on additive generators, which is
    exact by bi-additivity, once ``size**2`` exceeds ``PAIR_CHECK_LIMIT``).
    """

    def __init__(self, ring: ChainRing, table: Sequence[int], kind: str = AUTOMORPHISM,
                 sigma: "RingMorphism | None" = None, *, validate: bool = True,
                 name: str = ""):
        if kind not in (AUTOMORPHISM, DERIVATION):
            raise DomainError(f"unknown morphism kind {kind!r}")
        if len(table) != ring.size:
            raise ValidationFailed("table length does not match ring size")
        if kind == DERIVATION and sigma is None:
            raise DomainError("a derivation needs its automorphism sigma")
        self.ring = ring
        self.table = list(table)
        self.kind = kind
        self.sigma = sigma
        self.name = name
        self._inverse: RingMorphism | None = None
        self._residue: RingMorphism | None = None
        if validate:
            if kind == AUTOMORPHISM:
                self._validate_automorphism()
            else:
                self._validate_derivation()

    @classmethod
    def from_function(cls, ring: ChainRing, fn: Callable[[RingElement], RingElement],
                      kind: str = AUTOMORPHISM, sigma: "RingMorphism | None" = None,
                      **kw) -> "RingMorphism":
        if ring.size > ring.cap:
            raise TooLarge(f"ring has {ring.size} elements (cap {ring.cap})")
        table = [ring(fn(ring.element_from_code(c))).code for c in range(ring.size)]
        return cls(ring, table, kind, sigma, **kw)

    # ------------------------------------------------------- validation
    def _check_additive(self) -> None:
        R, T = self.ring, self.table
        gens = R.additive_generators()
        imgs = [T[g] for g in gens]
        if T[0] != 0:
            raise ValidationFailed(f"{self.kind} does not fix 0")
        # T must equal the Z-linear extension of its values on x^j
        for c in range(R.size):
            acc = 0
            for k, img in zip(R.coords(c), imgs):
                for _ in range(k):
                    acc = R.cadd(acc, img)
            if acc != T[c]:
                raise ValidationFailed(f"{self.kind} is not additive at {R.fmt(c)}")

    def _pairs(self) -> Iterable[tuple[int, int]]:
        R = self.ring
        if R.size**2 <= PAIR_CHECK_LIMIT:
            codes = range(R.size)
        else:
            codes = R.additive_generators()
        return itertools.product(codes, repeat=2)

    def _validate_automorphism(self) -> None:
        R, T = self.ring, self.table
        if sorted(T) != list(range(R.size)):
            raise ValidationFailed("automorphism table is not a bijection")
        if T[R.one_code] != R.one_code:
            raise ValidationFailed("automorphism does not fix 1")
        self._check_additive()
        for a, b in self._pairs():
            if T[R.cmul(a, b)] != R.cmul(T[a], T[b]):
                raise ValidationFailed(
                    f"not multiplicative at ({R.fmt(a)}, {R.fmt(b)})")
        if R.e > 1 or R.size <= R.cap:
            ideal = set(R.ideal_codes(1))
            if {T[c] for c in ideal} != ideal:
                raise ValidationFailed("automorphism does not preserve (p)")

    def _validate_derivation(self) -> None:
        R, T, S = self.ring, self.table, self.sigma.table
        if self.sigma.ring != R:
            raise RingMismatch("derivation and sigma live on different rings")
        self._check_additive()
        for a, b in self._pairs():
            lhs = T[R.cmul(a, b)]
            rhs = R.cadd(R.cmul(S[a], T[b]), R.cmul(T[a], b))
            if lhs != rhs:
                raise ValidationFailed(
                    f"Leibniz rule fails at ({R.fmt(a)}, {R.fmt(b)})")
        ideal = set(R.ideal_codes(1))
        if any(T[c] not in ideal for c in ideal):
            raise ValidationFailed("derivation does not map (p) into (p)")

    # ------------------------------------------------------- application
    def __call__(self, a) -> RingElement:
        a = self.ring(a)
        return self.ring.element_from_code(self.table[a.code])

    def is_identity(self) -> bool:
        return self.kind == AUTOMORPHISM and all(v == i for i, v in enumerate(self.table))

    def is_zero(self) -> bool:
        return not any(self.table)

    @property
    def order(self) -> int:
        if self.kind != AUTOMORPHISM:
            raise DomainError("order is defined for automorphisms only")
        k, cur = 1, self.table
        while any(v != i for i, v in enumerate(cur)):
            cur = [self.table[v] for v in cur]
            k += 1
        return k

    def power_table(self, k: int) -> list[int]:
        """Table of ``sigma^k`` (negative ``k`` uses the inverse)."""
        if self.kind != AUTOMORPHISM:
            raise DomainError("powers are defined for automorphisms only")
        k %= self.order
        cur = list(range(self.ring.size))
        for _ in range(k):
            cur = [self.table[v] for v in cur]
        return cur

    def inverse(self) -> "RingMorphism":
        if self.kind != AUTOMORPHISM:
            raise DomainError("only automorphisms are invertible here")
        if self._inverse is None:
            inv = [0] * self.ring.size
            for i, v in enumerate(self.table):
                inv[v] = i
            self._inverse = RingMorphism(self.ring, inv, AUTOMORPHISM, validate=False,
                                         name=f"{self.name}^-1" if self.name else "")
            self._inverse._inverse = self
        return self._inverse

    def residue(self) -> "RingMorphism":
        """The induced map on the residue field."""
        R = self.ring
        if R.e == 1:
            return self
        if self._residue is None:
            K = R.residue_field()
            table = [R.project_code(self.table[R.lift_code(c)]) for c in range(K.size)]
            sig = self.sigma.residue() if self.sigma is not None else None
            self._residue = RingMorphism(K, table, self.kind, sig, validate=True,
                                         name=self.name)
        return self._residue

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingMorphism) and self.kind == other.kind
                and self.ring == other.ring and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.kind, tuple(self.table)))

    def __repr__(self) -> str:
        label = self.name or self.kind
        return f"<{label} on {self.ring!r}>"

    def to_json(self) -> dict:
        R = self.ring
        return {"kind": self.kind,
                "table": [[list(R.coords(c)), list(R.coords(v))]
                          for c, v in enumerate(self.table)]}


def identity(ring: ChainRing) -> RingMorphism:
    return RingMorphism(ring, list(range(ring.size)), AUTOMORPHISM, validate=False,
                        name="id")


def zero_derivation(sigma: RingMorphism) -> RingMorphism:
    return RingMorphism(sigma.ring, [0] * sigma.ring.size, DERIVATION, sigma,
                        validate=False, name="0")


def _eval_modulus(ring: ChainRing, y: int) -> int:
    acc = 0
    for c in reversed(ring._mod):
        acc = ring.cadd(ring.cmul(acc, y), ring.encode([c]))
    return acc


def frobenius_lift(ring: ChainRing, k: int = 1) -> RingMorphism:
    """Lift of the residue Frobenius ``a -> a^(p^k)`` to an automorphism.

    The image of ``x`` is the unique root of the modulus congruent to
    ``x^(p^k)`` mod ``p``, found by scanning the ``p^((e-1)n)`` candidates.
    """
    if not 0 <= k < ring.n:
        raise DomainError(f"Frobenius exponent must satisfy 0 <= k < {ring.n}")
    if k == 0:
        return identity(ring)
    K = ring.residue_field()
    target = K.element_from_code(K.encode([0, 1])) ** (ring.p**k)
    base = ring.lift_code(target.code)
    roots = []
    for z in set(ring.ideal_codes(1)):
        y = ring.cadd(base, z)
        if _eval_modulus(ring, y) == 0:
            roots.append(y)
    if len(roots) != 1:
        raise ValidationFailed(
            f"expected one lift of x^(p^{k}) that satisfies the modulus, found {len(roots)}")
    y = roots[0]
    powers = [ring.one_code]
    for _ in range(1, ring.n):
        powers.append(ring.cmul(powers[-1], y))
    table = []
    for c in range(ring.size):
        acc = 0
        for coef, pw in zip(ring.coords(c), powers):
            if coef:
                acc = ring.cadd(acc, ring.cmul(ring.encode([coef]), pw))
        table.append(acc)
    return RingMorphism(ring, table, AUTOMORPHISM, name=f"frobenius:{k}")


def inner_derivation(beta, sigma: RingMorphism) -> RingMorphism:
    """``delta(a) = beta * (a - sigma(a))``."""
    ring = sigma.ring
    b = ring(beta).code
    if b == 0:
        return zero_derivation(sigma)
    table = [ring.cmul(b, ring.csub(a, sigma.table[a])) for a in range(ring.size)]
    return RingMorphism(ring, table, DERIVATION, sigma, name=f"inner:{ring.fmt(b)}")


def _check_subring(ring: ChainRing, codes: list[int], label: str) -> None:
    s = set(codes)
    if 0 not in s or ring.one_code not in s:
        raise ValidationFailed(f"{label} does not contain 0 and 1")
    if len(s)**2 <= PAIR_CHECK_LIMIT:
        for a in s:
            for b in s:
                if ring.csub(a, b) not in s or ring.cmul(a, b) not in s:
                    raise ValidationFailed(f"{label} is not a subring")


def fixed_set(sigma: RingMorphism) -> list[RingElement]:
    ring = sigma.ring
    if ring.size > ring.cap:
        raise TooLarge(f"ring has {ring.size} elements (cap {ring.cap})")
    codes = [c for c in range(ring.size) if sigma.table[c] == c]
    _check_subring(ring, codes, "Fix(sigma)")
    return [ring.element_from_code(c) for c in codes]


def constant_set(delta: RingMorphism) -> list[RingElement]:
    ring = delta.ring
    if ring.size > ring.cap:
        raise TooLarge(f"ring has {ring.size} elements (cap {ring.cap})")
    codes = [c for c in range(ring.size) if delta.table[c] == 0]
    _check_subring(ring, codes, "Const(delta)")
    return [ring.element_from_code(c) for c in codes]


# named fixtures
def F4() -> ChainRing:
    return ChainRing(2, 1, (1, 1, 1))


def GR42() -> ChainRing:
    return ChainRing(2, 2, (1, 1, 1))


def F8() -> ChainRing:
    return ChainRing(2, 1, (1, 1, 0, 1))


FIXTURES = {
    "F2": lambda: ChainRing(2, 1),
    "F4": F4,
    "F8": F8,
    "Z4": lambda: ChainRing(2, 2),
    "GR42": GR42,
}
