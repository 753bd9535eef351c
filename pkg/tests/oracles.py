"""Independent reference computations used to freeze expected values."""

from __future__ import annotations

import itertools


def poly_ring_mul(p: int, e: int, modulus, a, b) -> list[int]:
    """Product of coordinate lists in Z_{p^e}[x]/(modulus), schoolbook style."""
    q = p**e
    n = len(modulus) - 1
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % q
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i, m in enumerate(modulus):
                prod[k - n + i] = (prod[k - n + i] - c * m) % q
    return (prod + [0] * n)[:n]


def permutation_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def leibniz_det(M):
    """Sum over permutations; entries are RingElements of a commutative ring."""
    n = M.nrows
    R = M.ring
    acc = R.zero
    for perm in itertools.permutations(range(n)):
        term = R.one
        for i, j in enumerate(perm):
            term = term * M[i, j]
        acc = acc + term if permutation_sign(perm) == 1 else acc - term
    return acc


def span(ring, rows):
    """All left S-combinations of ``rows`` (lists of RingElements), as code tuples."""
    out = set()
    if not rows:
        return {tuple(0 for _ in range(0))}
    for coeffs in itertools.product(ring.elements(), repeat=len(rows)):
        vec = [ring.zero] * len(rows[0])
        for c, row in zip(coeffs, rows):
            vec = [v + c * r for v, r in zip(vec, row)]
        out.add(tuple(v.code for v in vec))
    return out


def f4_tables():
    """F4 = {0, 1, w, w^2} by hand: w^2 = w + 1."""
    # encode a + b w as (a, b)
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def mul(u, v):
        a, b = u
        c, d = v
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd (w + 1)
        return ((a * c + b * d) % 2, (a * d + b * c + b * d) % 2)

    return elems, mul
