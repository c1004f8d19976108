"""Arithmetic in GF(p^k) with a polynomial basis.

Field elements are plain ints: the coefficient vector (c_0, ..., c_{k-1}) of
c_0 + c_1 x + ... + c_{k-1} x^{k-1} packed in base p, so c_0 is the least
significant digit.  For p = 2 this makes addition an XOR.  Small fields
(q <= 512) get full addition and multiplication tables, which keeps
matrix-group enumeration cheap; larger ones fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .numtheory import factor, is_prime

MAX_FIELD_SIZE = 1 << 16
TABLE_LIMIT = 512


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1 if k else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic modulus, highest degree first
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
    return (prod + [0] * k)[:k]


def _has_root(poly: list[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    num = num[:]
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) >= len(den) and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        c = num[-1] * inv_lead % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
        num.pop()
    return num


def is_irreducible(poly: list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial (coefficients low to high) over GF(p).

    No root, and no monic factor of degree 2..deg/2 by exhaustive trial division.
    """
    k = len(poly) - 1
    if k <= 1:
        return k == 1
    if _has_root(poly, p):
        return False
    for d in range(2, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(poly, list(tail) + [1], p)):
                return False
    return True


class FieldCtx:
    """GF(p^k) with the lexicographically least monic irreducible modulus."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1 or p**k > MAX_FIELD_SIZE:
            raise ValueError(f"unsupported field size {p}^{k}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = self._least_irreducible()
        self._build_tables()

    def _least_irreducible(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (0, 1)
        # lexicographic order on (c_{k-1}, ..., c_0) of x^k + c_{k-1}x^{k-1} + ... + c_0
        for high_to_low in itertools.product(range(p), repeat=k):
            poly = list(reversed(high_to_low)) + [1]
            if is_irreducible(poly, p):
                return tuple(poly)
        raise AssertionError("no irreducible polynomial found")

    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficients {coeffs} for GF({self.q})")
        out = 0
        for c in reversed(coeffs):
            out = out * self.p + c
        return out

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        self.tabulated = q <= TABLE_LIMIT
        if not self.tabulated:
            return
        cs = [self.coeffs(a) for a in range(q)]
        self.add_table = [
            [self.from_coeffs((x + y) % p for x, y in zip(cs[a], cs[b])) for b in range(q)]
            for a in range(q)
        ]
        self.neg_table = [self.from_coeffs((-x) % p for x in cs[a]) for a in range(q)]
        mod = list(self.modulus)
        self.mul_table = [
            [self.from_coeffs(_poly_mulmod(list(cs[a]), list(cs[b]), mod, p)) for b in range(q)]
            for a in range(q)
        ]
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = self.mul_table[a].index(1)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def x(self) -> int:
        """The class of the indeterminate x (zero in a prime field)."""
        return self.p if self.k > 1 else 0

    def add(self, a: int, b: int) -> int:
        if self.tabulated:
            return self.add_table[a][b]
        p = self.p
        return self.from_coeffs((x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.tabulated:
            return self.neg_table[a]
        return self.from_coeffs((-x) % self.p for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.tabulated:
            return self.mul_table[a][b]
        prod = _poly_mulmod(list(self.coeffs(a)), list(self.coeffs(b)), list(self.modulus), self.p)
        return self.from_coeffs(prod)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.tabulated:
            return self.inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def elements(self) -> range:
        return range(self.q)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        t = self.q - 1
        for r, _ in factor(t).factors:
            while t % r == 0 and self.pow(a, t // r) == 1:
                t //= r
        return t

    def primitive_element(self) -> int:
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise AssertionError("multiplicative group is cyclic")

    def roots_of_unity(self, n: int) -> list[int]:
        return [a for a in range(1, self.q) if self.pow(a, n) == 1]

    def render(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(reversed(terms)) or "0"

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, k={self.k}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_build(p: int, k: int = 1) -> FieldCtx:
    return FieldCtx(p, k)


def field_for_order(q: int) -> FieldCtx:
    """Field with q elements, q a prime power."""
    fac = factor(q)
    if len(fac.factors) != 1 or not fac.complete:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = fac.factors
    return field_build(p, k)


def field_arith(ctx: FieldCtx, op: str, *operands: int) -> int:
    """Dispatch ``op`` in {add, mul, inv, pow} on int-encoded elements."""
    if op == "add":
        a, b = operands
        return ctx.add(a, b)
    if op == "mul":
        a, b = operands
        return ctx.mul(a, b)
    if op == "inv":
        (a,) = operands
        return ctx.inv(a)
    if op == "pow":
        a, e = operands
        return ctx.pow(a, e)
    raise ValueError(f"unknown field operation {op!r}")
