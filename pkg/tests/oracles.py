"""Slow, independent reference implementations used only by the tests.

Nothing here calls into the code it checks except group multiplication.
"""

from __future__ import annotations

from itertools import combinations, permutations


def oracle_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def oracle_nice_tag(n: int) -> str:
    f = oracle_factor(n)
    if len(f) == 1:
        return "PrimePower"
    if len(f) == 2 and all(e == 1 for e in f.values()):
        return "TwoDistinctPrimes"
    return "Neither"


def oracle_is_prime(n: int) -> bool:
    return n >= 2 and oracle_factor(n) == {n: 1}


def oracle_totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if _gcd(k, n) == 1)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class NaiveGF:
    """GF(p^k) as coefficient lists, with schoolbook reduction by ``modulus``."""

    def __init__(self, p: int, modulus: tuple[int, ...]):
        self.p = p
        self.mod = list(modulus)  # low -> high, monic
        self.k = len(modulus) - 1

    def unpack(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def pack(self, cs: list[int]) -> int:
        x = 0
        for c in reversed(cs):
            x = x * self.p + c
        return x

    def add(self, a: int, b: int) -> int:
        return self.pack([(x + y) % self.p for x, y in zip(self.unpack(a), self.unpack(b))])

    def mul(self, a: int, b: int) -> int:
        u, v = self.unpack(a), self.unpack(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(self.mod):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * m) % self.p
        return self.pack(prod[: self.k])


def oracle_orders(G) -> list[int]:
    out = []
    for x in range(G.order):
        y, k = x, 1
        while y != 0:
            y = G.mul(y, x)
            k += 1
        out.append(k)
    return out


def oracle_powers(G, x: int) -> set[int]:
    seen = {0}
    y = x
    while y not in seen:
        seen.add(y)
        y = G.mul(y, x)
    return seen


def oracle_power_edges(G) -> set[tuple[int, int]]:
    """Edges of P(G) from per-element power sets built by repeated multiplication."""
    powers = [oracle_powers(G, x) for x in range(G.order)]
    edges = set()
    for x, y in combinations(range(G.order), 2):
        if y in powers[x] or x in powers[y]:
            edges.add((x, y))
    return edges


def oracle_has_p4(n: int, adj: list[set[int]]) -> bool:
    """Exhaustive induced-P4 search over ordered 4-tuples."""
    for a, b, c, d in permutations(range(n), 4):
        if a > d:
            continue
        if (b in adj[a] and c in adj[b] and d in adj[c]
                and c not in adj[a] and d not in adj[a] and d not in adj[b]):
            return True
    return False


def oracle_conjugate(G, x: int, y: int) -> bool:
    for t in range(G.order):
        tinv = next(s for s in range(G.order) if G.mul(t, s) == 0)
        if G.mul(G.mul(t, x), tinv) == y:
            return True
    return False


def oracle_is_nilpotent(G) -> bool:
    """Elements of coprime order commute, pairwise."""
    orders = oracle_orders(G)
    n = G.order
    for x in range(n):
        for y in range(x + 1, n):
            if _gcd(orders[x], orders[y]) == 1 and G.mul(x, y) != G.mul(y, x):
                return False
    return True
