"""Constructors for every group the spec language can name."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from ..finite_field import FieldCtx, field_for_order
from .core import DEFAULT_CAP, CapExceeded, FiniteGroup
from .spec import GroupSpec, parse_spec

# -- permutations ------------------------------------------------------------


def perm_mul(a: tuple, b: tuple) -> tuple:
    """Composition a*b = a o b (apply b first)."""
    return tuple([a[i] for i in b])


def cycles_to_perm(n: int, cycles: Sequence[Sequence[int]], one_based: bool = True) -> tuple:
    img = list(range(n))
    off = 1 if one_based else 0
    for cyc in cycles:
        for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[x - off] = y - off
    return tuple(img)


def render_perm(p: tuple) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def perm_group(n: int, gens: Sequence[tuple], label: str, cap: int) -> FiniteGroup:
    ident = tuple(range(n))
    return FiniteGroup.from_generators(ident, gens, perm_mul, label, render_perm, cap)


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens = [cycles_to_perm(n, [(1, 2)]), cycles_to_perm(n, [tuple(range(1, n + 1))])]
    return perm_group(n, gens, f"sym:{n}", cap)


def alternating_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    gens = []
    if n >= 3:
        long_cycle = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens = [cycles_to_perm(n, [(1, 2, 3)]), cycles_to_perm(n, [long_cycle])]
    return perm_group(n, gens, f"alt:{n}", cap)


M11_GENERATORS = ([tuple(range(1, 12))], [(3, 7, 11, 8), (4, 10, 5, 6)])


def mathieu11(cap: int = DEFAULT_CAP) -> FiniteGroup:
    gens = [cycles_to_perm(11, c) for c in M11_GENERATORS]
    return perm_group(11, gens, "m11", cap)


# -- matrices over finite fields ---------------------------------------------


class MatrixOps:
    """Products of n x n matrices over a field, optionally modulo scalars.

    Matrices are flat row-major tuples of int-encoded field elements.  In
    the projective case each product is replaced by the lexicographically
    least of its multiples by the allowed scalars.
    """

    def __init__(self, field: FieldCtx, n: int, scalars: Sequence[int] = (1,)):
        self.field = field
        self.n = n
        self.scalars = sorted(set(scalars))
        self.projective = len(self.scalars) > 1

    def canonical(self, m: tuple) -> tuple:
        if not self.projective:
            return m
        mul = self.field.mul
        return min(tuple([mul(s, x) for x in m]) for s in self.scalars)

    def raw_mul(self, a: tuple, b: tuple) -> tuple:
        n = self.n
        F = self.field
        out = []
        if F.tabulated:
            add, mul = F.add_table, F.mul_table
            for i in range(n):
                row = a[i * n : i * n + n]
                for j in range(n):
                    acc = 0
                    for k in range(n):
                        x = row[k]
                        if x:
                            acc = add[acc][mul[x][b[k * n + j]]]
                    out.append(acc)
        else:
            for i in range(n):
                for j in range(n):
                    acc = 0
                    for k in range(n):
                        acc = F.add(acc, F.mul(a[i * n + k], b[k * n + j]))
                    out.append(acc)
        return tuple(out)

    def mul(self, a: tuple, b: tuple) -> tuple:
        return self.canonical(self.raw_mul(a, b))

    def identity(self) -> tuple:
        n = self.n
        return tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    def elementary(self, i: int, j: int, t: int) -> tuple:
        m = list(self.identity())
        m[i * self.n + j] = t
        return tuple(m)

    def diagonal(self, entries: Sequence[int]) -> tuple:
        n = self.n
        return tuple(entries[i] if i == j else 0 for i in range(n) for j in range(n))

    def render(self, m: tuple) -> str:
        n = self.n
        rows = [
            "[" + ",".join(self.field.render(m[i * n + j]) for j in range(n)) + "]"
            for i in range(n)
        ]
        return "[" + ",".join(rows) + "]"


def special_linear_generators(ops: MatrixOps) -> list[tuple]:
    """Transvections between adjacent coordinates plus diagonal torus elements."""
    F, n = ops.field, ops.n
    gens = []
    for i in range(n - 1):
        gens.append(ops.elementary(i, i + 1, 1))
        gens.append(ops.elementary(i + 1, i, 1))
    if F.q > 3:
        w = F.primitive_element()
        for i in range(n - 1):
            d = [1] * n
            d[i], d[i + 1] = w, F.inv(w)
            gens.append(ops.diagonal(d))
    return [ops.canonical(g) for g in gens]


def linear_group(q: int, n: int, projective: bool, cap: int, label: str) -> FiniteGroup:
    F = field_for_order(q)
    scalars = F.roots_of_unity(n) if projective else [1]
    ops = MatrixOps(F, n, scalars)
    gens = special_linear_generators(ops)
    return FiniteGroup.from_generators(ops.identity(), gens, ops.mul, label, ops.render, cap)


def heisenberg_group(cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over GF(3)."""
    ops = MatrixOps(field_for_order(3), 3)
    gens = [ops.elementary(0, 1, 1), ops.elementary(1, 2, 1)]
    return FiniteGroup.from_generators(ops.identity(), gens, ops.mul, "heis3", ops.render, cap)


@lru_cache(maxsize=1)
def _heis3() -> FiniteGroup:
    return heisenberg_group()


def automorphisms(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of a small closure-built group, by brute force.

    Every choice of images for the generators is extended along the
    closure tree and kept if the resulting map is a bijective homomorphism
    (checked on all pairs through the Cayley table).
    """
    table = G.cayley_table()
    n = G.order
    gens = G.generators
    tree = G.tree
    out = []

    def candidates(k: int, chosen: list[int]):
        if k == len(gens):
            yield list(chosen)
            return
        target_order = G.orders[gens[k]]
        for u in range(n):
            if G.orders[u] == target_order:
                chosen.append(u)
                yield from candidates(k + 1, chosen)
                chosen.pop()

    for images in candidates(0, []):
        phi = [0] * n
        for i in range(1, n):
            parent, g = tree[i]
            phi[i] = table[phi[parent]][images[g]]
        if len(set(phi)) != n:
            continue
        if all(phi[table[a][b]] == table[phi[a]][phi[b]] for a in range(n) for b in range(n)):
            out.append(tuple(phi))
    return out


@lru_cache(maxsize=1)
def heis3_involutions() -> tuple[tuple[int, ...], ...]:
    """Automorphisms of order exactly 2 of heis3, in lexicographic order."""
    H = _heis3()
    ident = tuple(range(H.order))
    invols = [
        phi
        for phi in automorphisms(H)
        if phi != ident and all(phi[phi[i]] == i for i in range(H.order))
    ]
    return tuple(sorted(invols))


def heis3_c2(j: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """heis3 extended by C2 acting through the j-th involutory automorphism."""
    H = _heis3()
    phi = heis3_involutions()[j]
    table = H.cayley_table()

    def op(a, b):
        (h1, s1), (h2, s2) = a, b
        return (table[h1][phi[h2] if s1 else h2], s1 ^ s2)

    keys = [(h, s) for s in (0, 1) for h in range(H.order)]

    def render(k):
        return f"({H.render(k[0])},{k[1]})"

    return FiniteGroup(keys, op, f"heis3_c2:{j}", render)


# -- small explicit families --------------------------------------------------


def cyclic_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n > cap:
        raise CapExceeded(f"cyclic:{n} exceeds cap {cap}")
    return FiniteGroup(
        [(i,) for i in range(n)],
        lambda a, b: ((a[0] + b[0]) % n,),
        f"cyclic:{n}",
        lambda k: f"x^{k[0]}",
        generators=[1 % n] if n > 1 else [],
    )


def dihedral_group(m: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Order 2m: rotations (r, 0) and reflections (r, 1)."""
    if 2 * m > cap:
        raise CapExceeded(f"dihedral:{m} exceeds cap {cap}")

    def op(a, b):
        return ((a[0] + (-b[0] if a[1] else b[0])) % m, a[1] ^ b[1])

    def render(k):
        return f"r^{k[0]}" + ("s" if k[1] else "")

    keys = [(r, s) for s in (0, 1) for r in range(m)]
    return FiniteGroup(keys, op, f"dihedral:{m}", render)


def semidirect_group(p: int, n: int, k: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """<a, b | a^p = b^n = 1, b^-1 a b = a^k> with elements a^i b^j as (i, j)."""
    if p * n > cap:
        raise CapExceeded(f"sd({p},{n},{k}) exceeds cap {cap}")
    kinv = pow(k, -1, p)
    twist = [pow(kinv, j, p) for j in range(n)]

    def op(x, y):
        return ((x[0] + y[0] * twist[x[1]]) % p, (x[1] + y[1]) % n)

    def render(e):
        return f"a^{e[0]}b^{e[1]}"

    return FiniteGroup.from_generators((0, 0), [(1, 0), (0, 1)], op, f"sd({p},{n},{k})", render, cap)


def direct_product(A: FiniteGroup, B: FiniteGroup, label: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if A.order * B.order > cap:
        raise CapExceeded(f"{label} exceeds cap {cap}")
    keys = [(i, j) for i in range(A.order) for j in range(B.order)]

    def op(x, y):
        return (A.mul(x[0], y[0]), B.mul(x[1], y[1]))

    def render(k):
        return f"({A.render(k[0])}, {B.render(k[1])})"

    return FiniteGroup(keys, op, label, render)


# -- dispatch ------------------------------------------------------------------


def expected_order(spec: GroupSpec) -> int:
    """Order of the group a spec names, from the family formula."""
    k, a = spec.kind, spec.args
    if k == "cyclic":
        return a[0]
    if k == "dihedral":
        return 2 * a[0]
    if k == "sym":
        return math.factorial(a[0])
    if k == "alt":
        return max(1, math.factorial(a[0]) // 2)
    if k == "heis3":
        return 27
    if k == "heis3_c2":
        return 54
    if k == "m11":
        return 7920
    if k == "psl2":
        q = a[0]
        return q * (q * q - 1) // math.gcd(2, q - 1)
    if k in ("psl3", "sl3"):
        q = a[0]
        sl = q**3 * (q * q - 1) * (q**3 - 1)
        return sl // math.gcd(3, q - 1) if k == "psl3" else sl
    if k == "dp":
        return expected_order(a[0]) * expected_order(a[1])
    if k == "sd":
        return a[0] * a[1]
    raise ValueError(f"unknown group kind {k!r}")


def build_group(spec: GroupSpec | str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Enumerate the group named by ``spec``; raises CapExceeded above ``cap``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    n = expected_order(spec)
    if n > cap:
        raise CapExceeded(f"{spec} has order {n} > cap {cap}")
    G = _build(spec, cap)
    if G.order != n:
        raise AssertionError(f"{spec}: enumerated {G.order} elements, expected {n}")
    G.label = str(spec)
    return G


def _build(spec: GroupSpec, cap: int) -> FiniteGroup:
    k, a = spec.kind, spec.args
    if k == "cyclic":
        return cyclic_group(a[0], cap)
    if k == "dihedral":
        return dihedral_group(a[0], cap)
    if k == "sym":
        return symmetric_group(a[0], cap)
    if k == "alt":
        return alternating_group(a[0], cap)
    if k == "heis3":
        return heisenberg_group(cap)
    if k == "heis3_c2":
        return heis3_c2(a[0], cap)
    if k == "m11":
        return mathieu11(cap)
    if k == "psl2":
        return linear_group(a[0], 2, True, cap, str(spec))
    if k == "psl3":
        return linear_group(a[0], 3, True, cap, str(spec))
    if k == "sl3":
        return linear_group(a[0], 3, False, cap, str(spec))
    if k == "dp":
        return direct_product(_build(a[0], cap), _build(a[1], cap), str(spec), cap)
    if k == "sd":
        return semidirect_group(*a, cap=cap)
    raise ValueError(f"unknown group kind {k!r}")
