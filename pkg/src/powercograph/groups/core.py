"""Fully enumerated finite groups.

A :class:`FiniteGroup` holds its elements as canonical hashable keys (tuples)
and a product on keys.  Everything else works with dense integer indices,
index 0 always being the identity.
"""

from __future__ import annotations

import math
import random
from collections import deque
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from ..numtheory import prime_factors

DEFAULT_CAP = 100_000
DENSE_TABLE_LIMIT = 2000


class CapExceeded(Exception):
    """Raised when a group would have more elements than the enumeration cap."""


def iter_bits(mask: int):
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteGroup:
    def __init__(
        self,
        keys: Sequence[Hashable],
        op: Callable[[Hashable, Hashable], Hashable],
        label: str = "G",
        render: Callable[[Hashable], str] = repr,
        generators: Sequence[int] = (),
        tree: Sequence[tuple[int, int]] | None = None,
    ):
        self.keys = list(keys)
        self.index = {k: i for i, k in enumerate(self.keys)}
        if len(self.index) != len(self.keys):
            raise ValueError("duplicate element keys")
        self._op = op
        self.label = label
        self._render = render
        self.generators = list(generators)
        # tree[i] = (parent, g): keys[i] == keys[parent] * keys[generators[g]]
        self.tree = tree
        self._classes: dict[int, frozenset[int]] = {}
        self._table = None

    @classmethod
    def from_generators(
        cls,
        identity: Hashable,
        gens: Iterable[Hashable],
        op: Callable[[Hashable, Hashable], Hashable],
        label: str = "G",
        render: Callable[[Hashable], str] = repr,
        cap: int = DEFAULT_CAP,
    ) -> "FiniteGroup":
        """Enumerate the closure of ``gens`` breadth-first from the identity."""
        gens = list(dict.fromkeys(gens))
        keys = [identity]
        seen = {identity: 0}
        tree: list[tuple[int, int]] = [(-1, -1)]
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            xi = seen[x]
            for gi, g in enumerate(gens):
                y = op(x, g)
                if y not in seen:
                    seen[y] = len(keys)
                    keys.append(y)
                    tree.append((xi, gi))
                    if len(keys) > cap:
                        raise CapExceeded(f"{label}: more than {cap} elements")
                    queue.append(y)
        gen_idx = [seen[g] for g in gens]
        return cls(keys, op, label, render, gen_idx, tree)

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def order(self) -> int:
        return len(self.keys)

    @property
    def identity(self) -> int:
        return 0

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label} of order {self.order}>"

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[self._op(self.keys[i], self.keys[j])]

    def encoding(self, i: int) -> bytes:
        return repr(self.keys[i]).encode("ascii")

    def render(self, i: int) -> str:
        return self._render(self.keys[i])

    def cayley_table(self) -> list[list[int]]:
        """Dense multiplication table; only for small groups."""
        if self._table is None:
            if self.order > DENSE_TABLE_LIMIT:
                raise CapExceeded(f"dense table refused above {DENSE_TABLE_LIMIT} elements")
            self._table = [[self.mul(i, j) for j in range(self.order)] for i in range(self.order)]
        return self._table

    # -- powers --------------------------------------------------------------

    @cached_property
    def cycles(self) -> list[tuple[int, ...]]:
        """``cycles[x] = (x, x^2, ..., x^o)`` with ``x^o`` the identity.

        Each generator's cycle is computed by multiplication; the cycles of
        all its powers are read off by striding, so every cyclic subgroup is
        walked once.
        """
        n = self.order
        out: list[tuple[int, ...] | None] = [None] * n
        for i in range(n):
            if out[i] is not None:
                continue
            cyc = [i]
            x = i
            while x != 0:
                x = self.mul(x, i)
                cyc.append(x)
            o = len(cyc)
            for k in range(1, o + 1):
                y = cyc[k - 1]
                if out[y] is None:
                    m = o // math.gcd(k, o)
                    out[y] = tuple(cyc[(k * j - 1) % o] for j in range(1, m + 1))
        return out  # type: ignore[return-value]

    @cached_property
    def orders(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def element_order(self, i: int) -> int:
        return len(self.cycles[i])

    def power(self, i: int, k: int) -> int:
        cyc = self.cycles[i]
        k %= len(cyc)
        return 0 if k == 0 else cyc[k - 1]

    def inverse(self, i: int) -> int:
        return self.power(i, -1)

    def cyclic_subgroup(self, i: int) -> frozenset[int]:
        return frozenset(self.cycles[i])

    def subgroup_mask(self, i: int) -> int:
        """Bit mask of <x>."""
        m = 0
        for y in self.cycles[i]:
            m |= 1 << y
        return m

    # -- conjugacy -----------------------------------------------------------

    def conjugacy_class(self, i: int) -> frozenset[int]:
        cls_ = self._classes.get(i)
        if cls_ is None:
            cls_ = frozenset(self.mul(self.mul(t, i), self.inverse(t)) for t in range(self.order))
            for j in cls_:
                self._classes[j] = cls_
        return cls_

    def are_conjugate(self, i: int, j: int) -> bool:
        if self.orders[i] != self.orders[j]:
            return False
        return j in self.conjugacy_class(i)

    # -- structure -----------------------------------------------------------

    def is_abelian(self) -> bool:
        gens = self.generators or range(self.order)
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        return self.order in self.orders

    def is_nilpotent(self) -> bool:
        """Nilpotent iff every Sylow subgroup is normal.

        A Sylow p-subgroup is unique exactly when the elements of p-power
        order number |G|_p, so this is a count over element orders.
        """
        n = self.order
        for p in prime_factors(n):
            part = 1
            while n % (part * p) == 0:
                part *= p
            count = sum(1 for o in self.orders if _is_power_of(o, p))
            if count != part:
                return False
        return True

    def maximal_cyclic_subgroups(self) -> tuple[list[frozenset[int]], bool]:
        """Maximal cyclic subgroups, and whether they pairwise meet trivially.

        <x> is maximal iff x is not a power of any element of larger order.
        Subgroups come out ordered by their least-index generator.
        """
        orders = self.orders
        dominated = bytearray(self.order)
        walked: set[frozenset[int]] = set()
        for y, cyc in enumerate(self.cycles):
            sub = frozenset(cyc)
            if sub in walked:
                continue
            walked.add(sub)
            for z in cyc:
                if orders[z] < orders[y]:
                    dominated[z] = 1
        subs: dict[frozenset[int], None] = {}
        for x in range(self.order):
            if not dominated[x]:
                subs.setdefault(frozenset(self.cycles[x]), None)
        out = list(subs)
        # every element lies in some maximal cyclic subgroup, so the counts
        # match exactly when no non-identity element is shared
        pairwise_trivial = sum(len(c) - 1 for c in out) == self.order - 1
        return out, pairwise_trivial

    def check_axioms(self, samples: int = 10_000, seed: int = 0) -> None:
        """Identity and inverse laws everywhere, associativity on random triples."""
        n = self.order
        for i in range(n):
            if self.mul(0, i) != i or self.mul(i, 0) != i:
                raise AssertionError(f"identity law fails at {i}")
            inv = self.inverse(i)
            if self.mul(i, inv) != 0 or self.mul(inv, i) != 0:
                raise AssertionError(f"inverse law fails at {i}")
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise AssertionError(f"associativity fails at {(a, b, c)}")


def _is_power_of(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1
