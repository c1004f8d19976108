"""Power graphs and their relatives for an enumerated group.

Vertex ``i`` of every element-level graph is group element ``i``, so vertex
0 is the identity.  The reduced and P2 graphs are reindexed densely and
carry the original element indices in ``vertex_labels``.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Digraph, Graph
from .groups.core import FiniteGroup
from .numtheory import big_omega, prime_factors, totient


def directed_power_graph(G: FiniteGroup) -> Digraph:
    """Arc x -> y iff y != x and y is a power of x."""
    rows = []
    for x in range(G.order):
        rows.append(G.subgroup_mask(x) & ~(1 << x))
    return Digraph(G.order, rows, list(range(G.order)))


def power_graph(G: FiniteGroup) -> Graph:
    return directed_power_graph(G).symmetrize()


def reduced_power_graph(G: FiniteGroup) -> Graph:
    return power_graph(G).induced(range(1, G.order))


def enhanced_power_graph(G: FiniteGroup) -> Graph:
    """Union of cliques on the maximal cyclic subgroups."""
    rows = [0] * G.order
    subs, _ = G.maximal_cyclic_subgroups()
    for sub in subs:
        mask = 0
        for x in sub:
            mask |= 1 << x
        for x in sub:
            rows[x] |= mask
    for x in range(G.order):
        rows[x] &= ~(1 << x)
    return Graph(G.order, rows, list(range(G.order)))


def gk_graph(G: FiniteGroup) -> Graph:
    """Prime graph: primes dividing |G|, p ~ q iff some element order is divisible by pq."""
    primes = list(prime_factors(G.order)) if G.order > 1 else []
    pos = {p: i for i, p in enumerate(primes)}
    edges = set()
    for o in set(G.orders):
        ps = prime_factors(o) if o > 1 else ()
        for p, q in combinations(ps, 2):
            edges.add((pos[p], pos[q]))
    return Graph.from_edges(len(primes), sorted(edges), labels=primes)


def derived_graph(G: FiniteGroup, kind: str) -> Graph:
    if kind == "reduced":
        return reduced_power_graph(G)
    if kind == "enhanced":
        return enhanced_power_graph(G)
    if kind == "gk":
        return gk_graph(G)
    raise ValueError(f"unknown graph kind {kind!r}")


def edge_count_formula(G: FiniteGroup) -> int:
    """Half the sum over elements of 2 o(a) - phi(o(a)) - 1."""
    total = sum(2 * o - totient(o) - 1 for o in G.orders)
    if total % 2:
        raise AssertionError("edge-count sum is odd")
    return total // 2


def p2_vertices(G: FiniteGroup) -> list[int]:
    """Non-identity elements whose order is a prime or a product of two primes."""
    return [x for x, o in enumerate(G.orders) if o > 1 and big_omega(o) <= 2]


def p2_restriction(G: FiniteGroup) -> Graph:
    """Induced subgraph of P(G) on the P2 vertices, built without the full graph."""
    verts = p2_vertices(G)
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for x in verts:
        i = pos[x]
        for y in G.cycles[x]:
            j = pos.get(y)
            if j is not None and j != i:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(len(verts), rows, verts)


def is_eulerian(g: Graph) -> bool:
    return g.is_connected() and all(r.bit_count() % 2 == 0 for r in g.rows)
