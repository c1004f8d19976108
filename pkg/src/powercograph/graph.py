"""Bit-set graphs.

Row ``i`` of the adjacency is a Python int whose bit ``j`` is set iff
``i ~ j``.  Rows are arbitrary-precision ints, so there is no fixed word
size and set operations on neighbourhoods are single big-int operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups.core import iter_bits


@dataclass
class Graph:
    n: int
    rows: list[int]
    vertex_labels: list | None = field(default=None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def complement(self) -> "Graph":
        full = self.all_mask
        return Graph(self.n, [full ^ r ^ (1 << i) for i, r in enumerate(self.rows)], self.vertex_labels)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``, reindexed densely in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        mask = 0
        for v in vertices:
            mask |= 1 << v
        rows = []
        for v in vertices:
            r = 0
            for u in iter_bits(self.rows[v] & mask):
                r |= 1 << pos[u]
            rows.append(r)
        labels = [self.vertex_labels[v] for v in vertices] if self.vertex_labels else list(vertices)
        return Graph(len(vertices), rows, labels)

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on ``mask``, as masks."""
        rest = self.all_mask if mask is None else mask
        out = []
        rows = self.rows
        while rest:
            low = rest & -rest
            rest ^= low
            comp = frontier = low
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = rows[b.bit_length() - 1] & rest
                if new:
                    rest ^= new
                    frontier |= new
                    comp |= new
            out.append(comp)
        return out

    def co_components(self, mask: int | None = None) -> list[int]:
        """Components of the complement on ``mask``, without building it."""
        rest = self.all_mask if mask is None else mask
        out = []
        rows = self.rows
        while rest:
            low = rest & -rest
            rest ^= low
            comp = frontier = low
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = rest & ~rows[b.bit_length() - 1]
                if new:
                    rest ^= new
                    frontier |= new
                    comp |= new
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def check(self) -> None:
        for i, r in enumerate(self.rows):
            if r >> i & 1:
                raise AssertionError(f"loop at {i}")
            if r >> self.n:
                raise AssertionError(f"row {i} longer than n")
            for j in iter_bits(r):
                if not self.rows[j] >> i & 1:
                    raise AssertionError(f"asymmetric pair {(i, j)}")

    # -- export --------------------------------------------------------------

    def _name(self, v: int) -> str:
        if self.vertex_labels is None:
            return str(v)
        return str(self.vertex_labels[v])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {_dot_id(name)} {{"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{self._name(v)}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_hex(self) -> str:
        return _rows_to_hex(self.n, self.rows)

    @classmethod
    def from_hex(cls, text: str) -> "Graph":
        n, rows = _hex_to_rows(text)
        return cls(n, rows)


@dataclass
class Digraph:
    n: int
    rows: list[int]
    vertex_labels: list | None = field(default=None)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def arcs(self):
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                yield u, v

    def is_transitive(self) -> bool:
        rows = self.rows
        for u, row in enumerate(rows):
            for v in iter_bits(row):
                if rows[v] & ~row & ~(1 << u):
                    return False
        return True

    def symmetrize(self) -> Graph:
        rows = list(self.rows)
        for u, row in enumerate(self.rows):
            bit = 1 << u
            for v in iter_bits(row):
                rows[v] |= bit
        return Graph(self.n, rows, self.vertex_labels)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {_dot_id(name)} {{"]
        for v in range(self.n):
            label = v if self.vertex_labels is None else self.vertex_labels[v]
            lines.append(f'  {v} [label="{label}"];')
        for u, v in self.arcs():
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_hex(self) -> str:
        return _rows_to_hex(self.n, self.rows)


def _dot_id(name: str) -> str:
    return '"' + name.replace('"', r"\"") + '"'


def _rows_to_hex(n: int, rows: Sequence[int]) -> str:
    """``n`` on the first line, then each row as fixed-width hex (bit j = column j)."""
    width = max(1, (n + 3) // 4)
    return "\n".join([str(n)] + [format(r, f"0{width}x") for r in rows]) + "\n"


def _hex_to_rows(text: str) -> tuple[int, list[int]]:
    lines = text.split()
    n = int(lines[0])
    rows = [int(line, 16) for line in lines[1:]]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, found {len(rows)}")
    return n, rows
