"""Cograph recognition with certificates.

``decompose`` splits a graph recursively into components (a Union node) or
co-components (a Join node).  When a vertex set is connected in both the
graph and its complement it contains an induced P4, and the least one
(lexicographically by vertex index) is returned instead of a cotree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph
from .groups.core import iter_bits

LEAF, UNION, JOIN = "leaf", "U", "J"


@dataclass(frozen=True)
class Cotree:
    kind: str
    children: tuple["Cotree", ...] = ()
    vertex: int | None = None

    @classmethod
    def leaf(cls, v: int) -> "Cotree":
        return cls(LEAF, (), v)

    def leaves(self) -> list[int]:
        out = []
        stack = [self]
        while stack:
            t = stack.pop()
            if t.kind == LEAF:
                out.append(t.vertex)
            else:
                stack.extend(reversed(t.children))
        return out

    def __str__(self) -> str:
        return cotree_text(self)


@dataclass(frozen=True)
class P4Witness:
    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_valid(self, g: Graph) -> bool:
        """Exactly ab, bc, cd among the six pairs."""
        vs = self.as_tuple()
        if len(set(vs)) != 4:
            return False
        want = {(0, 1), (1, 2), (2, 3)}
        for i in range(4):
            for j in range(i + 1, 4):
                if g.has_edge(vs[i], vs[j]) != ((i, j) in want):
                    return False
        return True


def _find_p4_in(g: Graph, mask: int) -> P4Witness | None:
    rows = g.rows
    for a in iter_bits(mask):
        na = rows[a] & mask
        abit = 1 << a
        for b in iter_bits(na):
            nb = rows[b] & mask
            far_from_a = mask & ~na & ~abit
            for c in iter_bits(nb & far_from_a):
                ds = rows[c] & far_from_a & ~nb & ~(1 << b)
                if ds:
                    return P4Witness(a, b, c, (ds & -ds).bit_length() - 1)
    return None


def find_p4(g: Graph) -> P4Witness | None:
    """Lexicographically least induced P4 (a, b, c, d), or None."""
    return _find_p4_in(g, g.all_mask)


def decompose(g: Graph) -> Cotree | P4Witness:
    """Cotree of ``g`` if it is a cograph, else an induced P4."""
    if g.n < 1:
        raise ValueError("decompose needs at least one vertex")
    # explicit stack of (vertex mask, result slots, slot index, parent kind)
    root: list = [None]
    work = [(g.all_mask, root, 0, None)]
    pending = []
    while work:
        mask, slots_out, idx, parent_kind = work.pop()
        if mask & (mask - 1) == 0:
            slots_out[idx] = Cotree.leaf(mask.bit_length() - 1)
            continue
        # a Union child is connected and a Join child co-connected, so each
        # side needs only the other test
        parts = g.components(mask) if parent_kind != UNION else [mask]
        kind = UNION
        if len(parts) == 1:
            parts = g.co_components(mask) if parent_kind != JOIN else [mask]
            kind = JOIN
            if len(parts) == 1:
                return _find_p4_in(g, mask)
        slots = [None] * len(parts)
        pending.append((slots_out, idx, kind, slots))
        for i in reversed(range(len(parts))):
            work.append((parts[i], slots, i, kind))
    for slots_out, idx, kind, slots in reversed(pending):
        slots_out[idx] = Cotree(kind, tuple(slots))
    return root[0]


def validate_cotree(t: Cotree) -> None:
    """Raise ValueError on arity or alternation violations."""
    stack = [(t, None)]
    while stack:
        node, parent_kind = stack.pop()
        if node.kind == LEAF:
            if node.children or node.vertex is None:
                raise ValueError("malformed leaf")
            continue
        if node.kind not in (UNION, JOIN):
            raise ValueError(f"unknown node kind {node.kind!r}")
        if len(node.children) < 2:
            raise ValueError("internal node with fewer than two children")
        if node.kind == parent_kind:
            raise ValueError("Union/Join labels must alternate")
        stack.extend((c, node.kind) for c in node.children)


def cotree_eval(t: Cotree) -> Graph:
    """Rebuild the graph a cotree describes."""
    validate_cotree(t)
    leaves = t.leaves()
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise ValueError("cotree leaves must be exactly 0..n-1")
    rows = [0] * n

    def walk(node: Cotree) -> int:
        if node.kind == LEAF:
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        total = 0
        for m in masks:
            total |= m
        if node.kind == JOIN:
            for m in masks:
                others = total & ~m
                for v in iter_bits(m):
                    rows[v] |= others
        return total

    walk(t)
    return Graph(n, rows)


def cotree_text(t: Cotree) -> str:
    """Nested text form: ``U(...)``, ``J(...)``, leaves as integers."""
    if t.kind == LEAF:
        return str(t.vertex)
    return t.kind + "(" + ",".join(cotree_text(c) for c in t.children) + ")"


_TOKEN = re.compile(r"\s*(U|J|\d+|\(|\)|,)")


def parse_cotree(text: str) -> Cotree:
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"bad cotree text {text!r}")
    pos = 0

    def node() -> Cotree:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok.isdigit():
            return Cotree.leaf(int(tok))
        if tok not in (UNION, JOIN) or tokens[pos] != "(":
            raise ValueError(f"unexpected token {tok!r}")
        pos += 1
        kids = [node()]
        while tokens[pos] == ",":
            pos += 1
            kids.append(node())
        if tokens[pos] != ")":
            raise ValueError("expected ')'")
        pos += 1
        return Cotree(tok, tuple(kids))

    try:
        out = node()
    except IndexError:
        raise ValueError(f"truncated cotree text {text!r}") from None
    if pos != len(tokens):
        raise ValueError("trailing tokens in cotree text")
    return out


def is_cograph(g: Graph) -> bool:
    return isinstance(decompose(g), Cotree)
