"""Deciding the power-cograph property, by brute force and by criteria.

Two independent routes produce a ``Verdict``:

* ``pcg_bruteforce`` builds the power graph restricted to elements whose
  order has at most two prime factors and runs cograph recognition on it;
* the criterion route decides from parameters (family formulas and
  niceness of the relevant integers) or from element-level tests that never
  look at the power graph (the element-pair search and the 4-6 test).
"""

from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .cograph import Cotree, P4Witness, decompose
from .groups import FiniteGroup, GroupSpec, build_group, expected_order, parse_spec
from .groups.core import DEFAULT_CAP
from .numtheory import (
    DEFAULT_BUDGET,
    NEITHER,
    UNKNOWN,
    NicenessClass,
    classify_nice,
    is_prime,
    is_prime_power,
    multiplicative_order_mod,
    prime_factors,
    trial_factor,
)
from .powergraph import enhanced_power_graph, gk_graph, p2_restriction, power_graph
from .simple_table import TABLE, table_reason

IS, NOT, UNKNOWN_TAG = "IsCograph", "NotCograph", "Unknown"
BRUTE, CRITERION = "brute", "criterion"


@dataclass(frozen=True)
class PairWitness:
    """Elements g, h with o(g) = p*r, o(h) = p*q, p != q and g^r = h^q."""

    g: int
    h: int
    p: int
    q: int
    r: int


@dataclass(frozen=True)
class Verdict:
    tag: str
    route: str
    evidence: object = None
    reason: str = ""

    @property
    def is_cograph(self) -> bool | None:
        if self.tag == UNKNOWN_TAG:
            return None
        return self.tag == IS


# -- brute force ---------------------------------------------------------------


def pcg_bruteforce(G: FiniteGroup) -> Verdict:
    """Decompose the P2 restriction of P(G); a P4 comes back as element indices."""
    g = p2_restriction(G)
    if g.n == 0:
        return Verdict(IS, BRUTE, Cotree.leaf(0), "trivial group")
    out = decompose(g)
    if isinstance(out, Cotree):
        return Verdict(IS, BRUTE, out, f"cotree on {g.n} P2 vertices")
    labels = g.vertex_labels
    w = P4Witness(*(labels[v] for v in out.as_tuple()))
    return Verdict(NOT, BRUTE, w, "induced P4 in the power graph")


# -- element-level criteria ------------------------------------------------------


def is_eppo(G: FiniteGroup) -> bool:
    return all(is_prime_power(o) for o in G.orders if o > 1)


@dataclass(frozen=True)
class EppoReport:
    eppo: bool
    gk_edgeless: bool
    power_is_enhanced: bool
    pcg: bool | None = None

    @property
    def value(self) -> bool:
        return self.eppo


def eppo_equivalences(G: FiniteGroup) -> EppoReport:
    """Evaluate the three EPPO conditions; they must agree, and imply PCG."""
    a = is_eppo(G)
    b = gk_graph(G).edge_count() == 0
    c = power_graph(G).rows == enhanced_power_graph(G).rows
    if not a == b == c:
        raise AssertionError(f"{G.label}: EPPO conditions disagree (eppo={a}, gk={b}, enhanced={c})")
    pcg = None
    if a:
        pcg = pcg_bruteforce(G).tag == IS
        if not pcg:
            raise AssertionError(f"{G.label}: EPPO group whose power graph is not a cograph")
    return EppoReport(a, b, c, pcg)


def minimal_pair_search(G: FiniteGroup) -> PairWitness | None:
    """First (g, h) in index order with o(g) = pr, o(h) = pq, p != q, g^r = h^q,
    and g^p outside <h^p> when q = r."""
    orders = G.orders
    # h^q (an element of order p) -> [(h, q)] for h of order pq, p != q
    by_target: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for h, o in enumerate(orders):
        ps = prime_factors(o) if o > 1 else ()
        if len(ps) == 2 and ps[0] * ps[1] == o:
            for q in ps:
                by_target[G.power(h, q)].append((h, q))
    if not by_target:
        return None
    for g, o in enumerate(orders):
        if o == 1:
            continue
        fac = trial_factor(o)
        if sum(e for _, e in fac) != 2:
            continue
        splits = [(fac[0][0], fac[0][0])] if len(fac) == 1 else [(fac[0][0], fac[1][0]), (fac[1][0], fac[0][0])]
        best = None
        for p, r in splits:
            target = G.power(g, r)
            for h, q in by_target.get(target, ()):
                if best is not None and h >= best.h:
                    break
                if q == r and G.power(g, p) in G.cycles[G.power(h, p)]:
                    continue
                best = PairWitness(g, h, p, q, r)
                break
        if best is not None:
            return best
    return None


def _slow_power(G: FiniteGroup, x: int, k: int) -> int:
    y = 0
    for _ in range(k):
        y = G.mul(y, x)
    return y


def _slow_order(G: FiniteGroup, x: int) -> int:
    y, k = x, 1
    while y != 0:
        y = G.mul(y, x)
        k += 1
    return k


def verify_pair_witness(G: FiniteGroup, w: PairWitness) -> bool:
    """Re-check a pair witness by repeated multiplication only."""
    if not (is_prime(w.p) and is_prime(w.q) and is_prime(w.r)) or w.p == w.q:
        return False
    if _slow_order(G, w.g) != w.p * w.r or _slow_order(G, w.h) != w.p * w.q:
        return False
    if _slow_power(G, w.g, w.r) != _slow_power(G, w.h, w.q):
        return False
    if w.q == w.r:
        gp = _slow_power(G, w.g, w.p)
        hp = _slow_power(G, w.h, w.p)
        y = hp
        while True:
            if y == gp:
                return False
            if y == 0:
                break
            y = G.mul(y, hp)
    return True


def four_six_witness(G: FiniteGroup) -> tuple[int, int] | None:
    """(a, b) with o(a) = 4, o(b) = 6 and a^2 = b^3, or None."""
    squares: dict[int, int] = {}
    for a, o in enumerate(G.orders):
        if o == 4:
            squares.setdefault(G.power(a, 2), a)
    if not squares:
        return None
    for b, o in enumerate(G.orders):
        if o != 6:
            continue
        c = G.power(b, 3)
        for s, a in squares.items():
            if G.are_conjugate(c, s):
                # conjugate b so that its cube is exactly a^2
                for t in range(G.order):
                    if G.mul(G.mul(t, c), G.inverse(t)) == s:
                        return a, G.mul(G.mul(t, b), G.inverse(t))
    return None


def four_six_test(G: FiniteGroup) -> bool:
    """Elements of orders 4 and 6 whose square and cube are conjugate exist."""
    return four_six_witness(G) is not None


def classify_nilpotent(G: FiniteGroup) -> Verdict:
    """Nilpotent G is PCG iff |G| is a prime power or G is cyclic of order pq."""
    if not G.is_nilpotent():
        raise ValueError(f"{G.label} is not nilpotent")
    n = G.order
    if n == 1 or is_prime_power(n):
        return Verdict(IS, CRITERION, reason=f"order {n} is a prime power" if n > 1 else "trivial group")
    fac = trial_factor(n)
    if len(fac) == 2 and fac[0][1] == fac[1][1] == 1:
        full = G.orders.index(n) if n in G.orders else None
        if full is not None:
            return Verdict(IS, CRITERION, reason=f"cyclic of order {n}, generated by element {full}")
        return Verdict(NOT, CRITERION, reason=f"order {n} = pq but no element of order {n}")
    return Verdict(NOT, CRITERION, reason=f"nilpotent of order {n}, neither a prime power nor pq")


# -- parameter-level criteria ----------------------------------------------------


def _combine(classes: Iterable[NicenessClass]) -> str:
    classes = list(classes)
    if any(c.tag == NEITHER for c in classes):
        return NOT
    if any(c.tag == UNKNOWN for c in classes):
        return UNKNOWN_TAG
    return IS


def _describe(classes: Iterable[NicenessClass]) -> str:
    return ", ".join(f"{c.n}: {c}" for c in classes)


def _nice_verdict(numbers: Iterable[int], budget: int, context: str) -> Verdict:
    # 1 contributes no cyclic subgroup, so it places no condition
    classes = tuple(classify_nice(m, budget) for m in numbers if m > 1)
    tag = _combine(classes)
    return Verdict(tag, CRITERION, classes, f"{context}; {_describe(classes)}" if classes else context)


def family_numbers(family: str, param) -> list[int]:
    """The integers whose niceness decides a family member, in display order."""
    if family in ("cyclic", "dihedral"):
        return [param]
    if family == "psl2":
        q = param
        return [(q - 1) // 2, (q + 1) // 2] if q % 2 else [q - 1, q + 1]
    if family == "psl2-char2":
        q = 2**param
        return [q - 1, q + 1]
    if family == "suzuki":
        q, s = 2 ** (2 * param + 1), 2 ** (param + 1)
        return [q - 1, q + s + 1, q - s + 1]
    if family == "sd":
        return [param[1]]
    return []


def _prime_power_or_none(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    fac = trial_factor(q)
    return fac[0] if len(fac) == 1 else None


@dataclass(frozen=True)
class Shape:
    """What the direct-product criterion needs to know about a factor."""

    order: int
    cyclic: bool
    frob: tuple[int, int, int] | None = None  # (p, q, m): C_p by C_{q^m}, faithful


def spec_shape(spec: GroupSpec) -> Shape:
    k, a = spec.kind, spec.args
    if k == "cyclic":
        return Shape(a[0], True)
    if k == "dihedral":
        m = a[0]
        if m <= 2:
            return Shape(2 * m, m == 1)
        return Shape(2 * m, False, (m, 2, 1) if is_prime(m) else None)
    if k == "sym":
        n = a[0]
        order = math.factorial(n)
        return Shape(order, n <= 2, (3, 2, 1) if n == 3 else None)
    if k == "alt":
        n = a[0]
        return Shape(max(1, math.factorial(n) // 2), n <= 3)
    if k == "sd":
        p, n, kk = a
        pp = _prime_power_or_none(n)
        if pp is not None and multiplicative_order_mod(kk, p) == n:
            return Shape(p * n, False, (p, pp[0], pp[1]))
        return Shape(p * n, False)
    if k == "psl2" and a[0] == 2:
        return Shape(6, False, (3, 2, 1))
    if k == "psl2" and a[0] == 3:
        return Shape(12, False)
    if k == "dp":
        s, t = spec_shape(a[0]), spec_shape(a[1])
        if s.order == 1:
            return t
        if t.order == 1:
            return s
        return Shape(s.order * t.order, s.cyclic and t.cyclic and math.gcd(s.order, t.order) == 1)
    return Shape(expected_order(spec), False)


def classify_direct_product(left: GroupSpec, right: GroupSpec, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Direct products: same-prime orders, two distinct prime cyclics, or C_q
    times a faithful C_p by C_{q^m} with q^m dividing p - 1."""
    s, t = spec_shape(left), spec_shape(right)
    if s.order == 1:
        return criterion_verdict(right, budget)
    if t.order == 1:
        return criterion_verdict(left, budget)
    ps, pt = prime_factors(s.order), prime_factors(t.order)
    if len(ps) == 1 and ps == pt:
        return Verdict(IS, CRITERION, reason=f"orders {s.order} and {t.order} are powers of {ps[0]}")
    if s.cyclic and t.cyclic and is_prime(s.order) and is_prime(t.order) and s.order != t.order:
        return Verdict(IS, CRITERION, reason=f"cyclic of distinct prime orders {s.order}, {t.order}")
    for c, f in ((s, t), (t, s)):
        if c.cyclic and is_prime(c.order) and f.frob is not None:
            p, q, m = f.frob
            if q == c.order and (p - 1) % q**m == 0:
                return Verdict(
                    IS, CRITERION,
                    reason=f"C{q} times C{p} by C{q**m} acting faithfully, {q**m} | {p - 1}",
                )
    return Verdict(NOT, CRITERION, reason=f"factors of orders {s.order}, {t.order} fit none of the three product cases")


FAMILIES = ("cyclic", "dihedral", "sym", "alt", "sd", "dp", "psl2", "psl2-char2", "suzuki", "psl3") + tuple(TABLE)


def classify_family(family: str, params, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Verdict for a family member computed from its parameters alone."""
    if family == "cyclic":
        n = _positive(params, "n")
        if n == 1:
            return Verdict(IS, CRITERION, reason="trivial group")
        return _nice_verdict([n], budget, f"cyclic of order {n}")
    if family == "dihedral":
        m = _positive(params, "m")
        return _nice_verdict([m], budget, f"dihedral of order {2 * m}")
    if family == "sym":
        n = _positive(params, "n")
        return Verdict(IS if n <= 5 else NOT, CRITERION, reason=f"S{n}: PCG exactly for n <= 5")
    if family == "alt":
        n = _positive(params, "n")
        return Verdict(IS if n <= 6 else NOT, CRITERION, reason=f"A{n}: PCG exactly for n <= 6")
    if family == "sd":
        p, n, k = params
        if not is_prime(p) or n < 2 or (p - 1) % n or multiplicative_order_mod(k % p, p) != n:
            raise ValueError(f"sd({p},{n},{k}): need p prime, n | p-1, k of order n mod p")
        # Frobenius: maximal cyclic subgroups are C_p and the conjugates of
        # C_n, meeting pairwise trivially
        return _nice_verdict([p, n], budget, f"Frobenius group C{p} by C{n}")
    if family == "dp":
        left, right = (parse_spec(x) if isinstance(x, str) else x for x in params)
        return classify_direct_product(left, right, budget)
    if family == "psl2":
        q = params
        if _prime_power_or_none(q) is None or q < 4:
            raise ValueError(f"psl2 needs a prime power q >= 4, got {q}")
        return _nice_verdict(family_numbers("psl2", q), budget, f"PSL(2,{q})")
    if family == "psl2-char2":
        d = _positive(params, "d")
        v = _nice_verdict(family_numbers(family, d), budget, f"PSL(2,2^{d})")
        if d == 1:
            return Verdict(v.tag, v.route, v.evidence, v.reason + "; PSL(2,2) = S3 is not simple")
        return v
    if family == "suzuki":
        e = params
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"suzuki needs q = 2^(2e+1) with e >= 1, got e = {e}")
        return _nice_verdict(family_numbers(family, e), budget, f"Sz(2^{2 * e + 1})")
    if family == "psl3":
        q = params
        if _prime_power_or_none(q) is None:
            raise ValueError(f"psl3 needs a prime power q, got {q}")
        if q == 2:
            return Verdict(IS, CRITERION, reason="PSL(3,2) = PSL(2,7), with (7-1)/2 = 3 and (7+1)/2 = 4")
        if q == 4:
            return Verdict(IS, CRITERION, reason="PSL(3,4) is an EPPO group")
        return Verdict(NOT, CRITERION, reason=f"PSL(3,q) is PCG only for q in {{2, 4}}; q = {q}")
    if family in TABLE:
        return Verdict(NOT, CRITERION, reason=table_reason(family, params))
    raise ValueError(f"unknown family {family!r}")


def _positive(x, name: str) -> int:
    if not isinstance(x, int) or x < 1:
        raise ValueError(f"{name} must be a positive integer, got {x!r}")
    return x


# -- sweeps --------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyRow:
    param: object
    numbers: tuple[int, ...]
    classes: tuple[NicenessClass, ...]
    verdict: Verdict
    notes: tuple[str, ...] = field(default=())


def family_row(family: str, param, budget: int = DEFAULT_BUDGET) -> FamilyRow:
    v = classify_family(family, param, budget)
    classes = v.evidence if isinstance(v.evidence, tuple) else ()
    notes = ("not simple",) if family == "psl2-char2" and param == 1 else ()
    return FamilyRow(param, tuple(family_numbers(family, param)), classes, v, notes)


def _row_job(args):
    return family_row(*args)


def family_sweep(family: str, params: Iterable, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[FamilyRow]:
    """``classify_family`` over ``params``, in order; ``jobs`` > 1 uses worker processes."""
    params = list(params)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    tasks = [(family, x, budget) for x in params]
    if jobs <= 1 or len(tasks) <= 1:
        return [_row_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_job, tasks))


# -- dispatch from a group spec --------------------------------------------------


def _element_pair_verdict(spec: GroupSpec, cap: int) -> Verdict:
    G = build_group(spec, cap)
    w = minimal_pair_search(G)
    if w is None:
        return Verdict(IS, CRITERION, reason="no element pair of the forbidden shape")
    return Verdict(NOT, CRITERION, w, "element pair g^r = h^q of the forbidden shape")


def criterion_verdict(spec: GroupSpec | str, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP) -> Verdict:
    """Criterion route for any group spec."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, a = spec.kind, spec.args
    if k in ("cyclic", "dihedral", "sym", "alt"):
        return classify_family(k, a[0], budget)
    if k == "sd":
        return classify_family("sd", a, budget)
    if k == "dp":
        return classify_direct_product(a[0], a[1], budget)
    if k == "heis3":
        return Verdict(IS, CRITERION, reason="order 27 is a prime power")
    if k == "m11":
        G = build_group(spec, cap)
        w = four_six_witness(G)
        if w is None:
            return Verdict(UNKNOWN_TAG, CRITERION, reason="4-6 test inconclusive")
        return Verdict(NOT, CRITERION, w, "4-6 test: a^2 = b^3 with o(a) = 4, o(b) = 6")
    if k == "psl2":
        q = a[0]
        if q < 4:
            return _element_pair_verdict(spec, cap)
        return classify_family("psl2", q, budget)
    if k == "psl3":
        return classify_family("psl3", a[0], budget)
    if k == "sl3":
        q = a[0]
        if q == 2:
            return Verdict(IS, CRITERION, reason="SL(3,2) = PSL(3,2)")
        if q == 4:
            return _element_pair_verdict(spec, cap)
        if (q - 1) % 3:
            return Verdict(NOT, CRITERION, reason=f"SL(3,{q}) = PSL(3,{q}), which is PCG only for q in {{2, 4}}")
        return Verdict(
            NOT, CRITERION,
            reason=f"diagonal torus C{q - 1} x C{q - 1} is abelian, non-cyclic, and not of prime-power order",
        )
    if k == "heis3_c2":
        return _element_pair_verdict(spec, cap)
    raise ValueError(f"no criterion for {spec}")
