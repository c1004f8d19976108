"""Fixed verdicts for simple-group families that are never power-cographs.

These groups are not built element by element; each row records the
family, how its parameter is checked, and the subgroup argument that rules
it out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .numtheory import factor

SPORADIC = (
    "M11", "M12", "M22", "M23", "M24",
    "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'",
    "HS", "McL", "He", "Ru", "Suz", "O'N", "HN", "Ly", "Th", "B", "M",
)

# sporadic groups without an M11 subgroup, with the non-PCG subgroup used instead
_SPORADIC_WITNESS = {
    "J1": "contains D6 x D10, a direct product outside the three PCG cases",
    "M22": "contains A7",
    "J2": "contains A4 x A5, a direct product outside the three PCG cases",
    "J3": "contains C3 x A6, a direct product outside the three PCG cases",
    "He": "contains S7",
    "Ru": "contains A8",
    "Th": "contains PSL(2,19):2 = PGL(2,19), which has cyclic subgroups of order 18",
}


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    fac = factor(q)
    return fac.factors[0] if len(fac.factors) == 1 and fac.complete else None


def _q_at_least(bound: int, char: int | None = None) -> Callable[[int], str | None]:
    def check(q: int) -> str | None:
        pp = _prime_power(q)
        if pp is None:
            return f"{q} is not a prime power"
        if char is not None and pp[0] != char:
            return f"{q} is not a power of {char}"
        if q < bound:
            return f"q must be at least {bound} for a simple group"
        return None

    return check


def _odd_exponent(base: int) -> Callable[[int], str | None]:
    def check(q: int) -> str | None:
        pp = _prime_power(q)
        if pp is None or pp[0] != base or pp[1] % 2 == 0 or pp[1] < 3:
            return f"q must be {base}^(2e+1) with e >= 1"
        return None

    return check


def _sporadic(name) -> str | None:
    return None if name in SPORADIC else f"unknown sporadic group {name!r}"


@dataclass(frozen=True)
class TableRow:
    family: str
    title: str
    check: Callable
    reason: str


TABLE = {
    row.family: row
    for row in [
        TableRow(
            "psu3", "PSU(3,q), q > 2", _q_at_least(3),
            "q odd: a cyclic subgroup of order (q^2-1)/gcd(q+1,3) forces q in {3,5}; "
            "PSU(3,3) has elements of order 12 and PSU(3,5) contains A7. "
            "q even >= 4: commuting elements of orders 2 and 2p give an induced P4; "
            "PSU(3,8) fails the 4-6 test",
        ),
        TableRow(
            "ree", "Ree group 2G2(q), q = 3^(2e+1)", _odd_exponent(3),
            "involution centraliser C2 x PSL(2,q) contains C2 x C((q+-1)/2); "
            "(q+-1)/2 have opposite parity and neither can be a power of 2",
        ),
        TableRow(
            "psp4", "PSp(4,q)", _q_at_least(3),
            "contains C(q-1) x C(q+1) (mod 2 for q odd); only q in {3,4} survive, "
            "PSp(4,3) has elements of order 12 and PSp(4,4) fails the 4-6 test",
        ),
        TableRow(
            "g2", "G2(q)", _q_at_least(3),
            "contains PSL(3,q) or PSU(3,q); G2(2)' is excluded through PSU(3,3)",
        ),
        TableRow("psu4", "2A3(q) = PSU(4,q)", _q_at_least(2), "contains PSp(4,q); PSU(4,2) = PSp(4,3)"),
        TableRow("psu5", "2A4(q) = PSU(5,q)", _q_at_least(2), "contains PSU(4,q)"),
        TableRow("2f4", "2F4(q), q = 2^(2e+1)", _odd_exponent(2), "contains 2F4(2), which fails the 4-6 test"),
        TableRow("3d4", "3D4(q)", _q_at_least(2), "contains G2(q)"),
        TableRow(
            "higher-rank", "Lie type of rank >= 3", _q_at_least(2),
            "a Levi factor gives a quotient of SL(3,q) by scalars, so q in {2,4}; "
            "PSL(4,2) = A8, PSp(6,2) fails the 4-6 test, and the q = 4 groups contain these",
        ),
        TableRow(
            "sporadic", "sporadic simple group", _sporadic,
            "M11 fails the 4-6 test and embeds in every other sporadic group "
            "except J1, M22, J2, J3, He, Ru, Th, which contain other non-PCG subgroups",
        ),
    ]
}


def table_reason(family: str, param) -> str:
    """Validated justification for a table family; raises ValueError on bad input."""
    row = TABLE.get(family)
    if row is None:
        raise ValueError(f"no table row for family {family!r}")
    problem = row.check(param)
    if problem:
        raise ValueError(f"{family}: {problem}")
    if family == "sporadic" and param in _SPORADIC_WITNESS:
        return f"{param} {_SPORADIC_WITNESS[param]}"
    return row.reason
