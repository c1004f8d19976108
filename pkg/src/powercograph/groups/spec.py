"""The group-spec mini-language.

    SPEC := cyclic:N | dihedral:M | sym:N | alt:N | heis3 | heis3_c2:J | m11
          | psl2:Q | psl3:Q | sl3:Q | dp(SPEC,SPEC) | sd(P,N,K)

Parameters are decimal; whitespace is ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..numtheory import factor, is_prime, multiplicative_order_mod


class SpecError(ValueError):
    """Unparseable or invalid group spec; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} (at position {pos})")


Param = Union[int, "GroupSpec"]

# constructor name -> number of integer parameters after ':'
_COLON_KINDS = {
    "cyclic": 1,
    "dihedral": 1,
    "sym": 1,
    "alt": 1,
    "heis3_c2": 1,
    "psl2": 1,
    "psl3": 1,
    "sl3": 1,
}
_BARE_KINDS = {"heis3", "m11"}


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    args: tuple = ()

    def __str__(self) -> str:
        if self.kind in _BARE_KINDS:
            return self.kind
        if self.kind == "dp":
            return f"dp({self.args[0]},{self.args[1]})"
        if self.kind == "sd":
            return "sd({},{},{})".format(*self.args)
        return f"{self.kind}:{self.args[0]}"


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    fac = factor(q)
    if len(fac.factors) == 1 and fac.complete:
        return fac.factors[0]
    return None


def validate(spec: GroupSpec, pos: int | None = None) -> None:
    k, a = spec.kind, spec.args
    if k in ("cyclic", "dihedral", "sym", "alt") and a[0] < 1:
        raise SpecError(f"{k} needs a parameter >= 1", pos)
    if k in ("psl2", "psl3", "sl3"):
        pp = _prime_power(a[0])
        if pp is None:
            raise SpecError(f"{k}: {a[0]} is not a prime power", pos)
        if a[0] > 1 << 16:
            raise SpecError(f"{k}: field of size {a[0]} is too large", pos)
    if k == "heis3_c2":
        from .builders import heis3_involutions

        count = len(heis3_involutions())
        if not 0 <= a[0] < count:
            raise SpecError(f"heis3_c2 index must be in 0..{count - 1}", pos)
    if k == "sd":
        p, n, kk = a
        if not is_prime(p):
            raise SpecError(f"sd: {p} is not prime", pos)
        if n < 2 or (p - 1) % n:
            raise SpecError(f"sd: {n} must be >= 2 and divide {p - 1}", pos)
        if kk % p == 0:
            raise SpecError(f"sd: {kk} is not a unit mod {p}", pos)
        t = multiplicative_order_mod(kk, p)
        if t != n:
            raise SpecError(f"sd: {kk} has multiplicative order {t} mod {p}, not {n}", pos)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise SpecError(f"expected {ch!r}, got {got!r}", self.i)
        self.i += 1

    def name(self) -> tuple[str, int]:
        self.skip()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
            self.i += 1
        if start == self.i:
            raise SpecError("expected a constructor name", start)
        return self.text[start : self.i], start

    def number(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            raise SpecError("expected a decimal number", start)
        return int(self.text[start : self.i])

    def spec(self) -> GroupSpec:
        name, start = self.name()
        if name == "dp":
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            out = GroupSpec("dp", (left, right))
        elif name == "sd":
            self.expect("(")
            nums = [self.number()]
            for _ in range(2):
                self.expect(",")
                nums.append(self.number())
            self.expect(")")
            out = GroupSpec("sd", tuple(nums))
        elif name in _BARE_KINDS:
            out = GroupSpec(name)
        elif name in _COLON_KINDS:
            self.expect(":")
            out = GroupSpec(name, (self.number(),))
        else:
            raise SpecError(f"unknown constructor {name!r}", start)
        validate(out, start)
        return out


def parse_spec(text: str) -> GroupSpec:
    """Parse and validate a group spec; raises SpecError with a position."""
    p = _Parser(text)
    out = p.spec()
    if p.peek():
        raise SpecError(f"trailing input {p.text[p.i:]!r}", p.i)
    return out
