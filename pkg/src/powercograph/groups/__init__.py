from .builders import build_group, expected_order, heis3_involutions
from .core import DEFAULT_CAP, CapExceeded, FiniteGroup, iter_bits
from .spec import GroupSpec, SpecError, parse_spec

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "FiniteGroup",
    "GroupSpec",
    "SpecError",
    "build_group",
    "expected_order",
    "heis3_involutions",
    "iter_bits",
    "parse_spec",
]
