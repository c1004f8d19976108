import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import NaiveGF, oracle_is_prime
from powercograph.finite_field import field_arith, field_build, field_for_order, is_irreducible

FIELDS = [(p, k) for p in range(2, 17) if oracle_is_prime(p) for k in range(1, 9) if p**k <= 256]


def test_small_fields():
    assert field_build(2, 1).modulus == (0, 1)
    assert field_build(3, 1).modulus == (0, 1) and len(field_build(3, 1).elements()) == 3
    assert field_build(2, 2).modulus == (1, 1, 1)


def test_gf4_examples():
    F = field_build(2, 2)
    x = F.x
    assert F.mul(x, x) == F.add(x, 1)
    assert F.multiplicative_order(x) == 3
    assert field_arith(F, "mul", x, x) == 3


def test_gf5_inverse():
    F = field_build(5)
    assert field_arith(F, "inv", 2) == 3
    with pytest.raises(ZeroDivisionError):
        field_arith(F, "inv", 0)


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        field_build(4, 1)
    with pytest.raises(ValueError):
        field_build(2, 17)
    with pytest.raises(ValueError):
        field_for_order(12)


@pytest.mark.parametrize("p,k", FIELDS)
def test_modulus_is_least_irreducible(p, k):
    F = field_build(p, k)
    mod = list(F.modulus)
    assert len(mod) == k + 1 and mod[-1] == 1
    assert is_irreducible(mod, p)
    if k > 1:
        # every smaller monic polynomial of degree k (low -> high, compared high first) is reducible
        target = tuple(reversed(mod))
        for n in range(p**k):
            cs = [(n // p**i) % p for i in range(k)] + [1]
            if tuple(reversed(cs)) < target:
                assert not _naive_irreducible(cs, p), cs


def _naive_irreducible(poly, p):
    """No monic factor of degree 1..k/2, by trial division over all candidates."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for n in range(p**d):
            div = [(n // p**i) % p for i in range(d)] + [1]
            rem = list(poly)
            for s in range(len(rem) - 1, d - 1, -1):
                c = rem[s]
                if c:
                    for i, m in enumerate(div):
                        rem[s - d + i] = (rem[s - d + i] - c * m) % p
            if not any(rem[:d]):
                return False
    return True


@pytest.mark.parametrize("p,k", FIELDS)
def test_arithmetic_matches_schoolbook(p, k):
    F = field_build(p, k)
    N = NaiveGF(p, F.modulus)
    q = p**k
    step = max(1, q // 23)
    for a in range(0, q, step):
        for b in range(0, q, max(1, step // 2)):
            assert F.add(a, b) == N.add(a, b)
            assert F.mul(a, b) == N.mul(a, b)


@pytest.mark.parametrize("p,k", FIELDS)
def test_orders_divide_group_order(p, k):
    F = field_build(p, k)
    q = p**k
    seen = set()
    for a in range(1, q):
        o = F.multiplicative_order(a)
        assert (q - 1) % o == 0
        assert F.pow(a, o) == 1
        seen.add(o)
    assert q - 1 in seen
    assert F.multiplicative_order(1) == 1
    g = F.primitive_element()
    assert F.multiplicative_order(g) == q - 1


def test_gf9_generator_has_order_8():
    F = field_build(3, 2)
    gens = [a for a in range(1, 9) if len({F.pow(a, t) for t in range(1, 9)}) == 8]
    assert gens and all(F.multiplicative_order(a) == 8 for a in gens)


def test_large_field_uses_polynomial_path():
    F = field_for_order(2**16)
    assert not F.tabulated
    a, b = 12345, 54321
    assert F.mul(F.mul(a, b), F.inv(b)) == a
    N = NaiveGF(2, F.modulus)
    assert F.mul(a, b) == N.mul(a, b)


@st.composite
def field_and_triple(draw):
    p, k = draw(st.sampled_from(FIELDS))
    q = p**k
    a, b, c = (draw(st.integers(0, q - 1)) for _ in range(3))
    return field_build(p, k), a, b, c


@given(field_and_triple())
@settings(max_examples=1500, deadline=None)
def test_field_axioms(args):
    F, a, b, c = args
    assert F.add(a, 0) == a and F.mul(a, 1) == a
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert field_arith(F, "pow", a, -1) == F.inv(a)
