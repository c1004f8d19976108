import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import oracle_factor, oracle_is_prime, oracle_nice_tag, oracle_totient
from powercograph.numtheory import (
    NEITHER,
    PRIME_POWER,
    SMALL_PRIMES,
    TWO_DISTINCT,
    UNKNOWN,
    classify_nice,
    factor,
    is_prime,
    iroot,
    perfect_power,
    pollard_brent,
    totient,
)


@pytest.mark.parametrize("n,want", [(0, False), (1, False), (2, True), (561, False), (2**31 - 1, True),
                                    (2**61 - 1, True), (2**67 - 1, False), (3215031751, False)])
def test_is_prime_examples(n, want):
    assert is_prime(n) is want


def test_is_prime_matches_trial_division_below_20000():
    for n in range(20000):
        assert is_prime(n) == oracle_is_prime(n), n


def test_is_prime_above_deterministic_range():
    # Mersenne primes and a product of two of them, all beyond the fixed witness set
    assert is_prime(2**89 - 1)
    assert is_prime(2**127 - 1)
    assert not is_prime((2**89 - 1) * (2**107 - 1))


@pytest.mark.parametrize("n,want", [(8, (2, 3)), (36, (6, 2)), (12, None), (2**64, (2, 64)), (3**40 * 5**40, (15, 40))])
def test_perfect_power_examples(n, want):
    assert perfect_power(n) == want


@given(st.integers(2, 10**30))
def test_perfect_power_exact(n):
    pp = perfect_power(n)
    if pp is None:
        for k in range(2, n.bit_length() + 1):
            b = iroot(n, k)
            assert b**k != n and (b + 1) ** k != n
    else:
        b, k = pp
        assert b**k == n
        # k is maximal, so the base is not itself a perfect power
        assert perfect_power(b) is None


def test_factor_examples():
    assert factor(1).factors == () and factor(1).complete
    assert factor(60).factors == ((2, 2), (3, 1), (5, 1))
    f = factor(2**101 - 1)
    assert f.complete
    assert f.factors == ((7432339208719, 1), (341117531003194129, 1))


@given(st.integers(1, 10**18))
@settings(max_examples=200, deadline=None)
def test_factor_reassembles(n):
    f = factor(n)
    assert f.value() == n
    ps = [p for p, _ in f.factors]
    assert ps == sorted(set(ps))
    assert all(is_prime(p) for p in ps)
    if f.complete:
        assert f.cofactor == 1


def test_factor_budget_exhaustion_is_encoded():
    n = 1000003 * (2**89 - 1)
    f = factor(n, budget=10)
    assert not f.complete
    assert f.value() == n
    assert classify_nice(n, budget=10).tag == UNKNOWN
    assert classify_nice(n).tag == TWO_DISTINCT


def test_pollard_brent_splits_semiprime():
    n = 1000003 * 1000033
    d = pollard_brent(n, 10**6)
    assert d in (1000003, 1000033)


@pytest.mark.parametrize("n,tag,witness", [
    (1, NEITHER, ()), (8, PRIME_POWER, (2, 3)), (15, TWO_DISTINCT, (3, 5)), (12, NEITHER, None),
    (63, NEITHER, None), (2**61 - 1, PRIME_POWER, (2**61 - 1, 1)), (7**30, PRIME_POWER, (7, 30)),
])
def test_classify_nice_examples(n, tag, witness):
    c = classify_nice(n)
    assert c.tag == tag
    if witness is not None:
        assert c.witness == witness


def test_classify_nice_matches_oracle_to_50000():
    # the full 10^6 sweep lives in the acceptance suite
    for n in range(2, 50001):
        assert classify_nice(n).tag == oracle_nice_tag(n), n


def test_nice_products_of_small_primes():
    ps = [p for p in SMALL_PRIMES if p <= 1000]
    for i, p in enumerate(ps):
        for q in ps[i + 1:]:
            assert classify_nice(p * q).tag == TWO_DISTINCT
            assert classify_nice(p * p * q).tag == NEITHER


@given(st.integers(1, 10**36))
@settings(max_examples=300, deadline=None)
def test_classify_nice_witness_invariants(n):
    c = classify_nice(n)
    if c.tag == PRIME_POWER:
        p, k = c.witness
        assert is_prime(p) and k >= 1 and p**k == n
    elif c.tag == TWO_DISTINCT:
        p, q = c.witness
        assert p < q and is_prime(p) and is_prime(q) and p * q == n
    elif c.tag == NEITHER and c.witness:
        a, b = c.witness
        assert a * b == n and a > 1 and b > 1
    if n < 10**12:
        assert c.tag == (oracle_nice_tag(n) if n > 1 else NEITHER)


@pytest.mark.parametrize("n,want", [(1, 1), (6, 2), (30, 8)])
def test_totient_examples(n, want):
    assert totient(n) == want


def test_totient_matches_count():
    for n in range(1, 400):
        assert totient(n) == oracle_totient(n)


def test_totient_large_argument():
    n = 999999937 * 2  # 999999937 is prime
    assert totient(n) == 999999936


def test_oracle_factor_sanity():
    assert oracle_factor(360) == {2: 3, 3: 2, 5: 1}
