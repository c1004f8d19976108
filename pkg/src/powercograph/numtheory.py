"""Primality, factorization and the prime-power / two-distinct-primes test.

Everything here works on plain Python ints, so arithmetic is exact at any
size.  Factorization is trial division followed by Pollard-Brent rho; when
rho runs out of its iteration budget the leftover part is reported as an
unfactored cofactor rather than raising.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

DEFAULT_BUDGET = 10_000_000
TRIAL_BOUND = 1000

# Deterministic Miller-Rabin: these twelve bases are enough for n < 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_RANDOM_ROUNDS = 64


def _small_primes(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


SMALL_PRIMES = _small_primes(TRIAL_BOUND)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, 64 seeded random rounds above."""
    if n < 2:
        return False
    for p in SMALL_PRIMES[:50]:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < SMALL_PRIMES[49] ** 2:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        bases = _MR_BASES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_MR_RANDOM_ROUNDS))
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    # Newton iteration from an upper bound.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_power(n: int) -> tuple[int, int] | None:
    """Return ``(b, k)`` with ``b**k == n`` and k maximal, or None."""
    if n < 2:
        raise ValueError("perfect_power needs n >= 2")
    for k in range(n.bit_length(), 1, -1):
        b = iroot(n, k)
        if b > 1 and b**k == n:
            return b, k
    return None


@dataclass(frozen=True)
class Factorization:
    """Prime factorization, possibly with an unfactored leftover.

    ``cofactor`` is 1 exactly when the factorization is complete; otherwise it
    is the product of the composite parts rho could not split in budget.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def pollard_brent(n: int, budget: int, seed: int = 1) -> int | None:
    """Find a nontrivial factor of composite odd ``n`` within ``budget`` steps.

    Brent's cycle detection with batched gcds; restarts with a new constant
    when a cycle collapses.  Returns None if the budget runs out.
    """
    if n % 2 == 0:
        return 2
    rng = random.Random(n * 1_000_003 + seed)
    spent = 0
    batch = 128
    while spent < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            spent += r
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                spent += min(batch, r - k)
                g = math.gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            # batch overshot; back up one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def _trial(n: int) -> tuple[dict[int, int], int]:
    found: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if 1 < n < TRIAL_BOUND**2:
        found[n] = found.get(n, 0) + 1
        n = 1
    return found, n


def factor(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Factor ``n >= 1`` by trial division, then Pollard-Brent per composite."""
    if n < 1:
        raise ValueError("factor needs n >= 1")
    found, rest = _trial(n)
    cofactor = 1
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        pp = perfect_power(m)
        if pp is not None:
            stack.extend([pp[0]] * pp[1])
            continue
        d = pollard_brent(m, budget)
        if d is None:
            cofactor *= m
        else:
            stack.extend((d, m // d))
    return Factorization(tuple(sorted(found.items())), cofactor)


PRIME_POWER = "PrimePower"
TWO_DISTINCT = "TwoDistinctPrimes"
NEITHER = "Neither"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class NicenessClass:
    """Classification of n as prime power, product of two distinct primes, or neither.

    ``witness`` is (p, k) for PrimePower, (p, q) for TwoDistinctPrimes, a
    nontrivial split (a, b) for Neither when one is known, and the
    unsplit composite for Unknown.
    """

    n: int
    tag: str
    witness: tuple[int, ...] = field(default=())

    @property
    def nice(self) -> bool | None:
        if self.tag == UNKNOWN:
            return None
        return self.tag in (PRIME_POWER, TWO_DISTINCT)

    def __str__(self) -> str:
        if self.tag == PRIME_POWER:
            p, k = self.witness
            return f"PrimePower({p},{k})"
        if self.tag == TWO_DISTINCT:
            return "TwoDistinctPrimes({},{})".format(*self.witness)
        if self.tag == UNKNOWN:
            return "Unknown"
        return "Neither"


def _classify_split(n: int, a: int, b: int) -> NicenessClass:
    a, b = sorted((a, b))
    if a != b and is_prime(a) and is_prime(b):
        return NicenessClass(n, TWO_DISTINCT, (a, b))
    return NicenessClass(n, NEITHER, (a, b))


def classify_nice(n: int, budget: int = DEFAULT_BUDGET) -> NicenessClass:
    """Decide whether n is a prime power or a product of two distinct primes."""
    if n < 1:
        raise ValueError("classify_nice needs n >= 1")
    if n == 1:
        return NicenessClass(1, NEITHER)
    m = n
    small: list[tuple[int, int]] = []
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            small.append((p, e))
            if len(small) == 2 or e >= 2:
                break
    if small:
        p, e = small[0]
        if len(small) == 2:
            # two distinct small primes already
            q, f = small[1]
            if e == f == 1 and m == 1:
                return NicenessClass(n, TWO_DISTINCT, (p, q))
            return NicenessClass(n, NEITHER, (p, n // p))
        if m == 1:
            return NicenessClass(n, PRIME_POWER, (p, e))
        if e >= 2:
            # p^e * m with m coprime to p: either m is a power of p (no) or Neither
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                return NicenessClass(n, PRIME_POWER, (p, e))
            return NicenessClass(n, NEITHER, (p**e, m))
        # exactly p^1 times m with m free of primes below p
        return _classify_split(n, p, m)
    # no prime factor below TRIAL_BOUND (or n itself is small and prime)
    if is_prime(n):
        return NicenessClass(n, PRIME_POWER, (n, 1))
    pp = perfect_power(n)
    if pp is not None:
        b, k = pp
        if is_prime(b):
            return NicenessClass(n, PRIME_POWER, (b, k))
        return NicenessClass(n, NEITHER, (b, n // b))
    d = pollard_brent(n, budget)
    if d is None:
        return NicenessClass(n, UNKNOWN, (n,))
    return _classify_split(n, d, n // d)


def trial_factor(n: int) -> list[tuple[int, int]]:
    """Complete factorization by trial division; meant for n up to ~1e12."""
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    d, step = 5, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=4096)
def totient(n: int) -> int:
    """Euler's phi via trial-division factorization."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    out = n
    for p, _ in trial_factor(n):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=4096)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of a small n."""
    return tuple(p for p, _ in trial_factor(n))


@lru_cache(maxsize=4096)
def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    return sum(e for _, e in trial_factor(n))


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def multiplicative_order_mod(k: int, p: int) -> int:
    """Least t >= 1 with k**t == 1 (mod p); requires gcd(k, p) == 1."""
    k %= p
    if p == 1:
        return 1
    if math.gcd(k, p) != 1:
        raise ValueError(f"{k} is not a unit mod {p}")
    t, x = 1, k
    while x != 1:
        x = x * k % p
        t += 1
    return t
