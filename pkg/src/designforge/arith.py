"""Exact integer number theory used by every feasibility screen.

Everything here works on Python ints (arbitrary precision); group orders
like |E8(q)| overflow any fixed width.  Hot callers that need vectorized
prefilters do their own numpy work and fall back to these exact routines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "PrimePower",
    "DioSolution",
    "is_perfect_square",
    "is_prime",
    "primes_upto",
    "factorize",
    "prime_power_decompose",
    "legendre",
    "p_part",
    "solve_dio",
    "divisors",
    "odd_part",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimePower:
    """A number written as p^d with p prime and d >= 1."""

    p: int
    d: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.d < 1:
            raise ValueError("exponent must be >= 1")

    @property
    def value(self) -> int:
        return self.p**self.d


@dataclass(frozen=True)
class DioSolution:
    """Solution (n, x) of x^2 = 4p^n - 4p + 1 for a fixed odd prime p."""

    n: int
    x: int


def is_perfect_square(n: int):
    """Return the integer square root of n if n is a perfect square, else None."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = math.isqrt(n)
    return r if r * r == n else None


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24, covers everything here)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return tuple(i for i in range(limit + 1) if sieve[i])


def primes_upto(limit: int) -> list:
    """Primes <= limit, ascending.  Cached for the handful of limits we use."""
    if limit < 2:
        return []
    return [p for p in _sieve(max(limit, 2)) if p <= limit]


def _pollard_rho(n: int) -> int:
    # Brent's variant; n is odd, composite, with no factor <= 10^6.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def factorize(n: int) -> list:
    """Prime factorization as [(p, e), ...] with primes strictly increasing.

    Trial division up to 10^6, then Pollard rho; inputs in this artifact
    are small or smooth.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    out = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < 10**6:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return sorted(out.items())


def prime_power_decompose(n: int):
    """Return PrimePower(p, d) with p^d = n, or None if n is not a prime power."""
    if n < 2:
        raise ValueError("n must be >= 2")
    fac = factorize(n)
    if len(fac) != 1:
        return None
    p, d = fac[0]
    return PrimePower(p, d)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def p_part(n: int, p: int) -> int:
    """The p-part n_p: largest power of p dividing n."""
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def odd_part(n: int) -> int:
    """n with all factors of 2 removed (the 2'-part)."""
    if n < 1:
        raise ValueError("n must be positive")
    while n % 2 == 0:
        n //= 2
    return n


def solve_dio(p: int, n_max: int = 50) -> list:
    """All (n, x) with x^2 = 4p^n - 4p + 1 and 1 <= n <= n_max, sorted by n.

    The underlying theorem gives a complete list for every odd prime; this
    verifies it on the finite window [1, n_max] rather than claiming
    completeness.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    pn = 1
    for n in range(1, n_max + 1):
        pn *= p
        x = is_perfect_square(4 * pn - 4 * p + 1)
        if x is not None:
            out.append(DioSolution(n, x))
    return out


def divisors(n: int) -> list:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [1]
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
