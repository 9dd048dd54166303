import math

import pytest
from hypothesis import given, strategies as st

from designforge import arith


def test_perfect_square_examples():
    assert arith.is_perfect_square(0) == 0
    assert arith.is_perfect_square(961) == 31  # 4*3^5 - 4*3 + 1
    assert arith.is_perfect_square(962) is None


@given(st.integers(min_value=0, max_value=10**6))
def test_perfect_square_matches_isqrt(n):
    r = math.isqrt(n)
    expected = r if r * r == n else None
    assert arith.is_perfect_square(n) == expected


def test_factorize_examples():
    assert arith.factorize(12) == [(2, 2), (3, 1)]
    # |PSL2(7)| = 168, factored by hand: 2^3 * 3 * 7
    assert arith.factorize(168) == [(2, 3), (3, 1), (7, 1)]
    # |M11| = 7920 = 2^4 * 3^2 * 5 * 11
    assert arith.factorize(7920) == [(2, 4), (3, 2), (5, 1), (11, 1)]


@given(st.integers(min_value=2, max_value=10**9))
def test_factorize_reconstructs(n):
    fac = arith.factorize(n)
    prod = 1
    for p, e in fac:
        assert arith.is_prime(p)
        prod *= p**e
    assert prod == n
    assert [p for p, _ in fac] == sorted({p for p, _ in fac})


def test_prime_power_decompose():
    assert arith.prime_power_decompose(16) == arith.PrimePower(2, 4)
    assert arith.prime_power_decompose(15625) == arith.PrimePower(5, 6)
    assert arith.prime_power_decompose(12) is None
    assert arith.PrimePower(5, 6).value == 15625


def _squares_mod(p):
    return {x * x % p for x in range(1, p)}


def test_legendre_examples():
    # oracle: squares mod 11 = {1,3,4,5,9}
    assert _squares_mod(11) == {1, 3, 4, 5, 9}
    assert arith.legendre(5, 11) == 1
    assert arith.legendre(0, 7) == 0
    assert arith.legendre(2, 11) == -1


@given(st.integers(), st.integers(), st.sampled_from(arith.primes_upto(997)[1:]))
def test_legendre_multiplicative(a, b, p):
    assert arith.legendre(a * b, p) == arith.legendre(a, p) * arith.legendre(b, p)


@given(st.integers(min_value=-10**6, max_value=10**6), st.sampled_from(arith.primes_upto(997)[1:]))
def test_legendre_matches_square_enumeration(a, p):
    sq = _squares_mod(p)
    if a % p == 0:
        expected = 0
    else:
        expected = 1 if a % p in sq else -1
    assert arith.legendre(a, p) == expected


def test_p_part():
    assert arith.p_part(720, 2) == 16
    assert arith.p_part(720, 7) == 1
    assert arith.p_part(7920, 2) == 16  # |Aut(M11)| = 7920
    assert arith.odd_part(720) == 45


@given(st.integers(min_value=1, max_value=10**12), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_p_part_identity(n, p):
    np = arith.p_part(n, p)
    assert n % np == 0
    assert (n // np) % p != 0


def _dio_pairs(sols):
    return [(s.n, s.x) for s in sols]


def test_solve_dio_small_primes():
    assert _dio_pairs(arith.solve_dio(3)) == [(1, 1), (2, 5), (5, 31)]
    assert _dio_pairs(arith.solve_dio(5)) == [(1, 1), (2, 9), (7, 559)]
    assert _dio_pairs(arith.solve_dio(7)) == [(1, 1), (2, 13)]  # (2, 2p-1)


def test_solve_dio_oracle_window():
    # oracle: direct squareness scan, p <= 400 here (acceptance runs p <= 10^4)
    for p in arith.primes_upto(400)[1:]:
        expected = []
        for n in range(1, 51):
            m = 4 * p**n - 4 * p + 1
            r = math.isqrt(m)
            if r * r == m:
                expected.append((n, r))
        assert _dio_pairs(arith.solve_dio(p, 50)) == expected


def test_solve_dio_rejects_even():
    with pytest.raises(ValueError):
        arith.solve_dio(2)


def test_divisors():
    assert arith.divisors(1) == [1]
    assert arith.divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert arith.divisors(121) == [1, 11, 121]


@given(st.integers(min_value=1, max_value=20000))
def test_divisors_exact(n):
    assert arith.divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
