"""Arithmetic helpers, cross-checked against sympy and frozen values."""

import pytest
import sympy
from hypothesis import given, strategies as st

from covernum.numtheory import (
    MAX_VALUE,
    Factorization,
    crt_solve,
    divisors,
    factor,
    is_prime,
    mycielski,
    num_divisors,
    phi,
    sigma,
)

ns = st.integers(min_value=1, max_value=10**6)


@given(st.integers(min_value=2, max_value=10**5))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


@given(ns)
def test_factor_roundtrip(n):
    fact = factor(n)
    assert fact.value == n
    assert dict(fact.pairs) == sympy.factorint(n)


@given(ns)
def test_divisors_sigma_phi(n):
    divs = divisors(n)
    assert list(divs) == sympy.divisors(n)
    assert sigma(n) == sum(divs)
    assert phi(n) == sympy.totient(n)
    assert num_divisors(n) == len(divs)


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization(((4, 1),))  # not prime
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))  # not increasing
    with pytest.raises(ValueError):
        Factorization(((2, 0),))  # exponent < 1
    with pytest.raises(ValueError):
        Factorization(((2, 64),))  # beyond 64-bit


def test_mycielski_values():
    # f(n) = sum of a*(p-1) over n = prod p^a
    assert mycielski(12) == 2 * 1 + 1 * 2  # [DERIVED: 2^2*3]
    assert mycielski(210) == 1 + 2 + 4 + 6  # [DERIVED: 2*3*5*7]
    assert mycielski(1) == 0
    assert mycielski(2**10) == 10


def test_crt_examples():
    assert crt_solve([(1, 4), (3, 6)]) == (9, 12)  # [DERIVED]
    assert crt_solve([(0, 2), (1, 2)]) is None
    assert crt_solve([]) == (0, 1)
    assert crt_solve([(2, 3), (4, 5), (0, 7)]) == (14, 105)


@given(st.lists(st.tuples(st.integers(0, 10**4), st.integers(1, 10**4)),
                max_size=5))
def test_crt_agrees_with_direct_check(congruences):
    try:
        result = crt_solve(congruences)
    except OverflowError:
        return
    if result is None:
        # some pair must genuinely conflict
        assert any(
            (a1 - a2) % sympy.gcd(n1, n2) != 0
            for i, (a1, n1) in enumerate(congruences)
            for a2, n2 in congruences[i + 1:]
        )
    else:
        x, mod = result
        assert 0 <= x < mod
        assert all(x % n == a % n for a, n in congruences)


def test_crt_overflow_guard():
    big = sympy.prevprime(2**40)
    with pytest.raises(OverflowError):
        crt_solve([(0, big), (1, big - 2), (2, 2**31 - 1)])
    assert MAX_VALUE == 2**63 - 1
