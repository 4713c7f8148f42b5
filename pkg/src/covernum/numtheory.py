"""Exact integer arithmetic: factorization, divisors, multiplicative
functions, the Mycielski function, and CRT solving.

Everything here is deterministic and works with plain Python integers;
inputs are restricted to 64-bit range, which is far beyond the scale at
which the covering-number search is feasible anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm

MAX_VALUE = 2**63 - 1


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-exponent representation of a positive integer.

    The empty tuple represents 1.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, a in self.pairs:
            if p <= last:
                raise ValueError(f"primes not strictly increasing: {self.pairs}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if a < 1:
                raise ValueError(f"exponent {a} < 1 for prime {p}")
            last = p
        if self.value > MAX_VALUE:
            raise ValueError("value exceeds 64-bit range")

    @property
    def value(self) -> int:
        n = 1
        for p, a in self.pairs:
            n *= p**a
        return n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.pairs)

    def num_divisors(self) -> int:
        d = 1
        for _, a in self.pairs:
            d *= a + 1
        return d

    def __iter__(self):
        return iter(self.pairs)


def factor(n: int) -> Factorization:
    """Factor n by trial division.  Requires 1 <= n <= 2**63 - 1."""
    if not 1 <= n <= MAX_VALUE:
        raise ValueError(f"n out of range: {n}")
    pairs = []
    m = n
    for p in range(2, isqrt(n) + 1):
        if p * p > m:
            break
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            pairs.append((p, a))
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order, starting with 1."""
    ds = [1]
    for p, a in factor(n):
        ds = [d * p**k for d in ds for k in range(a + 1)]
    return sorted(ds)


def sigma(n: int) -> int:
    """Sum of all positive divisors of n."""
    s = 1
    for p, a in factor(n):
        s *= (p ** (a + 1) - 1) // (p - 1)
    return s


def phi(n: int) -> int:
    """Euler's totient."""
    t = 1
    for p, a in factor(n):
        t *= p ** (a - 1) * (p - 1)
    return t


def num_divisors(n: int) -> int:
    return factor(n).num_divisors()


def mycielski(n: int) -> int:
    """Mycielski's function: sum of a*(p-1) over the factorization p^a.

    Lower-bounds minimal cover sizes via the Znam--Simpson inequality
    k >= 1 + mycielski(lcm of moduli).
    """
    return sum(a * (p - 1) for p, a in factor(n))


def crt_solve(
    congruences: list[tuple[int, int]],
) -> tuple[int, int] | None:
    """Solve a system of congruences x = a (mod m).

    Returns (residue, lcm-of-moduli) for a consistent system, None for an
    inconsistent one.  The empty system yields (0, 1).  Raises
    OverflowError if the lcm leaves 64-bit range.
    """
    a, m = 0, 1
    for b, n in congruences:
        if n < 1:
            raise ValueError(f"modulus {n} < 1")
        g = gcd(m, n)
        if (b - a) % g != 0:
            return None
        l = lcm(m, n)
        if l > MAX_VALUE:
            raise OverflowError("lcm exceeds 64-bit range")
        # a + m*t = b (mod n)  =>  t = (b-a)/g * inv(m/g) (mod n/g)
        t = ((b - a) // g * pow(m // g, -1, n // g)) % (n // g)
        a = (a + m * t) % l
        m = l
    return a, m
