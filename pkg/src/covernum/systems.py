"""Residue classes, cover systems, and exact verification.

A cover system is a finite list of residue classes a (mod n).  Whether it
covers all integers is decided exactly by sieving one full period
[0, N) where N is the lcm of the moduli; sampling is never used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .numtheory import MAX_VALUE, phi

SIEVE_BOUND = 2**31


class SieveBoundExceeded(ValueError):
    """The lcm of the moduli is too large to verify by sieving."""


@dataclass(frozen=True, order=True)
class ResidueClass:
    """The residue class a (mod n); a is normalized into [0, n)."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus {self.n} < 1")
        object.__setattr__(self, "a", self.a % self.n)

    def contains(self, x: int) -> bool:
        return x % self.n == self.a

    def __str__(self):
        return f"{self.a}(mod {self.n})"


@dataclass(frozen=True)
class CoverSystem:
    """An ordered, finite list of residue classes."""

    classes: tuple[ResidueClass, ...]

    def __post_init__(self):
        if not self.classes:
            raise ValueError("a cover system needs at least one class")
        if self.modulus > MAX_VALUE:
            raise ValueError("lcm of moduli exceeds 64-bit range")

    @classmethod
    def of(cls, pairs) -> "CoverSystem":
        """Build from (a, n) pairs; residues may be arbitrary integers."""
        return cls(tuple(ResidueClass(n=n, a=a) for a, n in pairs))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def modulus(self) -> int:
        """lcm of all moduli, recomputed on demand."""
        return lcm(*(c.n for c in self.classes))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.n for c in self.classes)

    def canonical(self) -> "CoverSystem":
        return CoverSystem(tuple(sorted(self.classes)))

    def to_dict(self) -> dict:
        return {
            "classes": [
                {"a": c.a, "n": c.n} for c in sorted(self.classes)
            ]
        }

    def to_json(self) -> str:
        """Canonical byte-stable serialization (classes sorted by (n, a))."""
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "CoverSystem":
        return cls.of((c["a"], c["n"]) for c in d["classes"])

    @classmethod
    def from_json(cls, s: str) -> "CoverSystem":
        return cls.from_dict(json.loads(s))

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.classes) + "}"


@dataclass(frozen=True)
class CoverReport:
    """Outcome of exact cover verification.

    multiplicity[r] counts the classes containing r, for r in [0, N).
    witness is the least uncovered residue when the system is not a cover.
    is_minimal and redundant_indices are only meaningful for covers.
    """

    is_cover: bool
    witness: int | None
    is_minimal: bool
    redundant_indices: tuple[int, ...]
    multiplicity: tuple[int, ...] = field(repr=False)


def verify_cover(system: CoverSystem) -> CoverReport:
    """Decide exactly whether the system covers the integers.

    Coverage is periodic mod N, so sieving [0, N) is a complete check.
    """
    n = system.modulus
    if n > SIEVE_BOUND:
        raise SieveBoundExceeded(f"lcm {n} exceeds sieve bound {SIEVE_BOUND}")
    mult = [0] * n
    for c in system.classes:
        for r in range(c.a, n, c.n):
            mult[r] += 1
    witness = None
    for r in range(n):
        if mult[r] == 0:
            witness = r
            break
    is_cover = witness is None
    redundant = []
    if is_cover:
        for i, c in enumerate(system.classes):
            if all(mult[r] >= 2 for r in range(c.a, n, c.n)):
                redundant.append(i)
    return CoverReport(
        is_cover=is_cover,
        witness=witness,
        is_minimal=is_cover and not redundant,
        redundant_indices=tuple(redundant),
        multiplicity=tuple(mult),
    )


def coprime_totient_sum(system: CoverSystem, x: int) -> Fraction:
    """Sum of 1/phi(n_i) over classes with gcd(x + a_i, n_i) = 1.

    For a cover this sum is at least 1 for every integer x.
    """
    return sum(
        (
            Fraction(1, phi(c.n))
            for c in system.classes
            if gcd(x + c.a, c.n) == 1
        ),
        Fraction(0),
    )


def total_density(system: CoverSystem) -> Fraction:
    """Exact sum of 1/n_i over all classes; at least 1 for any cover."""
    return sum((Fraction(1, c.n) for c in system.classes), Fraction(0))


def density_without_top(system: CoverSystem) -> Fraction:
    """Sum of 1/n_i over all classes except the unique largest modulus.

    For a cover whose largest modulus is attained once, this is still >= 1.
    Raises ValueError when the largest modulus is not unique.
    """
    if system.k < 2:
        raise ValueError("need at least two classes")
    top = max(system.moduli)
    if system.moduli.count(top) != 1:
        raise ValueError(f"largest modulus {top} is not unique")
    return sum(
        (Fraction(1, c.n) for c in system.classes if c.n != top),
        Fraction(0),
    )
