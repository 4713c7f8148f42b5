"""Enumeration of primitive covering numbers and empirical checks.

A covering number n admits a cover of Z with distinct moduli > 1, all
dividing n; it is primitive when no proper divisor is itself covering.
``enumerate_primitive`` builds an exact catalog up to a bound, recording
for every candidate how it was settled.  ``admissible_ordering`` checks
the conjecture that every primitive covering number's primes can be
ordered to satisfy the covering condition, and ``full_divisor_set_check``
tests, for a covering n, whether every minimal distinct-moduli cover
drawn from the divisors of n must use all of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from .construct import covering_condition_ordered
from .decide import (
    DecisionRecord,
    SearchBudget,
    decide_covering,
    enumerate_minimal_covers,
)
from .numtheory import Factorization, divisors, factor
from .search import BudgetExceeded
from .systems import CoverSystem


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    factorization: Factorization
    ordering: tuple[int, ...] | None
    certificate: CoverSystem

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "factorization": [list(pair) for pair in self.factorization],
            "ordering": None if self.ordering is None else list(self.ordering),
            "certificate": self.certificate.to_dict(),
        }


@dataclass(frozen=True)
class PrimitiveCatalog:
    bound: int
    entries: tuple[CatalogEntry, ...]
    #: candidate n -> how it was settled: a rejection tag, "covering", or
    #: "primitive" (covering with no covering proper divisor).
    provenance: tuple[tuple[int, str], ...]

    def values(self) -> list[int]:
        return [e.n for e in self.entries]

    def to_json(self) -> str:
        return json.dumps(
            [e.to_dict() for e in self.entries], separators=(",", ":")
        )


def admissible_ordering(fact: Factorization) -> tuple[int, ...] | None:
    """An ordering of the primes satisfying the covering condition.

    Tries all permutations (the prime count is small) and returns the
    lexicographically first satisfying one, or None.  Prime powers never
    have one: the condition forces p = 2 and then fails at the last step.
    """
    pairs = sorted(fact.pairs)
    for perm in permutations(pairs):
        primes = tuple(p for p, _ in perm)
        exps = tuple(a for _, a in perm)
        if covering_condition_ordered(primes, exps):
            return primes
    return None


def enumerate_primitive(
    bound: int,
    budget: SearchBudget | None = None,
    cache=None,
) -> PrimitiveCatalog:
    """Exact catalog of all primitive covering numbers up to bound.

    Every candidate 2..bound is decided; an undecided candidate aborts
    the whole run (BudgetExceeded names it) rather than leaving a hole.
    """
    if not 1 <= bound <= 10**4:
        raise ValueError(f"bound out of range: {bound}")
    records: dict[int, DecisionRecord] = {}
    provenance: list[tuple[int, str]] = []
    entries: list[CatalogEntry] = []
    for n in range(2, bound + 1):
        try:
            rec = decide_covering(n, budget, cache)
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"undecided candidate n={n}: {exc}") from exc
        records[n] = rec
        if not rec.is_covering:
            provenance.append((n, rec.rejection))
            continue
        fact = factor(n)
        primitive = all(
            not records[n // p].is_covering for p, _ in fact if n // p >= 2
        )
        provenance.append((n, "primitive" if primitive else "covering"))
        if primitive:
            entries.append(
                CatalogEntry(
                    n=n,
                    factorization=fact,
                    ordering=admissible_ordering(fact),
                    certificate=rec.certificate,
                )
            )
    return PrimitiveCatalog(
        bound=bound, entries=tuple(entries), provenance=tuple(provenance)
    )


def full_divisor_set_check(n: int, budget: SearchBudget | None = None) -> bool:
    """Must every minimal cover inside the divisor set of n use all of it?

    Scans each lcm target d dividing n (a minimal cover with moduli
    dividing n has moduli lcm equal to some such d), enumerates all
    minimal covers with distinct moduli dividing d, and checks that each
    one's moduli set is exactly {d > 1 : d divides n}.
    """
    if not decide_covering(n, budget).is_covering:
        raise ValueError(f"{n} is not a covering number")
    full_set = {d for d in divisors(n) if d > 1}
    for target in divisors(n):
        if target == 1:
            continue
        pool = [d for d in divisors(target) if d > 1]
        for cover in enumerate_minimal_covers(pool, target, budget):
            if set(cover.moduli) != full_set:
                return False
    return True
