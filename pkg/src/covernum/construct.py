"""Explicit cover constructions from exponent plans.

An exponent plan is a prime factorization p_1^a_1 ... p_r^a_r together
with a claim (covering number / primitive covering number).  The central
sufficient condition is

    prod_{0<t<s} (a_t + 1)  >=  p_s - [s != r]   for every s = 1..r

(the empty product is 1).  When it holds, ``build_cover`` produces an
explicit cover of the integers with distinct moduli > 1 dividing the
plan value, with exactly 1 + sum a_s (p_s - 1) classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, floor

from .numtheory import MAX_VALUE, Factorization, divisors, is_prime
from .systems import CoverSystem, ResidueClass

FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class PlanPreconditionError(ValueError):
    """A constructor precondition failed; ``reason`` tags which one."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class ExponentPlan:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    claimed: str = "covering"  # or "primitive-covering"

    def __post_init__(self):
        if len(self.primes) != len(self.exponents):
            raise ValueError("primes and exponents differ in length")
        if self.claimed not in ("covering", "primitive-covering"):
            raise ValueError(f"unknown claim {self.claimed!r}")
        last = 1
        for p in self.primes:
            if p <= last or not is_prime(p):
                raise ValueError(f"bad prime sequence {self.primes}")
            last = p
        if any(a < 1 for a in self.exponents):
            raise ValueError(f"exponents must be positive: {self.exponents}")
        if self.value > MAX_VALUE:
            raise ValueError("plan value exceeds 64-bit range")

    @property
    def r(self) -> int:
        return len(self.primes)

    @property
    def value(self) -> int:
        n = 1
        for p, a in zip(self.primes, self.exponents):
            n *= p**a
        return n

    @property
    def factorization(self) -> Factorization:
        return Factorization(tuple(zip(self.primes, self.exponents)))


def covering_condition_ordered(primes, exponents) -> bool:
    """The sufficient covering condition for primes taken in the given order:
    prod_{0<t<s} (a_t + 1) >= p_s - [s != r] for every s."""
    r = len(primes)
    prod = 1
    for s in range(1, r + 1):
        if prod < primes[s - 1] - (1 if s != r else 0):
            return False
        prod *= exponents[s - 1] + 1
    return True


def covering_condition(plan: ExponentPlan) -> bool:
    """The sufficient condition for the plan value to be a covering number."""
    return covering_condition_ordered(plan.primes, plan.exponents)


def build_cover(plan: ExponentPlan) -> CoverSystem:
    """Construct an explicit cover with distinct moduli dividing plan.value."""
    return build_cover_ordered(plan.primes, plan.exponents)


def build_cover_ordered(primes, exponents) -> CoverSystem:
    """Construct an explicit cover for primes taken in the given order.

    The primes must be distinct but need not be ascending; only the
    ordered covering condition is required.  For each prime layer s and
    each depth a = 1..a_s, the classes
    j * p_1^a_1 ... p_{s-1}^a_{s-1} * p_s^(a-1)  (mod d_j p_s^a),
    j = 1..p_s-1, strip away one further p_s-adic shell; a final class
    0 (mod d p_r^a_r) catches the residue 0 core.  The d_j are the j-th
    smallest divisors of p_1^a_1 ... p_{s-1}^a_{s-1}; the condition
    guarantees enough of them exist.
    """
    primes, exponents = tuple(primes), tuple(exponents)
    if len(set(primes)) != len(primes):
        raise ValueError(f"repeated prime in {primes}")
    if not covering_condition_ordered(primes, exponents):
        raise PlanPreconditionError(
            "condition", f"plan {primes}^{exponents} fails the "
            "covering condition")
    r = len(primes)
    classes: list[ResidueClass] = []
    head = 1  # p_1^a_1 ... p_{s-1}^a_{s-1}
    for s in range(1, r + 1):
        p, alpha_s = primes[s - 1], exponents[s - 1]
        ds = divisors(head)
        need = p - (1 if s != r else 0)
        assert len(ds) >= need
        for alpha in range(1, alpha_s + 1):
            for j in range(1, p):
                classes.append(
                    ResidueClass(n=ds[j - 1] * p**alpha,
                                 a=j * head * p ** (alpha - 1)))
        if s == r:
            classes.append(ResidueClass(n=ds[p - 1] * p**alpha_s, a=0))
        head *= p**alpha_s
    moduli = [c.n for c in classes]
    assert len(set(moduli)) == len(moduli), "moduli collision"
    expected = 1 + sum(a * (p - 1) for p, a in zip(primes, exponents))
    assert len(classes) == expected
    return CoverSystem(tuple(classes))


def greedy_exponents(primes) -> ExponentPlan:
    """Smallest chained exponents making the given primes a covering plan.

    Requires increasing primes starting at 2, at least two of them.  The
    last exponent is free; it is set to 1 to minimize the value.
    """
    primes = tuple(primes)
    _check_prime_chain(primes)
    r = len(primes)
    exps = []
    for t in range(1, r):
        num = primes[t] - (1 if t != r - 1 else 0)
        exps.append(ceil(num / (primes[t - 1] - 1)) - 1)
    exps.append(1)
    plan = ExponentPlan(primes, tuple(exps), claimed="covering")
    assert covering_condition(plan)
    return plan


def primitive_plan(primes) -> ExponentPlan:
    """Exponent plan whose value is a primitive covering number.

    Requires p_1 = 2 < p_2 < ... < p_r with p_t - 1 dividing p_{t+1} - 1
    for t = 1..r-2, and p_r >= (p_{r-1} - 2)(p_{r-1} - 3).
    """
    primes = tuple(primes)
    _check_prime_chain(primes)
    r = len(primes)
    for t in range(1, r - 1):
        if (primes[t] - 1) % (primes[t - 1] - 1) != 0:
            raise PlanPreconditionError(
                "divisibility",
                f"{primes[t - 1]} - 1 does not divide {primes[t]} - 1")
    bound = (primes[r - 2] - 2) * (primes[r - 2] - 3)
    if primes[r - 1] < bound:
        raise PlanPreconditionError(
            "size", f"need p_r >= {bound}, got {primes[r - 1]}")
    exps = [
        (primes[t] - 1) // (primes[t - 1] - 1) - 1 for t in range(1, r - 1)
    ]
    exps.append(floor((primes[r - 1] - 1) / (primes[r - 2] - 1)))
    exps.append(1)
    plan = ExponentPlan(primes, tuple(exps), claimed="primitive-covering")
    assert covering_condition(plan)
    return plan


def plan_for_exponents(alphas) -> ExponentPlan | None:
    """Primes turning a given exponent tuple into a covering number.

    Returns None when no choice of primes works: a single prime power,
    two primes with first exponent 1, or three primes with both leading
    exponents 1.  Otherwise the first r primes in ascending order work.
    """
    alphas = tuple(alphas)
    if not alphas or any(a < 1 for a in alphas):
        raise ValueError(f"need positive exponents, got {alphas}")
    r = len(alphas)
    if r == 1:
        return None
    if r == 2 and alphas[0] == 1:
        return None
    if r == 3 and alphas[0] == 1 and alphas[1] == 1:
        return None
    plan = ExponentPlan(FIRST_PRIMES[:r], alphas, claimed="covering")
    assert covering_condition(plan)
    return plan


#: Families of primitive covering numbers, parameterized by a prime p.
#: kind -> (value function, precondition description)
FAMILY_KINDS = ("2p", "3p", "5p-a", "5p-b", "7p-a", "7p-b")


def family_number(kind: str, p: int) -> int:
    """Known one-parameter families of primitive covering numbers.

    2p:   2^(p-1) p            for odd primes p
    3p:   2 * 3^((p-1)/2) p    for primes p > 3
    5p-a: 2^3 * 5^((p-1)//4) p for primes p > 5
    5p-b: 2*3 * 5^((p-1)//4) p for primes p > 5
    7p-a: 2*3^2 * 7^((p-1)//6) p for primes p > 7
    7p-b: 2^5 * 7^((p-1)//6) p for primes p > 7, p not in {13, 19}
          (those two cases are open: the values are covering numbers,
          but their primitivity is not known)
    """
    if not is_prime(p):
        raise PlanPreconditionError("prime", f"{p} is not prime")
    if kind == "2p":
        if p < 3:
            raise PlanPreconditionError("bound", "need an odd prime")
        return 2 ** (p - 1) * p
    if kind == "3p":
        if p <= 3:
            raise PlanPreconditionError("bound", "need p > 3")
        return 2 * 3 ** ((p - 1) // 2) * p
    if kind == "5p-a":
        if p <= 5:
            raise PlanPreconditionError("bound", "need p > 5")
        return 2**3 * 5 ** ((p - 1) // 4) * p
    if kind == "5p-b":
        if p <= 5:
            raise PlanPreconditionError("bound", "need p > 5")
        return 2 * 3 * 5 ** ((p - 1) // 4) * p
    if kind == "7p-a":
        if p <= 7:
            raise PlanPreconditionError("bound", "need p > 7")
        return 2 * 3**2 * 7 ** ((p - 1) // 6) * p
    if kind == "7p-b":
        if p <= 7:
            raise PlanPreconditionError("bound", "need p > 7")
        if p in (13, 19):
            raise PlanPreconditionError(
                "open", f"primitivity of the 7p-b value at p={p} is open")
        return 2**5 * 7 ** ((p - 1) // 6) * p
    raise ValueError(f"unknown family kind {kind!r}")


def _check_prime_chain(primes):
    if len(primes) < 2:
        raise PlanPreconditionError("arity", "need at least two primes")
    if primes[0] != 2:
        raise PlanPreconditionError("leading", "first prime must be 2")
    last = 1
    for p in primes:
        if p <= last or not is_prime(p):
            raise PlanPreconditionError(
                "chain", f"primes must be increasing primes: {primes}")
        last = p
