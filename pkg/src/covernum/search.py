"""Exact backtracking search for covers with prescribed moduli.

The engine decides whether Z can be covered by residue classes whose
moduli are drawn from a pool of divisors of the working modulus n (each
pool entry usable at most its multiplicity).  Coverage is periodic mod n,
so the sieve is an n-cell array.

Branching: take the least uncovered cell x and try, for each available
modulus d, the class x (mod d).  Sibling branches additionally forbid the
moduli already tried from covering x, so each candidate set of classes is
explored exactly once.  Pruning is by exact counting: a branch dies when
the uncovered cells (globally, or within any residue class modulo a prime
power dividing n) exceed what the remaining moduli can still cover.
All prunes are conservative, so the search is complete.
"""

from __future__ import annotations

import time
from collections import Counter
from math import lcm

from .numtheory import factor


class BudgetExceeded(Exception):
    """Search ran out of its node or time budget before deciding."""


class NodeTracker:
    """Counts search nodes and enforces node/time limits."""

    def __init__(self, max_nodes: int, max_seconds: float):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = time.monotonic() + max_seconds
        self.parent: NodeTracker | None = None

    def tick(self):
        if self.parent is not None:
            self.parent.tick()
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget exhausted")
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")

    def slice(self, max_nodes: int) -> "NodeTracker":
        """Sub-tracker with its own (smaller) node cap; nodes also count
        against this tracker's budget and deadline."""
        sub = NodeTracker(max_nodes, 0.0)
        sub.deadline = self.deadline
        sub.parent = self
        return sub


class _State:
    def __init__(self, n: int, pool, tracker: NodeTracker):
        self.n = n
        self.tracker = tracker
        counts = Counter(pool)
        if any(d < 1 or n % d for d in counts):
            raise ValueError(f"pool entries must divide {n}")
        self.values = sorted(counts)
        self.avail = dict(counts)
        self.covered = bytearray(n)
        self.forbid: dict[int, set[int]] = {d: set() for d in self.values}
        self.pps = [p**a for p, a in factor(n)]
        # cell budget a single class mod d can add to one class mod m
        self.weight = {
            m: {d: n // lcm(d, m) for d in self.values} for m in self.pps
        }
        self.ucount = {m: [n // m] * m for m in self.pps}
        self.cap = {
            m: sum(w * counts[d] for d, w in self.weight[m].items())
            for m in self.pps
        }
        self.capsum = sum((n // d) * c for d, c in counts.items())
        self.chosen: list[tuple[int, int]] = []  # (a, d)

    def infeasible(self, uncovered: int) -> bool:
        if self.capsum < uncovered:
            return True
        for m in self.pps:
            c = self.cap[m]
            for u in self.ucount[m]:
                if u > c:
                    return True
        return False

    def place(self, a: int, d: int) -> list[int]:
        newly = []
        for r in range(a, self.n, d):
            if not self.covered[r]:
                self.covered[r] = 1
                newly.append(r)
                for m in self.pps:
                    self.ucount[m][r % m] -= 1
        for m in self.pps:
            self.cap[m] -= self.weight[m][d]
        self.capsum -= self.n // d
        self.avail[d] -= 1
        self.chosen.append((a, d))
        return newly

    def unplace(self, d: int, newly: list[int]):
        self.chosen.pop()
        self.avail[d] += 1
        self.capsum += self.n // d
        for m in self.pps:
            self.cap[m] += self.weight[m][d]
        for r in newly:
            self.covered[r] = 0
            for m in self.pps:
                self.ucount[m][r % m] += 1


def find_cover(
    n: int, pool, tracker: NodeTracker
) -> list[tuple[int, int]] | None:
    """First cover found as (residue, modulus) pairs, or None if none exists.

    Complete: a None answer is an exhaustion proof.  The pool is a
    multiset of moduli; a modulus-1 entry makes the answer immediate.
    """
    if any(d == 1 for d in pool):
        return [(0, 1)]
    st = _State(n, pool, tracker)

    def dfs(uncovered: int, lo: int) -> bool:
        st.tracker.tick()
        if uncovered == 0:
            return True
        if st.infeasible(uncovered):
            return False
        x = lo
        while st.covered[x]:
            x += 1
        excluded = []
        try:
            for d in st.values:
                if not st.avail[d]:
                    continue
                a = x % d
                if a in st.forbid[d]:
                    continue
                newly = st.place(a, d)
                if dfs(uncovered - len(newly), x):
                    return True
                st.unplace(d, newly)
                st.forbid[d].add(a)
                excluded.append((d, a))
        finally:
            for d, a in excluded:
                st.forbid[d].discard(a)
        return False

    if dfs(n, 0):
        return list(st.chosen)
    return None


def enumerate_irredundant(
    n: int, pool, tracker: NodeTracker
) -> list[list[tuple[int, int]]]:
    """All covers in which every class was needed when it was added.

    Every minimal cover with classes from the pool appears exactly once
    (callers filter for true minimality and lcm); some non-minimal covers
    may appear as well.
    """
    if any(d == 1 for d in pool):
        raise ValueError("modulus 1 not allowed in enumeration pools")
    st = _State(n, pool, tracker)
    out: list[list[tuple[int, int]]] = []

    def dfs(uncovered: int, lo: int):
        st.tracker.tick()
        if uncovered == 0:
            out.append(list(st.chosen))
            return
        if st.infeasible(uncovered):
            return
        x = lo
        while st.covered[x]:
            x += 1
        excluded = []
        try:
            for d in st.values:
                if not st.avail[d]:
                    continue
                a = x % d
                if a in st.forbid[d]:
                    continue
                newly = st.place(a, d)
                dfs(uncovered - len(newly), x)
                st.unplace(d, newly)
                st.forbid[d].add(a)
                excluded.append((d, a))
        finally:
            for d, a in excluded:
                st.forbid[d].discard(a)

    dfs(n, 0)
    return out
