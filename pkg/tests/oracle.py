"""Independent brute-force oracle for covering-number decisions.

Deliberately shares no code with the package: its own divisor list and
a plain exhaustive DFS with only a counting prune.  It branches on the
least uncovered cell, trying each unused divisor d as the class
x (mod d); sibling branches forbid re-trying a (d, residue) pair so each
candidate class set is visited once.  Restricting each divisor to the
class through the least uncovered cell loses no covers: any cover must
hit that cell with some class, and adding classes never uncovers
anything, so a cover exists iff one of these restricted extensions
covers.
"""


def brute_force_covering(n: int, max_nodes: int = 10**9) -> bool:
    """Exhaustively decide whether the integers can be covered using
    distinct moduli > 1 dividing n, each at most once."""
    divs = [d for d in range(2, n + 1) if n % d == 0]
    covered = bytearray(n)
    forbid = {d: set() for d in divs}
    nodes = 0

    def dfs(uncovered, lo, unused, capsum):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError(f"oracle budget exceeded at n={n}")
        if uncovered == 0:
            return True
        if capsum < uncovered:
            return False
        x = lo
        while covered[x]:
            x += 1
        tried = []
        try:
            for i, d in enumerate(unused):
                a = x % d
                if a in forbid[d]:
                    continue
                newly = []
                for r in range(a, n, d):
                    if not covered[r]:
                        covered[r] = 1
                        newly.append(r)
                if dfs(uncovered - len(newly), x,
                       unused[:i] + unused[i + 1:], capsum - n // d):
                    return True
                for r in newly:
                    covered[r] = 0
                forbid[d].add(a)
                tried.append((d, a))
        finally:
            for d, a in tried:
                forbid[d].discard(a)
        return False

    return dfs(n, 0, divs, sum(n // d for d in divs))
