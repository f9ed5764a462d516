"""Brute-force reference implementations.

Nothing here imports widepart: every answer comes from exhaustive
enumeration written directly from the definitions.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence


def partitions(n: int, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conj(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > j) for j in range(max(lam, default=0)))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    n = max(len(a), len(b))
    sa = sb = 0
    for i in range(n):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def wide(lam: Sequence[int]) -> bool:
    """Every submultiset of parts dominates its conjugate."""
    lam = tuple(lam)
    for r in range(1, len(lam) + 1):
        for idx in itertools.combinations(range(len(lam)), r):
            mu = tuple(lam[i] for i in idx)
            if not dominates(mu, conj(mu)):
                return False
    return True


def cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    return [(r, c) for r, p in enumerate(lam, start=1) for c in range(1, p + 1)]


def lines(lam: Sequence[int]) -> list[frozenset]:
    cs = cells(lam)
    rows = [frozenset(x for x in cs if x[0] == r) for r in range(1, len(lam) + 1)]
    cols = [frozenset(x for x in cs if x[1] == c) for c in range(1, max(lam, default=0) + 1)]
    return rows + cols


def omega(lam: Sequence[int], k: int) -> int:
    """Largest union of k cliques; cliques of the line graph lie in lines."""
    ls = lines(lam)
    if k >= len(ls):
        return len(cells(lam))
    return max((len(frozenset().union(*combo)) for combo in itertools.combinations(ls, k)), default=0)


def is_k_stable(subset, k: int) -> bool:
    rows: dict = {}
    cols: dict = {}
    for r, c in subset:
        rows[r] = rows.get(r, 0) + 1
        cols[c] = cols.get(c, 0) + 1
    return all(v <= k for v in rows.values()) and all(v <= k for v in cols.values())


def alpha(cell_list, k: int) -> int:
    """Largest set of cells with at most k per row and per column, by
    trying every subset from the largest down."""
    cell_list = list(cell_list)
    for size in range(len(cell_list), -1, -1):
        for subset in itertools.combinations(cell_list, size):
            if is_k_stable(subset, k):
                return size
    return 0


def zero_one_matrix(rows: Sequence[int], cols: Sequence[int]) -> Optional[list[list[int]]]:
    """Any 0-1 matrix with the given margins, by exhaustive search."""
    m = len(cols)
    if sum(rows) != sum(cols):
        return None
    choices = [list(itertools.combinations(range(m), r)) for r in rows]
    for pick in itertools.product(*choices):
        sums = [0] * m
        for row in pick:
            for j in row:
                sums[j] += 1
        if sums == list(cols):
            return [[1 if j in row else 0 for j in range(m)] for row in pick]
    return None


def latin_exists(lam: Sequence[int]) -> bool:
    """Some choice of row permutations of 1..lam_i has distinct columns."""
    lam = tuple(lam)

    def rec(i: int, cols: list[set]) -> bool:
        if i == len(lam):
            return True
        for perm in itertools.permutations(range(1, lam[i] + 1)):
            if all(v not in cols[j] for j, v in enumerate(perm)):
                for j, v in enumerate(perm):
                    cols[j].add(v)
                ok = rec(i + 1, cols)
                for j, v in enumerate(perm):
                    cols[j].discard(v)
                if ok:
                    return True
        return False

    return rec(0, [set() for _ in range(max(lam, default=0))])


def is_latin(rows: Sequence[Sequence[int]]) -> bool:
    lam = [len(r) for r in rows]
    if any(sorted(r) != list(range(1, len(r) + 1)) for r in rows):
        return False
    for c in range(max(lam, default=0)):
        col = [rows[r][c] for r in range(len(rows)) if c < lam[r]]
        if len(set(col)) != len(col):
            return False
    return True


def stable_covers(cell_list) -> Iterator[list[frozenset]]:
    """All partitions of the cells into matchings (colorings up to
    relabeling), by placing each cell in an earlier class or a new one."""
    cell_list = sorted(cell_list)
    classes: list[set] = []

    def rec(i: int):
        if i == len(cell_list):
            yield [frozenset(c) for c in classes]
            return
        r, c = cell_list[i]
        for cls in classes:
            if all(x[0] != r and x[1] != c for x in cls):
                cls.add((r, c))
                yield from rec(i + 1)
                cls.discard((r, c))
        classes.append({(r, c)})
        yield from rec(i + 1)
        classes.pop()

    yield from rec(0)


def wide_partitions(max_n: int) -> list[tuple[int, ...]]:
    return [lam for n in range(1, max_n + 1) for lam in partitions(n) if wide(lam)]


def zero_one_matrix_dfs(rows: Sequence[int], cols: Sequence[int]) -> Optional[list[list[int]]]:
    """Complete search for a 0-1 matrix with the given margins, row by row.

    Dead states are remembered by (row index, remaining column capacities);
    later rows never see column identities beyond those capacities, so the
    memo loses no solutions.
    """
    if sum(rows) != sum(cols):
        return None
    m = len(cols)
    dead: set = set()

    def rec(i: int, caps: tuple) -> Optional[list]:
        if i == len(rows):
            return [] if not any(caps) else None
        if any(c > len(rows) - i for c in caps):
            return None
        key = (i, caps)
        if key in dead:
            return None
        for pick in itertools.combinations([j for j in range(m) if caps[j] > 0], rows[i]):
            nxt = list(caps)
            for j in pick:
                nxt[j] -= 1
            rest = rec(i + 1, tuple(nxt))
            if rest is not None:
                return [[1 if j in pick else 0 for j in range(m)]] + rest
        dead.add(key)
        return None

    return rec(0, tuple(cols))
