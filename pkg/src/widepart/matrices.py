"""0-1 and integer matrix tools: Gale-Ryser realization, Birkhoff-von
Neumann decomposition (bipartite edge coloring) and the Folkman-Fulkerson
submatrix condition on diagram matrices.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .cells import Cell, vertex_degrees
from .partitions import as_partition, conjugate, dominates


class DegreeBoundError(ValueError):
    pass


def perfect_matching(support: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """Kuhn's augmenting-path matching on an n x n support matrix.

    Returns ``match[row] = col`` or None if no perfect matching exists.
    """
    n = len(support)
    nbrs = [[j for j in range(n) if support[i][j] > 0] for i in range(n)]
    match_col: list[int] = [-1] * n

    def augment(i: int, seen: list[bool]) -> bool:
        for j in nbrs[i]:
            if not seen[j]:
                seen[j] = True
                if match_col[j] < 0 or augment(match_col[j], seen):
                    match_col[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return None
    match = [0] * n
    for j, i in enumerate(match_col):
        match[i] = j
    return match


def birkhoff_decompose(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Write a nonnegative integer matrix with all line sums s as s
    permutations (each given as ``perm[row] = col``)."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if any(v < 0 for row in m for v in row):
        raise ValueError("entries must be nonnegative")
    sums = {sum(row) for row in m} | {sum(m[i][j] for i in range(n)) for j in range(n)}
    if len(sums) > 1:
        raise ValueError(f"line sums differ: {sorted(sums)}")
    s = sums.pop() if sums else 0
    perms = []
    for _ in range(s):
        perm = perfect_matching(m)
        if perm is None:  # cannot happen for a regular bipartite multigraph
            raise AssertionError("no perfect matching in a regular matrix")
        for i, j in enumerate(perm):
            m[i][j] -= 1
        perms.append(perm)
    return perms


def permutation_matrix(perm: Sequence[int]) -> list[list[int]]:
    n = len(perm)
    return [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]


def bvn_decompose(edges: Iterable[Cell], k: int) -> list[frozenset[Cell]]:
    """Split a set of cells with at most k per row/column into k matchings.

    The cells are padded to a k-regular bipartite multigraph with dummy
    edges, the padded matrix is peeled into k perfect matchings, and the
    dummy edges are dropped.  Some returned matchings may be empty.
    """
    edges = frozenset(edges)
    if k < 0:
        raise ValueError("k must be nonnegative")
    deg = vertex_degrees(edges)
    if deg and max(deg.values()) > k:
        raise DegreeBoundError(f"max degree {max(deg.values())} exceeds {k}")
    if k == 0:
        return []
    rows = sorted({r for r, _ in edges})
    cols = sorted({c for _, c in edges})
    n = max(len(rows), len(cols), 1)
    ri = {r: i for i, r in enumerate(rows)}
    ci = {c: j for j, c in enumerate(cols)}
    real = [[0] * n for _ in range(n)]
    for r, c in edges:
        real[ri[r]][ci[c]] = 1
    mat = [row[:] for row in real]
    row_def = [k - sum(mat[i]) for i in range(n)]
    col_def = [k - sum(mat[i][j] for i in range(n)) for j in range(n)]
    # Northwest-corner fill of the deficits; dummies may stack on a position.
    i = j = 0
    while i < n and j < n:
        if row_def[i] == 0:
            i += 1
            continue
        if col_def[j] == 0:
            j += 1
            continue
        t = min(row_def[i], col_def[j])
        mat[i][j] += t
        row_def[i] -= t
        col_def[j] -= t
    out = []
    for perm in birkhoff_decompose(mat):
        matching = set()
        for i, j in enumerate(perm):
            if real[i][j]:
                real[i][j] = 0
                if i < len(rows) and j < len(cols):
                    matching.add((rows[i], cols[j]))
        out.append(frozenset(matching))
    assert sum(len(mt) for mt in out) == len(edges)
    return out


def gale_ryser_feasible(row_sums: Sequence[int], col_sums: Sequence[int]) -> bool:
    if sum(row_sums) != sum(col_sums):
        return False
    rows = as_partition(sorted((r for r in row_sums if r), reverse=True))
    cols = as_partition(sorted((c for c in col_sums if c), reverse=True))
    return dominates(conjugate(rows), cols)


def gale_ryser(row_sums: Sequence[int], col_sums: Sequence[int]) -> Optional[list[list[int]]]:
    """A 0-1 matrix with the given margins, or None if none exists.

    Columns are filled in order, each putting its ones in the rows with the
    largest remaining deficit (ties to the lowest row index).
    """
    if sum(row_sums) != sum(col_sums):
        raise ValueError("row and column sums have different totals")
    if any(v < 0 for v in list(row_sums) + list(col_sums)):
        raise ValueError("margins must be nonnegative")
    if not gale_ryser_feasible(row_sums, col_sums):
        return None
    m, n = len(row_sums), len(col_sums)
    remaining = list(row_sums)
    mat = [[0] * n for _ in range(m)]
    # Largest columns first keeps the greedy exact.
    for j in sorted(range(n), key=lambda j: (-col_sums[j], j)):
        need = col_sums[j]
        order = sorted(range(m), key=lambda i: (-remaining[i], i))
        picks = [i for i in order[:need] if remaining[i] > 0]
        if len(picks) < need:
            raise AssertionError("greedy realization failed on a feasible pair")
        for i in picks:
            mat[i][j] = 1
            remaining[i] -= 1
    assert [sum(r) for r in mat] == list(row_sums)
    assert [sum(mat[i][j] for i in range(m)) for j in range(n)] == list(col_sums)
    return mat


def format_matrix(mat: Sequence[Sequence[int]]) -> str:
    return "".join("".join(str(v) for v in row) + "\n" for row in mat)


def ff_condition(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Every e x f submatrix of the diagram matrix of lam has at least
    sum_{i >= (m-e)+(n-f)+1} mu'_i ones.

    On a diagram matrix the sparsest e x f submatrix is the last e rows
    against the last f columns, so only those are checked.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    if lam.weight != mu.weight:
        raise ValueError("lam and mu must have the same weight")
    m, n = len(lam), lam.largest
    mu_conj = conjugate(mu)
    tail = [0] * (len(mu_conj) + 2)  # tail[i] = sum of mu'_j for j >= i (1-based)
    for i in range(len(mu_conj), 0, -1):
        tail[i] = tail[i + 1] + mu_conj[i - 1]

    def needed(i: int) -> int:
        i = max(i, 1)
        return tail[i] if i <= len(mu_conj) else 0

    for e in range(m + 1):
        for f in range(n + 1):
            ones = sum(max(0, p - (n - f)) for p in lam[m - e:])
            if ones < needed((m - e) + (n - f) + 1):
                return False
    return True
