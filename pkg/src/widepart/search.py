"""Backtracking fillers for diagrams with distinct entries per row and column.

Cells are chosen most-constrained first (fewest candidates, then smallest
cell) and values are tried in increasing order, so runs are deterministic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

FOUND, NONE, BUDGET = "found", "none", "budget"

DEFAULT_NODE_BUDGET = 10**7


def default_budget() -> int:
    """Node budget, overridable through the WIDE_BUDGET environment variable."""
    raw = os.environ.get("WIDE_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


class BudgetExhausted(Exception):
    pass


@dataclass
class SearchResult:
    status: str
    rows: Optional[list[list[int]]]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


def fill_distinct(
    lam: Sequence[int],
    allowed: Sequence[Sequence[int]],
    content: Optional[Mapping[int, int]] = None,
    budget: Optional[int] = None,
) -> SearchResult:
    """Fill the diagram of ``lam`` so that row i uses values from
    ``allowed[i]``, no value repeats in a row or column, and (if given)
    value v is used exactly ``content[v]`` times.

    With ``len(allowed[i]) == lam[i]`` every row is a permutation of its
    list.  The status is NONE only after the search space is exhausted.
    """
    if budget is None:
        budget = default_budget()
    rows = len(lam)
    cells = [(r, c) for r in range(rows) for c in range(lam[r])]
    allowed = [frozenset(a) for a in allowed]
    for r in range(rows):
        if len(allowed[r]) < lam[r]:
            return SearchResult(NONE, None, 0)
    if content is not None and sum(content.values()) != len(cells):
        return SearchResult(NONE, None, 0)
    left = dict(content) if content is not None else None
    grid: dict = {}
    row_used = [set() for _ in range(rows)]
    col_used = [set() for _ in range(max(lam, default=0))]
    nodes = 0

    def candidates(cell):
        r, c = cell
        cand = allowed[r] - row_used[r] - col_used[c]
        if left is not None:
            cand = {v for v in cand if left.get(v, 0) > 0}
        return cand

    def row_feasible(r: int) -> bool:
        # Every value still owed to a full-list row needs an open cell.
        if len(allowed[r]) != lam[r]:
            return True
        open_cols = [c for c in range(lam[r]) if (r, c) not in grid]
        for v in allowed[r] - row_used[r]:
            if all(v in col_used[c] for c in open_cols):
                return False
        return True

    def content_feasible(v: int) -> bool:
        # v fits at most once per row and per column, so enough rows and
        # columns with an open cell that can still take v must remain.
        need = left[v]
        if need == 0:
            return True
        open_rows, open_cols = set(), set()
        for r2, c2 in cells:
            if (r2, c2) in grid or v in row_used[r2] or v in col_used[c2] or v not in allowed[r2]:
                continue
            open_rows.add(r2)
            open_cols.add(c2)
        return len(open_rows) >= need and len(open_cols) >= need

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted
        best, best_cand = None, None
        for cell in cells:
            if cell in grid:
                continue
            cand = candidates(cell)
            if best is None or len(cand) < len(best_cand):
                best, best_cand = cell, cand
                if not cand:
                    return False
        if best is None:
            return True
        r, c = best
        for v in sorted(best_cand):
            grid[best] = v
            row_used[r].add(v)
            col_used[c].add(v)
            if left is not None:
                left[v] -= 1
            if (
                row_feasible(r)
                and (left is None or all(content_feasible(u) for u in left))
                and rec()
            ):
                return True
            del grid[best]
            row_used[r].discard(v)
            col_used[c].discard(v)
            if left is not None:
                left[v] += 1
        return False

    try:
        ok = rec()
    except BudgetExhausted:
        return SearchResult(BUDGET, None, nodes)
    if not ok:
        return SearchResult(NONE, None, nodes)
    out = [[grid[r, c] for c in range(lam[r])] for r in range(rows)]
    return SearchResult(FOUND, out, nodes)


def fill_weakly_latin(lam: Sequence[int], budget: Optional[int] = None) -> SearchResult:
    """Search for rows that permute 1..lam_i with at most k entries <= k in
    every column, for every k."""
    if budget is None:
        budget = default_budget()
    rows = len(lam)
    cols = max(lam, default=0)
    cells = [(r, c) for r in range(rows) for c in range(lam[r])]
    col_vals: list[list[int]] = [[] for _ in range(cols)]
    row_used = [set() for _ in range(rows)]
    grid: dict = {}
    nodes = 0

    def column_ok(vals: list[int]) -> bool:
        return all(v >= t for t, v in enumerate(sorted(vals), start=1))

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted
        if i == len(cells):
            return True
        r, c = cells[i]
        for v in range(1, lam[r] + 1):
            if v in row_used[r]:
                continue
            col_vals[c].append(v)
            if column_ok(col_vals[c]):
                row_used[r].add(v)
                grid[r, c] = v
                if rec(i + 1):
                    return True
                row_used[r].discard(v)
                del grid[r, c]
            col_vals[c].pop()
        return False

    try:
        ok = rec(0)
    except BudgetExhausted:
        return SearchResult(BUDGET, None, nodes)
    if not ok:
        return SearchResult(NONE, None, nodes)
    return SearchResult(FOUND, [[grid[r, c] for c in range(lam[r])] for r in range(rows)], nodes)
