"""Latin, weakly Latin and list-colored tableaux.

A Latin tableau of shape lam has distinct entries in every row and column
and uses the value i exactly lam'_i times; equivalently row i holds
1..lam_i.  Constructions here go through stable set covers (chains of
maximum k-stable sets), explicit region fillings, sums, and backtracking.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .cells import Cell, diagram_cells
from .chains import build_chain, chain_to_cover
from .covers import STABLE, Cover
from .matrices import bvn_decompose, gale_ryser
from .partitions import (
    Partition,
    add,
    as_partition,
    conjugate,
    distinct_part_sizes,
    is_self_conjugate,
    is_wide,
)
from .search import FOUND, NONE, fill_distinct


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        Partition(len(r) for r in rows)  # shape must be a partition
        if any(v < 1 for row in rows for v in row):
            raise ValueError("entries must be positive")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def entry(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def columns(self) -> list[list[int]]:
        lam = self.shape
        return [[self.rows[r][c] for r in range(len(self.rows)) if c < lam[r]] for c in range(lam.largest)]

    def content(self) -> Counter:
        return Counter(v for row in self.rows for v in row)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, row)) + "\n" for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        return cls([int(v) for v in line.split()] for line in text.splitlines() if line.strip())


def _distinct(vals: Sequence[int]) -> bool:
    return len(set(vals)) == len(vals)


def validate_latin(t: Tableau) -> bool:
    if not all(_distinct(r) for r in t.rows):
        return False
    if not all(_distinct(c) for c in t.columns()):
        return False
    conj = conjugate(t.shape)
    content = t.content()
    if set(content) != set(range(1, len(conj) + 1)):
        return False
    return all(content[i] == conj[i - 1] for i in range(1, len(conj) + 1))


def validate_weakly_latin(t: Tableau) -> bool:
    for row in t.rows:
        if sorted(row) != list(range(1, len(row) + 1)):
            return False
    for col in t.columns():
        # at most k entries <= k, for every k
        if any(v < i for i, v in enumerate(sorted(col), start=1)):
            return False
    return True


class ConstructionError(ValueError):
    pass


def cover_to_tableau(cover: Cover) -> Tableau:
    """Number the blocks of a stable set cover 1, 2, ... by decreasing size."""
    if cover.kind != STABLE:
        raise ConstructionError("only stable set covers correspond to tableaux")
    row_len = Counter(r for r, _ in cover.ambient)
    lam = Partition(row_len[r] for r in range(1, len(row_len) + 1))
    if diagram_cells(lam) != cover.ambient:
        raise ConstructionError("cover ambient is not a Young diagram")
    if cover.partition != conjugate(lam):
        raise ConstructionError(f"block sizes {tuple(cover.partition)} differ from lam' {tuple(conjugate(lam))}")
    grid = {}
    for value, block in enumerate(cover.blocks, start=1):
        for cell in block:
            grid[cell] = value
    t = Tableau([[grid[r, c] for c in range(1, p + 1)] for r, p in enumerate(lam, start=1)])
    assert validate_latin(t)
    return t


@dataclass
class LatinResult:
    tableau: Optional[Tableau]
    status: str  # FOUND, NONE (search exhausted) or BUDGET
    method: str
    trace: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.tableau is not None


def latin_by_chain(
    lam: Sequence[int], max_switches: Optional[int] = None
) -> tuple[Optional[Tableau], list[str]]:
    lam = as_partition(lam)
    res = build_chain(lam, max_switches=max_switches)
    trace = [f"chain: {res.status}"] + res.trace
    if not res.ok:
        return None, trace
    cover = chain_to_cover(res.chain, diagram_cells(lam))
    if cover.partition != conjugate(lam):
        trace.append(f"uniform cover has sizes {tuple(cover.partition)}, not lam'")
        return None, trace
    return cover_to_tableau(cover), trace


def latin_by_backtracking(lam: Sequence[int], budget: Optional[int] = None):
    lam = as_partition(lam)
    res = fill_distinct(lam, [range(1, p + 1) for p in lam], budget=budget)
    return (Tableau(res.rows) if res.found else None), res


def latin_tableau(
    lam: Sequence[int],
    method: str = "auto",
    budget: Optional[int] = None,
    max_switches: Optional[int] = None,
) -> LatinResult:
    """A Latin tableau of shape lam, or None with a trace of what failed.

    ``method`` is "chain", "backtrack" or "auto" (chain, then backtracking).
    ``budget`` caps backtracking nodes, ``max_switches`` the chain repair.
    A NONE status from "chain" only means the chain could not be repaired.
    """
    if method not in ("auto", "chain", "backtrack"):
        raise ValueError(f"unknown method {method!r}")
    lam = as_partition(lam)
    trace: list[str] = []
    if method in ("auto", "chain"):
        t, chain_trace = latin_by_chain(lam, max_switches)
        trace += chain_trace
        if t is not None:
            return LatinResult(t, FOUND, "chain", trace)
        if method == "chain":
            return LatinResult(None, NONE, "chain", trace)
    t, res = latin_by_backtracking(lam, budget)
    trace.append(f"backtracking: {res.status} after {res.nodes} nodes")
    return LatinResult(t, res.status, "backtrack", trace)


def two_part_construct(lam: Sequence[int]) -> Tableau:
    """Latin tableau of a wide shape with at most two distinct part sizes."""
    lam = as_partition(lam)
    if len(distinct_part_sizes(lam)) > 2:
        raise ConstructionError("more than two distinct part sizes")
    if not is_wide(lam):
        raise ConstructionError(f"{lam} is not wide")
    t, trace = latin_by_chain(lam)
    if t is None:
        raise AssertionError(f"chain construction failed on {lam}: {trace}")
    return t


@dataclass
class ThreePartPieces:
    m1: int
    m2: int
    m3: int
    case: int
    alpha: frozenset[Cell]
    beta: frozenset[Cell]


def three_part_pieces(lam: Sequence[int]) -> ThreePartPieces:
    """The high-value set alpha (m3 per line of A) and mid-value set beta
    (m2 per line of E) for a self-conjugate wide shape with three part
    sizes, where A is the top-left m1 x m1 square and E the top-left
    (m1+m2) square."""
    lam = as_partition(lam)
    sizes = distinct_part_sizes(lam)
    m1, m2, m3 = (lam.count(p) for p in sizes)
    # eq: m1^2 + m2^2 >= m1 (m2 + m3) follows from wideness.
    assert m1 * m1 + m2 * m2 >= m1 * (m2 + m3), "shape is not wide"
    assert m3 <= m1, "shape is not wide"
    # Cyclic Latin square on A; entries 1..m3 give alpha.
    square = {(i, j): (i + j - 2) % m1 + 1 for i in range(1, m1 + 1) for j in range(1, m1 + 1)}
    alpha = frozenset(cell for cell, v in square.items() if v <= m3)
    A = frozenset(square)
    C = frozenset((m1 + i, m1 + j) for i in range(1, m2 + 1) for j in range(1, m2 + 1))
    if m1 >= m2 + m3:
        b = frozenset(cell for cell, v in square.items() if m3 < v <= m3 + m2)
        return ThreePartPieces(m1, m2, m3, 1, alpha, b | C)
    # b inside B (rows 1..m1, cols m1+1..m1+m2): m2+m3-m1 per row, column
    # counts as equal as possible with the larger ones first.
    per_row = m2 + m3 - m1
    total = m1 * per_row
    col_quota = [total // m2 + (1 if j < total % m2 else 0) for j in range(m2)]
    bm = gale_ryser([per_row] * m1, col_quota)
    assert bm is not None
    b = frozenset((i + 1, m1 + j + 1) for i in range(m1) for j in range(m2) if bm[i][j])
    b_t = frozenset((c, r) for r, c in b)
    # c inside C: row i and column i both hold m2 - c_i cells.
    quota = [m2 - q for q in col_quota]
    assert min(quota) >= 0
    cm = gale_ryser(quota, quota)
    assert cm is not None
    c = frozenset((m1 + i + 1, m1 + j + 1) for i in range(m2) for j in range(m2) if cm[i][j])
    beta = (A - alpha) | b | b_t | c
    return ThreePartPieces(m1, m2, m3, 2, alpha, beta)


def three_part_selfconj_construct(lam: Sequence[int]) -> Tableau:
    """Latin tableau of a self-conjugate wide shape with <= 3 part sizes."""
    lam = as_partition(lam)
    if not is_self_conjugate(lam):
        raise ConstructionError(f"{lam} is not self-conjugate")
    if not is_wide(lam):
        raise ConstructionError(f"{lam} is not wide")
    sizes = distinct_part_sizes(lam)
    if len(sizes) > 3:
        raise ConstructionError("more than three distinct part sizes")
    if len(sizes) < 3:
        return two_part_construct(lam)
    pieces = three_part_pieces(lam)
    m1, m2, m3 = pieces.m1, pieces.m2, pieces.m3
    cells = diagram_cells(lam)
    low = cells - pieces.alpha - pieces.beta
    # low: values 1..m1, beta: m1+1..m1+m2, alpha: the top m3 values.
    blocks = []
    for part, k, size in ((low, m1, lam[0]), (pieces.beta, m2, m1 + m2), (pieces.alpha, m3, m1)):
        for matching in bvn_decompose(part, k):
            assert len(matching) == size
            blocks.append(matching)
    grid = {}
    for value, block in enumerate(blocks, start=1):
        for cell in block:
            grid[cell] = value
    t = Tableau([[grid[r, c] for c in range(1, p + 1)] for r, p in enumerate(lam, start=1)])
    if not validate_latin(t):
        raise AssertionError(f"three-part construction produced an invalid tableau for {lam}")
    return t


def sum_tableaux(t_lam: Tableau, t_mu: Tableau) -> Tableau:
    """Merge the columns of t_lam and t_mu sorted by height.

    t_mu must use values lam_i+1..lam_i+mu_i in row i with distinct columns;
    the result is a Latin tableau of shape lam + mu.
    """
    lam, mu = t_lam.shape, t_mu.shape
    for i, row in enumerate(t_mu.rows):
        base = lam[i] if i < len(lam) else 0
        if sorted(row) != list(range(base + 1, base + len(row) + 1)):
            raise ConstructionError(f"row {i + 1} of the second tableau overlaps the first alphabet")
    cols = t_lam.columns() + t_mu.columns()
    # stable sort keeps t_lam columns ahead of equal-height t_mu columns
    cols.sort(key=len, reverse=True)
    shape = add(lam, mu)
    rows = [[cols[c][r] for c in range(shape[r])] for r in range(len(shape))]
    return Tableau(rows)


@dataclass
class ListColorResult:
    tableau: Optional[Tableau]
    status: str
    nodes: int


def list_color(lam: Sequence[int], lists: Sequence[Iterable[int]], budget: Optional[int] = None) -> ListColorResult:
    """Rows permuting the given lists with distinct column entries."""
    lam = as_partition(lam)
    lists = [sorted(set(l)) for l in lists]
    if len(lists) != len(lam) or any(len(l) != p for l, p in zip(lists, lam)):
        raise ValueError("list sizes must match the row lengths")
    res = fill_distinct(lam, lists, budget=budget)
    return ListColorResult(Tableau(res.rows) if res.found else None, res.status, res.nodes)


def shifted_latin(mu: Sequence[int], lam: Sequence[int], budget: Optional[int] = None) -> Tableau:
    """Tableau of shape mu whose row i permutes lam_i+1..lam_i+mu_i."""
    mu = as_partition(mu)
    lists = [range((lam[i] if i < len(lam) else 0) + 1, (lam[i] if i < len(lam) else 0) + p + 1) for i, p in enumerate(mu)]
    res = list_color(mu, lists, budget)
    if res.tableau is None:
        raise ConstructionError(f"no shifted tableau of shape {tuple(mu)} ({res.status})")
    return res.tableau


def random_list_system(lam: Sequence[int], rng: random.Random, spread: int = 2) -> list[list[int]]:
    """Random lists I_i of size lam_i drawn from 1..lam_1 + spread."""
    lam = as_partition(lam)
    pool = list(range(1, lam.largest + spread + 1))
    return [sorted(rng.sample(pool, p)) for p in lam]


@dataclass(frozen=True)
class Orientation:
    shape: Partition
    arcs: frozenset[tuple[Cell, Cell]]  # (tail, head)

    def out_degree(self, cell: Cell) -> int:
        return sum(1 for t, _ in self.arcs if t == cell)

    def out_degrees(self) -> Counter:
        return Counter(t for t, _ in self.arcs)

    def is_antisymmetric(self) -> bool:
        return not any((h, t) in self.arcs for t, h in self.arcs)

    def covers_line_graph(self) -> bool:
        """Exactly one arc between each pair of cells sharing a line."""
        cells = sorted(diagram_cells(self.shape))
        want = {
            frozenset((a, b))
            for a, b in zip_pairs(cells)
            if a[0] == b[0] or a[1] == b[1]
        }
        have = {frozenset(a) for a in self.arcs}
        return want == have and len(have) == len(self.arcs)

    def cliques_acyclic(self) -> bool:
        """Each row and column tournament is transitive (hence acyclic)."""
        lam = self.shape
        lines = [[(r, c) for c in range(1, p + 1)] for r, p in enumerate(lam, start=1)]
        lines += [[(r, c) for r in range(1, h + 1)] for c, h in enumerate(conjugate(lam), start=1)]
        for line in lines:
            outs = sorted(sum(1 for b in line if (a, b) in self.arcs) for a in line)
            if outs != list(range(len(line))):
                return False
        return True


def zip_pairs(items):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


def galvin_orientation(t: Tableau) -> Orientation:
    """Orient the line graph from a (weakly) Latin tableau: row edges point
    to the larger entry, column edges to the smaller one (equal column
    entries: to the higher row).  A cell in row i then has out-degree at
    most lam_i - 1."""
    if not validate_weakly_latin(t):
        raise ConstructionError("tableau is not weakly Latin")
    lam = t.shape
    arcs = set()
    for r, row in enumerate(t.rows, start=1):
        for c1 in range(1, len(row) + 1):
            for c2 in range(c1 + 1, len(row) + 1):
                a, b = (r, c1), (r, c2)
                arcs.add((a, b) if t.entry(a) < t.entry(b) else (b, a))
    for c, h in enumerate(conjugate(lam), start=1):
        for r1 in range(1, h + 1):
            for r2 in range(r1 + 1, h + 1):
                a, b = (r1, c), (r2, c)
                # key (entry, row): the larger key points to the smaller
                arcs.add((b, a) if (t.entry(a), r1) < (t.entry(b), r2) else (a, b))
    return Orientation(lam, frozenset(arcs))


@dataclass
class GreedyResult:
    rows: list[Optional[list[int]]]  # top row first; None for rows not filled
    success: bool
    stuck_row: Optional[int] = None  # 1-based row where no assignment exists

    @property
    def tableau(self) -> Optional[Tableau]:
        return Tableau(self.rows) if self.success else None


def _completable(positions: list[int], values: set, forbidden: list[set]) -> bool:
    """Perfect matching of the remaining positions to the remaining values."""
    match: dict = {}

    def aug(p, seen):
        for v in values:
            if v in forbidden[p] or v in seen:
                continue
            seen.add(v)
            if v not in match or aug(match[v], seen):
                match[v] = p
                return True
        return False

    return all(aug(p, set()) for p in positions)


def greedy_lex_fill(lam: Sequence[int]) -> GreedyResult:
    """Fill rows bottom-up, each with the lexicographically largest
    arrangement of 1..lam_i that keeps the columns distinct."""
    lam = as_partition(lam)
    col_used: list[set] = [set() for _ in range(lam.largest)]
    rows: list[Optional[list[int]]] = [None] * len(lam)
    for r in range(len(lam) - 1, -1, -1):
        p = lam[r]
        forbidden = col_used[:p]
        left = set(range(1, p + 1))
        row: list[int] = []
        for pos in range(p):
            for v in sorted(left, reverse=True):
                if v in forbidden[pos]:
                    continue
                if _completable(list(range(pos + 1, p)), left - {v}, forbidden):
                    row.append(v)
                    left.discard(v)
                    break
            else:
                return GreedyResult(rows, False, r + 1)
        rows[r] = row
        for c, v in enumerate(row):
            col_used[c].add(v)
    return GreedyResult(rows, True)
