"""Nested chains of maximum k-stable sets and the stable set covers they give.

Let the distinct part sizes of the Delta-alpha sequence be a_1 > ... > a_b
and let k_i count the parts of size at least a_i.  A chain
F_1 < F_2 < ... < F_b with F_i a maximum k_i-stable set exists exactly
when a uniform stable set cover does.  The layers G_i = F_i - F_{i-1} are
first pushed down to maximum degree k_i - k_{i-1} by alternating-path
switches, then each layer is split into matchings.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cells import Cell, vertex_degrees
from .covers import Cover, STABLE
from .flow import Shape, alpha_table, as_cells, differences, max_k_stable_set
from .matrices import bvn_decompose

OK, STUCK, BUDGET = "ok", "stuck", "budget"


@dataclass
class StableSetChain:
    thresholds: list[int]  # k_1 < ... < k_b
    sizes: list[int]  # a_1 > ... > a_b
    sets: list[frozenset[Cell]]  # F_1 < ... < F_b

    @property
    def layers(self) -> list[frozenset[Cell]]:
        prev: frozenset[Cell] = frozenset()
        out = []
        for f in self.sets:
            out.append(f - prev)
            prev = f
        return out

    @property
    def steps(self) -> list[int]:
        return [k - p for k, p in zip(self.thresholds, [0] + self.thresholds[:-1])]


@dataclass
class ChainResult:
    status: str
    chain: Optional[StableSetChain]
    detail: str = ""
    switches: int = 0
    trace: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == OK


def chain_levels(delta: Sequence[int]) -> tuple[list[int], list[int]]:
    """Distinct positive part sizes of delta (decreasing) and their k_i."""
    sizes = sorted({d for d in delta if d > 0}, reverse=True)
    return sizes, [sum(1 for d in delta if d >= a) for a in sizes]


def _extend_up(cells, thresholds, alpha, seed) -> Optional[list[frozenset[Cell]]]:
    sets: list[frozenset[Cell]] = []
    prev: frozenset[Cell] = frozenset()
    for k in thresholds:
        f = max_k_stable_set(cells, k, pinned=prev, seed=seed)
        if len(f) != alpha[k]:
            return None
        sets.append(f)
        prev = f
    return sets


def _restrict_down(cells, thresholds, alpha, seed) -> Optional[list[frozenset[Cell]]]:
    sets: list[frozenset[Cell]] = []
    outer = cells
    for k in reversed(thresholds):
        f = max_k_stable_set(cells, k, within=outer, seed=seed)
        if len(f) != alpha[k]:
            return None
        sets.append(f)
        outer = f
    return sets[::-1]


def initial_chains(cells, thresholds, alpha, attempts: int):
    """Nested maximum stable sets, grown upward from F_1 or carved downward
    from F_b, under a few fixed arc orders."""
    for seed in [None] + list(range(attempts - 1)):
        for build in (_extend_up, _restrict_down):
            sets = build(cells, thresholds, alpha, seed)
            if sets is not None:
                yield sets, f"{build.__name__.strip('_')}(seed={seed})"


def _edge_ends(cell: Cell) -> tuple[tuple, tuple]:
    return ("r", cell[0]), ("c", cell[1])


def _incidence(cells) -> dict:
    inc: dict = {}
    for cell in cells:
        for v in _edge_ends(cell):
            inc.setdefault(v, []).append(cell)
    for v in inc:
        inc[v].sort()
    return inc


def _other(cell: Cell, v: tuple) -> tuple:
    a, b = _edge_ends(cell)
    return b if v == a else a


def _find_switch(upper, lower, d_up, d_low, g):
    """Alternating path that lowers the number of degree-g vertices of the
    upper layer: starts at such a vertex x on an upper-layer edge,
    alternates upper/lower edges, and ends at a vertex z on x's side whose
    upper degree is at most g - 2.  x gains one lower edge, so it needs
    room below d_low."""
    deg_up = vertex_degrees(upper)
    deg_low = vertex_degrees(lower)
    inc_up = _incidence(upper)
    inc_low = _incidence(lower)
    starts = sorted(v for v, d in deg_up.items() if d == g)
    for x in starts:
        if deg_low[x] >= d_low:
            continue
        # BFS over vertices on x's side; parent records the two edges used.
        parent = {x: None}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for e1 in inc_up.get(u, ()):
                y = _other(e1, u)
                for e2 in inc_low.get(y, ()):
                    if e2 == e1:
                        continue
                    z = _other(e2, y)
                    if z in parent:
                        continue
                    parent[z] = (u, e1, e2)
                    if deg_up[z] <= g - 2:
                        path = []
                        w = z
                        while parent[w] is not None:
                            pu, a, b = parent[w]
                            path.append((a, b))
                            w = pu
                        return path[::-1]
                    queue.append(z)
    return None


def repair_chain(sets: list[frozenset[Cell]], thresholds: list[int], max_switches: int):
    """Lower layer degrees to the steps k_i - k_{i-1} by path switches.

    Returns (status, sets, switches).
    """
    sets = list(sets)
    steps = [k - p for k, p in zip(thresholds, [0] + thresholds[:-1])]
    total = 0
    for j in range(1, len(sets)):
        used = 0
        while True:
            below = sets[j - 2] if j >= 2 else frozenset()
            lower = sets[j - 1] - below
            upper = sets[j] - sets[j - 1]
            deg = vertex_degrees(upper)
            g = max(deg.values(), default=0)
            if g <= steps[j]:
                break
            if used >= max_switches:
                return BUDGET, sets, total
            path = _find_switch(upper, lower, steps[j], steps[j - 1], g)
            if path is None:
                return STUCK, sets, total
            to_lower = {a for a, _ in path}
            to_upper = {b for _, b in path}
            sets[j - 1] = (sets[j - 1] - to_upper) | to_lower
            used += 1
            total += 1
    return OK, sets, total


def chain_is_valid(chain: StableSetChain, alpha: Sequence[int]) -> bool:
    prev: frozenset[Cell] = frozenset()
    for f, k, step in zip(chain.sets, chain.thresholds, chain.steps):
        if not prev <= f or len(f) != alpha[k]:
            return False
        layer = vertex_degrees(f - prev)
        if max(layer.values(), default=0) > step:
            return False
        prev = f
    return True


def build_chain(
    shape: Shape, max_switches: Optional[int] = None, attempts: int = 4
) -> ChainResult:
    """Chain of maximum k_i-stable sets with layers of degree <= k_i - k_{i-1}.

    ``max_switches`` caps the path switches per level (default |cells|^2).
    Up to ``attempts`` arc orders are tried for the starting chain.  A STUCK
    result means no start could be repaired; it does not prove that no
    chain exists.
    """
    cells = as_cells(shape)
    alpha = alpha_table(cells)
    sizes, thresholds = chain_levels(differences(alpha))
    if not cells:
        return ChainResult(OK, StableSetChain([], [], []))
    if max_switches is None:
        max_switches = len(cells) ** 2
    trace: list[str] = []
    status, chain, total = STUCK, None, 0
    for sets, how in initial_chains(cells, thresholds, alpha, attempts):
        status, sets, n = repair_chain(sets, thresholds, max_switches)
        total += n
        trace.append(f"{how}: {status} after {n} switches")
        chain = StableSetChain(thresholds, sizes, sets)
        if status == OK:
            if not chain_is_valid(chain, alpha):
                raise AssertionError("repaired chain violates its invariants")
            return ChainResult(OK, chain, "", total, trace)
    if chain is None:
        return ChainResult(STUCK, None, "no nested chain of maximum stable sets found", 0, trace)
    detail = "switch budget exhausted" if status == BUDGET else "no admissible switch"
    return ChainResult(status, chain, detail, total, trace)


def chain_to_cover(chain: StableSetChain, ambient=None) -> Cover:
    """Split every layer into k_i - k_{i-1} matchings of size a_i."""
    blocks = []
    for layer, step, size in zip(chain.layers, chain.steps, chain.sizes):
        for m in bvn_decompose(layer, step):
            if len(m) != size:
                raise AssertionError(
                    f"layer matching of size {len(m)}, expected {size}: the chain is not maximal"
                )
            blocks.append(m)
    if ambient is None:
        ambient = chain.sets[-1] if chain.sets else frozenset()
    return Cover(STABLE, as_cells(ambient), blocks)
