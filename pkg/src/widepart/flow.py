"""Integral max-flow and maximum k-stable sets of diagram line graphs.

A k-stable set of the line graph of the row/column bipartite graph is the
same thing as a set of cells with at most k cells in every row and every
column.  Its maximum size is the value of a unit-capacity network with
capacity k on the source and sink arcs.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .cells import Cell, diagram_cells, max_degree, vertex_degrees

Shape = Union[Sequence[int], frozenset]


class FlowNetwork:
    """Directed network with integer capacities, solved by Dinic's method.

    Arc ``i`` and its residual twin ``i ^ 1`` are stored side by side.
    """

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.adj: list[list[int]] = [[] for _ in range(n_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.flow: list[int] = []

    def add_arc(self, u: int, v: int, cap: int) -> int:
        if cap < 0:
            raise ValueError("capacities must be nonnegative")
        idx = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.flow += [0, 0]
        self.adj[u].append(idx)
        self.adj[v].append(idx + 1)
        return idx

    def tail(self, arc: int) -> int:
        return self.to[arc ^ 1]

    def _levels(self, s: int, t: int) -> Optional[list[int]]:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if level[v] < 0 and self.flow[a] < self.cap[a]:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        adj = self.adj[u]
        while it[u] < len(adj):
            a = adj[it[u]]
            v = self.to[a]
            room = self.cap[a] - self.flow[a]
            if room > 0 and level[v] == level[u] + 1:
                pushed = self._push(v, t, min(limit, room), level, it)
                if pushed:
                    self.flow[a] += pushed
                    self.flow[a ^ 1] -= pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> "FlowResult":
        """Augment to a maximum flow (starting from the current flow)."""
        value = sum(self.flow[a] for a in self.adj[s] if a % 2 == 0)
        while True:
            level = self._levels(s, t)
            if level is None:
                break
            it = [0] * self.n
            while True:
                pushed = self._push(s, t, 1 << 60, level, it)
                if not pushed:
                    break
                value += pushed
        cut = self._reachable(s)
        cut_capacity = sum(
            self.cap[a]
            for u in cut
            for a in self.adj[u]
            if a % 2 == 0 and self.to[a] not in cut
        )
        if cut_capacity != value:
            raise AssertionError(f"max-flow {value} != min-cut {cut_capacity}")
        self._check_conservation(s, t)
        return FlowResult(value, list(self.flow[0::2]), frozenset(cut), cut_capacity)

    def _reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if v not in seen and self.flow[a] < self.cap[a]:
                    seen.add(v)
                    queue.append(v)
        return seen

    def _check_conservation(self, s: int, t: int) -> None:
        for u in range(self.n):
            if u in (s, t):
                continue
            net = sum(self.flow[a] for a in self.adj[u])
            if net != 0:
                raise AssertionError(f"flow not conserved at node {u}")
        for a in range(0, len(self.to), 2):
            if not 0 <= self.flow[a] <= self.cap[a]:
                raise AssertionError(f"arc {a} flow {self.flow[a]} outside [0, {self.cap[a]}]")


@dataclass(frozen=True)
class FlowResult:
    value: int
    arc_flows: list[int]  # flow on each forward arc, in insertion order
    source_side: frozenset[int]  # source side of a minimum cut
    cut_capacity: int


def as_cells(shape: Shape) -> frozenset[Cell]:
    if isinstance(shape, (set, frozenset)):
        return frozenset(shape)
    return diagram_cells(shape)


@dataclass
class StableSetNetwork:
    """Source -> rows (cap k) -> columns (one unit arc per cell) -> sink (cap k)."""

    network: FlowNetwork
    cell_arcs: dict[Cell, int] = field(default_factory=dict)
    source: int = 0
    sink: int = 1


def stable_set_network(
    cells: Iterable[Cell],
    k: Union[int, Mapping] = 1,
    *,
    caps: Optional[Mapping] = None,
    seed: Optional[int] = None,
) -> StableSetNetwork:
    """Build the network whose max flow is the largest degree-bounded subset.

    ``caps`` overrides the per-vertex bound (keys ``("r", i)``/``("c", j)``);
    vertices missing from it get ``k``.  ``seed`` shuffles arc order so
    different seeds tend to return different maximum sets.
    """
    cells = sorted(cells)
    if seed is not None:
        random.Random(seed).shuffle(cells)
    rows = sorted({r for r, _ in cells})
    cols = sorted({c for _, c in cells})
    node = {("r", r): 2 + i for i, r in enumerate(rows)}
    node.update({("c", c): 2 + len(rows) + i for i, c in enumerate(cols)})
    net = FlowNetwork(2 + len(rows) + len(cols))
    caps = caps or {}
    for r in rows:
        net.add_arc(0, node["r", r], max(0, caps.get(("r", r), k)))
    sca = StableSetNetwork(net)
    for cell in cells:
        r, c = cell
        sca.cell_arcs[cell] = net.add_arc(node["r", r], node["c", c], 1)
    for c in cols:
        net.add_arc(node["c", c], 1, max(0, caps.get(("c", c), k)))
    return sca


def max_bounded_subset(
    cells: Iterable[Cell],
    k: int,
    *,
    caps: Optional[Mapping] = None,
    seed: Optional[int] = None,
) -> frozenset[Cell]:
    """A largest subset of ``cells`` meeting the degree bounds."""
    sca = stable_set_network(cells, k, caps=caps, seed=seed)
    result = sca.network.max_flow(sca.source, sca.sink)
    chosen = frozenset(c for c, a in sca.cell_arcs.items() if result.arc_flows[a // 2] == 1)
    assert len(chosen) == result.value
    return chosen


def alpha_k(shape: Shape, k: int) -> int:
    """Size of a largest k-stable set of the line graph of the diagram."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    cells = as_cells(shape)
    if k == 0 or not cells:
        return 0
    sca = stable_set_network(cells, k)
    return sca.network.max_flow(sca.source, sca.sink).value


def max_k_stable_set(
    shape: Shape,
    k: int,
    *,
    pinned: Iterable[Cell] = (),
    within: Optional[Iterable[Cell]] = None,
    seed: Optional[int] = None,
) -> frozenset[Cell]:
    """Largest F with pinned <= F <= within and at most k cells per line.

    Without ``pinned``/``within`` this is a maximum k-stable set.  With them
    it answers extension questions: if the returned set is smaller than
    ``alpha_k`` then no maximum k-stable set lies between the two bounds.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cells = as_cells(shape)
    pinned = frozenset(pinned)
    pool = cells if within is None else frozenset(within) & cells
    if not pinned <= pool:
        raise ValueError("pinned cells must lie inside the search region")
    if max_degree(pinned) > k:
        return frozenset()
    used = vertex_degrees(pinned)
    caps = {v: k - d for v, d in used.items()}
    extra = max_bounded_subset(pool - pinned, k, caps=caps, seed=seed)
    return pinned | extra


def alpha_table(shape: Shape) -> list[int]:
    """[alpha_0, alpha_1, ..., alpha_D] where D is the maximum line length."""
    cells = as_cells(shape)
    top = max_degree(cells)
    return [alpha_k(cells, k) for k in range(top + 1)]


def differences(table: Sequence[int]) -> list[int]:
    return [table[k] - table[k - 1] for k in range(1, len(table))]


def delta_alpha(shape: Shape) -> list[int]:
    return differences(alpha_table(shape))
