"""Greene-Kleitman data of the line graph of a Young diagram.

The maximal cliques of the line graph are the rows and columns of the
diagram, so a largest k-clique is the union of the first i rows and the
first j columns for some i + j = k.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cells import diagram_cells
from .chains import build_chain, chain_to_cover
from .covers import CLIQUE, STABLE, Cover, is_completely_saturated, is_uniform, row_cover
from .flow import alpha_k, differences
from .partitions import Partition, as_partition, conjugate
from .search import BUDGET, FOUND, NONE, fill_distinct


def omega_k(lam: Sequence[int], k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    lam = as_partition(lam)
    best = 0
    for i in range(min(k, len(lam)) + 1):
        j = k - i
        best = max(best, sum(lam[:i]) + sum(min(p, j) for p in lam[i:]))
    return best


def table_length(lam: Sequence[int]) -> int:
    lam = as_partition(lam)
    return lam.largest + len(lam)


def omega_table(lam: Sequence[int]) -> list[int]:
    return [omega_k(lam, k) for k in range(table_length(lam) + 1)]


def alpha_table_full(lam: Sequence[int]) -> list[int]:
    cells = diagram_cells(lam)
    return [alpha_k(cells, k) for k in range(table_length(lam) + 1)]


def is_partition_sequence(seq: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:])) and all(v >= 0 for v in seq)


def strip_zeros(seq: Sequence[int]) -> list[int]:
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return out


def min_cover_norm(k: int, partner: Sequence[int], n_cells: int) -> int:
    """Least value of sum(min(k, |block|)) over all covers whose blocks are
    of the kind counted by ``partner`` (omega for cliques, alpha for stable
    sets): t big blocks cost k each, everything else costs one per cell."""
    return min(k * t + n_cells - partner[t] for t in range(len(partner)))


def saturated_cover_exists(k: int, table: Sequence[int], partner: Sequence[int], n_cells: int) -> bool:
    """Whether some cover is k-saturated.

    A clique cover is k-saturated when its norm equals alpha_k; since every
    cover has norm >= alpha_k, that happens iff the least norm over clique
    covers (computed from omega) equals alpha_k.  Stable covers swap roles.
    """
    return min_cover_norm(k, partner, n_cells) == table[min(k, len(table) - 1)]


@dataclass
class CoverSearch:
    status: str  # FOUND, NONE (proven) or BUDGET
    cover: Optional[Cover]
    method: str
    nodes: int = 0


def uniform_clique_cover_search(lam: Sequence[int], budget: int = 10**6) -> CoverSearch:
    lam = as_partition(lam)
    cells = diagram_cells(lam)
    delta = strip_zeros(differences(omega_table(lam)))
    if not is_partition_sequence(delta):
        return CoverSearch(NONE, None, "delta-omega is not a partition")
    rows = row_cover(lam)
    if is_uniform(rows, delta):
        return CoverSearch(FOUND, rows, "rows")
    # Exhaustive: grow blocks of the prescribed sizes around the first open cell.
    lines: dict = {}
    for r, c in cells:
        lines.setdefault(("r", r), []).append((r, c))
        lines.setdefault(("c", c), []).append((r, c))
    need = sorted(delta, reverse=True)
    nodes = 0

    def rec(left: frozenset, sizes: list[int], acc: list) -> Optional[list]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise TimeoutError
        if not left:
            return list(acc)
        first = min(left)
        r, c = first
        seen = set()
        for key in (("r", r), ("c", c)):
            rest = [x for x in lines[key] if x in left and x != first]
            for size in sorted(set(sizes), reverse=True):
                for extra in itertools.combinations(rest, size - 1):
                    block = frozenset((first,) + extra)
                    if block in seen:
                        continue
                    seen.add(block)
                    sizes.remove(size)
                    acc.append(block)
                    got = rec(left - block, sizes, acc)
                    if got is not None:
                        return got
                    acc.pop()
                    sizes.append(size)
                    sizes.sort(reverse=True)
        return None

    try:
        blocks = rec(cells, need, [])
    except TimeoutError:
        return CoverSearch(BUDGET, None, "exhaustive", nodes)
    if blocks is None:
        return CoverSearch(NONE, None, "exhaustive", nodes)
    return CoverSearch(FOUND, Cover(CLIQUE, cells, blocks), "exhaustive", nodes)


def cover_from_rows(lam: Sequence[int], rows: Sequence[Sequence[int]]) -> Cover:
    """Stable set cover whose blocks are the value classes of a filling."""
    classes: dict = {}
    for r, row in enumerate(rows, start=1):
        for c, v in enumerate(row, start=1):
            classes.setdefault(v, set()).add((r, c))
    return Cover(STABLE, diagram_cells(lam), classes.values())


def uniform_stable_cover_search(
    lam: Sequence[int], budget: Optional[int] = None, use_chain: bool = True
) -> CoverSearch:
    """A stable set cover whose block sizes are Delta-alpha.

    The chain construction is tried first; otherwise a filling with content
    Delta-alpha is searched exhaustively (NONE is then a proof).
    """
    lam = as_partition(lam)
    cells = diagram_cells(lam)
    if not cells:
        return CoverSearch(FOUND, Cover(STABLE, cells, []), "empty")
    if use_chain:
        res = build_chain(cells)
        if res.ok:
            return CoverSearch(FOUND, chain_to_cover(res.chain, cells), "chain")
    delta = strip_zeros(differences(alpha_table_full(lam)))
    colors = range(1, len(delta) + 1)
    content = {v: d for v, d in zip(colors, delta)}
    found = fill_distinct(lam, [list(colors)] * len(lam), content=content, budget=budget)
    if found.status == FOUND:
        return CoverSearch(FOUND, cover_from_rows(lam, found.rows), "exhaustive", found.nodes)
    return CoverSearch(found.status, None, "exhaustive", found.nodes)


@dataclass
class AnalysisReport:
    shape: Partition
    omega: list[int]
    alpha: list[int]
    delta_omega: list[int]
    delta_alpha: list[int]
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "omega": self.omega,
            "alpha": self.alpha,
            "delta_omega": self.delta_omega,
            "delta_alpha": self.delta_alpha,
            "flags": self.flags,
            "witnesses": self.witnesses,
        }


def _tri(status: str):
    return {FOUND: True, NONE: False, BUDGET: None}[status]


def check_delta_conjugacy(
    lam: Sequence[int], search_budget: Optional[int] = None, covers: bool = True
) -> AnalysisReport:
    """Omega/alpha tables, Delta sequences, conjugacy and cover findings.

    Cover flags are True/False when settled and None when a search ran out
    of budget.  ``covers=False`` skips the cover searches.
    """
    lam = as_partition(lam)
    n = lam.weight
    omega = omega_table(lam)
    alpha = alpha_table_full(lam)
    d_omega = differences(omega)
    d_alpha = differences(alpha)
    om_part = is_partition_sequence(d_omega)
    al_part = is_partition_sequence(d_alpha)
    conj = om_part and al_part and strip_zeros(d_omega) == list(conjugate(strip_zeros(d_alpha)))
    report = AnalysisReport(lam, omega, alpha, d_omega, d_alpha)
    f = report.flags
    f["delta_omega_is_partition"] = om_part
    f["delta_alpha_is_partition"] = al_part
    f["delta_conjugacy"] = conj
    top = len(omega) - 1
    f["k_saturated_clique_cover"] = {
        k: saturated_cover_exists(k, alpha, omega, n) for k in range(1, top + 1)
    }
    f["k_saturated_stable_cover"] = {
        k: saturated_cover_exists(k, omega, alpha, n) for k in range(1, top + 1)
    }
    if lam:
        rows = row_cover(lam)
        f["rows_uniform"] = is_uniform(rows, d_omega)
        f["rows_completely_saturated"] = is_completely_saturated(rows, alpha)
    if covers:
        cs = uniform_clique_cover_search(lam)
        f["uniform_clique_cover"] = _tri(cs.status)
        report.witnesses["uniform_clique_cover"] = (
            {"method": cs.method, **cs.cover.to_json()} if cs.cover else {"method": cs.method}
        )
        ss = uniform_stable_cover_search(lam, budget=search_budget)
        f["uniform_stable_cover"] = _tri(ss.status)
        report.witnesses["uniform_stable_cover"] = (
            {"method": ss.method, **ss.cover.to_json()} if ss.cover else {"method": ss.method}
        )
    return report


def t_phenomenon_witnesses(lam: Sequence[int], stable_cover: Cover) -> dict:
    """For each k, a clique cover and a stable cover saturated at k and k+1.

    Uses the row cover and the given stable cover (typically one read off
    a Latin tableau); entries are None where these do not work.
    """
    lam = as_partition(lam)
    omega = omega_table(lam)
    alpha = alpha_table_full(lam)
    rows = row_cover(lam)
    from .covers import is_k_saturated

    out = {}
    for k in range(1, len(omega) - 1):
        clique = rows if all(is_k_saturated(rows, q, alpha) for q in (k, k + 1)) else None
        stable = (
            stable_cover
            if all(is_k_saturated(stable_cover, q, omega) for q in (k, k + 1))
            else None
        )
        out[k] = (clique, stable)
    return out
