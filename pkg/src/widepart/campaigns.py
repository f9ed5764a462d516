"""Batch verification campaigns with reproducible JSON reports.

Items are produced in a fixed order and reports exclude timing unless
asked for, so equal parameters give byte-identical JSON.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Optional

from .cells import diagram_cells, max_degree, skew_cells, sort_cells
from .chains import build_chain
from .flow import alpha_table, max_k_stable_set
from .partitions import (
    WIDE_COUNTS,
    count_wide,
    enumerate_wide,
    format_partition,
    is_wide,
    partitions_in_box,
    wide_partitions_up_to,
)
from .search import BUDGET, NONE, default_budget
from .tableau import greedy_lex_fill, latin_tableau, validate_latin

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4

# Bottom rows printed for the greedy failure on (6,6,6,5,2,2); row 1 is stuck.
GREEDY_SHAPE = (6, 6, 6, 5, 2, 2)
GREEDY_BOTTOM_ROWS = (
    (4, 6, 5, 1, 3, 2),
    (6, 5, 4, 3, 2, 1),
    (5, 4, 3, 2, 1),
    (1, 2),
    (2, 1),
)


@dataclass
class CampaignReport:
    name: str
    parameters: dict
    items: list[dict] = field(default_factory=list)
    wall_clock: float = 0.0
    exit_code: int = EXIT_OK

    @property
    def passed(self) -> bool:
        return all(item["passed"] for item in self.items)

    def failures(self) -> list[dict]:
        return [item for item in self.items if not item["passed"]]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "campaign": self.name,
            "parameters": self.parameters,
            "passed": self.passed,
            "n_items": len(self.items),
            "n_failed": len(self.failures()),
            "items": self.items,
        }
        if timing:
            out["wall_clock_s"] = round(self.wall_clock, 3)
        return out

    def dumps(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=1)


def sequence_campaign(n_max: int) -> CampaignReport:
    """Count wide partitions of n = 1..n_max against the stored sequence."""
    start = time.perf_counter()
    report = CampaignReport("sequence", {"n_max": n_max})
    for n in range(1, n_max + 1):
        got = count_wide(n)
        expected = WIDE_COUNTS[n - 1] if n <= len(WIDE_COUNTS) else None
        report.items.append(
            {"n": n, "count": got, "expected": expected, "passed": expected is None or got == expected}
        )
    report.wall_clock = time.perf_counter() - start
    report.exit_code = EXIT_OK if report.passed else EXIT_NEGATIVE
    return report


def wide_in_box(rows: int, cols: int) -> list:
    return sorted((lam for lam in partitions_in_box(rows, cols) if lam and is_wide(lam)), key=lambda p: (sum(p), p))


def _verify_one(args) -> dict:
    lam, method, budget, max_switches = args
    res = latin_tableau(lam, method=method, budget=budget, max_switches=max_switches)
    ok = res.tableau is not None and validate_latin(res.tableau)
    item = {"shape": format_partition(lam), "status": res.status, "method": res.method, "passed": ok}
    if res.tableau is not None and not ok:
        item["status"] = "invalid"
    return item


def verify_wpc(
    max_cells: Optional[int] = None,
    box: Optional[tuple[int, int]] = None,
    method: str = "auto",
    budget: Optional[int] = None,
    max_switches: Optional[int] = None,
    workers: int = 1,
    shapes: Optional[Iterable] = None,
) -> CampaignReport:
    """Build and validate a Latin tableau for every wide shape in range.

    Shapes are either all wide partitions with at most ``max_cells`` cells
    or those fitting in a ``box`` (rows, cols).  With several workers the
    shapes are handed out in fixed chunks and results come back in input
    order, so the report does not depend on scheduling.
    """
    if (max_cells is None) == (box is None) and shapes is None:
        raise ValueError("give exactly one of max_cells or box")
    if budget is None:
        budget = default_budget()
    start = time.perf_counter()
    if shapes is not None:
        todo = list(shapes)
        params: dict = {"shapes": [format_partition(s) for s in todo]}
    elif box is not None:
        todo = wide_in_box(*box)
        params = {"box": f"{box[0]}x{box[1]}"}
    else:
        todo = wide_partitions_up_to(max_cells)
        params = {"max_cells": max_cells}
    params.update({"method": method, "budget": budget, "max_switches": max_switches})
    report = CampaignReport("verify_wpc", params)
    jobs = [(lam, method, budget, max_switches) for lam in todo]
    if workers > 1:
        with Pool(workers) as pool:
            report.items = list(pool.imap(_verify_one, jobs, chunksize=64))
    else:
        report.items = [_verify_one(j) for j in jobs]
    report.wall_clock = time.perf_counter() - start
    failed = report.failures()
    if any(it["status"] in (NONE, "invalid") and it["method"] == "backtrack" for it in failed):
        # exhausted search on a wide shape: the conjecture would be false
        report.exit_code = EXIT_COUNTEREXAMPLE
    elif failed:
        report.exit_code = EXIT_BUDGET
    return report


def _cells_json(cells) -> list:
    return [list(c) for c in sort_cells(cells)]


def greedy_item() -> dict:
    res = greedy_lex_fill(GREEDY_SHAPE)
    bottom = [tuple(r) for r in res.rows[1:] if r is not None]
    ok = not res.success and res.stuck_row == 1 and tuple(bottom) == GREEDY_BOTTOM_ROWS
    return {
        "id": "greedy",
        "shape": format_partition(GREEDY_SHAPE),
        "stuck_row": res.stuck_row,
        "rows": [r for r in res.rows],
        "passed": ok,
    }


def certify_not_extendible(cells, f_low, k_low: int, k_high: int, alpha) -> bool:
    """f_low is a maximum k_low-stable set and no maximum k_high-stable set
    contains it (the pinned flow is exact over all supersets)."""
    if len(f_low) != alpha[k_low] or max_degree(f_low) > k_low:
        return False
    return len(max_k_stable_set(cells, k_high, pinned=f_low)) < alpha[k_high]


def certify_no_inner_max(cells, f_high, k_low: int, k_high: int, alpha) -> bool:
    """f_high is a maximum k_high-stable set containing no maximum
    k_low-stable set (the restricted flow is exact over all subsets)."""
    if len(f_high) != alpha[k_high] or max_degree(f_high) > k_high:
        return False
    return len(max_k_stable_set(cells, k_low, within=f_high)) < alpha[k_low]


def extension_items(max_n: int = 30, seeds: int = 30) -> list[dict]:
    """Wide shapes where a maximum 4-stable set is not extendible to a
    maximum 5-stable set, and where a maximum 5-stable set contains no
    maximum 4-stable set.  Candidates come from seeded flows."""
    found: dict = {}
    for n in range(10, max_n + 1):
        for lam in enumerate_wide(n):
            if len(lam) < 5 or lam[0] < 5:
                continue
            cells = diagram_cells(lam)
            alpha = alpha_table(cells)
            for seed in range(seeds):
                if "not_extendible" not in found:
                    f4 = max_k_stable_set(cells, 4, seed=seed)
                    if certify_not_extendible(cells, f4, 4, 5, alpha):
                        found["not_extendible"] = {
                            "id": "not_extendible",
                            "shape": format_partition(lam),
                            "seed": seed,
                            "set": _cells_json(f4),
                            "alpha_4": alpha[4],
                            "alpha_5": alpha[5],
                            "best_superset": len(max_k_stable_set(cells, 5, pinned=f4)),
                            "passed": True,
                        }
                if "no_inner_max" not in found:
                    f5 = max_k_stable_set(cells, 5, seed=seed)
                    if certify_no_inner_max(cells, f5, 4, 5, alpha):
                        found["no_inner_max"] = {
                            "id": "no_inner_max",
                            "shape": format_partition(lam),
                            "seed": seed,
                            "set": _cells_json(f5),
                            "alpha_4": alpha[4],
                            "alpha_5": alpha[5],
                            "best_subset": len(max_k_stable_set(cells, 4, within=f5)),
                            "passed": True,
                        }
                if len(found) == 2:
                    return [found["not_extendible"], found["no_inner_max"]]
    out = []
    for key in ("not_extendible", "no_inner_max"):
        out.append(found.get(key, {"id": key, "status": BUDGET, "passed": False}))
    return out


def is_unique_max(cells, k: int, f) -> bool:
    """No other maximum k-stable set exists: any other one would miss a
    cell of f, so deleting each cell of f in turn must lower alpha_k."""
    return all(len(max_k_stable_set(cells, k, within=cells - {e})) < len(f) for e in f)


def skew_item(max_side: int = 6) -> dict:
    """A skew shape whose maximum 2-stable and 3-stable sets are both
    unique and not nested, so no chain of maximum k-stable sets exists."""
    for side in range(3, max_side + 1):
        for outer in partitions_in_box(side, side):
            if len(outer) < side or not outer or outer[0] < side:
                continue
            for inner in partitions_in_box(side - 1, side - 1):
                if any(i > o for i, o in zip(inner, outer)):
                    continue
                cells = skew_cells(outer, inner)
                if len(cells) < 6:
                    continue
                f2 = max_k_stable_set(cells, 2)
                f3 = max_k_stable_set(cells, 3)
                if f2 <= f3:
                    continue
                if is_unique_max(cells, 2, f2) and is_unique_max(cells, 3, f3):
                    return {
                        "id": "skew_no_chain",
                        "outer": format_partition(outer),
                        "inner": format_partition(inner),
                        "max_2_stable": _cells_json(f2),
                        "max_3_stable": _cells_json(f3),
                        "outside_3_stable": _cells_json(f2 - f3),
                        "chain_status": build_chain(cells).status,
                        "passed": True,
                    }
    return {"id": "skew_no_chain", "status": BUDGET, "passed": False}


def counterexamples_campaign() -> CampaignReport:
    start = time.perf_counter()
    report = CampaignReport("counterexamples", {"extension_max_n": 30, "seeds": 30, "skew_max_side": 6})
    report.items.append(greedy_item())
    report.items.extend(extension_items())
    report.items.append(skew_item())
    report.wall_clock = time.perf_counter() - start
    if not report.passed:
        report.exit_code = EXIT_BUDGET
    return report
