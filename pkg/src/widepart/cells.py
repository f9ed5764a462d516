"""Cells of a Young diagram seen as edges of the row/column bipartite graph.

A cell ``(r, c)`` (1-based) is the edge between row vertex ``("r", r)``
and column vertex ``("c", c)``.  Cell sets are plain frozensets of such
pairs; :class:`CellSet` pins one to its ambient diagram.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

Cell = tuple[int, int]


def diagram_cells(lam: Sequence[int]) -> frozenset[Cell]:
    return frozenset((r, c) for r, p in enumerate(lam, start=1) for c in range(1, p + 1))


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> frozenset[Cell]:
    """Cells of the skew diagram outer / inner."""
    inner_cells = diagram_cells(inner)
    return frozenset(c for c in diagram_cells(outer) if c not in inner_cells)


def row_degrees(cells: Iterable[Cell]) -> Counter:
    return Counter(r for r, _ in cells)


def col_degrees(cells: Iterable[Cell]) -> Counter:
    return Counter(c for _, c in cells)


def vertex_degrees(cells: Iterable[Cell]) -> Counter:
    """Degree of every row vertex ("r", i) and column vertex ("c", j)."""
    deg: Counter = Counter()
    for r, c in cells:
        deg["r", r] += 1
        deg["c", c] += 1
    return deg


def max_degree(cells: Iterable[Cell]) -> int:
    deg = vertex_degrees(cells)
    return max(deg.values(), default=0)


def is_matching(cells: Iterable[Cell]) -> bool:
    return max_degree(cells) <= 1


def sort_cells(cells: Iterable[Cell]) -> list[Cell]:
    return sorted(cells)


@dataclass(frozen=True)
class CellSet:
    ambient: frozenset[Cell]
    members: frozenset[Cell]

    def __post_init__(self):
        stray = self.members - self.ambient
        if stray:
            raise ValueError(f"cells outside the ambient diagram: {sorted(stray)}")

    @classmethod
    def of_shape(cls, lam: Sequence[int], members: Iterable[Cell]) -> "CellSet":
        return cls(diagram_cells(lam), frozenset(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, cell) -> bool:
        return cell in self.members

    @property
    def max_degree(self) -> int:
        return max_degree(self.members)

    def is_k_stable(self, k: int) -> bool:
        return self.max_degree <= k

    def to_text(self) -> str:
        return "".join(f"{r},{c}\n" for r, c in sorted(self.members))


def parse_cells(text: str) -> frozenset[Cell]:
    """Read the one-``r,c``-pair-per-line text form."""
    out = set()
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        r, c = line.split(",")
        out.add((int(r), int(c)))
    return frozenset(out)
