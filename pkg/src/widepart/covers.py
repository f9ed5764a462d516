"""Clique covers and stable set covers of diagram line graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .cells import Cell, is_matching
from .partitions import Partition, conjugate

CLIQUE, STABLE = "clique", "stable"


def is_clique(block: Iterable[Cell]) -> bool:
    """Cells pairwise sharing a line, i.e. all in one row or one column."""
    block = list(block)
    return len({r for r, _ in block}) <= 1 or len({c for _, c in block}) <= 1


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class Cover:
    kind: str
    ambient: frozenset[Cell]
    blocks: tuple[frozenset[Cell], ...]

    def __init__(self, kind: str, ambient: Iterable[Cell], blocks: Iterable[Iterable[Cell]]):
        if kind not in (CLIQUE, STABLE):
            raise ValueError(f"unknown cover kind {kind!r}")
        blocks = [frozenset(b) for b in blocks if b]
        blocks.sort(key=lambda b: (-len(b), sorted(b)))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "ambient", frozenset(ambient))
        object.__setattr__(self, "blocks", tuple(blocks))
        self.validate()

    def validate(self) -> None:
        seen: set[Cell] = set()
        for b in self.blocks:
            if seen & b:
                raise CoverError("blocks overlap")
            seen |= b
            if self.kind == CLIQUE and not is_clique(b):
                raise CoverError(f"block {sorted(b)} is not a clique")
            if self.kind == STABLE and not is_matching(b):
                raise CoverError(f"block {sorted(b)} is not a stable set")
        if seen != self.ambient:
            raise CoverError("blocks do not cover the diagram exactly")

    @property
    def partition(self) -> Partition:
        return Partition(len(b) for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "sizes": list(self.partition),
            "blocks": [[list(c) for c in sorted(b)] for b in self.blocks],
        }


def row_cover(lam: Sequence[int]) -> Cover:
    from .cells import diagram_cells

    blocks = [[(r, c) for c in range(1, p + 1)] for r, p in enumerate(lam, start=1)]
    return Cover(CLIQUE, diagram_cells(lam), blocks)


def is_k_saturated(cover: Cover, k: int, partner_table: Sequence[int]) -> bool:
    """Clique cover: alpha_k == sum of the first k conjugate parts of its
    block sizes.  Stable set cover: the same against omega_k.

    ``partner_table[k]`` holds alpha_k (resp. omega_k), index 0 included.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if partner_table and partner_table[-1] != len(cover.ambient):
        raise CoverError("partner table belongs to a different shape")
    conj = conjugate(cover.partition)
    target = partner_table[k] if k < len(partner_table) else partner_table[-1]
    return target == sum(conj[:k])


def is_completely_saturated(cover: Cover, partner_table: Sequence[int]) -> bool:
    top = max(len(partner_table) - 1, len(cover.blocks), 1)
    return all(is_k_saturated(cover, k, partner_table) for k in range(1, top + 1))


def is_uniform(cover: Cover, delta_table: Sequence[int]) -> bool:
    """Sorted block sizes equal the Delta sequence (zeros ignored)."""
    return list(cover.partition) == [d for d in delta_table if d != 0]


def _lines(cells: frozenset[Cell]) -> dict:
    lines: dict = {}
    for r, c in cells:
        lines.setdefault(("r", r), set()).add((r, c))
        lines.setdefault(("c", c), set()).add((r, c))
    return lines


def clique_covers(cells: Iterable[Cell]) -> Iterator[list[frozenset[Cell]]]:
    """Every clique cover exactly once (exponential; small shapes only)."""
    import itertools

    cells = frozenset(cells)
    lines = _lines(cells)

    def rec(left: frozenset[Cell], acc: list) -> Iterator[list]:
        if not left:
            yield list(acc)
            return
        first = min(left)
        r, c = first
        row_rest = sorted(x for x in lines["r", r] if x in left and x != first)
        col_rest = sorted(x for x in lines["c", c] if x in left and x != first)
        options = []
        for n in range(len(row_rest) + 1):
            for extra in itertools.combinations(row_rest, n):
                options.append(frozenset((first,) + extra))
        # Column blocks of size >= 2 only: the singleton is already listed.
        for n in range(1, len(col_rest) + 1):
            for extra in itertools.combinations(col_rest, n):
                options.append(frozenset((first,) + extra))
        for block in options:
            acc.append(block)
            yield from rec(left - block, acc)
            acc.pop()

    yield from rec(cells, [])


def stable_covers(cells: Iterable[Cell]) -> Iterator[list[frozenset[Cell]]]:
    """Every stable set cover exactly once (exponential; small shapes only)."""
    cells = frozenset(cells)

    def matchings_with(first: Cell, pool: list[Cell]) -> Iterator[frozenset[Cell]]:
        def rec(i: int, rows: set, cols: set, acc: list) -> Iterator[frozenset[Cell]]:
            if i == len(pool):
                yield frozenset(acc)
                return
            yield from rec(i + 1, rows, cols, acc)
            r, c = pool[i]
            if r not in rows and c not in cols:
                acc.append(pool[i])
                rows.add(r)
                cols.add(c)
                yield from rec(i + 1, rows, cols, acc)
                acc.pop()
                rows.discard(r)
                cols.discard(c)

        yield from rec(0, {first[0]}, {first[1]}, [first])

    def rec(left: frozenset[Cell], acc: list) -> Iterator[list]:
        if not left:
            yield list(acc)
            return
        first = min(left)
        pool = sorted(x for x in left if x != first)
        for block in matchings_with(first, pool):
            acc.append(block)
            yield from rec(left - block, acc)
            acc.pop()

    yield from rec(cells, [])
