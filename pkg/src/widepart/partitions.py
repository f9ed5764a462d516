"""Integer partitions, dominance order and wideness.

A partition is stored as a :class:`Partition`, a tuple of weakly
decreasing positive integers.  Plain tuples are accepted anywhere a
partition is expected and are normalized on entry.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def part(self, i: int) -> int:
        """1-based part access with zero padding."""
        return self[i - 1] if 1 <= i <= len(self) else 0


def as_partition(parts: Iterable[int]) -> Partition:
    if isinstance(parts, Partition):
        return parts
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse the comma separated text form, e.g. ``"6,5,4,4,2,1"``."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def prefix_sums(seq: Sequence[int], length: int) -> list[int]:
    out, total = [], 0
    for j in range(length):
        total += seq[j] if j < len(seq) else 0
        out.append(total)
    return out


def first_dominance_failure(lam: Sequence[int], mu: Sequence[int]) -> Optional[int]:
    """Smallest 1-based j with sum(lam[:j]) < sum(mu[:j]), or None."""
    n = max(len(lam), len(mu))
    for j, (a, b) in enumerate(zip(prefix_sums(lam, n), prefix_sums(mu, n)), start=1):
        if a < b:
            return j
    return None


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return first_dominance_failure(lam, mu) is None


@dataclass(frozen=True)
class WidenessVerdict:
    wide: bool
    # Set only when not wide: a subpartition and a 1-based index j where
    # its prefix sum falls short of its conjugate's.
    witness: Optional[Partition] = None
    index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.wide


def lower_subpartitions(lam: Sequence[int]) -> Iterator[Partition]:
    """Lower subpartitions from the shortest (empty) to ``lam`` itself."""
    lam = as_partition(lam)
    for i in range(len(lam), -1, -1):
        yield Partition(lam[i:])


def is_wide(lam: Sequence[int]) -> WidenessVerdict:
    """Wideness by checking only the lower subpartitions.

    The shortest failing lower subpartition is reported as the witness.
    """
    for mu in lower_subpartitions(lam):
        j = first_dominance_failure(mu, conjugate(mu))
        if j is not None:
            return WidenessVerdict(False, mu, j)
    return WidenessVerdict(True)


ORACLE_MAX_LENGTH = 24


class RefusedComputation(ValueError):
    """Input outside the size guard of an exhaustive routine."""


def subpartitions(lam: Sequence[int]) -> Iterator[Partition]:
    """Every distinct submultiset of parts (the empty one included)."""
    lam = as_partition(lam)
    groups = [(p, len(list(g))) for p, g in itertools.groupby(lam)]
    for counts in itertools.product(*(range(m + 1) for _, m in groups)):
        parts: list[int] = []
        for (p, _), c in zip(groups, counts):
            parts.extend([p] * c)
        yield Partition(parts)


def is_wide_oracle(lam: Sequence[int]) -> bool:
    """Wideness straight from the definition: every subpartition dominates
    its conjugate.  Exponential in the number of parts."""
    lam = as_partition(lam)
    if len(lam) > ORACLE_MAX_LENGTH:
        raise RefusedComputation(
            f"oracle refuses partitions with more than {ORACLE_MAX_LENGTH} parts"
        )
    return all(dominates(mu, conjugate(mu)) for mu in subpartitions(lam))


def lemma_waugh_holds(lam: Sequence[int]) -> bool:
    """lam[l-i] > i for every i, a necessary condition for wideness."""
    lam = as_partition(lam)
    n = len(lam)
    return all(lam[n - 1 - i] > i for i in range(n))


def add(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    n = max(len(lam), len(mu))
    return Partition(
        (lam[i] if i < len(lam) else 0) + (mu[i] if i < len(mu) else 0)
        for i in range(n)
    )


def subtract(lam: Sequence[int], mu: Sequence[int]) -> Optional[Partition]:
    """lam - mu partwise if that is a partition, else None."""
    if len(mu) > len(lam):
        return None
    diff = [lam[i] - (mu[i] if i < len(mu) else 0) for i in range(len(lam))]
    if any(d < 0 for d in diff):
        return None
    if any(diff[i] < diff[i + 1] for i in range(len(diff) - 1)):
        return None
    while diff and diff[-1] == 0:
        diff.pop()
    if 0 in diff:
        return None
    return Partition(diff)


def _summand_candidates(lam: Partition) -> Iterator[Partition]:
    """Partitions mu inside lam with lam - mu a partition, lexicographically
    increasing, excluding the empty partition and lam itself."""
    n = len(lam)

    def rec(i: int, prefix: list[int]) -> Iterator[list[int]]:
        if i == n:
            yield prefix
            return
        hi = lam[i] if i == 0 else min(lam[i], prefix[-1])
        for v in range(0, hi + 1):
            if i:
                # lam - mu must stay weakly decreasing.
                if lam[i - 1] - prefix[-1] < lam[i] - v:
                    continue
                if prefix[-1] == 0 and v > 0:
                    continue
            prefix.append(v)
            yield from rec(i + 1, prefix)
            prefix.pop()

    for mu in rec(0, []):
        mu = [v for v in mu if v]
        if mu and tuple(mu) != tuple(lam):
            yield Partition(mu)


def decompose(lam: Sequence[int]) -> Optional[tuple[Partition, Partition]]:
    """Some split lam = mu + nu into wide summands, or None if indecomposable.

    Decompositions are not unique; the first mu in lexicographic order wins.
    """
    lam = as_partition(lam)
    if not is_wide(lam):
        raise ValueError(f"{lam} is not wide")
    for mu in sorted(_summand_candidates(lam)):
        if not is_wide(mu):
            continue
        nu = subtract(lam, mu)
        if nu and is_wide(nu):
            return mu, nu
    return None


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n in lexicographically descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All nonempty partitions with at most `rows` parts, each at most `cols`."""

    def rec(prefix: tuple[int, ...], cap: int) -> Iterator[tuple[int, ...]]:
        if prefix:
            yield prefix
        if len(prefix) == rows:
            return
        for p in range(cap, 0, -1):
            yield from rec(prefix + (p,), p)

    for parts in rec((), cols):
        yield Partition(parts)


def _wide_by_prepending(n: int) -> Iterator[tuple[int, ...]]:
    # Every lower subpartition of a wide partition is wide, so wide
    # partitions grow from wide tails by prepending parts on top; only the
    # full partition needs a fresh dominance check at each step.
    def rec(tail: tuple[int, ...], weight: int) -> Iterator[tuple[int, ...]]:
        if weight == n:
            yield tail
            return
        lo = tail[0] if tail else 1
        for p in range(lo, n - weight + 1):
            cand = (p,) + tail
            if dominates(cand, conjugate(cand)):
                yield from rec(cand, weight + p)

    yield from rec((), 0)


def enumerate_wide(n: int) -> list[Partition]:
    """All wide partitions of n, lexicographically descending."""
    if n < 1:
        raise ValueError("n must be positive")
    return sorted((Partition(p) for p in _wide_by_prepending(n)), reverse=True)


def wide_partitions_up_to(max_cells: int) -> list[Partition]:
    out: list[Partition] = []
    for n in range(1, max_cells + 1):
        out.extend(enumerate_wide(n))
    return out


def count_wide(n: int) -> int:
    return sum(1 for _ in _wide_by_prepending(n))


def embed_self_conjugate(lam: Sequence[int]) -> Partition:
    """Self-conjugate wide partition containing lam as its bottom rows.

    With m = lam_1 the result is a 2m x 2m square with lam glued below and
    lam' glued to the right: parts 2m + lam'_j (j <= m), then m parts equal
    to 2m, then lam.
    """
    lam = as_partition(lam)
    if not is_wide(lam):
        raise ValueError(f"{lam} is not wide")
    m = lam.largest
    conj = conjugate(lam)
    return Partition([2 * m + c for c in conj] + [2 * m] * m + list(lam))


def is_self_conjugate(lam: Sequence[int]) -> bool:
    return conjugate(lam) == tuple(lam)


def distinct_part_sizes(lam: Sequence[int]) -> list[int]:
    return sorted(set(lam), reverse=True)


# Published counts of wide partitions of n, n = 1, 2, ..., 65 (the list
# starts at n = 1; it is a reference vector, not computed here).
WIDE_COUNTS = (
    1, 1, 2, 3, 3, 5, 6, 9, 11, 14, 18, 23, 29, 35, 45, 56, 68, 85, 103, 125,
    150, 183, 217, 266, 315, 380, 449, 534, 628, 745, 874, 1034, 1212, 1423,
    1665, 1944, 2265, 2627, 3055, 3536, 4099, 4735, 5479, 6309, 7273, 8358,
    9599, 11012, 12605, 14421, 16480, 18825, 21456, 24474, 27822, 31677,
    35934, 40825, 46217, 52420, 59253, 67056, 75699, 85532, 96407,
)
