import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from widepart.cells import is_matching
from widepart.matrices import (
    DegreeBoundError,
    birkhoff_decompose,
    bvn_decompose,
    ff_condition,
    format_matrix,
    gale_ryser,
    gale_ryser_feasible,
    permutation_matrix,
)
from widepart.partitions import conjugate, partitions_of, wide_partitions_up_to


def margins(mat):
    return [sum(r) for r in mat], [sum(c) for c in zip(*mat)]


def test_gale_ryser_examples():
    assert gale_ryser_feasible((2, 1), (2, 1))
    mat = gale_ryser((2, 1), (2, 1))
    assert margins(mat) == ([2, 1], [2, 1])
    assert gale_ryser((2, 2), (3, 1)) is None
    with pytest.raises(ValueError):
        gale_ryser((3,), (1, 1))
    assert format_matrix([[1, 0], [1, 1]]) == "10\n11\n"


def test_gale_ryser_small_exhaustive():
    for total in range(0, 8):
        for rows in partitions_of(total):
            for cols in partitions_of(total):
                brute = oracles.zero_one_matrix(rows, cols)
                got = gale_ryser(rows, cols)
                assert (got is None) == (brute is None), (rows, cols)
                if got is not None:
                    assert margins(got) == (list(rows), list(cols))


def test_gale_ryser_unsorted_margins():
    mat = gale_ryser((1, 3, 2), (2, 1, 3))
    assert margins(mat) == ([1, 3, 2], [2, 1, 3])


def test_birkhoff_example():
    m = [[2, 1], [1, 2]]
    perms = birkhoff_decompose(m)
    assert len(perms) == 3
    total = [[sum(permutation_matrix(p)[i][j] for p in perms) for j in range(2)] for i in range(2)]
    assert total == m
    with pytest.raises(ValueError):
        birkhoff_decompose([[1, 0], [1, 0]])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_birkhoff_random(seed):
    rng = random.Random(seed)
    n, s = rng.randint(1, 5), rng.randint(0, 6)
    mat = [[0] * n for _ in range(n)]
    for _ in range(s):
        perm = list(range(n))
        rng.shuffle(perm)
        for i, j in enumerate(perm):
            mat[i][j] += 1
    perms = birkhoff_decompose(mat)
    assert len(perms) == s
    acc = [[0] * n for _ in range(n)]
    for p in perms:
        assert sorted(p) == list(range(n))
        for i, j in enumerate(p):
            acc[i][j] += 1
    assert acc == mat


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(st.integers(1, 6), st.integers(1, 6)), max_size=20), st.integers(0, 3))
def test_bvn_partitions_edges(edges, slack):
    deg: dict = {}
    for r, c in edges:
        deg["r", r] = deg.get(("r", r), 0) + 1
        deg["c", c] = deg.get(("c", c), 0) + 1
    k = max(deg.values(), default=0) + slack
    parts = bvn_decompose(edges, k)
    assert len(parts) == k
    assert all(is_matching(p) for p in parts)
    union = frozenset().union(*parts) if parts else frozenset()
    assert union == frozenset(edges)
    assert sum(len(p) for p in parts) == len(edges)


def test_bvn_degree_bound():
    with pytest.raises(DegreeBoundError):
        bvn_decompose({(1, 1), (1, 2)}, 1)


def ff_brute(lam, mu):
    m, n = len(lam), lam[0]
    mat = [[1 if j < lam[i] else 0 for j in range(n)] for i in range(m)]
    mc = conjugate(mu)
    for e in range(m + 1):
        for f in range(n + 1):
            need = sum(mc[i - 1] for i in range((m - e) + (n - f) + 1, len(mc) + 1))
            for rows in itertools.combinations(range(m), e):
                for cols in itertools.combinations(range(n), f):
                    if sum(mat[i][j] for i in rows for j in cols) < need:
                        return False
    return True


def test_ff_matches_all_submatrices():
    for n in range(1, 9):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert ff_condition(lam, mu) == ff_brute(lam, mu), (lam, mu)


def test_ff_examples():
    assert ff_condition((1,), (1,))
    assert not ff_condition((2, 1, 1), conjugate((2, 1, 1)))
    with pytest.raises(ValueError):
        ff_condition((2,), (1,))


def test_ff_holds_for_wide():
    for lam in wide_partitions_up_to(20):
        assert ff_condition(lam, conjugate(lam)), lam
