import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from widepart.cells import CellSet, diagram_cells, max_degree, parse_cells, skew_cells
from widepart.flow import FlowNetwork, alpha_k, alpha_table, max_k_stable_set
from widepart.partitions import conjugate, is_wide, partitions_of


def test_tiny_network():
    net = FlowNetwork(4)
    net.add_arc(0, 1, 3)
    net.add_arc(0, 2, 2)
    net.add_arc(1, 2, 5)
    net.add_arc(1, 3, 2)
    net.add_arc(2, 3, 3)
    res = net.max_flow(0, 3)
    assert res.value == 5 == res.cut_capacity
    assert 0 in res.source_side and 3 not in res.source_side


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_dinic_matches_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    net = FlowNetwork(n)
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    for _ in range(rng.randint(0, 25)):
        u, v = rng.sample(range(n), 2)
        cap = rng.randint(0, 7)
        net.add_arc(u, v, cap)
        if g.has_edge(u, v):
            g[u][v]["capacity"] += cap
        else:
            g.add_edge(u, v, capacity=cap)
    assert net.max_flow(0, n - 1).value == nx.maximum_flow_value(g, 0, n - 1)


def test_alpha_examples():
    assert alpha_table((2, 1)) == [0, 2, 3]
    assert alpha_table((3, 2, 2)) == [0, 3, 5, 7]
    assert alpha_k((3, 2, 2), 2) < sum(conjugate((3, 2, 2))[:2])


def test_alpha_matches_edge_subsets():
    for n in range(1, 11):
        for lam in partitions_of(n):
            cells = oracles.cells(lam)
            for k in range(1, max(lam[0], len(lam)) + 1):
                assert alpha_k(lam, k) == oracles.alpha(cells, k), (lam, k)


def test_alpha_on_skew_shapes():
    cells = skew_cells((3, 3, 2), (1,))
    for k in (1, 2, 3):
        assert alpha_k(cells, k) == oracles.alpha(sorted(cells), k)


def test_lemma_wide_equivalence_small():
    for n in range(1, 13):
        for lam in partitions_of(n):
            conj = conjugate(lam)
            tab = alpha_table(lam)
            saturated = all(tab[k] == sum(conj[:k]) for k in range(len(tab)))
            assert saturated == bool(is_wide(lam)), lam


def test_max_stable_set_is_stable_and_maximum():
    lam = (5, 4, 4, 2, 1)
    for k in range(1, 6):
        for seed in (None, 0, 1):
            f = max_k_stable_set(lam, k, seed=seed)
            assert max_degree(f) <= k
            assert len(f) == alpha_k(lam, k)


def test_pinned_and_within():
    lam = (3, 3, 2)
    cells = diagram_cells(lam)
    f1 = max_k_stable_set(lam, 1)
    f2 = max_k_stable_set(lam, 2, pinned=f1)
    assert f1 <= f2 and len(f2) == alpha_k(lam, 2)
    g = max_k_stable_set(lam, 1, within=f2)
    assert g <= f2
    assert max_k_stable_set(lam, 1, pinned=cells) == frozenset()  # pinned set too dense
    with pytest.raises(ValueError):
        max_k_stable_set(lam, 1, pinned={(1, 1)}, within={(2, 2)})


def test_cellset():
    s = CellSet.of_shape((2, 1), [(1, 2), (2, 1)])
    assert s.is_k_stable(1) and len(s) == 2
    assert parse_cells(s.to_text()) == s.members
    with pytest.raises(ValueError):
        CellSet.of_shape((2, 1), [(2, 2)])
