import pytest

import oracles
from widepart.cells import diagram_cells
from widepart.covers import (
    CLIQUE,
    STABLE,
    Cover,
    CoverError,
    clique_covers,
    is_completely_saturated,
    is_k_saturated,
    is_uniform,
    row_cover,
    stable_covers,
)
from widepart.flow import alpha_table, differences
from widepart.graphs import (
    alpha_table_full,
    check_delta_conjugacy,
    is_partition_sequence,
    omega_k,
    omega_table,
    saturated_cover_exists,
    t_phenomenon_witnesses,
    uniform_clique_cover_search,
)
from widepart.partitions import conjugate, partitions_of, wide_partitions_up_to
from widepart.tableau import cover_to_tableau, latin_tableau


def all_partitions(max_n):
    return [lam for n in range(1, max_n + 1) for lam in partitions_of(n)]


def test_omega_examples():
    assert omega_k((2, 1), 1) == 2
    assert omega_k((2, 1), 2) == 3
    assert omega_table((2, 1)) == [0, 2, 3, 3, 3]


def test_omega_matches_line_unions():
    for lam in all_partitions(12):
        for k in range(0, len(lam) + lam[0] + 1):
            assert omega_k(lam, k) == oracles.omega(lam, k), (lam, k)


def test_alpha_full_table_pads():
    assert alpha_table_full((2, 1)) == [0, 2, 3, 3, 3]


def test_wide_tables():
    for lam in wide_partitions_up_to(16):
        om, al = omega_table(lam), alpha_table_full(lam)
        conj = conjugate(lam)
        for k in range(len(om)):
            assert om[k] == sum(lam[:k])
            assert al[k] == sum(conj[:k])


def test_delta_alpha_is_partition_everywhere():
    for lam in all_partitions(14):
        assert is_partition_sequence(differences(alpha_table(diagram_cells(lam)))), lam


def test_cover_validation():
    lam = (2, 1)
    assert row_cover(lam).partition == (2, 1)
    with pytest.raises(CoverError):
        Cover(STABLE, diagram_cells(lam), [[(1, 1), (1, 2)], [(2, 1)]])
    with pytest.raises(CoverError):
        Cover(CLIQUE, diagram_cells(lam), [[(1, 1)], [(2, 1)]])  # (1,2) missing
    with pytest.raises(CoverError):
        Cover(CLIQUE, diagram_cells(lam), [[(1, 2), (2, 1)], [(1, 1)]])


def test_saturation_examples():
    rows = row_cover((2, 1))
    assert is_k_saturated(rows, 1, alpha_table_full((2, 1)))
    with pytest.raises(CoverError):
        is_k_saturated(rows, 1, alpha_table_full((3, 1)))
    for lam in wide_partitions_up_to(14):
        assert is_completely_saturated(row_cover(lam), alpha_table_full(lam))


def test_uniform_examples():
    lam = (7, 7, 6, 6, 3, 3, 3)
    assert not is_uniform(row_cover(lam), differences(omega_table(lam)))
    assert is_uniform(row_cover((3, 2, 1)), differences(omega_table((3, 2, 1))))


def _small_shapes():
    return [lam for lam in all_partitions(7)]


@pytest.mark.parametrize("lam", _small_shapes(), ids=str)
def test_uniform_vs_completely_saturated_clique(lam):
    cells = diagram_cells(lam)
    om, al = omega_table(lam), alpha_table_full(lam)
    delta = differences(om)
    covers = [Cover(CLIQUE, cells, b) for b in clique_covers(cells)]
    top = len(om) - 1
    every_k = all(any(is_k_saturated(c, k, al) for c in covers) for k in range(1, top + 1))
    for c in covers:
        if is_completely_saturated(c, al):
            assert is_uniform(c, delta)
        if every_k and is_uniform(c, delta):
            assert is_completely_saturated(c, al)


@pytest.mark.parametrize("lam", [lam for lam in all_partitions(6)], ids=str)
def test_uniform_vs_completely_saturated_stable(lam):
    cells = diagram_cells(lam)
    om, al = omega_table(lam), alpha_table_full(lam)
    delta = differences(al)
    covers = [Cover(STABLE, cells, b) for b in stable_covers(cells)]
    top = len(om) - 1
    every_k = all(any(is_k_saturated(c, k, om) for c in covers) for k in range(1, top + 1))
    for c in covers:
        if is_completely_saturated(c, om):
            assert is_uniform(c, delta)
        if every_k and is_uniform(c, delta):
            assert is_completely_saturated(c, om)


@pytest.mark.parametrize("lam", [lam for lam in all_partitions(6)], ids=str)
def test_cover_enumerators_match_oracle(lam):
    cells = diagram_cells(lam)
    ours = {frozenset(frozenset(b) for b in cov) for cov in stable_covers(cells)}
    theirs = {frozenset(cov) for cov in oracles.stable_covers(cells)}
    assert ours == theirs


@pytest.mark.parametrize("lam", [lam for lam in all_partitions(7)], ids=str)
def test_saturated_existence_formula(lam):
    # the closed-form existence test agrees with enumerating every cover
    cells = diagram_cells(lam)
    n = len(cells)
    om, al = omega_table(lam), alpha_table_full(lam)
    cliques = [Cover(CLIQUE, cells, b) for b in clique_covers(cells)]
    stables = [Cover(STABLE, cells, b) for b in oracles.stable_covers(cells)]
    for k in range(1, len(om)):
        assert saturated_cover_exists(k, al, om, n) == any(is_k_saturated(c, k, al) for c in cliques)
        assert saturated_cover_exists(k, om, al, n) == any(is_k_saturated(c, k, om) for c in stables)


def test_t_phenomenon_on_wide_shapes():
    for lam in wide_partitions_up_to(12):
        t = latin_tableau(lam).tableau
        classes = {}
        for r, row in enumerate(t.rows, start=1):
            for c, v in enumerate(row, start=1):
                classes.setdefault(v, []).append((r, c))
        stable = Cover(STABLE, diagram_cells(lam), classes.values())
        found = t_phenomenon_witnesses(lam, stable)
        for k, (clique, st) in found.items():
            assert clique is not None and st is not None, (lam, k)


def test_tableau_cover_roundtrip():
    t = latin_tableau((3, 3, 2)).tableau
    classes = {}
    for r, row in enumerate(t.rows, start=1):
        for c, v in enumerate(row, start=1):
            classes.setdefault(v, []).append((r, c))
    cover = Cover(STABLE, diagram_cells((3, 3, 2)), classes.values())
    assert validate(cover_to_tableau(cover))


def validate(t):
    return oracles.is_latin([list(r) for r in t.rows])


def test_analysis_of_wide_shape():
    rep = check_delta_conjugacy((4, 3, 2))
    assert rep.flags["delta_conjugacy"]
    assert [d for d in rep.delta_omega if d] == [4, 3, 2]
    assert [d for d in rep.delta_alpha if d] == [3, 3, 2, 1]
    assert rep.flags["uniform_clique_cover"] and rep.flags["uniform_stable_cover"]
    assert all(rep.flags["k_saturated_stable_cover"].values())


def test_analysis_trivial():
    rep = check_delta_conjugacy((1,))
    f = rep.flags
    assert f["delta_conjugacy"] and f["uniform_clique_cover"] and f["uniform_stable_cover"]
    assert rep.to_json()["shape"] == [1]


def test_seven_row_shape_findings():
    lam = (7, 7, 6, 6, 3, 3, 3)
    rep = check_delta_conjugacy(lam)
    f = rep.flags
    assert [d for d in rep.delta_omega if d] == [7, 7, 7, 5, 3, 4, 2]
    assert not f["delta_omega_is_partition"] and not f["delta_conjugacy"]
    assert [k for k, ok in f["k_saturated_stable_cover"].items() if not ok] == [5]
    assert all(f["k_saturated_clique_cover"].values())
    assert f["uniform_clique_cover"] is False
    assert uniform_clique_cover_search(lam).status == "none"
