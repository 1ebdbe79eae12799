import math
from itertools import combinations

import pytest

import aldkit.search_verify as sv
from aldkit.codes import Codebook, build_cl, build_cp
from aldkit.core import BudgetExceeded, PairedWord, ald_distance, all_words
from aldkit.search_verify import (
    DistanceGraph,
    averaging_lower_bound,
    distance_graph,
    exact_max_code,
    min_distance,
    sandwich_check,
    symbol_distance_table,
)


# ------------------------------------------------------------- chunk table


def test_symbol_table_matches_the_metric():
    for lam in (1, 2):
        table = symbol_distance_table(lam)
        assert len(table) == 256
        for x in range(16):
            xw = PairedWord(2, x & 3, x >> 2)
            for y in range(16):
                yw = PairedWord(2, y & 3, y >> 2)
                assert table[(x << 4) | y] == ald_distance(xw, yw, lam)
        assert all(table[(x << 4) | x] == 0 for x in range(16))


def test_symbol_table_scales_with_lambda():
    t1, t2 = symbol_distance_table(1), symbol_distance_table(2)
    assert any(a != b for a, b in zip(t1, t2))
    assert all(a <= b for a, b in zip(t1, t2))


# ----------------------------------------------------------- pair-scan oracle


def test_min_distance_known_codes():
    assert min_distance(build_cp(2), 1) == 2
    assert min_distance(build_cl(2, 0), 1) == 3
    assert min_distance(build_cl(3, 0), 1) == 3


def test_min_distance_agrees_with_direct_scan():
    book = build_cp(2)
    for lam in (1, 2, 3):
        direct = min(
            ald_distance(x, y, lam) for x, y in combinations(book.words, 2)
        )
        assert min_distance(book, lam) == direct


def test_min_distance_degenerate_sizes():
    single = Codebook(
        n=2, lam=1, design_distance=1, construction="manual", params={},
        words=(PairedWord(2, 0, 0),),
    )
    assert min_distance(single, 1) == math.inf
    empty = Codebook(
        n=2, lam=1, design_distance=1, construction="manual", params={},
        words=(),
    )
    assert min_distance(empty, 1) == math.inf


def test_min_distance_refuses_implicit_codebooks():
    with pytest.raises(BudgetExceeded):
        min_distance(build_cl(4, 0), 1)


def test_min_distance_refuses_oversized_scans():
    words = tuple(
        PairedWord(9, a, b) for a in range(256) for b in range(256)
    ) + (PairedWord(9, 256, 0),)
    book = Codebook(
        n=9, lam=1, design_distance=1, construction="manual", params={},
        words=words,
    )
    with pytest.raises(BudgetExceeded):
        min_distance(book, 1)


# ------------------------------------------------------- distinguishability graph


def test_graph_structure_at_one_position():
    g = distance_graph(1, 2, 1)
    assert isinstance(g, DistanceGraph)
    assert [w.to_digits() for w in g.vertices] == ["0", "1", "2", "3"]
    assert [g.degree(i) for i in range(4)] == [3, 2, 2, 3]
    assert not g.adjacent(1, 2)  # the two mixed symbols sit at distance 1
    assert g.adjacent(0, 3)


def test_graph_is_symmetric_and_loop_free():
    g = distance_graph(2, 3, 1)
    nv = len(g.vertices)
    for i in range(nv):
        assert not g.adjacent(i, i)
        for j in range(nv):
            assert g.adjacent(i, j) == g.adjacent(j, i)
            if g.adjacent(i, j):
                assert ald_distance(g.vertices[i], g.vertices[j], 1) >= 3


def test_graph_budget_and_validation():
    with pytest.raises(BudgetExceeded):
        distance_graph(5, 3, 1)
    with pytest.raises(ValueError):
        distance_graph(0, 3, 1)
    with pytest.raises(ValueError):
        distance_graph(2, 0, 1)


# ------------------------------------------------------------- exact search


KNOWN_OPTIMA = [
    ((1, 1, 1), 4),
    ((1, 2, 1), 3),
    ((1, 3, 1), 2),
    ((2, 2, 1), 10),
    ((2, 3, 1), 5),
]


@pytest.mark.parametrize("cell,want", KNOWN_OPTIMA)
def test_exact_values(cell, want):
    size, book = exact_max_code(*cell)
    assert size == want
    assert len(book) == want
    n, d, lam = cell
    assert min_distance(book, lam) >= d or want <= 1


def test_exact_witnesses_are_lexicographically_lowest():
    _, book = exact_max_code(1, 2, 1)
    assert [w.to_digits() for w in book.words] == ["0", "1", "3"]
    _, book = exact_max_code(2, 3, 1)
    assert [w.to_digits() for w in book.words] == ["00", "03", "11", "30", "33"]
    again = exact_max_code(2, 3, 1)[1]
    assert [w.to_digits() for w in again.words] == [
        w.to_digits() for w in book.words
    ]


def test_exact_full_space_and_empty_regimes():
    size, book = exact_max_code(2, 1, 1)
    assert size == 16
    size, book = exact_max_code(1, 100, 1)
    assert size == 1
    assert book.words[0] == PairedWord(1, 0, 0)


def test_exact_parity_code_is_optimal_at_distance_two():
    for n in (1, 2, 3):
        assert exact_max_code(n, 2, 1)[0] == len(build_cp(n))


def test_exact_monotone_in_distance():
    for lam in (1, 2):
        for n in (1, 2, 3):
            sizes = [exact_max_code(n, d, lam)[0] for d in range(1, 11)]
            assert sizes == sorted(sizes, reverse=True)
            assert sizes[0] == 4**n


def test_exact_monotone_in_length():
    for d in (3, 5):
        sizes = [exact_max_code(n, d, 1)[0] for n in (1, 2, 3)]
        assert sizes == sorted(sizes)


def test_exact_grows_with_lambda():
    # larger lambda only stretches distances, so optima never shrink
    for n in (1, 2):
        for d in (2, 3, 4):
            assert exact_max_code(n, d, 2)[0] >= exact_max_code(n, d, 1)[0]


def test_exact_search_budget():
    with pytest.raises(BudgetExceeded):
        exact_max_code(5, 3, 1)


def test_exact_desk_limit_case():
    size, _ = exact_max_code(4, 2, 1)
    assert size == len(build_cp(4)) == 136


# ------------------------------------------------------------ averaging formula


TABLE5_LOWER = {
    3: [1, 2, 6, 18, 57, 196, 683, 2428, 8739, 31776],
    5: [1, 1, 1, 3, 6, 17, 52, 162, 525, 1734],
    7: [1, 1, 1, 1, 1, 2, 5, 13, 38, 113],
}


def test_averaging_reproduces_the_reference_column():
    for d, column in TABLE5_LOWER.items():
        got = [averaging_lower_bound(n, d) for n in range(1, 11)]
        assert got == column


def test_averaging_validation():
    with pytest.raises(ValueError):
        averaging_lower_bound(0, 3)
    with pytest.raises(ValueError):
        averaging_lower_bound(3, 4)


# ------------------------------------------------------------- sandwich reports


def test_sandwich_delsarte_tight_cell():
    rep = sandwich_check(1, 3, 1)
    assert rep.ok
    assert (rep.lower, rep.exact) == (2, 2)
    uppers = dict(rep.uppers)
    assert uppers["delsarte"] == 2
    assert uppers["lp"] == 3


def test_sandwich_parity_code_cell():
    rep = sandwich_check(2, 2, 1)
    assert rep.ok
    assert rep.exact == 10
    assert rep.lower == 10
    assert rep.lower_source == "single-parity"


def test_sandwich_distance_three_cell():
    rep = sandwich_check(2, 3, 1)
    assert rep.ok
    assert rep.exact == 5
    uppers = dict(rep.uppers)
    assert rep.exact <= uppers["lp"] == 9
    assert rep.exact <= uppers["delsarte"] == 8


def test_sandwich_records_budget_refusals():
    rep = sandwich_check(3, 3, 1, delsarte_budget_secs=0.001)
    assert rep.ok
    assert any(method == "delsarte" for method, _ in rep.skipped)
    assert all(method != "delsarte" for method, _ in rep.uppers)


def test_sandwich_small_grid_is_consistent():
    for lam in (1, 2):
        for n in (1, 2):
            for d in range(1, 9):
                rep = sandwich_check(n, d, lam, delsarte_budget_secs=30.0)
                assert rep.ok, rep.violations
                assert rep.lower <= rep.exact
                for _, value in rep.uppers:
                    assert rep.exact <= value


def test_sandwich_flags_planted_inconsistencies(monkeypatch):
    real = sv.lp_hypergraph_bound

    class FakeReport:
        floored = 1

    monkeypatch.setattr(
        sv, "lp_hypergraph_bound", lambda n, d, lam: FakeReport()
    )
    rep = sandwich_check(2, 2, 1, delsarte_budget_secs=0.001)
    assert not rep.ok
    assert any("exceeds upper bound 1 (lp)" in v for v in rep.violations)
    monkeypatch.setattr(sv, "lp_hypergraph_bound", real)
    monkeypatch.setattr(sv, "averaging_lower_bound", lambda n, d: 10**9)
    rep = sandwich_check(2, 3, 1, delsarte_budget_secs=0.001)
    assert not rep.ok
    assert any("exceeds exact value" in v for v in rep.violations)


def test_sandwich_skips_infeasible_weight_recipe():
    rep = sandwich_check(3, 9, 1, delsarte_budget_secs=0.001)
    assert rep.ok
    assert any(method == "weights1" for method, _ in rep.skipped)
