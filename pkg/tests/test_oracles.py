import pytest
from hypothesis import given, settings

from helpers import grids, p42, random_grids, valid_pdas
from pdacache import Pda, Scheme2Params, check_blackburn, check_strong_coloring, scheme2, validate
from pdacache.oracles import BipartiteColoredGraph, colors_used, column_regular


def test_example_passes_both():
    assert check_blackburn(p42()) is None
    assert check_strong_coloring(p42()) is None
    classes = BipartiteColoredGraph.from_pda(p42()).color_classes()
    assert classes == {1: [(1, 2), (2, 1)], 2: [(3, 2), (4, 1)]}


def test_blackburn_row_repeat():
    w = check_blackburn(Pda.from_rows([[1, 1]]))
    assert w.prop == "latin" and w.cells == ((1, 1), (1, 2)) and w.symbol == 1


def test_blackburn_corner_and_regularity():
    w = check_blackburn(Pda.from_rows([[1, 2], ["*", 1]]))
    assert w.prop == "blackburn"
    w = check_blackburn(Pda.from_rows([[1, "*"], ["*", "*"]]))
    assert w.prop == "regular"


def test_strong_coloring_not_induced():
    pda = Pda.from_rows([[1, 2], ["*", 1]])
    w = check_strong_coloring(pda)
    assert w.prop == "not_induced" and w.symbol == 1
    assert w.cells == ((1, 1), (2, 2))


def test_strong_coloring_not_matching():
    w = check_strong_coloring(Pda.from_rows([[1], [1]]))
    assert w.prop == "not_matching"


def test_scheme2_strong_coloring():
    pda = scheme2(Scheme2Params(2, 2, 1))
    assert check_strong_coloring(pda) is None
    assert colors_used(pda) == pda.s == 4


def test_colored_graph_single_edge_per_pair():
    with pytest.raises(ValueError):
        BipartiteColoredGraph(1, 1, frozenset({(1, 1, 1), (1, 1, 2)}))


@settings(max_examples=400)
@given(grids(max_side=6, max_symbols=5))
def test_oracles_agree_with_validate(pda):
    valid = validate(pda).overall_valid
    assert (check_blackburn(pda) is None) == valid
    assert (check_strong_coloring(pda) is None and column_regular(pda)) == valid


@given(valid_pdas())
def test_colors_equal_symbols(pda):
    assert check_strong_coloring(pda) is None
    assert colors_used(pda) == pda.s


def test_seeded_random_agreement():
    for pda in random_grids(seed=3, count=1000):
        valid = validate(pda).overall_valid
        assert (check_blackburn(pda) is None) == valid
        assert (check_strong_coloring(pda) is None and column_regular(pda)) == valid
