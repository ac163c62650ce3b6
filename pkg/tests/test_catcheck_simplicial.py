# tests/test_catcheck_simplicial.py
import json

import pytest

from catcheck_monoidal import FiniteCategory
from catcheck_simplicial import (
    AdjunctionUnit,
    CoherentCube,
    HCNerve,
    LevelwiseSimplicialCategory,
    SimplicialFunctor,
    SimplicialMap,
    TruncatedSimplicialSet,
    adjunction_unit,
    coherent_cube,
    compare_discrete_hc_nerve,
    free_chains,
    hc_nerve_simplices,
    horn_check,
    nerve,
    product_nerve_comparison,
)
from catcheck_utils import DimensionBoundError, PreconditionError, ShapeError


def passed(results):
    return all(r.passed for r in results)


def hollow_triangle():
    """N([2]) up to dimension 2 without its nondegenerate 2-simplex"""
    full = nerve(FiniteCategory.linear_order(2), 2)
    missing = set(full.nondegenerate(2))
    simplices = [full.level(0), full.level(1), [x for x in full.level(2) if x not in missing]]
    faces = {key: {x: y for x, y in table.items() if x not in missing} for key, table in full.faces.items()}
    return TruncatedSimplicialSet(2, simplices, faces, full.degeneracies, name="hollow")


# ---------------------------------------------------------
# Nerves
# ---------------------------------------------------------

def test_arrow_nerve_matches_golden_tables(golden_dir):
    with open(golden_dir / "arrow_nerve.json") as f:
        expected = json.load(f)
    assert nerve(FiniteCategory.linear_order(1), 3).to_tables() == expected


def test_arrow_nerve_counts():
    X = nerve(FiniteCategory.linear_order(1), 3)
    assert X.counts() == [2, 3, 4, 5]
    assert [len(X.nondegenerate(k)) for k in range(4)] == [2, 1, 0, 0]
    assert passed(X.check_simplicial_identities())


def test_tables_round_trip_keeps_structure():
    X = nerve(FiniteCategory.linear_order(1), 3)
    tables = X.to_tables()
    Y = TruncatedSimplicialSet.from_tables(tables)
    assert Y.counts() == X.counts()
    assert passed(Y.check_simplicial_identities())
    again = Y.to_tables()
    for k in range(1, 4):
        assert again["levels"][k]["faces"] == tables["levels"][k]["faces"]


def test_malformed_tables_are_rejected():
    tables = nerve(FiniteCategory.linear_order(1), 1).to_tables()
    tables["levels"][1]["faces"][0] = [0, 7]
    with pytest.raises(ShapeError):
        TruncatedSimplicialSet.from_tables(tables)
    with pytest.raises(ShapeError):
        TruncatedSimplicialSet.from_tables({"dimension": 2, "levels": []})


def test_longer_chains_count_multisets():
    assert nerve(FiniteCategory.linear_order(2), 3).counts() == [3, 6, 10, 15]


def test_nerve_of_a_group_is_kan(description):
    X = nerve(description("groupoid_c2.json").finite_category(), 3)
    assert X.counts() == [1, 2, 4, 8]
    report = horn_check(X, "all")
    assert report.passed
    # two edges fill every 1-horn
    assert not report.unique


def test_identity_is_a_simplicial_map():
    X = nerve(FiniteCategory.linear_order(1), 2)
    verdict = SimplicialMap(X, X, lambda x, k: x, 2, name="id").check()
    assert verdict.passed


# ---------------------------------------------------------
# Horns
# ---------------------------------------------------------

def test_nerve_of_a_poset_fills_inner_horns_uniquely():
    report = horn_check(nerve(FiniteCategory.linear_order(2), 3), "inner")
    assert report.passed
    assert report.unique
    assert report.to_result().passed


def test_outer_horns_of_the_arrow_do_not_fill():
    report = horn_check(nerve(FiniteCategory.linear_order(1), 2), "all")
    assert not report.passed
    assert report.failure["n"] == 2
    assert report.failure["k"] in (0, 2)


def test_hollow_triangle_has_an_unfillable_inner_horn():
    report = horn_check(hollow_triangle(), "inner")
    assert not report.passed
    assert report.failure["n"] == 2
    assert report.failure["k"] == 1
    assert sorted(report.failure["faces"]) == ["0", "2"]


def test_horn_check_arguments():
    X = nerve(FiniteCategory.linear_order(1), 2)
    with pytest.raises(PreconditionError):
        horn_check(X, "outer")
    with pytest.raises(DimensionBoundError):
        horn_check(X, "inner", dimension=3)
    assert horn_check(X, "all", only=[(2, 1)]).passed


# ---------------------------------------------------------
# Coherent cubes and simplicial categories
# ---------------------------------------------------------

def test_coherent_cube_posets():
    cube = CoherentCube(3)
    assert cube.poset_size(0, 3) == 4
    assert cube.poset_size(1, 1) == 1
    assert cube.subsets(2, 1) == []
    assert len(CoherentCube(2).hom_level(0, 2, 1)) == 3
    assert passed(CoherentCube(2).check_laws())


def test_coherent_cube_bound():
    with pytest.raises(DimensionBoundError):
        coherent_cube(6)
    assert coherent_cube(2).name == "c[2]"


def test_free_chains():
    assert len(free_chains(1)) == 1
    assert free_chains(2) == [((0, 1),), ((1, 2),), ((0, 2),), ((0, 2), (0, 1, 2))]


def test_walking_homotopy_is_a_fibrant_simplicial_category():
    H = LevelwiseSimplicialCategory.walking_homotopy()
    assert H.top_level == 1
    assert passed(H.check_structure())
    assert H.check_fibrant(1).passed


def test_discrete_simplicial_category(description):
    category = description("chain3.json").finite_category()
    discrete = LevelwiseSimplicialCategory.discrete(category, 2)
    assert passed(discrete.check_structure())
    assert discrete.check_fibrant().passed


# ---------------------------------------------------------
# Homotopy-coherent nerve
# ---------------------------------------------------------

def test_hc_nerve_of_the_walking_homotopy():
    H = LevelwiseSimplicialCategory.walking_homotopy()
    assert [len(hc_nerve_simplices(H, n)) for n in range(3)] == [2, 4, 8]
    with pytest.raises(DimensionBoundError):
        hc_nerve_simplices(H, 3)


def test_hc_nerve_faces_are_valid_simplices():
    H = LevelwiseSimplicialCategory.walking_homotopy()
    hc = HCNerve(H)
    for simplex in hc.level(2):
        assert hc.is_valid(simplex)
        for m in range(3):
            assert hc.is_valid(hc.face(m, simplex))


def test_hc_nerve_dimension_bound():
    discrete = LevelwiseSimplicialCategory.discrete(FiniteCategory.linear_order(1), 5)
    with pytest.raises(DimensionBoundError):
        hc_nerve_simplices(discrete, 4)


def test_hc_nerve_of_a_discrete_category_is_the_nerve():
    assert passed(compare_discrete_hc_nerve(FiniteCategory.linear_order(2), 2))


def test_adjunction_unit():
    discrete = LevelwiseSimplicialCategory.discrete(FiniteCategory.linear_order(1), 2)
    assert AdjunctionUnit(1, discrete, 2).check().passed
    assert adjunction_unit(2, discrete).check().passed
    with pytest.raises(DimensionBoundError):
        adjunction_unit(3, discrete)


def test_unit_matches_the_nerve_of_the_product():
    assert product_nerve_comparison(FiniteCategory.linear_order(1), 2).passed


def collapse_homotopy():
    """H -> disc([1]) sending f, g and h to the single arrow 0 < 1"""
    H = LevelwiseSimplicialCategory.walking_homotopy()
    arrow = LevelwiseSimplicialCategory.discrete(FiniteCategory.linear_order(1), 1)
    ids = {"id_a": "id_0", "id_b": "id_1"}
    arrow_maps = [{**ids, "f": "0<1", "g": "0<1"}, {**ids, "f'": "0<1", "g'": "0<1", "h": "0<1"}]
    return SimplicialFunctor(H, arrow, {"a": 0, "b": 1}, arrow_maps, name="collapse")


def test_collapsing_the_homotopy_is_a_simplicial_functor():
    G = collapse_homotopy()
    assert G.check().passed
    for simplex in HCNerve(G.source).level(2):
        assert HCNerve(G.target).is_valid(G.on_simplex(simplex))


def test_mismatched_arrow_map_is_not_a_functor():
    G = collapse_homotopy()
    G.object_map = {"a": 1, "b": 0}
    assert not G.check().passed


def test_adjunction_unit_is_natural():
    G = collapse_homotopy()
    unit = AdjunctionUnit(1, G.source, 1)
    assert unit.check_naturality(G, AdjunctionUnit(1, G.target, 1)).passed
