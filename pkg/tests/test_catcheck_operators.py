# tests/test_catcheck_operators.py
import pytest
from hypothesis import given, settings, strategies as st

from catcheck_monoidal import FiniteSet
from catcheck_operators import (
    AssocOperad,
    CommOperad,
    OperadOperatorCategory,
    OperatorCategory,
    PointedMap,
    PointedSetCategory,
    check_comm_is_fin_star,
    check_factorizations,
    check_pointed_map_counts,
    compose_pointed,
    count_pointed_maps,
    fold_map,
    identity_map,
    inert_active_factorize,
    inert_projection,
    operad_operator_category,
)
from catcheck_utils import ArityBoundError, CompositionError, DimensionBoundError, ShapeError


@st.composite
def pointed_maps(draw, bound=4):
    m = draw(st.integers(min_value=0, max_value=bound))
    n = draw(st.integers(min_value=0, max_value=bound))
    table = draw(st.lists(st.integers(min_value=0, max_value=n), min_size=m, max_size=m))
    return PointedMap(m, n, tuple(table))


# ---------------------------------------------------------
# Finite pointed sets
# ---------------------------------------------------------

def test_pointed_map_basics():
    alpha = PointedMap(3, 2, (2, 0, 2))
    assert alpha(0) == 0
    assert alpha.preimage(2) == (1, 3)
    assert alpha.preimage(0) == (2,)
    assert not alpha.is_inert()
    assert not alpha.is_active()
    assert fold_map(3).is_active()
    assert inert_projection(3, 2).is_inert()
    assert identity_map(2).is_identity()


def test_pointed_map_shape_errors():
    with pytest.raises(ShapeError):
        PointedMap(2, 1, (0, 2))
    with pytest.raises(ShapeError):
        PointedMap(2, 1, (1,))
    with pytest.raises(CompositionError):
        compose_pointed(fold_map(2), fold_map(3))


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_pointed_map_count(m, n):
    assert count_pointed_maps(m, n) == (n + 1) ** m


@given(pointed_maps())
def test_inert_active_factorization(alpha):
    inert, active = inert_active_factorize(alpha)
    assert inert.is_inert()
    assert active.is_active()
    assert compose_pointed(active, inert) == alpha


@given(st.data())
def test_pointed_composition_is_associative(data):
    sizes = data.draw(st.lists(st.integers(min_value=0, max_value=3), min_size=4, max_size=4))
    f, g, h = (PointedMap(sizes[t], sizes[t + 1],
                          tuple(data.draw(st.lists(st.integers(min_value=0, max_value=sizes[t + 1]),
                                                   min_size=sizes[t], max_size=sizes[t]))))
               for t in range(3))
    assert compose_pointed(h, compose_pointed(g, f)) == compose_pointed(compose_pointed(h, g), f)


def test_fin_star_as_a_category():
    fin = PointedSetCategory(3)
    assert fin.objects() == [0, 1, 2, 3]
    assert len(fin.hom(2, 2)) == 9
    assert fin.compose(fold_map(2), fin.identity(2)) == fold_map(2)
    assert fin.codomain(fold_map(3)) == 1


def test_exhaustive_skeleton_checks():
    assert check_pointed_map_counts(3).passed
    assert check_factorizations(3).passed
    assert check_comm_is_fin_star(3).passed


def test_fin_star_comparison_at_four():
    result = check_comm_is_fin_star(4)
    assert result.passed
    assert result.detail == "hom-sets up to [4]_+, 9866 composable pairs up to [3]_+"


# ---------------------------------------------------------
# Categories of operators
# ---------------------------------------------------------

def test_cocartesian_lift_of_the_fold(f2):
    operators = OperatorCategory(f2)
    lift = operators.cocartesian_lift(fold_map(2), (1, 2))
    assert lift.target == (2,)
    assert lift.components[0] == f2.identity(2)
    assert operators.pushforward(PointedMap(2, 2, (0, 0)), (2, 3)) == (1, 1)


def test_morphism_shapes_are_checked(f2):
    operators = OperatorCategory(f2)
    with pytest.raises(ShapeError) as info:
        operators.morphism(fold_map(2), (1, 2), (2,), [f2.identity(3)])
    assert info.value.witness == {"component": 1}


def test_inert_lift_is_cocartesian(f2):
    operators = OperatorCategory(f2)
    verdict = operators.check_cocartesian(inert_projection(2, 1), (1, 1), identity_map(1), (1,))
    assert verdict.passed


def test_factor_through_lift_recovers_the_component(f2):
    operators = OperatorCategory(f2)
    mu = f2.matrix([[1, 0, 0, 1], [0, 1, 1, 0]])
    edge = operators.morphism(fold_map(2), (2, 2), (2,), [mu])
    factor = operators.factor_through_lift(edge, fold_map(2))
    assert factor.alpha == identity_map(1)
    assert factor.components[0] == mu


def test_composition_reorders_blocks(f2):
    operators = OperatorCategory(f2)
    swap = operators.morphism(PointedMap(2, 2, (2, 1)), (2, 2), (2, 2), [f2.identity(2), f2.identity(2)])
    fold = operators.cocartesian_lift(fold_map(2), (2, 2))
    composite = operators.compose(fold, swap)
    assert composite.alpha == fold_map(2)
    assert composite.components[0] == f2.braiding(2, 2)


def test_composable_triple_counts(f2):
    operators = OperatorCategory(f2)
    assert operators.count_composable_triples(1, [1]) == 164
    assert operators.count_composable_triples(2, [1]) == 101949
    assert operators.count_composable_triples(1, [1], spanning=True) == 34
    assert operators.count_composable_triples(2, [1], spanning=True) == 2457
    assert operators.count_composable_triples(1, [1, 2], spanning=True) == 1461


def test_operator_associativity_on_every_triple(f2):
    operators = OperatorCategory(f2)
    result = operators.audit_associativity(1, [1])
    assert result.passed
    assert result.detail.startswith("164 triples")
    spanning = operators.audit_associativity(2, [1], spanning=True)
    assert spanning.passed
    assert spanning.detail == "2457 spanning triples, arities <= 2 over 1 objects"
    assert operators.audit_associativity(1, [1, 2], spanning=True).detail.startswith("1461 spanning triples")


def test_operator_associativity_on_finite_sets(finset):
    result = OperatorCategory(finset).audit_associativity(1, [FiniteSet(1), FiniteSet(2)])
    assert result.passed
    assert result.detail.startswith("1221 triples")


def test_associativity_audit_refuses_beyond_the_limit(f2):
    operators = OperatorCategory(f2)
    with pytest.raises(DimensionBoundError) as info:
        operators.audit_associativity(3, [1], spanning=True)
    assert info.value.witness == {"triples": 704836, "limit": 4096}
    assert operators.largest_auditable_arity(3, [1], spanning=True) == 2
    assert operators.largest_auditable_arity(3, [1, 2], spanning=True) == 1


def test_segal_condition(f2):
    operators = OperatorCategory(f2)
    assert all(r.passed for r in operators.segal_check(1, [1, 2]))
    assert all(r.passed for r in operators.segal_check(2, [1]))


def test_segal_refuses_when_nothing_fits(f2):
    results = OperatorCategory(f2).segal_check(1, [3], limit=4)
    assert results[0].passed
    assert results[-1].refused
    assert results[-1].witness == {"skipped": 1, "limit": 4}


# ---------------------------------------------------------
# Operads
# ---------------------------------------------------------

@pytest.mark.parametrize("operad, arity_bound, triples, pairs", [
    (CommOperad(4), None, 5500, 126),
    (AssocOperad(4), 3, 11680, 323),
])
def test_operad_laws_on_every_composable_tuple(operad, arity_bound, triples, pairs):
    results = operad.check_laws(arity_bound)
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
    by_name = {r.name: r for r in results}
    assert by_name[f"{operad.name} associativity"].detail.startswith(f"{triples} composable triples")
    assert by_name[f"{operad.name} top equivariance"].detail == f"{pairs} composable pairs"


def test_assoc_composition_concatenates_blocks():
    assoc = AssocOperad(4)
    assert assoc.compose((1, 0), [(0, 1), (0,)]) == (2, 0, 1)
    assert assoc.relabel((0, 1), (1, 0)) == (1, 0)
    assert len(assoc.operations(3)) == 6


def test_arity_bound_is_enforced():
    with pytest.raises(ArityBoundError):
        CommOperad(2).operations(3)
    with pytest.raises(ArityBoundError):
        CommOperad(2).compose(2, [2, 1])


@pytest.mark.parametrize("operad, triples", [(CommOperad(3), 2457), (AssocOperad(3), 3906)])
def test_operad_operator_categories(operad, triples):
    category = operad_operator_category(operad)
    result = category.check_laws(2)
    assert result.passed
    assert result.detail == f"{triples} composable triples, arity <= 2"
    assert category.lift(inert_projection(2, 1)).alpha == inert_projection(2, 1)


def test_assoc_operator_hom_counts_orderings():
    category = OperadOperatorCategory(AssocOperad(2))
    # alpha = fold carries two orderings, every other alpha into [1]_+ one
    assert len(category.hom(2, 1)) == 5
    assert len(category.hom_over(fold_map(2))) == 2
