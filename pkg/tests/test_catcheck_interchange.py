# tests/test_catcheck_interchange.py
import pytest

from catcheck_algebra import AlgebraStructure
from catcheck_interchange import (
    algebra_functor,
    assoc_algebra_functor,
    comm_algebra_functor,
    compose_cylinders,
    cylinder_from_algebra_map,
    cylinders_agree,
    homotopy_category_multiplication,
    nerve_algebra,
    pair_fold,
    pairing_and_pushforward,
    pairing_map,
)
from catcheck_operators import PointedMap, identity_map
from catcheck_utils import DimensionBoundError, NotAlgebraMapError, PreconditionError


def passed(results):
    return all(r.passed for r in results)


@pytest.fixture
def dual_numbers(description):
    return description("dual_numbers_f2.json").algebra()


@pytest.fixture
def upper_triangular(description):
    return description("upper_triangular_f2.json").algebra()


# ---------------------------------------------------------
# Algebra functors
# ---------------------------------------------------------

def test_commutative_algebra_functor(dual_numbers):
    functor = comm_algebra_functor(dual_numbers, 2)
    assert functor.on_object(3) == (2, 2, 2)
    assert functor.check_functoriality(2).passed
    assert passed(functor.check_inert_preservation(2))


def test_inert_preservation_covers_every_source_arity(f2):
    ground = AlgebraStructure(f2, 1, f2.identity(1), f2.identity(1), True, "F_2")
    results = comm_algebra_functor(ground, 3).check_inert_preservation(3)
    assert passed(results)
    assert results[0].detail == "24 inert maps"
    assert results[1].detail == "704 hom-set bijections, 0 beyond enumeration"


def test_fold_factors_through_the_multiplication(dual_numbers):
    functor = algebra_functor(dual_numbers, 2)
    assert homotopy_category_multiplication(functor) == dual_numbers.mu


def test_noncommutative_algebra_has_no_comm_functor(upper_triangular):
    with pytest.raises(PreconditionError):
        comm_algebra_functor(upper_triangular, 2)


def test_fold_orderings(dual_numbers, upper_triangular):
    commutative = assoc_algebra_functor(dual_numbers, 2)
    assert commutative.fold((0, 1)).components == commutative.fold((1, 0)).components
    ordered = assoc_algebra_functor(upper_triangular, 2)
    assert ordered.check_functoriality(2).passed
    assert ordered.fold((0, 1)).components != ordered.fold((1, 0)).components


def test_algebra_nerve(dual_numbers):
    functor = comm_algebra_functor(dual_numbers, 2)
    results = nerve_algebra(functor, 2).check(2, count=10)
    assert passed(results)
    assert results[-1].name.endswith("fold edge is (fold, mu)")
    with pytest.raises(DimensionBoundError):
        nerve_algebra(functor, 4)


# ---------------------------------------------------------
# Cylinders
# ---------------------------------------------------------

def test_identity_cylinder(dual_numbers, f2):
    cylinder = cylinder_from_algebra_map(f2.identity(2), dual_numbers, dual_numbers, arity_bound=2)
    assert passed(cylinder.check(2))
    with pytest.raises(PreconditionError):
        cylinder.on_morphism(cylinder.start.source.identity(1), 1, 0)


def test_zero_map_has_no_cylinder(dual_numbers, f2):
    with pytest.raises(NotAlgebraMapError) as info:
        cylinder_from_algebra_map(f2.zero(2, 2), dual_numbers, dual_numbers, arity_bound=2)
    assert info.value.witness["equation"] == "unit"


def test_pasted_cylinders_agree_with_the_composite_map(dual_numbers, f2):
    identity = cylinder_from_algebra_map(f2.identity(2), dual_numbers, dual_numbers, arity_bound=2)
    pasted = compose_cylinders(identity, identity)
    assert passed(pasted.check(2))
    assert cylinders_agree(pasted, identity, 2).passed


# ---------------------------------------------------------
# Pairing and pushforward
# ---------------------------------------------------------

def test_pairing_maps():
    assert pairing_map(identity_map(1)) == PointedMap(2, 2, (1, 2))
    assert pairing_map(PointedMap(2, 1, (1, 0))).table == (1, 0, 2, 0)
    assert pair_fold(2).table == (1, 2, 1, 2)
    assert pair_fold(2).is_active()


def test_pushforward_of_the_pairing_is_the_tensor_algebra(dual_numbers):
    comparison = pairing_and_pushforward(dual_numbers, dual_numbers, 2)
    assert passed(comparison.results), [r.name for r in comparison.results if not r.passed]
    # one Comm morphism per pointed map [m]_+ -> [n]_+ with m, n <= 2
    assert comparison.compared == 23
    assert len(comparison.results) == 5


def test_pairing_needs_commutative_algebras(dual_numbers, upper_triangular):
    with pytest.raises(PreconditionError):
        pairing_and_pushforward(dual_numbers, upper_triangular, 2)
