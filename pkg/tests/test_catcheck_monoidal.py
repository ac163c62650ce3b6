# tests/test_catcheck_monoidal.py
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catcheck_monoidal import (
    FiniteCategory,
    FiniteSet,
    MatrixCategory,
    MonoidalCategory,
    ScalarRing,
    check_category_laws,
    check_monoidal_laws,
    composable_triples,
)
from catcheck_utils import (
    CompositionError,
    DimensionBoundError,
    InstanceMismatchError,
    PreconditionError,
    ShapeError,
)

F3 = MatrixCategory(ScalarRing(3))


@st.composite
def f3_matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=2))
    cols = draw(st.integers(min_value=1, max_value=2))
    entries = draw(st.lists(st.lists(st.integers(0, 2), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return F3.matrix(entries, shape=(rows, cols))


# ---------------------------------------------------------
# Matrices
# ---------------------------------------------------------

@settings(deadline=None, max_examples=40)
@given(f3_matrices(), f3_matrices(), f3_matrices())
def test_kronecker_is_strictly_associative(f, g, h):
    assert F3.tensor_mor(F3.tensor_mor(f, g), h) == F3.tensor_mor(f, F3.tensor_mor(g, h))


@settings(deadline=None, max_examples=40)
@given(f3_matrices(), f3_matrices())
def test_braiding_is_natural(f, g):
    lhs = F3.compose(F3.braiding(f.target, g.target), F3.tensor_mor(f, g))
    rhs = F3.compose(F3.tensor_mor(g, f), F3.braiding(f.source, g.source))
    assert lhs == rhs


@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (2, 3), (3, 2)])
def test_braiding_is_symmetric(f2, a, b):
    round_trip = f2.compose(f2.braiding(b, a), f2.braiding(a, b))
    assert round_trip == f2.identity(a * b)


def test_braiding_moves_basis_pairs(f2):
    sigma = f2.braiding(2, 3)
    # pair (i, j) of 2 (x) 3 has index i*3 + j and lands on j*2 + i
    assert set(sigma.entries()) == {(j * 2 + i, i * 3 + j) for i in range(2) for j in range(3)}
    assert sigma.is_permutation()


def test_tensor_flattens_row_major(f2):
    f = f2.matrix([[1], [0]])
    g = f2.matrix([[0], [1]])
    # e_0 (x) e_1 is basis vector 0*2 + 1
    assert f2.tensor_mor(f, g).column(0) == [0, 1, 0, 0]


def test_singular_matrix_has_kernel_witness(f2):
    f = f2.matrix([[1, 1], [1, 1]])
    decision = f2.is_invertible(f)
    assert not decision
    kernel = decision.witness["kernel"]
    assert any(kernel)
    assert f2.apply(f, kernel) == [0, 0]


def test_inverse_over_prime_field(f3):
    f = f3.matrix([[1, 2], [0, 1]])
    decision = f3.is_invertible(f)
    assert decision.invertible
    assert f3.compose(decision.inverse, f) == f3.identity(2)
    assert f3.compose(f, decision.inverse) == f3.identity(2)


def test_non_square_matrix_is_not_invertible(f2):
    decision = f2.is_invertible(f2.matrix([[1, 0]]))
    assert not decision.invertible
    assert decision.witness == {"shape": [1, 2]}


def test_rational_entries_stay_exact(rationals):
    f = rationals.matrix([["1/2", 0], [0, 3]])
    inverse = rationals.is_invertible(f).inverse
    assert inverse.rows() == [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1, 3)]]
    assert inverse.to_json()["matrix"] == [[2, 0], [0, "1/3"]]


def test_fraction_without_image_in_prime_field(f2):
    with pytest.raises(ShapeError):
        f2.matrix([["1/2"]])


def test_composite_characteristic_is_refused():
    with pytest.raises(PreconditionError):
        ScalarRing(4)


def test_composition_errors(f2, f3):
    with pytest.raises(CompositionError):
        f2.compose(f2.identity(2), f2.identity(3))
    with pytest.raises(InstanceMismatchError):
        f2.compose(f3.identity(2), f2.identity(2))


def test_hom_enumeration(f2, rationals):
    assert len(f2.hom(1, 2)) == 4
    assert len(set(f2.hom(2, 2))) == 16
    with pytest.raises(DimensionBoundError):
        f2.hom(5, 5)
    with pytest.raises(PreconditionError):
        rationals.hom(1, 1)


def test_matrix_units_span_the_hom_set(f2, rationals):
    units = f2.spanning_hom(2, 2)
    assert len(set(units)) == 4
    assert set(units) < set(f2.hom(2, 2))
    assert len(rationals.spanning_hom(2, 3)) == 6
    assert f2.spanning_hom(0, 2) == [f2.zero(0, 2)]


def test_row_search_matches_filtered_enumeration(f2):
    u = f2.matrix([[1], [0]])
    v = f2.matrix([[1]])
    solutions, searched = f2.precomposition_solutions(2, 1, [(u, v)])
    generic, total = MonoidalCategory.precomposition_solutions(f2, 2, 1, [(u, v)])
    assert searched == total == 4
    assert set(solutions) == set(generic) == {f2.matrix([[1, 0]]), f2.matrix([[1, 1]])}


def test_shuffle_of_two_factors_is_the_braiding(f2):
    assert f2.shuffle([2, 3], (1, 0)) == f2.braiding(2, 3)
    assert f2.shuffle([2, 3], (0, 1)) == f2.identity(6)
    with pytest.raises(ShapeError):
        f2.shuffle([2, 3], (0, 0))


# ---------------------------------------------------------
# Finite sets
# ---------------------------------------------------------

def test_unit_is_strict(finset):
    three = FiniteSet(3)
    assert finset.tensor_obj(finset.unit(), three) == three
    assert finset.tensor_obj(three, finset.unit()) == three
    assert finset.tensor_obj(FiniteSet(2), three) == FiniteSet(6)
    assert finset.tensor_obj(FiniteSet(1), three) == three
    assert finset.tensor_obj(three, FiniteSet(1, ("x",))) == three


def test_function_tensor_and_braiding(finset):
    f = finset.function(2, 2, (1, 0))
    g = finset.function(3, 3, (0, 0, 2))
    assert finset.tensor_mor(f, g).table == (3, 3, 5, 0, 0, 2)
    assert finset.braiding(FiniteSet(2), FiniteSet(3)).table == (0, 2, 4, 1, 3, 5)


def test_bijectivity_witnesses(finset):
    collision = finset.is_invertible(finset.function(3, 3, (0, 1, 0)))
    assert collision.witness == {"collision": [0, 2]}
    omission = finset.is_invertible(finset.function(2, 3, (0, 1)))
    assert omission.witness == {"omission": 2}
    bijection = finset.is_invertible(finset.function(3, 3, (2, 0, 1)))
    assert bijection.inverse.table == (1, 2, 0)


def test_function_tables_are_checked(finset):
    with pytest.raises(ShapeError):
        finset.function(2, 2, (0, 2))
    assert len(finset.hom(FiniteSet(2), FiniteSet(3))) == 9


# ---------------------------------------------------------
# Law checks
# ---------------------------------------------------------

@pytest.mark.parametrize("instance", ["f2", "f3", "rationals", "finset"])
def test_instances_satisfy_the_monoidal_laws(request, instance):
    category = request.getfixturevalue(instance)
    triples = composable_triples(category, seed=3, count=20)
    results = check_category_laws(category, triples) + check_monoidal_laws(category, triples)
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_population_is_seeded(f2):
    first = composable_triples(f2, seed=11, count=5)
    second = composable_triples(f2, seed=11, count=5)
    assert first == second


# ---------------------------------------------------------
# Finite categories
# ---------------------------------------------------------

def test_linear_order_composition():
    category = FiniteCategory.linear_order(2)
    assert len(category.arrows()) == 6
    composite = category.compose(category.arrow("1<2"), category.arrow("0<1"))
    assert composite.name == "0<2"
    assert all(r.passed for r in category.check_laws())
    assert not category.is_invertible(category.arrow("0<1"))


def test_group_as_one_object_category():
    category = FiniteCategory.from_monoid([[0, 1], [1, 0]], ["e", "g"], name="BC_2")
    g = category.arrow("g")
    assert category.compose(g, g) == category.identity("*")
    assert category.is_invertible(g).inverse == g


def test_non_associative_table_is_caught():
    category = FiniteCategory(
        [0], {"a": (0, 0), "b": (0, 0)},
        {("a", "a"): "b", ("b", "a"): "b", ("a", "b"): "a", ("b", "b"): "a"})
    unit, associativity = category.check_laws()
    assert unit.passed
    assert not associativity.passed
    assert len(associativity.witness["triple"]) == 3


def test_product_category():
    product = FiniteCategory.linear_order(1).product(FiniteCategory.linear_order(1))
    assert len(product.objects()) == 4
    assert len(product.arrows()) == 9
    assert all(r.passed for r in product.check_laws())
