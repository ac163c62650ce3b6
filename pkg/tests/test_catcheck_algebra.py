# tests/test_catcheck_algebra.py
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from catcheck_algebra import (
    LinearizationFunctor,
    antipode_from_shear,
    check_algebra,
    check_algebra_map,
    check_antipode,
    check_bialgebra,
    check_coalgebra,
    check_operad_algebra,
    check_operad_algebra_map,
    coproduct_universal_check,
    inversion_morphism,
    is_hopf,
    left_shear,
    linearize,
    linearize_monoid,
    monoid_bialgebra,
    monoid_sweep,
    operad_algebra_from_algebra,
    require_bialgebra,
    right_shear,
    shear_identities,
    shear_inverse_from_antipode,
    tensor_algebras,
    unit_bialgebra,
)
from catcheck_monoidal import FiniteSet
from catcheck_monoids import cyclic_group, idempotent_monoid, symmetric_group, truncated_naturals
from catcheck_operators import AssocOperad, CommOperad
from catcheck_utils import NotAGroupError, NotHopfError, PreconditionError


def passed(results):
    return all(r.passed for r in results)


@pytest.fixture
def c2(description):
    return description("group_algebra_c2.json").bialgebra()


@pytest.fixture
def dual_numbers(description):
    return description("dual_numbers_f2.json").algebra()


@pytest.fixture
def upper_triangular(description):
    return description("upper_triangular_f2.json").algebra()


# ---------------------------------------------------------
# Axioms
# ---------------------------------------------------------

def test_group_algebra_is_a_bialgebra(c2):
    results = check_bialgebra(c2)
    assert passed(results)
    assert "F_2[C_2] coassociativity" in [r.name for r in results]
    assert require_bialgebra(c2) is c2


def test_broken_counit_is_reported(c2, f2):
    broken = replace(c2, epsilon=f2.matrix([[1, 0]]))
    failed = [r.name for r in check_bialgebra(broken) if not r.passed]
    assert "F_2[C_2] left counit" in failed
    with pytest.raises(PreconditionError):
        require_bialgebra(broken)


def test_noncommutative_algebra(upper_triangular):
    assert passed(check_algebra(upper_triangular))
    flagged = check_algebra(replace(upper_triangular, commutative=True))
    assert [r.name for r in flagged if not r.passed] == ["T_2(F_2) commutativity"]


def test_tensor_product_of_commutative_algebras(dual_numbers):
    square = tensor_algebras(dual_numbers, dual_numbers)
    assert square.carrier == 4
    assert square.commutative
    assert passed(check_algebra(square))


def test_algebra_maps(dual_numbers, f2):
    assert check_algebra_map(f2.identity(2), dual_numbers, dual_numbers).passed
    zero = check_algebra_map(f2.zero(2, 2), dual_numbers, dual_numbers)
    assert not zero.passed
    assert zero.witness["equation"] == "unit"


def test_unit_bialgebra_is_hopf(f2):
    one = unit_bialgebra(f2)
    assert passed(check_bialgebra(one))
    assert is_hopf(one).hopf


# ---------------------------------------------------------
# Shear maps and antipodes
# ---------------------------------------------------------

def test_group_algebra_antipode_from_shear(c2, f2):
    decision = is_hopf(c2)
    assert decision.hopf and decision.left.invertible
    antipode = antipode_from_shear(c2, decision)
    assert antipode == f2.identity(2)
    assert check_antipode(c2, c2.antipode).passed


def test_shear_inverse_from_antipode(c2, f2):
    phi = shear_inverse_from_antipode(c2, c2.antipode)
    sh = right_shear(c2)
    assert f2.compose(phi, sh) == f2.identity(4)
    assert f2.compose(sh, phi) == f2.identity(4)


def test_wrong_antipode_is_rejected(c2, f2):
    assert not check_antipode(c2, f2.zero(2, 2)).passed
    with pytest.raises(PreconditionError):
        shear_inverse_from_antipode(c2, f2.zero(2, 2))


def test_idempotent_monoid_is_not_hopf():
    bialgebra = linearize_monoid(idempotent_monoid(), 2)
    assert passed(check_bialgebra(bialgebra))
    decision = is_hopf(bialgebra)
    assert not decision.hopf
    kernel = decision.witness["kernel"]
    assert any(kernel)
    assert bialgebra.category.apply(right_shear(bialgebra), kernel) == [0] * 4
    with pytest.raises(NotHopfError):
        antipode_from_shear(bialgebra)


def test_shear_identities_hold_without_antipode():
    bialgebra = linearize_monoid(truncated_naturals(1), 3)
    assert passed(shear_identities(bialgebra))
    assert len(shear_identities(bialgebra)) == 8


def test_left_and_right_shear_differ_but_agree_on_invertibility(c2, f2):
    assert f2.is_invertible(left_shear(c2)).invertible
    assert f2.is_invertible(right_shear(c2)).invertible


def test_symmetric_group_antipode_is_inversion():
    s3 = symmetric_group(3)
    bialgebra = linearize(s3, 2)
    antipode = antipode_from_shear(bialgebra)
    assert antipode == inversion_morphism(s3, bialgebra.category)


@settings(deadline=None, max_examples=12)
@given(st.integers(min_value=2, max_value=4), st.sampled_from([2, 3, 5]))
def test_cyclic_group_algebras_are_hopf(n, p):
    group = cyclic_group(n)
    bialgebra = linearize(group, p)
    assert antipode_from_shear(bialgebra) == inversion_morphism(group, bialgebra.category)


def test_linearize_refuses_non_groups():
    with pytest.raises(NotAGroupError):
        linearize(truncated_naturals(1))


# ---------------------------------------------------------
# Monoids in finite sets
# ---------------------------------------------------------

def test_group_in_finite_sets_has_inversion_as_antipode():
    bialgebra = monoid_bialgebra(cyclic_group(3))
    assert passed(check_bialgebra(bialgebra))
    antipode = antipode_from_shear(bialgebra)
    assert antipode.table == (0, 2, 1)


def test_monoid_in_finite_sets_has_colliding_shear():
    decision = is_hopf(monoid_bialgebra(truncated_naturals(2)))
    assert not decision.hopf
    assert "collision" in decision.witness


def test_linearization_is_strong_monoidal(finset):
    functor = LinearizationFunctor()
    two, three = FiniteSet(2), FiniteSet(3)
    morphisms = [finset.function(2, 3, (2, 0)), finset.function(3, 2, (1, 1, 0)), finset.identity(two)]
    results = functor.check_strong_monoidal(morphisms, [two, three])
    assert passed(results)
    assert len(results) == 5


def test_sweep_small_monoids():
    results, rows = monoid_sweep(3, 2)
    assert passed(results)
    assert len(rows) == 10
    assert sum(row["group"] for row in rows) == 3
    assert all(row["group"] == row["hopf"] for row in rows)


def test_sweep_monoids_of_order_four():
    results, rows = monoid_sweep(4, 2)
    assert passed(results)
    assert len(rows) == 45
    assert sum(row["order"] == 4 for row in rows) == 35
    assert sum(row["group"] for row in rows) == 5
    assert all(row["group"] == row["hopf"] for row in rows)


# ---------------------------------------------------------
# Coproducts and operad algebras
# ---------------------------------------------------------

def test_tensor_product_is_the_coproduct(dual_numbers, f2):
    R = S = dual_numbers
    T = tensor_algebras(R, S)
    f = f2.tensor_mor(f2.identity(2), S.eta)
    g = f2.tensor_mor(R.eta, f2.identity(2))
    check = coproduct_universal_check(R, S, T, f, g)
    assert check.passed, [r.name for r in check.results if not r.passed]
    assert check.candidates == 2 ** 16
    assert check.morphism == f2.identity(4)


def test_coproduct_needs_commutative_algebras(upper_triangular, f2):
    identity = f2.identity(3)
    with pytest.raises(PreconditionError):
        coproduct_universal_check(upper_triangular, upper_triangular, upper_triangular, identity, identity)


def test_comm_algebra_structure(dual_numbers):
    X = operad_algebra_from_algebra(dual_numbers, CommOperad(3))
    assert passed(check_operad_algebra(X))
    assert X.structure_map(0) == dual_numbers.eta
    assert X.structure_map(2) == dual_numbers.mu


def test_assoc_algebra_structure(upper_triangular):
    X = operad_algebra_from_algebra(upper_triangular, AssocOperad(3))
    assert passed(check_operad_algebra(X))
    with pytest.raises(PreconditionError):
        operad_algebra_from_algebra(upper_triangular, CommOperad(3))


def test_coalgebra_checks_run_in_the_opposite_category(c2):
    results = check_coalgebra(c2.coalgebra())
    assert passed(results)
    assert [r.name for r in results][:1] == ["F_2[C_2] coassociativity"]


def test_operad_algebra_maps(dual_numbers, f2):
    X = operad_algebra_from_algebra(dual_numbers, CommOperad(3))
    assert check_operad_algebra_map(f2.identity(2), X, X).passed
    zero = check_operad_algebra_map(f2.zero(2, 2), X, X)
    assert not zero.passed
    assert "op" in zero.witness
