# tests/test_catcheck_monoids.py
import pytest
from hypothesis import given, settings, strategies as st

from catcheck_monoids import (
    FiniteMonoid,
    cyclic_group,
    enumerate_monoids,
    idempotent_monoid,
    symmetric_group,
    trivial_group,
    truncated_naturals,
)
from catcheck_utils import NotAGroupError, PreconditionError, ShapeError


def test_cyclic_group_inverses():
    c4 = cyclic_group(4)
    assert c4.is_group()
    assert c4.is_commutative()
    assert c4.inverse_table() == (0, 3, 2, 1)
    assert c4.label(1) == "g"


def test_symmetric_group_from_permutations():
    s3 = symmetric_group(3)
    assert s3.size == 6
    assert s3.identity_element() == 0
    assert s3.associativity_witness() is None
    assert s3.is_group()
    assert not s3.is_commutative()
    assert s3.labels[0] == "012"


def test_truncated_naturals_is_not_a_group():
    n2 = truncated_naturals(2)
    assert n2.validate() is n2
    assert not n2.is_group()
    with pytest.raises(NotAGroupError) as info:
        n2.inverse_table()
    assert info.value.witness == {"element": 1}


def test_idempotent_monoid():
    e = idempotent_monoid()
    assert e.multiply(1, 1) == 1
    assert e.non_invertible_element() == 1


def test_malformed_tables():
    with pytest.raises(ShapeError):
        FiniteMonoid(((0, 1), (1,)))
    with pytest.raises(ShapeError):
        FiniteMonoid(((0, 2), (1, 0)))
    with pytest.raises(PreconditionError):
        FiniteMonoid(((0, 1, 2), (1, 2, 0), (2, 0, 0))).validate()
    with pytest.raises(PreconditionError):
        FiniteMonoid(((1, 1), (1, 1))).validate()


def test_direct_product_of_two_c2_is_the_klein_group():
    klein = cyclic_group(2).product(cyclic_group(2))
    assert klein.size == 4
    assert klein.is_group()
    assert all(klein.multiply(a, a) == 0 for a in range(4))
    assert klein.labels[3] == "(g,g)"


@pytest.mark.parametrize("order,count", [(1, 1), (2, 2), (3, 7)])
def test_monoid_counts_up_to_isomorphism(order, count):
    assert len(enumerate_monoids(order)) == count


def test_order_three_has_exactly_one_group():
    monoids = enumerate_monoids(3)
    assert sum(m.is_group() for m in monoids) == 1
    assert all(m.identity_element() == 0 for m in monoids)
    assert all(m.associativity_witness() is None for m in monoids)


def test_enumeration_is_deterministic():
    first = [m.table for m in enumerate_monoids(3)]
    second = [m.table for m in enumerate_monoids(3)]
    assert first == second
    assert enumerate_monoids(0) == []
    assert enumerate_monoids(1)[0].table == trivial_group().table


@settings(deadline=None, max_examples=30)
@given(st.permutations(range(1, 6)))
def test_canonical_form_is_invariant_under_relabeling(rest):
    s3 = symmetric_group(3)
    relabeled = s3.relabel((0,) + tuple(rest))
    assert relabeled.is_group()
    assert relabeled.canonical_form() == s3.canonical_form()
