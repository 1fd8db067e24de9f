import pytest
from hypothesis import given, strategies as st

from langlands_desk.algebra.finite_field import FiniteField, field, is_irreducible
from langlands_desk.errors import InputError

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49]


@pytest.mark.parametrize("q", ORDERS)
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(q):
    F = field(q)
    seen = {F.pow(F.generator, k) for k in range(q - 1)}
    assert seen == set(F.nonzero())


@pytest.mark.parametrize("q", ORDERS)
def test_trace_is_additive_and_surjective(q):
    F = field(q)
    values = [F.trace(x) for x in F.elements()]
    assert set(values) == set(range(F.p))
    # each value hit q/p times
    assert all(values.count(v) == q // F.p for v in range(F.p))


@pytest.mark.parametrize("q", [4, 9, 25, 27])
def test_frobenius_fixes_prime_field_only(q):
    F = field(q)
    fixed = [x for x in F.elements() if F.pow(x, F.p) == x]
    assert len(fixed) == F.p


@given(st.sampled_from([9, 25, 27]), st.data())
def test_field_axioms(q, data):
    F = field(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % F.p


def test_modulus_irreducible_and_rejects_bad_orders():
    assert is_irreducible(field(9).modulus, 3)
    assert not is_irreducible((1, 0, 1), 2)  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(InputError):
        FiniteField(12)
