import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from langlands_desk.algebra.cyclotomic import CyclotomicNumber, cyclo_arith
from langlands_desk.errors import InputError

PRIMES = [3, 5, 7]


def elements(p):
    return st.lists(st.integers(-4, 4), min_size=p - 1, max_size=p - 1).map(lambda c: CyclotomicNumber(p, c))


def test_sum_of_all_roots_is_minus_one():
    for p in PRIMES:
        total = sum((CyclotomicNumber.zeta(p, k) for k in range(1, p)), CyclotomicNumber.rational(p, 0))
        assert total == -1


def test_zeta_power_p_is_one():
    for p in PRIMES:
        assert CyclotomicNumber.zeta(p) ** p == 1


def test_length_p_input_is_canonicalised():
    # 1 + z + z^2 = 0 in Q(zeta_3)
    assert CyclotomicNumber(3, [1, 1, 1]) == 0


def test_conjugation_rejects_multiples_of_p():
    with pytest.raises(InputError):
        CyclotomicNumber.zeta(5).conjugate(10)


@pytest.mark.parametrize("p", PRIMES)
def test_embeddings_match_complex_roots(p):
    z = CyclotomicNumber.zeta(p, 2) + 3
    for a, val in enumerate(z.embeddings(), start=1):
        assert abs(val - (cmath.exp(2j * math.pi * 2 * a / p) + 3)) < 1e-12


@given(elements(5), elements(5))
def test_galois_action_is_a_ring_map(x, y):
    for a in range(1, 5):
        assert (x * y).conjugate(a) == x.conjugate(a) * y.conjugate(a)
        assert (x + y).conjugate(a) == x.conjugate(a) + y.conjugate(a)


@given(elements(5), elements(5))
def test_multiplication_agrees_with_embeddings(x, y):
    for u, v, w in zip(x.embeddings(), y.embeddings(), (x * y).embeddings()):
        assert abs(u * v - w) < 1e-8


@given(elements(7))
def test_norm_is_rational(x):
    assert x.norm().is_rational()


def test_json_roundtrip_and_arith_dispatch():
    x = CyclotomicNumber(3, [Fraction(-1), 0])
    assert CyclotomicNumber.from_json(x.to_json()) == x
    assert x.to_json() == {"p": 3, "coeffs": ["-1", "0"]}
    assert cyclo_arith(x, x, "mul") == 1
