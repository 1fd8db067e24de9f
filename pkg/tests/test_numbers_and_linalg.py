from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from langlands_desk.algebra import linalg
from langlands_desk.algebra.numbers import (
    is_prime,
    prime_power,
    rational_from_json,
    rational_to_json,
    reduce_mod,
    vp,
)
from langlands_desk.algebra.polynomial import LaurentPoly, poly_divmod, poly_gcd, poly_mul
from langlands_desk.errors import InputError

fractions = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


def test_primes_and_prime_powers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(49) == (7, 2)
    assert prime_power(2) == (2, 1)
    for bad in (1, 6, 12, 0, -3):
        with pytest.raises(InputError):
            prime_power(bad)


@given(fractions)
def test_rational_json_roundtrip(x):
    assert rational_from_json(rational_to_json(x)) == x


def test_rational_json_text():
    assert rational_to_json(Fraction(9, 8)) == "9/8"
    assert rational_to_json(Fraction(1)) == "1"
    assert rational_from_json("-1/1") == -1


def test_valuation_and_reduction():
    assert vp(Fraction(18, 5), 3) == 2
    assert vp(Fraction(5, 27), 3) == -3
    assert vp(0, 3) is None
    # 1/2 mod 9 is 5
    assert reduce_mod(Fraction(1, 2), 3, 2) == 5


small = st.integers(-5, 5)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_charpoly_cayley_hamilton(rows):
    A = linalg.to_fraction_matrix(rows)
    f = linalg.charpoly(A)
    acc = linalg.zeros(3)
    for k, c in enumerate(f):
        acc = linalg.mat_add(acc, linalg.mat_scale(c, linalg.mat_pow(A, k)))
    assert linalg.is_zero(acc)
    assert f[0] == (-1) ** 3 * linalg.det(A)


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=3, max_size=3))
def test_rank_nullity(rows):
    A = linalg.to_fraction_matrix(rows)
    ns = linalg.nullspace(A)
    assert linalg.rank(A) + len(ns) == 4
    for v in ns:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)


def test_solve_and_nilpotent():
    A = linalg.to_fraction_matrix([[2, 1], [1, 1]])
    assert linalg.solve(A, [3, 2]) == [1, 1]
    N = linalg.to_fraction_matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert linalg.is_nilpotent(N)
    assert not linalg.is_nilpotent(linalg.identity(3))


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=4))
def test_polynomial_division(a, b):
    if not any(b):
        return
    q, r = poly_divmod(a, b)
    back = poly_mul(q, b)
    n = max(len(back), len(r), len(a))
    pad = lambda v: list(v) + [0] * (n - len(v))
    assert [x + y for x, y in zip(pad(back), pad(r))] == pad(a)


def test_gcd_detects_repeated_roots():
    f = poly_mul([-1, 1], poly_mul([-1, 1], [2, 1]))  # (x-1)^2 (x+2)
    assert poly_gcd(f, [Fraction(-1), Fraction(1)]) == [-1, 1]


laurent = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=4).map(lambda d: LaurentPoly(d, "u"))


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(laurent, st.integers(1, 4))
def test_laurent_substitution_respects_products(a, k):
    b = LaurentPoly({-1: 2, 3: 1}, "u")
    assert (a * b).substitute_power(k) == a.substitute_power(k) * b.substitute_power(k)


def test_laurent_pole_order():
    assert LaurentPoly({-3: 1, 2: 5}).pole_order() == 3
    assert LaurentPoly({1: 1}).pole_order() == 0
    assert LaurentPoly().is_zero()
