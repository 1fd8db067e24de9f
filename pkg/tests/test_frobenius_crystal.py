from fractions import Fraction
from math import comb, factorial

import pytest

from langlands_desk import frobenius_crystal as fc
from langlands_desk.algebra.cyclotomic import CyclotomicNumber
from langlands_desk.algebra.eisenstein import EisensteinExact, EisensteinLocal
from langlands_desk.errors import DomainError, InputError
from langlands_desk.kloosterman import KloostermanQuery, kloosterman_sum


@pytest.fixture(scope="module")
def solutions():
    return {p: fc.solve_frobenius_ode(fc.CrystalConfig.default(p)) for p in (3, 5, 7)}


def dwork_zeta(p, K):
    """exp(lambda (x - x^p)) summed at x = 1 coefficient by coefficient."""
    lam = EisensteinExact.lam_power(p, 1)
    # coefficient of x^e has p-adic valuation >= e (p-1)/p^2
    e_max = (K * p * p) // ((p - 1) ** 2) + 2 * p
    coeffs = [EisensteinExact(p, [0]) for _ in range(e_max + 1)]
    lam_k = EisensteinExact(p, [1])
    for k in range(e_max + 1):
        for j in range(k + 1):
            e = k - j + p * j
            if e <= e_max:
                coeffs[e] = coeffs[e] + lam_k * Fraction((-1) ** j * comb(k, j), factorial(k))
        lam_k = lam_k * lam
    total = EisensteinExact(p, [0])
    for c in coeffs:
        total = total + c
    return total.to_local(K)


@pytest.mark.parametrize("p", [3, 5])
def test_embedded_zeta_matches_dwork_exponential(p):
    K = 3 * (p - 1)
    z = fc.embedded_zeta(p, K)
    assert z == dwork_zeta(p, K)
    assert (z - 1 - EisensteinLocal.lam(p, K, 1)).valuation() >= 2
    assert (z**p - 1).is_zero()


def test_embedding_is_a_ring_map():
    p, K = 5, 12
    a = CyclotomicNumber(p, [1, 2, 0, -1])
    b = CyclotomicNumber(p, [0, 1, 1, 3])
    assert fc.embed_cyclotomic(a * b, K) == fc.embed_cyclotomic(a, K) * fc.embed_cyclotomic(b, K)


def test_config_validation():
    with pytest.raises(InputError):
        fc.CrystalConfig(2, 4, 4)
    with pytest.raises(InputError):
        fc.CrystalConfig(3, 2, 6)
    with pytest.raises(InputError):
        fc.CrystalConfig(5, 10, 7)
    with pytest.raises(InputError):
        fc.CrystalConfig(3, 6, 6, N=((0, 0), (1, 0)))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_solution_satisfies_the_equation(solutions, p):
    phi = solutions[p]
    assert fc.residual_vanishes(phi)
    assert fc.determinant_is_constant(phi)
    assert fc.constant_term_conjugates(phi)
    assert phi.M == 2 * p


def test_residual_detects_a_wrong_constant_term(solutions):
    phi = solutions[3]
    broken = fc.SeriesMatrix(phi.p, phi.K, [list(map(list, c)) for c in phi.coeffs], phi.constant_parameter,
                             phi.projection_layer)
    broken.coeffs[2][0][0] = broken.coeffs[2][0][0] + 1
    assert not fc.residual_vanishes(broken)


def test_teichmueller_lifts():
    assert fc.teichmueller_lift(1, 5, 8) == 1
    for p in (3, 5, 7):
        K = 3 * (p - 1)
        m = p ** (K // (p - 1) + 1)
        assert fc.teichmueller_lift(p - 1, p, K) % m == m - 1
    X = fc.teichmueller_lift(2, 5, 12)
    assert X % 5 == 2 and pow(X, 4, 5**4) == 1
    with pytest.raises(DomainError):
        fc.teichmueller_lift(0, 5, 8)


def test_quadratic_teichmueller_lift():
    p, K = 3, 8
    for t in range(1, 9):
        X = fc.teichmueller_lift(t, p, K, degree=2)
        power = X
        for _ in range(7):
            power = power * X
        assert power.base_part() == 1  # X^8 = 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_calibration_is_t_independent(solutions, p):
    cal = fc.calibration_report(solutions[p])
    assert cal.t_independent
    assert cal.constant == EisensteinLocal.from_int(p, cal.precision, -1)
    assert set(cal.ordinary.values()) == {0}


def test_examples_at_p3(solutions):
    phi = solutions[3]
    prec = phi.K - fc.TRACE_BUFFER
    tr1 = fc.frobenius_trace(phi, 1).truncate(prec)
    tr2 = fc.frobenius_trace(phi, 2).truncate(prec)
    kl1 = fc.embed_cyclotomic(kloosterman_sum(KloostermanQuery(2, 3, 1)), phi.K).truncate(prec)
    assert kl1 == -1
    assert tr1 == 1
    assert tr2 == -2


def test_degree_two_points(solutions):
    cal = fc.calibration_report(solutions[3], degree=2)
    assert cal.t_independent and len(cal.traces) == 8
    assert cal.constant == EisensteinLocal.from_int(3, cal.precision, -1)


def test_precision_monotonicity(solutions):
    small = solutions[3]
    large = fc.solve_frobenius_ode(fc.CrystalConfig(3, 9, 10))
    prec = small.K - fc.TRACE_BUFFER
    for t in (1, 2):
        assert fc.frobenius_trace(small, t).congruent(fc.frobenius_trace(large, t), prec)
    for n in range(small.M + 1):
        for i in range(2):
            for j in range(2):
                assert small.coeffs[n][i][j] == large.coeffs[n][i][j].truncate(small.K)


def test_ordinarity_valuation():
    assert fc.ordinarity_valuation(EisensteinLocal.from_int(5, 12, 5)) == 1
    assert fc.ordinarity_valuation(EisensteinLocal.lam(5, 12, 1)) == Fraction(1, 4)
    assert fc.ordinarity_valuation(EisensteinLocal.from_int(3, 6, 2)) == 0
    assert fc.ordinarity_valuation(EisensteinLocal.from_int(3, 4, 9)) is None


def test_tail_is_below_reported_precision(solutions):
    for p, phi in solutions.items():
        assert phi.tail_valuation > phi.K - fc.TRACE_BUFFER
