"""Symbolic manipulation of the connection d + N dt/t + E dt.

Matrices have :class:`LaurentPoly` entries, and a connection is stored as the
matrix ``A`` of ``d + A(x) dx``.  The pipeline is

    t-chart  --change_to_infinity-->  s = 1/t  --pullback_cover(h)-->  s = u^h
             --gauge_transform(u^-rho)-->  -h(N+E)/u^2 - rho/u

Slopes are read off after shearing by integer diagonal gauges (see
:func:`slope_at_infinity`).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import linalg
from .algebra.polynomial import LaurentPoly, poly_derivative, poly_gcd, trim
from .cartan import SimpleType, cartan_data
from .errors import DomainError, InputError, ValidationError

log = logging.getLogger(__name__)

Matrix = list[list[Fraction]]
LMatrix = list[list[LaurentPoly]]

ZERO_CHART = "zero"
INFINITY_CHART = "infinity"


@dataclass
class MatrixLieData:
    n: int
    N: Matrix
    E: Matrix
    rho_weights: list[Fraction]
    rank: int
    h: int
    exponents: tuple[int, ...] | None = None
    label: str = "custom"

    def __post_init__(self):
        self.N = linalg.to_fraction_matrix(self.N)
        self.E = linalg.to_fraction_matrix(self.E)
        self.rho_weights = [Fraction(w) for w in self.rho_weights]
        for M, name in ((self.N, "N"), (self.E, "E")):
            if len(M) != self.n or any(len(r) != self.n for r in M):
                raise InputError(f"{name} must be {self.n}x{self.n}")
        if len(self.rho_weights) != self.n:
            raise InputError("rho_weights must have one entry per basis vector")
        _integral_differences(self.rho_weights)
        self.check()

    @classmethod
    def sl(cls, n: int) -> MatrixLieData:
        """Standard representation of sl_n: N on the superdiagonal, E = E_{n,1}."""
        if n < 2:
            raise InputError("sl_n needs n >= 2")
        N = linalg.zeros(n)
        for i in range(n - 1):
            N[i][i + 1] = Fraction(1)
        E = linalg.zeros(n)
        E[n - 1][0] = Fraction(1)
        rho = [Fraction(n - 1, 2) - i for i in range(n)]
        data = cartan_data(SimpleType("A", n - 1))
        return cls(n, N, E, rho, n - 1, data.h, data.exponents, f"A{n - 1}")

    @classmethod
    def from_type(cls, series: str, rank: int) -> MatrixLieData:
        if series.upper() != "A":
            raise InputError("only type A has a built-in representation; supply matrices for other types")
        return cls.sl(rank + 1)

    def check(self) -> None:
        if not linalg.is_nilpotent(self.N):
            raise ValidationError("N is not nilpotent")
        if self.label.startswith("A") and linalg.is_zero(linalg.mat_pow(self.N, self.n - 1)):
            raise ValidationError("N is not principal")
        if linalg.is_zero(self.E):
            raise ValidationError("E is zero")
        rho = _diag(self.rho_weights)
        if linalg.commutator(rho, self.N) != self.N:
            raise ValidationError("[rho, N] != N")
        if linalg.commutator(rho, self.E) != linalg.mat_scale(1 - self.h, self.E):
            raise ValidationError("[rho, E] != (1 - h) E")

    @property
    def regular_element(self) -> Matrix:
        return linalg.mat_add(self.N, self.E)


def _diag(ws: Sequence[Fraction]) -> Matrix:
    n = len(ws)
    return [[Fraction(ws[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def _integral_differences(ws: Sequence[Fraction]) -> None:
    if any((w - ws[0]).denominator != 1 for w in ws):
        raise InputError("weights must differ by integers")


@dataclass
class LaurentConnection:
    variable: str
    A: LMatrix
    chart: str = ZERO_CHART
    cover_degree: int = 1

    @property
    def n(self) -> int:
        return len(self.A)

    def pole_order(self) -> int:
        return max((e.pole_order() for row in self.A for e in row), default=0)

    def coefficient(self, exponent: int) -> Matrix:
        return [[e[exponent] for e in row] for row in self.A]

    def residue(self) -> Matrix:
        return self.coefficient(-1)

    def __eq__(self, other):
        if not isinstance(other, LaurentConnection):
            return NotImplemented
        return (self.variable, self.chart, self.cover_degree, self.A) == (
            other.variable, other.chart, other.cover_degree, other.A)

    def to_json(self) -> dict:
        return {
            "variable": self.variable,
            "chart": self.chart,
            "cover_degree": self.cover_degree,
            "A": [[e.to_json() for e in row] for row in self.A],
        }


def _lmatrix(M: Matrix, exponent: int, var: str, scale=1) -> LMatrix:
    return [[LaurentPoly.monomial(scale * x, exponent, var) for x in row] for row in M]


def _ladd(a: LMatrix, b: LMatrix) -> LMatrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def build_connection(data: MatrixLieData) -> LaurentConnection:
    A = _ladd(_lmatrix(data.N, -1, "t"), _lmatrix(data.E, 0, "t"))
    return LaurentConnection("t", A, ZERO_CHART)


def change_to_infinity(conn: LaurentConnection) -> LaurentConnection:
    """Pull back along t = 1/s: A(t) dt -> -A(1/s) s^-2 ds.  An involution."""
    if conn.cover_degree != 1:
        raise InputError("coordinate change applies to uncovered charts only")
    new_var, new_chart = ("s", INFINITY_CHART) if conn.chart == ZERO_CHART else ("t", ZERO_CHART)
    A = [[-e.substitute_power(-1, new_var).shift(-2) for e in row] for row in conn.A]
    return LaurentConnection(new_var, A, new_chart)


def pullback_cover(conn: LaurentConnection, b: int, var: str = "u") -> LaurentConnection:
    """Substitute x = u^b, dx = b u^(b-1) du."""
    if b < 1:
        raise InputError("cover degree must be positive")
    if b == 1:
        return conn
    A = [[(e.substitute_power(b, var) * b).shift(b - 1) for e in row] for row in conn.A]
    return LaurentConnection(var, A, conn.chart, conn.cover_degree * b)


@dataclass(frozen=True)
class DiagonalMonomialGauge:
    """g = diag(c_i * x^(w_i)); the w_i must differ by integers."""

    weights: tuple[Fraction, ...]
    scalars: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        sc = self.scalars or tuple(Fraction(1) for _ in self.weights)
        object.__setattr__(self, "scalars", tuple(Fraction(c) for c in sc))
        if len(self.scalars) != len(self.weights):
            raise InputError("scalars and weights differ in length")
        if any(c == 0 for c in self.scalars):
            raise InputError("gauge matrix is not invertible")
        _integral_differences(self.weights)


def gauge_transform(conn: LaurentConnection, g: DiagonalMonomialGauge) -> LaurentConnection:
    """A -> g A g^-1 + g' g^-1."""
    if len(g.weights) != conn.n:
        raise InputError("gauge size does not match the connection")
    w, c = g.weights, g.scalars
    out = []
    for i, row in enumerate(conn.A):
        new_row = []
        for j, e in enumerate(row):
            shift = w[i] - w[j]
            term = e.shift(int(shift)) * (c[i] / c[j])
            if i == j and w[i] != 0:
                term = term + LaurentPoly.monomial(w[i], -1, conn.variable)
            new_row.append(term)
        out.append(new_row)
    return LaurentConnection(conn.variable, out, conn.chart, conn.cover_degree)


def rho_gauge(data: MatrixLieData) -> DiagonalMonomialGauge:
    return DiagonalMonomialGauge(tuple(-w for w in data.rho_weights))


@dataclass
class Pipeline:
    original: LaurentConnection
    at_infinity: LaurentConnection
    covered: LaurentConnection
    gauged: LaurentConnection
    closed_form: LaurentConnection

    @property
    def matches_closed_form(self) -> bool:
        return self.gauged.A == self.closed_form.A

    def to_json(self) -> dict:
        return {
            "t_chart": self.original.to_json(),
            "s_chart": self.at_infinity.to_json(),
            "cover": self.covered.to_json(),
            "gauged": self.gauged.to_json(),
            "matches_closed_form": self.matches_closed_form,
        }


def closed_form(data: MatrixLieData, var: str = "u") -> LaurentConnection:
    h = data.h
    A = _ladd(_lmatrix(data.regular_element, -2, var, -h), _lmatrix(_diag(data.rho_weights), -1, var, -1))
    return LaurentConnection(var, A, INFINITY_CHART, h)


def run_pipeline(data: MatrixLieData) -> Pipeline:
    c0 = build_connection(data)
    c1 = change_to_infinity(c0)
    c2 = pullback_cover(c1, data.h)
    c3 = gauge_transform(c2, rho_gauge(data))
    return Pipeline(c0, c1, c2, c3, closed_form(data))


# --- slopes -----------------------------------------------------------------

def _max_cycle_mean(n: int, weights: dict[tuple[int, int], int]) -> Fraction | None:
    """Karp's algorithm; None when the graph is acyclic."""
    NEG = None
    D = [[Fraction(0)] * n] + [[NEG] * n for _ in range(n)]
    for k in range(1, n + 1):
        for (i, j), wt in weights.items():
            if D[k - 1][i] is not NEG:
                cand = D[k - 1][i] + wt
                if D[k][j] is NEG or cand > D[k][j]:
                    D[k][j] = cand
    best = None
    for v in range(n):
        if D[n][v] is NEG:
            continue
        worst = None
        for k in range(n):
            if D[k][v] is NEG:
                continue
            val = (D[n][v] - D[k][v]) / (n - k)
            if worst is None or val < worst:
                worst = val
        if worst is not None and (best is None or worst > best):
            best = worst
    return best


def _shearing_potentials(n: int, poles: dict[tuple[int, int], int], m: int) -> list[int]:
    """Integer w with poles[i,j] - (w_i - w_j) <= m on every edge (Bellman-Ford)."""
    # constraint w_j - w_i <= m - poles[i,j]: shortest paths from a virtual source
    dist = [0] * n
    for _ in range(n):
        changed = False
        for (i, j), c in poles.items():
            if dist[i] + (m - c) < dist[j]:
                dist[j] = dist[i] + (m - c)
                changed = True
        if not changed:
            break
    else:
        raise DomainError("shearing constraints are infeasible")
    return dist


@dataclass
class SlopeReport:
    slope: Fraction
    cover: int
    pole_order: int
    leading: Matrix | None


def _slope_on_cover(conn: LaurentConnection) -> tuple[int, Matrix | None, bool]:
    n = conn.n
    poles = {(i, j): -e.min_exponent() for i, row in enumerate(conn.A) for j, e in enumerate(row) if not e.is_zero()}
    mu = _max_cycle_mean(n, poles)
    if mu is None or mu <= 1:
        return 1, None, True
    m = math.ceil(mu)
    w = _shearing_potentials(n, poles, m)
    sheared = gauge_transform(conn, DiagonalMonomialGauge(tuple(w)))
    m_eff = sheared.pole_order()
    if m_eff <= 1:
        return m_eff, None, True
    lead = sheared.coefficient(-m_eff)
    return m_eff, lead, not linalg.is_nilpotent(lead)


def slope_report(conn: LaurentConnection, max_cover: int | None = None) -> SlopeReport:
    if conn.chart != INFINITY_CHART:
        raise InputError("slope_at_infinity expects a connection in the chart at infinity")
    max_cover = max_cover or conn.n
    best = None
    for b in range(1, max_cover + 1):
        m, lead, decided = _slope_on_cover(pullback_cover(conn, b, "w"))
        if not decided:
            continue
        total = b * conn.cover_degree
        slope = Fraction(max(m - 1, 0), total)
        if best is None or slope < best.slope:
            best = SlopeReport(slope, b, m, lead)
    if best is None:
        raise DomainError(f"no cover up to degree {max_cover} exposes a non-nilpotent polar part")
    return best


def slope_at_infinity(conn: LaurentConnection, max_cover: int | None = None) -> Fraction:
    return slope_report(conn, max_cover).slope


# --- Kostant and Coxeter ----------------------------------------------------

def _ad_matrix(X: Matrix, support: list[tuple[int, int]]) -> Matrix:
    """Matrix of Y -> [X, Y] from span(E_ij, (i,j) in support) into gl_n."""
    n = len(X)
    cols = []
    for i, j in support:
        Y = linalg.zeros(n)
        Y[i][j] = Fraction(1)
        C = linalg.commutator(X, Y)
        cols.append([C[a][b] for a in range(n) for b in range(n)])
    return [list(r) for r in zip(*cols)] if cols else []


@dataclass
class KostantReport:
    regular_semisimple: bool
    charpoly: list[Fraction]
    centralizer_dim: int
    expected_dim: int

    @property
    def ok(self) -> bool:
        return self.regular_semisimple and self.centralizer_dim == self.expected_dim

    def to_json(self) -> dict:
        return {
            "regular_semisimple": self.regular_semisimple,
            "charpoly": [str(c) for c in self.charpoly],
            "centralizer_dim": self.centralizer_dim,
            "expected_dim": self.expected_dim,
        }


def _nullity(M: Matrix, cols: int) -> int:
    return cols - (linalg.rank(M) if M else 0)


def kostant_check(data: MatrixLieData, element: Matrix | None = None) -> KostantReport:
    X = linalg.to_fraction_matrix(element) if element is not None else data.regular_element
    n = data.n
    f = linalg.charpoly(X)
    g = poly_gcd(f, trim(poly_derivative(f)))
    squarefree = len(g) == 1
    support = [(i, j) for i in range(n) for j in range(n)]
    # centralizer in gl_n minus the scalar line
    dim = _nullity(_ad_matrix(X, support), n * n) - 1
    return KostantReport(squarefree, f, dim, data.rank)


@dataclass
class CoxeterReport:
    exponents: list[int]
    expected: list[int] | None
    non_primitive: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.expected is None or self.exponents == self.expected


def coxeter_eigenvalues(data: MatrixLieData) -> CoxeterReport:
    """Exponents k (eigenvalue zeta_h^k) of Ad(zeta_h^rho) on the centralizer of N+E."""
    X = data.regular_element
    n, h = data.n, data.h
    rho = data.rho_weights
    out: list[int] = []
    for k in range(h):
        support = [(i, j) for i in range(n) for j in range(n) if int(rho[i] - rho[j]) % h == k]
        if support:
            out += [k] * _nullity(_ad_matrix(X, support), len(support))
    if 0 not in out:
        raise DomainError("identity missing from the centralizer")
    out.remove(0)
    non_primitive = sorted({k for k in out if math.gcd(k, h) != 1})
    if non_primitive:
        log.info("exponents %s are not primitive modulo h=%d", non_primitive, h)
    expected = sorted(data.exponents) if data.exponents is not None else None
    return CoxeterReport(sorted(out), expected, non_primitive)


def slope_summary(data: MatrixLieData) -> dict:
    pipe = run_pipeline(data)
    kr = kostant_check(data)
    cr = coxeter_eigenvalues(data)
    return {
        "type": data.label,
        "h": data.h,
        "pipeline": pipe.to_json(),
        "slope": str(slope_at_infinity(pipe.at_infinity)),
        "kostant": kr.to_json(),
        "exponents": cr.exponents,
        "non_primitive_exponents": cr.non_primitive,
    }
