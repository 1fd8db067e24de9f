"""Frobenius structure on the sl_2 Kloosterman connection over Q_p(lambda).

We solve, as a power series in x with 2x2 matrix coefficients,

    x phi' = p (N + lambda^2 x^p E) phi - phi (N + lambda^2 x E),

i.e. order by order ``(n - L) phi_n = p lambda^2 E phi_{n-p} - lambda^2 phi_{n-1} E``
with ``L(X) = p N X - X N`` nilpotent.  The constant layer is
``phi_0 = [[p, b], [0, 1]]``; the free parameter ``b`` is pinned down by
requiring the series to be bounded, which we enforce by projecting out the
growing solution at ``n = p, p^2, ...`` until the estimate stabilises.

All layers are computed exactly in Q(lambda) and only then reduced to
Z_p[lambda] / lambda^K.  Traces at Teichmueller points are compared with
Kloosterman sums through the embedding of Q(zeta_p) fixed by
``zeta_p = 1 + lambda mod lambda^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra.eisenstein import EisensteinExact, EisensteinLocal, UnramifiedEisenstein
from .algebra.finite_field import field as get_field
from .algebra.numbers import is_prime
from .errors import DomainError, InputError, PrecisionError
from .kloosterman import KloostermanQuery, kloosterman_sum

# precision reported for traces is K - TRACE_BUFFER
TRACE_BUFFER = 2

SL2_N = ((0, 1), (0, 0))
SL2_E = ((0, 0), (1, 0))


@dataclass(frozen=True)
class CrystalConfig:
    p: int
    M: int
    K: int
    N: tuple = SL2_N
    E: tuple = SL2_E
    max_projection_exponent: int = 7

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise InputError("p must be an odd prime")
        if self.M < self.p:
            raise InputError("series truncation M must be at least p")
        if self.K < 2 * (self.p - 1):
            raise InputError("precision K must be at least 2(p-1)")
        if tuple(map(tuple, self.N)) != SL2_N or tuple(map(tuple, self.E)) != SL2_E:
            raise InputError("only the standard sl_2 pair (N, E) is supported")

    @classmethod
    def default(cls, p: int) -> CrystalConfig:
        return cls(p, 2 * p, 3 * (p - 1))

    @property
    def trace_precision(self) -> int:
        return self.K - TRACE_BUFFER


# --- exact 2x2 matrices over Q(lambda) --------------------------------------

def _ex(p, x) -> EisensteinExact:
    return EisensteinExact.from_rational(p, x)


def _mat(p, rows) -> list[list[EisensteinExact]]:
    return [[_ex(p, x) for x in row] for row in rows]


def _mmul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), A[0][0] * 0) for j in range(n)] for i in range(n)]


def _madd(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _mscale(c, A):
    return [[c * a for a in row] for row in A]


def _mzero(A) -> bool:
    return all(not a for row in A for a in row)


class _ExactSolver:
    """Exact layers for the two constant-term basis solutions."""

    def __init__(self, cfg: CrystalConfig):
        p = self.p = cfg.p
        self.N = _mat(p, cfg.N)
        self.E = _mat(p, cfg.E)
        self.lam2 = EisensteinExact.lam_power(p, 2)
        self.layers_a = [_mat(p, [[p, 0], [0, 1]])]
        self.layers_b = [_mat(p, cfg.N)]

    def _L(self, X):
        return _madd(_mscale(self.p, _mmul(self.N, X)), _mscale(-1, _mmul(X, self.N)))

    def _next(self, layers):
        n = len(layers)
        rhs = _mscale(-self.lam2, _mmul(layers[n - 1], self.E))
        if n >= self.p:
            rhs = _madd(rhs, _mscale(self.lam2 * self.p, _mmul(self.E, layers[n - self.p])))
        # (n - L)^-1 = sum_k L^k / n^(k+1), L nilpotent
        out = _mscale(Fraction(1, n), rhs)
        term = rhs
        k = 1
        while True:
            term = self._L(term)
            if _mzero(term):
                break
            out = _madd(out, _mscale(Fraction(1, n ** (k + 1)), term))
            k += 1
        return out

    def extend(self, n: int) -> None:
        while len(self.layers_a) <= n:
            self.layers_a.append(self._next(self.layers_a))
            self.layers_b.append(self._next(self.layers_b))

    def combined(self, n: int, b: EisensteinExact):
        self.extend(n)
        return _madd(self.layers_a[n], _mscale(b, self.layers_b[n]))

    def projection(self, n: int) -> EisensteinExact:
        """Estimate of b making layer n of A + bB small."""
        self.extend(n)
        A, B = self.layers_a[n], self.layers_b[n]
        best = None
        for i in range(2):
            for j in range(2):
                v = B[i][j].valuation()
                if v is not None and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            raise PrecisionError(f"layer {n} of the second solution vanishes")
        _, i, j = best
        return -(A[i][j] / B[i][j])


def _min_valuation(layers) -> int | None:
    vals = [a.valuation() for M in layers for row in M for a in row]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


@dataclass
class SeriesMatrix:
    p: int
    K: int
    coeffs: list[list[list[EisensteinLocal]]]  # coeffs[n][i][j]
    constant_parameter: EisensteinLocal
    projection_layer: int
    tail_valuation: int | None = None

    @property
    def M(self) -> int:
        return len(self.coeffs) - 1

    def entry_series(self, i: int, j: int) -> list[EisensteinLocal]:
        return [c[i][j] for c in self.coeffs]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "K": self.K,
            "M": self.M,
            "constant_parameter": self.constant_parameter.to_json(),
            "projection_layer": self.projection_layer,
            "tail_valuation": self.tail_valuation,
            "coeffs": [[[e.to_json() for e in row] for row in c] for c in self.coeffs],
        }


def solve_frobenius_ode(cfg: CrystalConfig) -> SeriesMatrix:
    p, K, M = cfg.p, cfg.K, cfg.M
    solver = _ExactSolver(cfg)
    tail_end = M + 2 * p
    solver.extend(tail_end)
    neg = _min_valuation(solver.layers_b[: tail_end + 1]) or 0
    need = K + 2 * (p - 1) + max(0, -neg)
    prev = None
    b = None
    layer = None
    for k in range(1, cfg.max_projection_exponent + 1):
        layer = p**k
        est = solver.projection(layer)
        if prev is not None:
            v = (est - prev).valuation()
            if v is None or v >= need:
                b = est
                break
        prev = est
    if b is None:
        raise PrecisionError(f"constant term did not stabilise by layer {layer}")
    local = []
    for n in range(M + 1):
        layer_n = solver.combined(n, b)
        local.append([[a.to_local(K) for a in row] for row in layer_n])
    tail = [solver.combined(n, b) for n in range(M + 1, tail_end + 1)]
    tv = _min_valuation(tail)
    return SeriesMatrix(p, K, local, b.to_local(K), layer, tv)


# --- checks on the truncated solution ---------------------------------------

def _lmul(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def _lconst(p, K, rows):
    return [[EisensteinLocal.from_int(p, K, x) for x in row] for row in rows]


def ode_residual(phi: SeriesMatrix) -> list[list[list[EisensteinLocal]]]:
    """x^n coefficients (n <= M) of x phi' - p(N + l^2 x^p E) phi + phi(N + l^2 x E)."""
    p, K = phi.p, phi.K
    N = _lconst(p, K, SL2_N)
    E = _lconst(p, K, SL2_E)
    lam2 = EisensteinLocal.lam(p, K, 2)
    out = []
    for n, c in enumerate(phi.coeffs):
        r = [[x * n for x in row] for row in c]
        left = _lmul(N, c)
        if n >= p:
            left = [[a + lam2 * b for a, b in zip(ra, rb)] for ra, rb in zip(left, _lmul(E, phi.coeffs[n - p]))]
        right = _lmul(c, N)
        if n >= 1:
            right = [[a + lam2 * b for a, b in zip(ra, rb)] for ra, rb in zip(right, _lmul(phi.coeffs[n - 1], E))]
        r = [[r[i][j] - left[i][j] * p + right[i][j] for j in range(2)] for i in range(2)]
        out.append(r)
    return out


def residual_vanishes(phi: SeriesMatrix, precision: int | None = None) -> bool:
    prec = phi.K if precision is None else precision
    return all(x.truncate(prec).is_zero() for layer in ode_residual(phi) for row in layer for x in row)


def determinant_series(phi: SeriesMatrix) -> list[EisensteinLocal]:
    c = phi.coeffs
    out = []
    for n in range(len(c)):
        s = EisensteinLocal.from_int(phi.p, phi.K, 0)
        for k in range(n + 1):
            s = s + c[k][0][0] * c[n - k][1][1] - c[k][0][1] * c[n - k][1][0]
        out.append(s)
    return out


def determinant_is_constant(phi: SeriesMatrix) -> bool:
    """det(phi) = p identically (the ODE is trace free)."""
    det = determinant_series(phi)
    return det[0] == EisensteinLocal.from_int(phi.p, phi.K, phi.p) and all(d.is_zero() for d in det[1:])


def constant_term_conjugates(phi: SeriesMatrix) -> bool:
    """g0 N = p N g0, i.e. Ad(g0) N = p N."""
    p, K = phi.p, phi.K
    g0 = phi.coeffs[0]
    N = _lconst(p, K, SL2_N)
    lhs = _lmul(g0, N)
    rhs = [[x * p for x in row] for row in _lmul(N, g0)]
    return all(a == b for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb))


# --- roots of unity and Teichmueller points ---------------------------------

def embedded_zeta(p: int, K: int) -> EisensteinLocal:
    """The p-th root of unity congruent to 1 + lambda mod lambda^2.

    y = zeta - 1 solves y^(p-1) = lambda^(p-1) w(y), w(y) = sum_k C(p,k)/p y^(k-1),
    so y = lambda w(y)^(1/(p-1)); iterate, each pass gains a lambda-digit.
    """
    lam = EisensteinLocal.lam(p, K, 1)
    alpha = Fraction(1, p - 1)
    binom = [Fraction(1)]
    for k in range(1, K + 1):
        binom.append(binom[-1] * (alpha - k + 1) / k)
    y = lam
    for _ in range(K + 1):
        w = EisensteinLocal.from_int(p, K, 0)
        power = EisensteinLocal.from_int(p, K, 1)
        for k in range(1, p):
            w = w + power * (comb(p, k) // p)
            power = power * y
        z = w - 1
        root = EisensteinLocal.from_int(p, K, 0)
        zk = EisensteinLocal.from_int(p, K, 1)
        for k in range(K + 1):
            root = root + zk * EisensteinLocal.from_rational(p, K, binom[k])
            zk = zk * z
        y_next = lam * root
        if y_next == y:
            break
        y = y_next
    zeta = y + 1
    if not (zeta**p - 1).is_zero():
        raise PrecisionError("embedded root of unity failed to converge")
    return zeta


def embed_cyclotomic(value, K: int) -> EisensteinLocal:
    p = value.p
    zeta = embedded_zeta(p, K)
    out = EisensteinLocal.from_int(p, K, 0)
    power = EisensteinLocal.from_int(p, K, 1)
    for c in value.coeffs:
        out = out + power * EisensteinLocal.from_rational(p, K, c)
        power = power * zeta
    return out


def _digits_needed(p: int, K: int) -> int:
    return -(-K // (p - 1)) + 1


def teichmueller_lift(t: int, p: int, K: int, degree: int = 1):
    """Root of unity lifting t in F_{p^degree}.

    Degree 1 returns an int modulo a power of p; degree 2 returns an
    :class:`UnramifiedEisenstein` over the residue field modulus.
    """
    if degree not in (1, 2):
        raise InputError("Teichmueller lifts are implemented for degree 1 and 2")
    q = p**degree
    if not 0 < t < q:
        raise DomainError("Teichmueller lift of zero (or out of range element)")
    e = _digits_needed(p, K) + 1
    if degree == 1:
        m = p**e
        x = t % m
        for _ in range(e + 1):
            x = pow(x, p, m)
        return x
    F = get_field(q)
    coeffs = F.coeffs(t)
    x = UnramifiedEisenstein(F.modulus, [EisensteinLocal.from_int(p, K, c) for c in coeffs])
    for _ in range(e + 1):
        x = _upow(x, q)
    return x


def _upow(x: UnramifiedEisenstein, k: int) -> UnramifiedEisenstein:
    one = _uone(x)
    out, base = one, x
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def _uone(x: UnramifiedEisenstein) -> UnramifiedEisenstein:
    zero = x.coeffs[0] * 0
    return UnramifiedEisenstein(x.modulus, [zero + 1] + [zero] * (len(x.coeffs) - 1))


def _evaluate(phi: SeriesMatrix, X):
    """phi(X) for X an int (unit in Z_p) or an unramified element."""
    p, K = phi.p, phi.K
    if isinstance(X, int):
        out = [[EisensteinLocal.from_int(p, K, 0) for _ in range(2)] for _ in range(2)]
        m = p ** (_digits_needed(p, K) + 1)
        for n, c in enumerate(phi.coeffs):
            xn = pow(X, n, m)
            out = [[out[i][j] + c[i][j] * xn for j in range(2)] for i in range(2)]
        return out
    zero = X * 0
    out = [[zero, zero], [zero, zero]]
    power = _uone(X)
    for c in phi.coeffs:
        out = [[out[i][j] + power * c[i][j] for j in range(2)] for i in range(2)]
        power = power * X
    return out


def frobenius_trace(phi: SeriesMatrix, t: int, degree: int = 1) -> EisensteinLocal:
    """Trace of phi(X) phi(X^p) ... phi(X^(p^(degree-1))) at the lift X of t."""
    X = teichmueller_lift(t, phi.p, phi.K, degree)
    if degree == 1:
        M = _evaluate(phi, X)
        return M[0][0] + M[1][1]
    M = _evaluate(phi, X)
    Xi = X
    for _ in range(degree - 1):
        Xi = _upow(Xi, phi.p)
        nxt = _evaluate(phi, Xi)
        M = [[M[i][0] * nxt[0][j] + M[i][1] * nxt[1][j] for j in range(2)] for i in range(2)]
    return (M[0][0] + M[1][1]).base_part()


def ordinarity_valuation(tr: EisensteinLocal) -> Fraction | None:
    """Valuation normalised by v(p) = 1; None when tr vanishes at this precision."""
    v = tr.valuation()
    return None if v is None else Fraction(v, tr.p - 1)


# --- calibration ------------------------------------------------------------

@dataclass
class CalibrationReport:
    p: int
    precision: int
    traces: dict[int, EisensteinLocal]
    kloosterman: dict[int, EisensteinLocal]
    constant: EisensteinLocal | None
    t_independent: bool
    mismatches: list[int] = field(default_factory=list)

    @property
    def ordinary(self) -> dict[int, Fraction | None]:
        return {t: ordinarity_valuation(tr) for t, tr in self.traces.items()}

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "precision": self.precision,
            "calibration": self.constant.to_json() if self.constant is not None else None,
            "t_independent": self.t_independent,
            "mismatches": self.mismatches,
            "traces": {str(t): tr.to_json() for t, tr in self.traces.items()},
            "valuations": {str(t): (str(v) if v is not None else "below precision") for t, v in self.ordinary.items()},
        }


def calibration_report(phi: SeriesMatrix, ts: Sequence[int] | None = None, degree: int = 1) -> CalibrationReport:
    """Compare traces with embedded Kl_2 sums by cross-multiplication at t = 1.

    The ratio trace/Kl_2 is read off at t = 1 (when Kl_2(1) is a unit) and
    t-independence is checked as tr(t) Kl(1) = tr(1) Kl(t) mod lambda^(K-2).
    """
    p, K = phi.p, phi.K
    q = p**degree
    prec = K - TRACE_BUFFER
    ts = list(ts) if ts is not None else list(range(1, q))
    if 1 not in ts:
        ts = [1, *ts]
    traces = {t: frobenius_trace(phi, t, degree).truncate(prec) for t in ts}
    kls = {t: embed_cyclotomic(kloosterman_sum(KloostermanQuery(2, q, t)), K).truncate(prec) for t in ts}
    mismatches = [t for t in ts if not (traces[t] * kls[1]).congruent(traces[1] * kls[t], prec)]
    constant = traces[1] / kls[1] if kls[1].is_unit() else None
    return CalibrationReport(p, prec, traces, kls, constant, not mismatches, mismatches)


def crystal_report(cfg: CrystalConfig, ts: Sequence[int] | None = None) -> dict:
    phi = solve_frobenius_ode(cfg)
    cal = calibration_report(phi, ts)
    return {
        "p": cfg.p,
        "M": cfg.M,
        "K": cfg.K,
        "residual_vanishes": residual_vanishes(phi),
        "determinant_constant": determinant_is_constant(phi),
        "constant_term_ok": constant_term_conjugates(phi),
        "projection_layer": phi.projection_layer,
        "tail_valuation": phi.tail_valuation,
        "calibration": cal.to_json(),
    }
