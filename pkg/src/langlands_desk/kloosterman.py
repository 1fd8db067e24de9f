"""Kloosterman sums over F_q with values in Z[zeta_p].

    Kl_n(t) = sum over x_1 ... x_n = t of psi(Tr(x_1 + ... + x_n))

with ``psi(x) = zeta_p^(a x)``.  Sums are accumulated as exponent counts, so
the result is exact; no fast paths are used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra.cyclotomic import CyclotomicNumber
from .algebra.finite_field import FiniteField, field as get_field
from .errors import InputError, ResourceGuardError
from ._parallel import parallel_map

GUARD = 10**7

# Satake trace = SATAKE_SIGN_BASE^(n-1) * Kl_n(t)
SATAKE_SIGN_BASE = -1

WEIL_SLACK = 1e-9


@dataclass(frozen=True)
class KloostermanQuery:
    n: int
    q: int
    t: int
    psi_residue: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be at least 1")
        F = get_field(self.q)
        if not 0 < self.t < self.q:
            raise InputError("t must be a nonzero encoded element of F_q")
        if self.psi_residue % F.p == 0:
            raise InputError("psi must be nontrivial")
        if self.q ** (self.n - 1) > GUARD:
            raise ResourceGuardError(f"q^(n-1) = {self.q ** (self.n - 1)} exceeds the guard {GUARD}")

    @property
    def field(self) -> FiniteField:
        return get_field(self.q)


def _exponent_counts(F: FiniteField, n: int, t: int) -> list[int]:
    counts = [0] * F.p
    if n == 1:
        counts[F.trace(t)] += 1
        return counts
    for xs in product(F.nonzero(), repeat=n - 1):
        prod = 1
        s = 0
        for x in xs:
            prod = F.mul(prod, x)
            s = F.add(s, x)
        last = F.div(t, prod)
        counts[F.trace(F.add(s, last))] += 1
    return counts


def kloosterman_sum(query: KloostermanQuery) -> CyclotomicNumber:
    F = query.field
    counts = _exponent_counts(F, query.n, query.t)
    p = F.p
    full = [0] * p
    for r, c in enumerate(counts):
        full[(query.psi_residue * r) % p] += c
    return CyclotomicNumber.from_exponent_counts(p, full)


def satake_trace(query: KloostermanQuery) -> CyclotomicNumber:
    return kloosterman_sum(query) * SATAKE_SIGN_BASE ** (query.n - 1)


def weil_bound(n: int, q: int) -> float:
    return n * q ** ((n - 1) / 2)


def weil_bound_check(value: CyclotomicNumber, n: int, q: int) -> bool:
    bound = weil_bound(n, q)
    return all(abs(z) <= bound + WEIL_SLACK for z in value.embeddings())


@dataclass
class SweepRow:
    t: int
    value: CyclotomicNumber
    integral: bool
    abs_embeddings: list[float]
    bound: float
    weil_ok: bool

    def to_csv_row(self) -> list[str]:
        return [
            str(self.t),
            " ".join(str(c) for c in self.value.coeffs),
            " ".join(f"{a:.12f}" for a in self.abs_embeddings),
            f"{self.bound:.12f}",
            "pass" if self.weil_ok and self.integral else "fail",
        ]


@dataclass
class RationalityReport:
    n: int
    q: int
    psi_residue: int
    rows: list[SweepRow]
    galois_failures: list[tuple[int, int]] = field(default_factory=list)
    conjugation_failures: list[int] = field(default_factory=list)
    total: CyclotomicNumber | None = None

    @property
    def integral(self) -> bool:
        return all(r.integral for r in self.rows)

    @property
    def galois_ok(self) -> bool:
        return not self.galois_failures

    @property
    def sum_ok(self) -> bool:
        return self.total == (-1) ** self.n

    @property
    def weil_ok(self) -> bool:
        return all(r.weil_ok for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.integral and self.galois_ok and self.sum_ok and self.weil_ok and not self.conjugation_failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "psi": self.psi_residue,
            "integral": self.integral,
            "galois": self.galois_ok,
            "sum_over_t": self.total.to_json() if self.total is not None else None,
            "sum_ok": self.sum_ok,
            "weil": self.weil_ok,
            "values": {str(r.t): r.value.to_json() for r in self.rows},
        }


def _sum_for(args) -> CyclotomicNumber:
    n, q, t, a = args
    return kloosterman_sum(KloostermanQuery(n, q, t, a))


def kloosterman_sweep(n: int, q: int, psi_residue: int = 1) -> dict[int, CyclotomicNumber]:
    F = get_field(q)
    KloostermanQuery(n, q, 1, psi_residue)  # guard check
    ts = list(F.nonzero())
    values = parallel_map(_sum_for, [(n, q, t, psi_residue) for t in ts])
    return dict(zip(ts, values))


def rationality_report(n: int, q: int, psi_residue: int = 1) -> RationalityReport:
    """Integrality, Galois equivariance, the sum over t, and the Weil bound."""
    F = get_field(q)
    values = kloosterman_sweep(n, q, psi_residue)
    bound = weil_bound(n, q)
    rows = []
    for t, v in values.items():
        abs_emb = [abs(z) for z in v.embeddings()]
        rows.append(SweepRow(t, v, v.has_integer_coefficients(), abs_emb, bound, weil_bound_check(v, n, q)))
    galois_failures = []
    for a in range(1, F.p):
        an = F.pow(F.from_int(a), n)
        for t, v in values.items():
            if v.conjugate(a) != values[F.mul(an, t)]:
                galois_failures.append((a, t))
    conj_failures = []
    sign = F.pow(F.from_int(-1), n)
    for t, v in values.items():
        if v.conjugate(-1) != values[F.mul(sign, t)]:
            conj_failures.append(t)
    total = CyclotomicNumber.rational(F.p, 0)
    for v in values.values():
        total = total + v
    return RationalityReport(n, q, psi_residue, rows, galois_failures, conj_failures, total)


def max_abs_embedding(value: CyclotomicNumber) -> float:
    return max((abs(z) for z in value.embeddings()), default=0.0)


def weil_margin(value: CyclotomicNumber, n: int, q: int) -> float:
    return weil_bound(n, q) - max_abs_embedding(value)


__all__ = [
    "KloostermanQuery",
    "RationalityReport",
    "SATAKE_SIGN_BASE",
    "kloosterman_sum",
    "kloosterman_sweep",
    "rationality_report",
    "satake_trace",
    "weil_bound",
    "weil_bound_check",
]

