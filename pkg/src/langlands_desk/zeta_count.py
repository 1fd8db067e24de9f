"""Weil zeta functions, the modified polynomial zeta_{S,T}, and the main
terms of the automorphic counts over function fields and over Q.

With ``Z = q^-s`` the zeta function of a curve of genus g over F_q is
``P(Z) / ((1 - Z)(1 - qZ))``.  Removing the Euler factors at S and
modifying those at T gives

    zeta_{S,T} = P(Z) * prod_S (1 - Z^deg v) * prod_T (1 - (qZ)^deg w)
                 / ((1 - Z)(1 - qZ))

which is a polynomial of degree ``2g - 2 + deg S + deg T`` as soon as S and T
are both non-empty.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra.numbers import is_prime, prime_power
from .algebra.polynomial import poly_divmod, poly_eval, poly_mul
from .cartan import CartanData
from .errors import DomainError, InputError, InternalInvariantError, ValidationError

log = logging.getLogger(__name__)


class WeilBoundWarning(UserWarning):
    """Curve data violates the coefficient bounds implied by the Riemann hypothesis."""


@dataclass(frozen=True)
class CurveZeta:
    q: int
    genus: int
    P_coeffs: tuple[int, ...]

    def to_json(self) -> dict:
        return {"q": self.q, "g": self.genus, "P": list(self.P_coeffs)}


@dataclass(frozen=True)
class PlaceSet:
    degrees: tuple[int, ...]
    role: str = "S"

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 1 for d in self.degrees):
            raise InputError("place degrees must be positive")
        if self.role not in ("S", "T"):
            raise InputError("role must be 'S' or 'T'")

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def __bool__(self):
        return bool(self.degrees)


def validate_curve(q: int, g: int, P_coeffs: Sequence[int]) -> CurveZeta:
    prime_power(q)
    if g < 0:
        raise ValidationError("genus must be non-negative")
    P = tuple(int(c) for c in P_coeffs)
    if len(P) != 2 * g + 1:
        raise ValidationError(f"P must have 2g+1 = {2 * g + 1} coefficients, got {len(P)}")
    if P[0] != 1:
        raise ValidationError("P(0) must be 1")
    for i in range(g + 1):
        if P[2 * g - i] != q ** (g - i) * P[i]:
            raise ValidationError(f"functional equation fails at Z^{2 * g - i}: expected q^{g - i}*a_{i}")
    if sum(P) <= 0:
        raise ValidationError("P(1) must be positive")
    for i in range(1, g + 1):
        bound = math.comb(2 * g, i) * math.sqrt(q) ** i
        if abs(P[i]) > bound + 1e-9:
            warnings.warn(
                f"|a_{i}| = {abs(P[i])} exceeds the Weil bound {bound:.3f}", WeilBoundWarning, stacklevel=2
            )
    return CurveZeta(q, g, P)


def zeta_ST(curve: CurveZeta, S: PlaceSet, T: PlaceSet) -> list[int]:
    """Coefficients (constant first) of the integral polynomial zeta_{S,T}(Z)."""
    if not S or not T:
        raise DomainError("zeta_{S,T} is a polynomial only for non-empty S and T")
    q = curve.q
    num: list = list(curve.P_coeffs)
    for d in S.degrees:
        num = poly_mul(num, [1] + [0] * (d - 1) + [-1])
    for d in T.degrees:
        num = poly_mul(num, [1] + [0] * (d - 1) + [-(q**d)])
    quot, rem = poly_divmod(num, poly_mul([1, -1], [1, -q]))
    if rem or any(c.denominator != 1 for c in quot):
        raise InternalInvariantError("zeta_{S,T} division was not exact; bad curve data")
    return [int(c) for c in quot]


def expected_degree(curve: CurveZeta, S: PlaceSet, T: PlaceSet) -> int:
    return 2 * curve.genus - 2 + S.total_degree + T.total_degree


def expected_leading_magnitude(curve: CurveZeta, T: PlaceSet) -> int:
    return curve.q ** (curve.genus - 1 + T.total_degree)


def special_value(poly: Sequence[int], d: int, q: int) -> int:
    """Value at ``s = 1 - d``, i.e. at ``Z = q^(d-1)``."""
    if d < 2:
        raise InputError("special values are taken at s = 1 - d with d >= 2")
    return int(poly_eval(list(poly), q ** (d - 1)))


@dataclass
class CountReport:
    count: Fraction
    factors: dict[int, Fraction]
    exact: bool
    caveats: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "count": str(self.count),
            "factors": {str(d): str(v) for d, v in self.factors.items()},
            "exactness": self.exact,
            "caveats": list(self.caveats),
        }


def count_ff(data: CartanData, curve: CurveZeta, S: PlaceSet, T: PlaceSet) -> CountReport:
    """Main term ``prod_i zeta_{S,T}(1 - d_i)``; center corrections excluded."""
    poly = zeta_ST(curve, S, T)
    factors = {}
    total = Fraction(1)
    for d in data.degrees:
        v = Fraction(special_value(poly, d, curve.q))
        factors[d] = v
        total *= v
    caveats = []
    trivial_center = data.center_structure == (1,)
    if not trivial_center:
        caveats.append("center corrections at S and T are not included")
    return CountReport(total, factors, exact=trivial_center, caveats=caveats)


# number-field branch -------------------------------------------------------


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = +1/2 convention of Akiyama-Tanigawa)."""
    if n < 0:
        raise InputError("n must be non-negative")
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def riemann_zeta_negative(n: int) -> Fraction:
    """zeta(-n) for n >= 1, via zeta(1 - 2m) = -B_2m / 2m."""
    if n < 1:
        raise InputError("n must be a positive integer")
    if n % 2 == 0:
        return Fraction(0)
    return -bernoulli(n + 1) / (n + 1)


def count_nf(data: CartanData, S: Sequence[int], T: Sequence[int], dim_v: int = 1) -> CountReport:
    """``2^-l * L_{S,T}(M, 0) * dim V`` for the motive ``sum Q(1 - d_i)``."""
    for p in (*S, *T):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
    if set(S) & set(T):
        raise InputError("S and T must be disjoint")
    if dim_v < 1:
        raise InputError("dim V must be positive")
    odd = [d for d in data.degrees if d % 2]
    if odd:
        raise DomainError(f"zeta(1 - {odd[0]}) is a trivial zero; the main term vanishes")
    factors = {}
    total = Fraction(1, 2**data.rank) * dim_v
    for d in data.degrees:
        v = riemann_zeta_negative(d - 1)
        for p in S:
            v *= 1 - Fraction(p) ** (d - 1)
        for p in T:
            v *= 1 - Fraction(p) ** d
        factors[d] = v
        total *= v
    caveats = []
    exact = bool(S) and len(set(T)) >= 2
    if not exact:
        caveats.append("S must be non-empty and T must hold two primes of different characteristic")
    if data.center_structure != (1,):
        exact = False
        caveats.append("center corrections are not included")
    return CountReport(total, factors, exact=exact, caveats=caveats)
