"""The totally ramified extension Q_p(lambda), lambda^(p-1) = -p.

Two representations share the power basis ``1, lambda, ..., lambda^(p-2)``:

* :class:`EisensteinExact` -- exact elements of the number field Q(lambda),
  coefficients are rationals.  Used where divisions by p occur.
* :class:`EisensteinLocal` -- elements of Z_p[lambda] modulo lambda^K,
  coefficients are integer residues.  Coefficient ``i`` is kept modulo
  ``p^ceil((K - i)/(p - 1))`` which is exactly the ideal (lambda^K).

Valuations are reported in lambda-units (v(lambda) = 1, v(p) = p - 1) unless a
function says otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DomainError, InputError, PrecisionError
from . import linalg
from .numbers import is_prime, reduce_mod, vp, vp_int


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    return p


def _poly_mul_reduce(a: Sequence, b: Sequence, p: int, zero):
    d = p - 1
    prod = [zero] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = prod[i + j] + x * y
    for k in range(len(prod) - 1, d - 1, -1):
        if prod[k]:
            prod[k - d] = prod[k - d] - p * prod[k]
            prod[k] = zero
    return prod[:d]


class EisensteinExact:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence):
        d = p - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > d:
            # fold higher powers with lambda^(p-1) = -p
            for k in range(len(coeffs) - 1, d - 1, -1):
                coeffs[k - d] -= p * coeffs[k]
            coeffs = coeffs[:d]
        coeffs += [Fraction(0)] * (d - len(coeffs))
        self.p = p
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_rational(cls, p: int, x) -> EisensteinExact:
        return cls(p, [x])

    @classmethod
    def lam_power(cls, p: int, k: int) -> EisensteinExact:
        d = p - 1
        q, r = divmod(k, d)
        out = [Fraction(0)] * d
        out[r] = Fraction(-p) ** q
        return cls(p, out)

    def _coerce(self, other):
        if isinstance(other, EisensteinExact):
            if other.p != self.p:
                raise InputError("mismatched primes")
            return other
        if isinstance(other, (int, Fraction)):
            return EisensteinExact.from_rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinExact(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return EisensteinExact(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return EisensteinExact(self.p, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinExact(self.p, _poly_mul_reduce(self.coeffs, other.coeffs, self.p, Fraction(0)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return EisensteinExact(self.p, [a / other for a in self.coeffs])
        return self * other.inverse()

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = EisensteinExact.from_rational(self.p, other)
        if not isinstance(other, EisensteinExact):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"EisensteinExact({self.p}, {[str(c) for c in self.coeffs]})"

    def valuation(self) -> int | None:
        """Valuation in lambda-units; None for zero."""
        d = self.p - 1
        vals = [d * vp(c, self.p) + i for i, c in enumerate(self.coeffs) if c]
        return min(vals) if vals else None

    def inverse(self) -> EisensteinExact:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(lambda)")
        d = self.p - 1
        # columns: self * lambda^j in the power basis
        cols = [(self * EisensteinExact.lam_power(self.p, j)).coeffs for j in range(d)]
        mat = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        return EisensteinExact(self.p, linalg.solve(mat, rhs))

    def to_local(self, K: int) -> EisensteinLocal:
        d = self.p - 1
        out = []
        for i, c in enumerate(self.coeffs):
            e = _exponent(K, i, d)
            if c and c.denominator % self.p == 0:
                if d * vp(c, self.p) + i >= K:
                    out.append(0)
                    continue
                raise PrecisionError(f"coefficient {c} of lambda^{i} is not integral")
            out.append(reduce_mod(c, self.p, e) if e > 0 else 0)
        return EisensteinLocal(self.p, K, out)


def _exponent(K: int, i: int, d: int) -> int:
    return max(0, -((i - K) // d))


class EisensteinLocal:
    """Element of Z_p[lambda] / (lambda^K)."""

    __slots__ = ("p", "K", "coeffs")

    def __init__(self, p: int, K: int, coeffs: Sequence[int]):
        _check_prime(p)
        if K < 0:
            raise InputError("precision K must be non-negative")
        d = p - 1
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > d:
            for k in range(len(coeffs) - 1, d - 1, -1):
                coeffs[k - d] -= p * coeffs[k]
            coeffs = coeffs[:d]
        coeffs += [0] * (d - len(coeffs))
        self.p, self.K = p, K
        self.coeffs = tuple(c % p ** _exponent(K, i, d) for i, c in enumerate(coeffs))

    @classmethod
    def from_int(cls, p: int, K: int, n: int) -> EisensteinLocal:
        return cls(p, K, [n])

    @classmethod
    def from_rational(cls, p: int, K: int, x) -> EisensteinLocal:
        return EisensteinExact.from_rational(p, x).to_local(K)

    @classmethod
    def lam(cls, p: int, K: int, k: int = 1) -> EisensteinLocal:
        if k < 0:
            raise DomainError("negative powers of lambda are not integral")
        return EisensteinExact.lam_power(p, k).to_local(K)

    def _coerce(self, other):
        if isinstance(other, EisensteinLocal):
            if other.p != self.p:
                raise InputError("mismatched primes")
            return other
        if isinstance(other, int):
            return EisensteinLocal(self.p, self.K, [other])
        if isinstance(other, Fraction):
            return EisensteinLocal.from_rational(self.p, self.K, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = min(self.K, other.K)
        return EisensteinLocal(self.p, K, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return EisensteinLocal(self.p, self.K, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinLocal(self.p, self.K, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        K = min(self.K, other.K)
        return EisensteinLocal(self.p, K, _poly_mul_reduce(self.coeffs, other.coeffs, self.p, 0))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = EisensteinLocal(self.p, self.K, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, EisensteinLocal):
            return NotImplemented
        return (self.p, self.K, self.coeffs) == (other.p, other.K, other.coeffs)

    def __hash__(self):
        return hash((self.p, self.K, self.coeffs))

    def __repr__(self):
        return f"EisensteinLocal(p={self.p}, K={self.K}, {list(self.coeffs)})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """lambda-adic valuation; None if the element vanishes mod lambda^K."""
        d = self.p - 1
        vals = [d * vp_int(c, self.p) + i for i, c in enumerate(self.coeffs) if c]
        return min(vals) if vals else None

    def is_unit(self) -> bool:
        return self.coeffs[0] % self.p != 0 if self.K > 0 else False

    def inverse(self) -> EisensteinLocal:
        if not self.is_unit():
            raise DomainError("inversion of a non-unit in Z_p[lambda]")
        x = EisensteinLocal(self.p, self.K, [pow(self.coeffs[0], -1, self.p)])
        prec = 1
        while prec < self.K:
            x = x * (2 - self * x)
            prec *= 2
        return x

    def truncate(self, K: int) -> EisensteinLocal:
        if K > self.K:
            raise PrecisionError(f"cannot raise precision from {self.K} to {K}")
        return EisensteinLocal(self.p, K, self.coeffs)

    def congruent(self, other, K: int) -> bool:
        """Equality modulo lambda^K."""
        other = self._coerce(other)
        return (self - other).truncate(K).is_zero()

    def to_exact(self) -> EisensteinExact:
        return EisensteinExact(self.p, self.coeffs)

    def to_json(self) -> dict:
        return {"p": self.p, "K": self.K, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> EisensteinLocal:
        try:
            return cls(int(obj["p"]), int(obj["K"]), [int(c) for c in obj["coeffs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed Eisenstein element {obj!r}") from exc


def eisenstein_arith(a: EisensteinLocal, b: EisensteinLocal | None, op: str) -> EisensteinLocal:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise InputError(f"unknown operation {op!r}")


class UnramifiedEisenstein:
    """Element of W(F_{p^d})[lambda] / (lambda^K).

    Stored as ``sum_j c_j w^j`` with ``c_j`` in :class:`EisensteinLocal`
    and ``w`` a root of an integral monic lift of the residue field modulus.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: Sequence[int], coeffs: Sequence[EisensteinLocal]):
        self.modulus = tuple(modulus)
        d = len(self.modulus) - 1
        if len(coeffs) != d:
            raise InputError("coefficient count does not match the residue degree")
        self.coeffs = tuple(coeffs)

    @property
    def p(self):
        return self.coeffs[0].p

    @property
    def K(self):
        return min(c.K for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, UnramifiedEisenstein):
            return UnramifiedEisenstein(self.modulus, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        return UnramifiedEisenstein(self.modulus, [self.coeffs[0] + other, *self.coeffs[1:]])

    __radd__ = __add__

    def __neg__(self):
        return UnramifiedEisenstein(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UnramifiedEisenstein):
            return UnramifiedEisenstein(self.modulus, [a * other for a in self.coeffs])
        d = len(self.modulus) - 1
        zero = self.coeffs[0] * 0
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                prod[i + j] = prod[i + j] + x * y
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            for j in range(d + 1):
                prod[k - d + j] = prod[k - d + j] - c * self.modulus[j]
        return UnramifiedEisenstein(self.modulus, prod[:d])

    __rmul__ = __mul__

    def base_part(self) -> EisensteinLocal:
        """The w^0 coordinate; raises if the element is not in Z_p[lambda]."""
        if any(not c.is_zero() for c in self.coeffs[1:]):
            raise PrecisionError("value is not fixed by Frobenius at this precision")
        return self.coeffs[0]
