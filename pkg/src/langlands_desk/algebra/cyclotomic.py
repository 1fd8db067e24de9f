"""Exact arithmetic in the cyclotomic field Q(zeta_p), p prime.

Elements are stored in the power basis ``1, zeta, ..., zeta^(p-2)``; the
relation ``zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))`` makes the
representation canonical, so equality is coefficient equality.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

from ..errors import InputError
from .numbers import is_prime, rational_from_json, rational_to_json


class CyclotomicNumber:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence):
        if not is_prime(p):
            raise InputError(f"cyclotomic modulus must be prime, got {p}")
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) == p:
            coeffs = _canonical(coeffs)
        elif len(coeffs) != p - 1:
            raise InputError(f"expected {p - 1} coefficients for Q(zeta_{p}), got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_exponent_counts(cls, p: int, counts: Sequence) -> CyclotomicNumber:
        """``sum_j counts[j] * zeta^j`` for ``j = 0..p-1``."""
        return cls(p, list(counts))

    @classmethod
    def rational(cls, p: int, x) -> CyclotomicNumber:
        return cls(p, [x] + [0] * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CyclotomicNumber:
        full = [0] * p
        full[k % p] = 1
        return cls(p, full)

    def _full(self) -> list[Fraction]:
        return list(self.coeffs) + [Fraction(0)]

    def _check(self, other) -> CyclotomicNumber:
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.p, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.p != self.p:
            raise InputError(f"mismatched cyclotomic fields: p={self.p} vs p={other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.p
        full = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        full[(i + j) % p] += a * b
        return CyclotomicNumber(p, full)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not supported")
        out = CyclotomicNumber.rational(self.p, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(self.p, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"CyclotomicNumber({self.p}, {[str(c) for c in self.coeffs]})"

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def conjugate(self, a: int) -> CyclotomicNumber:
        """Galois image under ``zeta -> zeta^a``."""
        p = self.p
        if a % p == 0:
            raise InputError(f"sigma_{a} is not an automorphism of Q(zeta_{p})")
        full = [Fraction(0)] * p
        for i, c in enumerate(self.coeffs):
            full[(a * i) % p] += c
        return CyclotomicNumber(p, full)

    def embeddings(self) -> list[complex]:
        """Values under ``zeta -> exp(2 pi i a / p)`` for ``a = 1..p-1``."""
        p = self.p
        out = []
        for a in range(1, p):
            z = sum(
                (float(c) * cmath.exp(2j * math.pi * a * i / p) for i, c in enumerate(self.coeffs) if c),
                0j,
            )
            out.append(z)
        return out

    def norm(self) -> CyclotomicNumber:
        out = CyclotomicNumber.rational(self.p, 1)
        for a in range(1, self.p):
            out = out * self.conjugate(a)
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": [rational_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> CyclotomicNumber:
        try:
            return cls(int(obj["p"]), [rational_from_json(str(c)) for c in obj["coeffs"]])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed cyclotomic number {obj!r}") from exc


def _canonical(full: list[Fraction]) -> list[Fraction]:
    top = full[-1]
    return [c - top for c in full[:-1]]


def cyclo_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    if a.p != b.p:
        raise InputError(f"mismatched cyclotomic fields: p={a.p} vs p={b.p}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise InputError(f"unknown operation {op!r}")


def cyclo_conjugate(a: CyclotomicNumber, sigma_a: int) -> CyclotomicNumber:
    return a.conjugate(sigma_a)


def cyclo_embeddings(a: CyclotomicNumber) -> list[complex]:
    return a.embeddings()
