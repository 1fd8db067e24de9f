"""Rational numbers, prime powers and p-adic valuations."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from ..errors import InputError

Rational = Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return rational_from_json(x)
    raise InputError(f"cannot interpret {x!r} as a rational number")


def rational_to_json(x) -> str:
    """Serialize a rational as ``"num/den"`` text (integers drop ``/1``)."""
    return str(Fraction(x))


def rational_from_json(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError) as exc:
        raise InputError(f"malformed rational {text!r}") from exc


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise if q is not a prime power."""
    if not isinstance(q, int) or q < 2:
        raise InputError(f"q must be a prime power, got {q!r}")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise InputError(f"q must be a prime power, got {q}")
    return p, k


def vp_int(n: int, p: int) -> int | None:
    """p-adic valuation of an integer; None for zero."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x, p: int) -> int | None:
    x = Fraction(x)
    if x == 0:
        return None
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def reduce_mod(x, p: int, e: int) -> int:
    """Image of a p-integral rational in Z/p^e."""
    x = Fraction(x)
    m = p**e
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, m) % m
