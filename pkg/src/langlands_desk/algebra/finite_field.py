"""Small finite fields F_q, q = p^k.

Elements are integers ``0 <= x < q`` whose base-p digits are the coefficients
of ``1, w, ..., w^(k-1)`` where ``w`` is a root of the chosen modulus.
Multiplication goes through discrete log tables, which is the right trade-off
for the brute-force character sums this package performs.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import InputError, ResourceGuardError
from .numbers import is_prime, prime_power

MAX_FIELD_ORDER = 1 << 20
_ADD_TABLE_LIMIT = 512


def _polymulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * modulus[j]) % p
    return prod[:k]


def _has_factor_of_degree(modulus: Sequence[int], d: int, p: int) -> bool:
    k = len(modulus) - 1
    for tail in itertools.product(range(p), repeat=d):
        divisor = list(tail) + [1]
        rem = list(modulus)
        for shift in range(k - d, -1, -1):
            c = rem[shift + d]
            if c:
                for j in range(d + 1):
                    rem[shift + j] = (rem[shift + j] - c * divisor[j]) % p
        if not any(rem[:d]):
            return True
    return False


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Brute-force factor search; fine for the small degrees used here."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    return not any(_has_factor_of_degree(modulus, d, p) for d in range(1, k // 2 + 1))


def conway_like_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest (in lexicographic digit order) monic irreducible of degree k."""
    if k == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=k):
        candidate = tuple(reversed(tail)) + (1,)
        if candidate[0] and is_irreducible(candidate, p):
            return candidate
    raise InputError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


class FiniteField:
    def __init__(self, q: int, modulus: Sequence[int] | None = None):
        p, k = prime_power(q)
        if q > MAX_FIELD_ORDER:
            raise ResourceGuardError(f"F_{q} exceeds the table guard {MAX_FIELD_ORDER}")
        if modulus is None:
            modulus = conway_like_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or not is_irreducible(modulus, p):
            raise InputError(f"{modulus} is not a monic irreducible of degree {k} over F_{p}")
        self.p, self.k, self.q = p, k, q
        self.modulus = modulus
        self._build_tables()

    def __repr__(self):
        return f"FiniteField({self.q}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    # encoding
    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        if len(cs) > self.k:
            raise InputError(f"too many coefficients for F_{self.q}")
        x = 0
        for c in reversed(cs):
            x = x * self.p + int(c) % self.p
        return x

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime field."""
        return n % self.p

    def _build_tables(self):
        q, p = self.q, self.p
        one = [1] + [0] * (self.k - 1)
        gen = next(g for g in range(1, q) if self._multiplicative_order(g) == q - 1)
        self.generator = gen
        exp = [0] * (q - 1)
        log = [0] * q
        cur = list(one)
        gc = list(self.coeffs(gen))
        for i in range(q - 1):
            x = self.from_coeffs(cur)
            exp[i] = x
            log[x] = i
            cur = _polymulmod(cur, gc, self.modulus, p)
        self._exp, self._log = exp, log
        self._add = None
        if q <= _ADD_TABLE_LIMIT:
            self._add = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
        self._neg = [self._neg_digits(a) for a in range(q)]
        self._trace = [self._trace_direct(a) for a in range(q)]

    def _multiplicative_order(self, g: int) -> int:
        one = [1] + [0] * (self.k - 1)
        gc = list(self.coeffs(g))
        cur = list(gc)
        order = 1
        while cur != one:
            cur = _polymulmod(cur, gc, self.modulus, self.p)
            order += 1
        return order

    def _add_digits(self, a: int, b: int) -> int:
        return self.from_coeffs([(x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def _neg_digits(self, a: int) -> int:
        return self.from_coeffs([(-x) % self.p for x in self.coeffs(a)])

    # arithmetic
    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def _trace_direct(self, x: int) -> int:
        acc, y = 0, x
        for _ in range(self.k):
            acc = self.add(acc, y)
            y = self.pow(y, self.p)
        cs = self.coeffs(acc)
        if any(cs[1:]):
            raise AssertionError("trace left the prime field")  # would mean a bad modulus
        return cs[0]

    def trace(self, x: int) -> int:
        """Absolute trace to F_p, as a residue ``0 <= r < p``."""
        return self._trace[x]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def prime_field(self) -> Iterator[int]:
        return iter(range(self.p))


@lru_cache(maxsize=64)
def field(q: int) -> FiniteField:
    return FiniteField(q)


def ff_trace(F: FiniteField, x: int) -> int:
    return F.trace(x)


def is_prime_field(F: FiniteField) -> bool:
    return F.k == 1 and is_prime(F.q)
