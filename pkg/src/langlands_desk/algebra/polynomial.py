"""Univariate polynomials.

Dense polynomials are plain lists of coefficients, constant term first.
:class:`LaurentPoly` is a sparse exponent -> coefficient map allowing negative
exponents; it carries the local coordinates of a connection.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping


def trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    """Long division over the rationals; ``b`` must be nonzero."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in trim(a)]
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        rem = trim(rem)
    return trim(quot), rem


def poly_gcd(a: list, b: list) -> list:
    """Monic gcd over the rationals."""
    a, b = trim([Fraction(x) for x in a]), trim([Fraction(x) for x in b])
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    return [x / a[-1] for x in a]


def poly_derivative(a: list) -> list:
    return trim([i * a[i] for i in range(1, len(a))])


def poly_eval(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_str(a: list, var: str = "x") -> str:
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c == 1:
            text = mono
        elif mono and c == -1:
            text = "-" + mono
        else:
            text = f"{c}" + (f"*{mono}" if mono else "")
        terms.append(text)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


class LaurentPoly:
    """Finite Laurent polynomial in one named variable.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("var", "_c")

    def __init__(self, coeffs: Mapping[int, object] | None = None, var: str = "t"):
        self.var = var
        self._c = {int(k): Fraction(v) for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def monomial(cls, coeff, exponent: int, var: str = "t") -> LaurentPoly:
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c, var: str = "t") -> LaurentPoly:
        return cls({0: c}, var)

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def __getitem__(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def min_exponent(self) -> int | None:
        return min(self._c) if self._c else None

    def max_exponent(self) -> int | None:
        return max(self._c) if self._c else None

    def pole_order(self) -> int:
        """Order of the pole at the origin (0 when regular)."""
        lo = self.min_exponent()
        return 0 if lo is None or lo >= 0 else -lo

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, Fraction] = {}
        for i, x in self._c.items():
            for j, y in other._c.items():
                out[i + j] = out.get(i + j, 0) + x * y
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == LaurentPoly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def map_coeffs(self, f: Callable[[Fraction], object]) -> LaurentPoly:
        return LaurentPoly({k: f(v) for k, v in self._c.items()}, self.var)

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({k - 1: k * v for k, v in self._c.items() if k != 0}, self.var)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()}, self.var)

    def substitute_power(self, b: int, var: str | None = None) -> LaurentPoly:
        """Substitute ``var = new_var**b`` (``b`` may be negative)."""
        return LaurentPoly({e * b: v for e, v in self._c.items()}, var or self.var)

    def rename(self, var: str) -> LaurentPoly:
        return LaurentPoly(self._c, var)

    def evaluate(self, x):
        return sum((v * x**k for k, v in self._c.items()), Fraction(0))

    def to_json(self) -> dict[str, str]:
        return {str(k): str(v) for k, v in sorted(self._c.items())}

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            v = self._c[k]
            if k == 0:
                parts.append(str(v))
            else:
                parts.append(f"{v}*{self.var}^{k}")
        return " + ".join(parts)


def laurent_matrix(entries: Iterable[Iterable[LaurentPoly]]) -> list[list[LaurentPoly]]:
    return [list(row) for row in entries]
