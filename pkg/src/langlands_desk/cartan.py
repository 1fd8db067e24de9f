"""Root-system invariants of the split simple types.

Every table here is cross-checked when the module is imported: positive roots
are regenerated from the Cartan matrix, and the number of roots, the highest
root and the order of the fundamental group must agree with the stored
degrees, multiplicities and center.

Simple roots follow the Bourbaki labeling, except for G2 where the long root
comes first (highest root 2*a1 + 3*a2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import linalg
from .algebra.numbers import prime_power
from .errors import InputError, InternalInvariantError

SERIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class SimpleType:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s not in SERIES or len(s) != 1:
            raise InputError(f"unknown series {s!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[s]
        if not ok:
            raise InputError(f"invalid rank {r} for series {s}")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        text = text.strip().upper()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError) as exc:
            raise InputError(f"cannot parse simple type {text!r}") from exc

    def __str__(self):
        return f"{self.series}{self.rank}"

    def canonical(self) -> SimpleType:
        if self.series == "D" and self.rank == 3:
            return SimpleType("A", 3)
        return self


@dataclass(frozen=True)
class CartanData:
    type: SimpleType
    rank: int
    coxeter_number: int
    degrees: tuple[int, ...]
    num_pos_roots: int
    dim_g: int
    highest_root_mults: tuple[int, ...]
    weyl_order: int
    center_structure: tuple[int, ...]
    dual_type: SimpleType

    @property
    def h(self) -> int:
        return self.coxeter_number

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.degrees)

    @property
    def affine_mults(self) -> tuple[int, ...]:
        """Multiplicities ``(m_0, m_1, ..., m_l)`` with ``m_0 = 1``."""
        return (1, *self.highest_root_mults)

    def to_json(self) -> dict:
        return {
            "series": self.type.series,
            "rank": self.rank,
            "h": self.coxeter_number,
            "degrees": list(self.degrees),
            "N": self.num_pos_roots,
            "dim": self.dim_g,
            "m": list(self.highest_root_mults),
            "center": list(self.center_structure),
        }


def _degrees(t: SimpleType) -> tuple[int, ...]:
    s, l = t.series, t.rank
    if s == "A":
        return tuple(range(2, l + 2))
    if s in "BC":
        return tuple(range(2, 2 * l + 1, 2))
    if s == "D":
        return tuple(sorted([*range(2, 2 * l - 1, 2), l]))
    return {
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
        ("F", 4): (2, 6, 8, 12),
        ("G", 2): (2, 6),
    }[(s, l)]


def _highest_root(t: SimpleType) -> tuple[int, ...]:
    s, l = t.series, t.rank
    if s == "A":
        return (1,) * l
    if s == "B":
        return (1,) + (2,) * (l - 1)
    if s == "C":
        return (2,) * (l - 1) + (1,)
    if s == "D":
        return (1,) + (2,) * (l - 3) + (1, 1)
    return {
        ("E", 6): (1, 2, 2, 3, 2, 1),
        ("E", 7): (2, 2, 3, 4, 3, 2, 1),
        ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
        ("F", 4): (2, 3, 4, 2),
        ("G", 2): (2, 3),
    }[(s, l)]


def _center(t: SimpleType) -> tuple[int, ...]:
    s, l = t.series, t.rank
    if s == "A":
        return (l + 1,)
    if s in "BC":
        return (2,)
    if s == "D":
        return (4,) if l % 2 else (2, 2)
    return {("E", 6): (3,), ("E", 7): (2,)}.get((s, l), (1,))


def cartan_matrix(t: SimpleType) -> list[list[int]]:
    """Cartan matrix ``a_ij = <alpha_i^vee, alpha_j>`` in our labeling."""
    t = t.canonical()
    s, l = t.series, t.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if s in "ABC":
        for i in range(l - 1):
            link(i, i + 1)
        if s == "B":
            link(l - 2, l - 1, -1, -2)  # alpha_l short
        if s == "C":
            link(l - 2, l - 1, -2, -1)  # alpha_l long
    elif s == "D":
        for i in range(l - 2):
            link(i, i + 1)
        link(l - 3, l - 1)
    elif s == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, l - 1):
            link(i, i + 1)
    elif s == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif s == "G":
        link(0, 1, -1, -3)  # alpha_1 long, alpha_2 short
    return a


def positive_roots(t: SimpleType) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by root strings."""
    a = cartan_matrix(t)
    l = len(a)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(l):
                # <beta, alpha_i^vee> = sum_j c_j a_ij
                pairing = sum(beta[j] * a[i][j] for j in range(l))
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        r += 1
                    else:
                        break
                if r - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def _validate(data: CartanData) -> None:
    t = data.type
    d = data.degrees
    checks = [
        (data.num_pos_roots == sum(x - 1 for x in d), "N = sum(d_i - 1)"),
        (data.dim_g == data.rank + 2 * data.num_pos_roots, "dim = l + 2N"),
        (data.coxeter_number == max(d) == d[-1], "h = max degree"),
        (d[0] == 2 and list(d) == sorted(d), "degrees sorted, d_1 = 2"),
        (data.weyl_order == math.prod(d), "|W| = prod d_i"),
        (1 + sum(data.highest_root_mults) == data.coxeter_number, "1 + sum m_i = h"),
        (len(data.highest_root_mults) == data.rank, "one multiplicity per simple root"),
    ]
    roots = positive_roots(t)
    checks.append((len(roots) == data.num_pos_roots, "root count from Cartan matrix"))
    checks.append((roots[-1] == data.highest_root_mults, "highest root from Cartan matrix"))
    det = linalg.det([[Fraction(x) for x in row] for row in cartan_matrix(t)])
    checks.append((det == math.prod(data.center_structure), "det(Cartan) = |center|"))
    for ok, what in checks:
        if not ok:
            raise InternalInvariantError(f"{t}: table check failed: {what}")


@lru_cache(maxsize=None)
def cartan_data(t: SimpleType | str) -> CartanData:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    t = t.canonical()
    d = _degrees(t)
    n = sum(x - 1 for x in d)
    dual = {"B": "C", "C": "B"}.get(t.series, t.series)
    data = CartanData(
        type=t,
        rank=t.rank,
        coxeter_number=max(d),
        degrees=d,
        num_pos_roots=n,
        dim_g=t.rank + 2 * n,
        highest_root_mults=_highest_root(t),
        weyl_order=math.prod(d),
        center_structure=_center(t),
        dual_type=SimpleType(dual, t.rank),
    )
    _validate(data)
    return data


def group_order_poly(data: CartanData) -> list[int]:
    """Coefficients (constant first) of ``q^N prod_i (q^{d_i} - 1)``."""
    poly = [0] * data.num_pos_roots + [1]
    for deg in data.degrees:
        factor = [-1] + [0] * (deg - 1) + [1]
        out = [0] * (len(poly) + deg)
        for i, x in enumerate(poly):
            if x:
                for j, y in enumerate(factor):
                    out[i + j] += x * y
        poly = out
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def group_order(data: CartanData, q: int) -> int:
    return q**data.num_pos_roots * math.prod(q**deg - 1 for deg in data.degrees)


def center_order(data: CartanData, q: int) -> int:
    """Order of the center of the split simply-connected group over F_q."""
    prime_power(q)
    return math.prod(math.gcd(c, q - 1) for c in data.center_structure)


SAMPLE_TYPES: tuple[str, ...] = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2")


def all_types(max_classical_rank: int = 8):
    for s in "ABCD":
        lo = {"A": 1, "B": 2, "C": 2, "D": 4}[s]
        for r in range(lo, max_classical_rank + 1):
            yield SimpleType(s, r)
    for t in ("E6", "E7", "E8", "F4", "G2"):
        yield SimpleType.parse(t)


def validate_tables(max_classical_rank: int = 8) -> None:
    for t in all_types(max_classical_rank):
        cartan_data(t)


validate_tables()
