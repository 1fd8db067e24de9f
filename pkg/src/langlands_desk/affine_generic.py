"""Affine generic characters of the pro-p Iwahori subgroup.

``V = P/P+`` is an (l+1)-dimensional F_q-space, one line per affine simple
root.  Coordinates are ordered ``(alpha_0, alpha_1, ..., alpha_l)`` where
``alpha_0`` is the negative of the highest root.  A functional ``f`` on V is
affine generic iff ``prod_i f_i^{m_i}`` is nonzero, where ``m_0 = 1`` and
``m_i`` are the highest-root multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .algebra.cyclotomic import CyclotomicNumber
from .algebra.finite_field import FiniteField, field
from .cartan import CartanData
from .errors import InputError


@dataclass(frozen=True)
class FrattiniQuotient:
    data: CartanData
    q: int

    @property
    def field(self) -> FiniteField:
        return field(self.q)

    @property
    def dimension(self) -> int:
        return self.data.rank + 1

    @property
    def weights(self) -> tuple[int, ...]:
        return self.data.affine_mults

    def root_weights(self) -> list[tuple[int, ...]]:
        """The affine simple roots restricted to T, in simple-root coordinates."""
        l = self.data.rank
        alpha0 = tuple(-m for m in self.data.highest_root_mults)
        return [alpha0] + [tuple(int(i == j) for j in range(l)) for i in range(l)]

    def check(self, vec: Sequence[int]) -> tuple[int, ...]:
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.dimension:
            raise InputError(f"expected {self.dimension} coordinates, got {len(vec)}")
        if any(not 0 <= x < self.q for x in vec):
            raise InputError(f"coordinates must be encoded elements of F_{self.q}")
        return vec


@dataclass(frozen=True)
class AffineCharacter:
    functional: tuple[int, ...]
    psi_choice: int = 1


def is_affine_generic(f: Sequence[int], fq: FrattiniQuotient) -> bool:
    f = fq.check(f)
    return all(x != 0 for x in f)


def invariant_monomial_value(f: Sequence[int], fq: FrattiniQuotient) -> int:
    """``prod_i f_i^{m_i}`` evaluated in F_q (encoded element)."""
    f = fq.check(f)
    F = fq.field
    acc = 1
    for x, m in zip(f, fq.weights):
        acc = F.mul(acc, F.pow(x, m))
    return acc


def monomial_degree(fq: FrattiniQuotient) -> int:
    return sum(fq.weights)


def character_value(chi: AffineCharacter, v: Sequence[int], fq: FrattiniQuotient) -> CyclotomicNumber:
    """``psi(Tr(sum f_i v_i))`` with ``psi(x) = zeta_p^(a x)``."""
    f = fq.check(chi.functional)
    v = fq.check(v)
    F = fq.field
    if chi.psi_choice % F.p == 0:
        raise InputError("psi must be a nontrivial additive character")
    pairing = F.sum(F.mul(a, b) for a, b in zip(f, v))
    return CyclotomicNumber.zeta(F.p, chi.psi_choice * F.trace(pairing))


def torus_orbit_is_stable(f: Sequence[int], fq: FrattiniQuotient) -> bool:
    """Hilbert-Mumford test for the torus action on V^*.

    The orbit of ``f`` is closed with finite stabilizer iff the weights on
    its support span the character space and admit a strictly positive
    linear relation (0 in the interior of their convex hull).
    """
    f = fq.check(f)
    support = [w for w, x in zip(fq.root_weights(), f) if x != 0]
    l = fq.data.rank
    if len(support) <= l:
        return False
    w = np.array(support, dtype=float).T
    if np.linalg.matrix_rank(w) < l:
        return False
    # feasibility of  W c = 0, c >= 1
    res = linprog(np.zeros(len(support)), A_eq=w, b_eq=np.zeros(l), bounds=[(1, None)] * len(support))
    return bool(res.status == 0)


def count_generic(fq: FrattiniQuotient) -> int:
    """Exhaustive count of affine generic functionals."""
    from itertools import product

    return sum(is_affine_generic(f, fq) for f in product(range(fq.q), repeat=fq.dimension))
