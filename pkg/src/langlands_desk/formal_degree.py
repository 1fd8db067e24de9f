"""Formal degrees and the adjoint gamma-factor prediction.

Haar measure is normalized so that the hyperspecial subgroup ``K = G(A)`` has
volume ``#G(F_q) / q^dim G``.  The prediction for a discrete parameter phi and
a representation rho of its centralizer C_phi is

    deg = dim(rho)/#C_phi * L(phi, ad, 1) * eps(phi, ad, 0) / L(phi, ad, 0)

with ``eps(phi, ad, s) = q^(art(ad) * (1/2 - s))`` (the sign is taken to be +).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.numbers import prime_power
from .cartan import CartanData, cartan_data, center_order, group_order
from .errors import DomainError, InputError


@dataclass(frozen=True)
class AdjointLocalData:
    dim_g: int
    inv_frobenius_eigenvalues: tuple[Fraction, ...] = ()
    swan: int = 0

    def __post_init__(self):
        eig = tuple(Fraction(x) for x in self.inv_frobenius_eigenvalues)
        object.__setattr__(self, "inv_frobenius_eigenvalues", eig)
        if self.dim_g < 1:
            raise InputError("dim_g must be positive")
        if len(eig) > self.dim_g:
            raise InputError("more inertia invariants than the dimension of the Lie algebra")
        if self.swan < 0:
            raise InputError("Swan conductor must be non-negative")

    @property
    def invariant_dim(self) -> int:
        return len(self.inv_frobenius_eigenvalues)

    def is_discrete(self) -> bool:
        """No Frobenius-fixed vectors among the inertia invariants."""
        return all(mu != 1 for mu in self.inv_frobenius_eigenvalues)


@dataclass(frozen=True)
class HiiInput:
    adjoint: AdjointLocalData
    dim_rho: int
    c_phi_order: int
    q: int

    def __post_init__(self):
        prime_power(self.q)
        if self.dim_rho < 1 or self.c_phi_order < 1:
            raise InputError("dim_rho and #C_phi must be positive")
        if self.dim_rho > self.c_phi_order:
            raise InputError("dim_rho cannot exceed #C_phi")


def haar_volume(data: CartanData, q: int) -> Fraction:
    prime_power(q)
    return Fraction(group_order(data, q), q**data.dim_g)


def induced_formal_degree(dim_w: int, vol) -> Fraction:
    vol = Fraction(vol)
    if vol <= 0:
        raise InputError(f"volume must be positive, got {vol}")
    if dim_w < 1:
        raise InputError("dim_w must be positive")
    return dim_w / vol


def adjoint_L_value(adj: AdjointLocalData, q: int, s: int) -> Fraction:
    """``det(1 - Fr q^-s | g^I)^-1`` for semisimple Frobenius."""
    out = Fraction(1)
    qs = Fraction(q) ** (-s)
    for mu in adj.inv_frobenius_eigenvalues:
        factor = 1 - mu * qs
        if factor == 0:
            raise DomainError(f"adjoint L-function has a pole at s={s} (eigenvalue {mu})")
        out /= factor
    return out


def artin_conductor(adj: AdjointLocalData) -> int:
    return adj.dim_g - adj.invariant_dim + adj.swan


def epsilon_at_zero(adj: AdjointLocalData, q: int) -> Fraction:
    art = artin_conductor(adj)
    if art % 2:
        raise DomainError(f"odd Artin conductor {art} would need sqrt(q); not supported")
    return Fraction(q) ** (art // 2)


def hii_degree(inp: HiiInput) -> Fraction:
    adj, q = inp.adjoint, inp.q
    ratio = Fraction(inp.dim_rho, inp.c_phi_order)
    return ratio * adjoint_L_value(adj, q, 1) * epsilon_at_zero(adj, q) / adjoint_L_value(adj, q, 0)


def simple_sc_degree(data: CartanData, q: int) -> Fraction:
    """Formal degree of a simple supercuspidal: ``q^(l+N) / #Z(q)``."""
    p, _ = prime_power(q)
    if data.type.series == "A" and data.rank == 1 and p == 2:
        raise DomainError("simple supercuspidals of SL2 are only modeled for odd p")
    return Fraction(q ** (data.rank + data.num_pos_roots), center_order(data, q))


# scenarios ---------------------------------------------------------------


def depth_zero_sl2(p: int) -> HiiInput:
    """Tame parameter of the depth-zero SL2 packet: C_phi of order 4."""
    if p % 2 == 0:
        raise DomainError("the depth-zero SL2 packet needs odd p")
    return HiiInput(AdjointLocalData(3, (Fraction(-1),), 0), dim_rho=1, c_phi_order=4, q=p)


def depth_zero_sl2_degree(p: int) -> Fraction:
    """``dim W / vol K`` with ``dim W = (p-1)/2`` and ``vol K = 1 - p^-2``."""
    return induced_formal_degree((p - 1) // 2, haar_volume(cartan_data("A1"), p))


def simple_wild(data: CartanData, q: int) -> HiiInput:
    """Simple wild parameter: no inertia invariants, Swan conductor = rank."""
    z = center_order(data, q)
    return HiiInput(AdjointLocalData(data.dim_g, (), data.rank), dim_rho=1, c_phi_order=z, q=q)


@dataclass
class DegreeReport:
    scenario: str
    degree: Fraction
    hii: Fraction
    conductor: int
    identity_checks: dict[str, bool] = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.degree == self.hii

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "degree": str(self.degree),
            "hii": str(self.hii),
            "match": self.match,
            "artin_conductor": self.conductor,
            "identity_checks": self.identity_checks,
        }


def identity_checks(data: CartanData, q: int) -> dict[str, bool]:
    z = center_order(data, q)
    vol = haar_volume(data, q)
    return {
        "half_conductor_is_l_plus_N": (data.dim_g + data.rank) == 2 * (data.rank + data.num_pos_roots),
        "volume_times_q_dim_is_group_order": vol * q**data.dim_g == group_order(data, q),
        "simple_sc_matches_prediction": (
            Fraction(q ** (data.rank + data.num_pos_roots), z)
            == hii_degree(simple_wild(data, q))
        ),
    }


def depth_zero_report(p: int) -> DegreeReport:
    inp = depth_zero_sl2(p)
    return DegreeReport(
        "depth0",
        depth_zero_sl2_degree(p),
        hii_degree(inp),
        artin_conductor(inp.adjoint),
        identity_checks(cartan_data("A1"), p),
    )


def simple_sc_report(data: CartanData, q: int) -> DegreeReport:
    inp = simple_wild(data, q)
    return DegreeReport(
        "simple-sc",
        simple_sc_degree(data, q),
        hii_degree(inp),
        artin_conductor(inp.adjoint),
        identity_checks(data, q),
    )
