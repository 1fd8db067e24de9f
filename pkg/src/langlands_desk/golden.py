"""Reference values the library must reproduce, run by ``verify-paper``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import affine_generic as ag
from . import formal_degree as fd
from . import gauge_connection as gc
from . import zeta_count as zc
from .algebra.eisenstein import EisensteinExact, EisensteinLocal
from .cartan import all_types, cartan_data, center_order, group_order_poly


@dataclass(frozen=True)
class GoldenCase:
    name: str
    expected: Any
    compute: Callable[[], Any]


@dataclass
class GoldenResult:
    name: str
    expected: Any
    actual: Any
    passed: bool
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": _show(self.expected),
            "actual": _show(self.actual),
            "status": "pass" if self.passed else "fail",
            **({"error": self.error} if self.error else {}),
        }


def _show(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _show(v) for k, v in x.items()}
    return x


def _cartan_summary(name):
    d = cartan_data(name)
    return (d.rank, d.h, d.degrees, d.num_pos_roots, d.dim_g, d.highest_root_mults, d.center_structure)


def _sl2():
    return gc.MatrixLieData.sl(2)


def _cover_sl2():
    conn = gc.pullback_cover(gc.change_to_infinity(gc.build_connection(_sl2())), 2)
    return conn.coefficient(-1), conn.coefficient(-3), conn.pole_order()


def _sl2_gauged():
    pipe = gc.run_pipeline(_sl2())
    return pipe.gauged.coefficient(-2), pipe.gauged.coefficient(-1), pipe.gauged.pole_order()


def _lam_relation():
    out = []
    for p in (3, 5, 7):
        out.append(EisensteinExact.lam_power(p, p - 1) == -p)
        out.append(EisensteinLocal.lam(p, 3 * (p - 1), p - 1) == EisensteinLocal.from_int(p, 3 * (p - 1), -p))
    return all(out)


F = Fraction
CASES: list[GoldenCase] = [
    GoldenCase("cartan_A1", (1, 2, (2,), 1, 3, (1,), (2,)), lambda: _cartan_summary("A1")),
    GoldenCase("cartan_G2", (2, 6, (2, 6), 6, 14, (2, 3), (1,)), lambda: _cartan_summary("G2")),
    GoldenCase("sl2_group_order_polynomial", [0, -1, 0, 1], lambda: group_order_poly(cartan_data("A1"))),
    GoldenCase("sl2_center_order_q3", 2, lambda: center_order(cartan_data("A1"), 3)),
    GoldenCase("eisenstein_relation", True, _lam_relation),
    GoldenCase("sl2_volume_q3", F(8, 9), lambda: fd.haar_volume(cartan_data("A1"), 3)),
    GoldenCase("sl2_volume_q5", F(24, 25), lambda: fd.haar_volume(cartan_data("A1"), 5)),
    GoldenCase("depth_zero_induced_degree_p3", F(9, 8), lambda: fd.induced_formal_degree(1, F(8, 9))),
    GoldenCase(
        "adjoint_L_value_s1",
        [1 / (1 + F(1, p)) for p in (3, 5, 7)],
        lambda: [fd.adjoint_L_value(fd.AdjointLocalData(3, (-1,), 0), p, 1) for p in (3, 5, 7)],
    ),
    GoldenCase("conductor_tame_sl2", 2, lambda: fd.artin_conductor(fd.AdjointLocalData(3, (-1,), 0))),
    GoldenCase("conductor_wild_sl2", 4, lambda: fd.artin_conductor(fd.AdjointLocalData(3, (), 1))),
    GoldenCase(
        "conductor_simple_wild_all_types",
        True,
        lambda: all(
            fd.artin_conductor(fd.AdjointLocalData(d.dim_g, (), d.rank)) == d.dim_g + d.rank
            for d in map(cartan_data, all_types())
        ),
    ),
    GoldenCase("hii_depth_zero_q3", F(9, 8), lambda: fd.hii_degree(fd.depth_zero_sl2(3))),
    GoldenCase(
        "hii_wild_sl2_q3",
        F(9, 2),
        lambda: fd.hii_degree(fd.HiiInput(fd.AdjointLocalData(3, (), 1), 1, 2, 3)),
    ),
    GoldenCase("simple_sc_sl2_q3", F(9, 2), lambda: fd.simple_sc_degree(cartan_data("A1"), 3)),
    GoldenCase(
        "simple_sc_G2",
        [F(p**8) for p in (3, 5, 7)],
        lambda: [fd.simple_sc_degree(cartan_data("G2"), p) for p in (3, 5, 7)],
    ),
    GoldenCase(
        "depth_zero_formula",
        [F(p * p, 2 * (p + 1)) for p in (3, 5, 7, 11)],
        lambda: [fd.depth_zero_sl2_degree(p) for p in (3, 5, 7, 11)],
    ),
    GoldenCase(
        "affine_generic_sl2_f3",
        (True, True),
        lambda: (
            ag.is_affine_generic((1, 1), ag.FrattiniQuotient(cartan_data("A1"), 3)),
            ag.torus_orbit_is_stable((1, 1), ag.FrattiniQuotient(cartan_data("A1"), 3)),
        ),
    ),
    GoldenCase(
        "invariant_degree_is_h",
        True,
        lambda: all(
            ag.monomial_degree(ag.FrattiniQuotient(d, 2)) == d.h for d in map(cartan_data, all_types())
        ),
    ),
    GoldenCase("projective_line_valid", (0, (1,)), lambda: (lambda c: (c.genus, c.P_coeffs))(zc.validate_curve(2, 0, [1]))),
    GoldenCase(
        "zeta_ST_projective_line",
        [1],
        lambda: zc.zeta_ST(zc.validate_curve(5, 0, [1]), zc.PlaceSet((1,), "S"), zc.PlaceSet((1,), "T")),
    ),
    GoldenCase("special_value_of_one", [1, 1, 1], lambda: [zc.special_value([1], d, 7) for d in (2, 3, 6)]),
    GoldenCase(
        "unique_automorphic_all_types",
        True,
        lambda: all(
            zc.count_ff(
                cartan_data(t), zc.validate_curve(q, 0, [1]), zc.PlaceSet((1,), "S"), zc.PlaceSet((1,), "T")
            ).count
            == 1
            for t in all_types()
            for q in (2, 3, 5)
        ),
    ),
    GoldenCase("G2_mass_constant", F(1, 12096), lambda: zc.count_nf(cartan_data("G2"), [], [], 1).count),
    GoldenCase("connection_residue_is_N", [[0, 1], [0, 0]], lambda: gc.build_connection(_sl2()).residue()),
    GoldenCase(
        "double_pole_at_infinity", 2, lambda: gc.change_to_infinity(gc.build_connection(_sl2())).pole_order()
    ),
    GoldenCase("sl2_cover_form", ([[0, -2], [0, 0]], [[0, 0], [-2, 0]], 3), _cover_sl2),
    GoldenCase(
        "sl2_gauged_form",
        ([[0, -2], [-2, 0]], [[F(-1, 2), 0], [0, F(1, 2)]], 2),
        _sl2_gauged,
    ),
    GoldenCase("sl2_slope", F(1, 2), lambda: gc.slope_at_infinity(gc.run_pipeline(_sl2()).at_infinity)),
    GoldenCase(
        "cli_formal_degree_depth0",
        {"degree": "9/8", "hii": "9/8", "match": True},
        lambda: {k: v for k, v in fd.depth_zero_report(3).to_json().items() if k in ("degree", "hii", "match")},
    ),
    GoldenCase(
        "cli_count_ff_unique",
        "1",
        lambda: zc.count_ff(
            cartan_data("A1"), zc.validate_curve(5, 0, [1]), zc.PlaceSet((1,), "S"), zc.PlaceSet((1,), "T")
        ).to_json()["count"],
    ),
]



def run_golden(cases: list[GoldenCase] | None = None) -> list[GoldenResult]:
    out = []
    for case in cases or CASES:
        try:
            actual = case.compute()
        except Exception as exc:  # report, keep going
            out.append(GoldenResult(case.name, case.expected, None, False, f"{type(exc).__name__}: {exc}"))
            continue
        out.append(GoldenResult(case.name, case.expected, actual, _equal(actual, case.expected)))
    return out


def _equal(a, b) -> bool:
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return len(a) == len(b) and all(_equal(x, y) for x, y in zip(a, b))
    return a == b


def format_table(results: list[GoldenResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  status  expected -> actual"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        actual = r.error if r.error else _show(r.actual)
        lines.append(f"{r.name:<{width}}  {status:<6}  {_show(r.expected)} -> {actual}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} passed")
    return "\n".join(lines)
