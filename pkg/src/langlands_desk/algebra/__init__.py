"""Exact arithmetic substrate: rationals, cyclotomics, finite fields,
Laurent polynomials, exact matrices and the ramified p-adic ring Z_p[lambda]."""

from .cyclotomic import CyclotomicNumber, cyclo_arith, cyclo_conjugate, cyclo_embeddings
from .eisenstein import EisensteinExact, EisensteinLocal, UnramifiedEisenstein, eisenstein_arith
from .finite_field import FiniteField, ff_trace, field
from .numbers import Rational, as_fraction, rational_from_json, rational_to_json
from .polynomial import LaurentPoly

__all__ = [
    "CyclotomicNumber",
    "EisensteinExact",
    "EisensteinLocal",
    "FiniteField",
    "LaurentPoly",
    "Rational",
    "UnramifiedEisenstein",
    "as_fraction",
    "cyclo_arith",
    "cyclo_conjugate",
    "cyclo_embeddings",
    "eisenstein_arith",
    "ff_trace",
    "field",
    "rational_from_json",
    "rational_to_json",
]
