"""Exact Jack/zonal polynomials, generalized binomial coefficients and
non-central Wishart existence checks on symmetric cones.

Rationals are accepted as int, Fraction or "p/q"/decimal strings and are
returned as fractions.Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple, Union

from . import _core
from ._core import JackconeError

Number = Union[int, str, Fraction]

__all__ = [
    "JackconeError",
    "jack",
    "jack_eval",
    "general_binomial",
    "contiguous_binomial",
    "positivity_scan",
    "binomial_table_csv",
    "zonal_normalization",
    "zonal_value",
    "putative_moment",
    "existence_check",
    "laplace_transform",
    "verify_moment_formula",
]


def _s(x: Number) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        raise TypeError("pass rationals as int, Fraction or string, not float")
    return str(x)


def _ss(xs: Iterable[Number]) -> list:
    return [_s(x) for x in xs]


def jack(kappa: Sequence[int], m: int, alpha: Number) -> Dict[Tuple[int, ...], Fraction]:
    """J_kappa in m variables as {mu: coefficient of m_mu}."""
    return {tuple(mu): Fraction(c) for mu, c in _core.jack(list(kappa), m, _s(alpha))}


def jack_eval(kappa: Sequence[int], alpha: Number, point: Sequence[Number]) -> Fraction:
    return Fraction(_core.jack_eval(list(kappa), _s(alpha), _ss(point)))


def general_binomial(kappa: Sequence[int], sigma: Sequence[int], alpha: Number) -> Fraction:
    return Fraction(_core.general_binomial(list(kappa), list(sigma), _s(alpha)))


def contiguous_binomial(sigma: Sequence[int], i: int, alpha: Number) -> Fraction:
    return Fraction(_core.contiguous_binomial(list(sigma), i, _s(alpha)))


def positivity_scan(max_degree: int, max_length: int, alpha: Number) -> dict:
    return json.loads(_core.positivity_scan(max_degree, max_length, _s(alpha)))


def binomial_table_csv(alpha: Number, max_degree: int, max_length: int) -> str:
    return _core.binomial_table_csv(_s(alpha), max_degree, max_length)


def zonal_normalization(k: int, r: int, d: int) -> Dict[Tuple[int, ...], Fraction]:
    return {tuple(kappa): Fraction(c) for kappa, c in _core.zonal_normalization(k, r, d)}


def zonal_value(kappa: Sequence[int], eigenvalues: Sequence[Number], d: int) -> Fraction:
    return Fraction(_core.zonal_value(list(kappa), _ss(eigenvalues), d))


def putative_moment(kappa: Sequence[int], cone: str, beta: Number, omega: Sequence[Number], t: Number) -> Fraction:
    """Z_kappa(e) L_kappa^beta(-t Omega) at the standardised scale e/2."""
    return Fraction(_core.putative_moment(list(kappa), cone, _s(beta), _ss(omega), _s(t)))


def _verdict(raw: str) -> dict:
    out = json.loads(raw)
    cert = out.get("certificate")
    if cert:
        cert["kappa"] = tuple(cert["kappa"])
        cert["t"] = Fraction(cert["t"])
        cert["value"] = Fraction(cert["value"])
    return out


def existence_check(cone: str, beta: Number, omega) -> dict:
    """Verdict for eigenvalues (flat sequence) or an exact matrix (nested rows)."""
    omega = list(omega)
    if omega and isinstance(omega[0], (list, tuple)):
        return _verdict(_core.existence_check_matrix(cone, _s(beta), [_ss(row) for row in omega]))
    return _verdict(_core.existence_check(cone, _s(beta), _ss(omega)))


def laplace_transform(cone: str, beta: Number, omega: Sequence[Number], u, digits: int = 20) -> str:
    """Decimal string of E exp(-tr(u S)) at the standardised scale."""
    return _core.laplace_transform(cone, _s(beta), _ss(omega), [_ss(row) for row in u], digits)


def verify_moment_formula(m: int, beta: Number, omega: Sequence[Number], kappas, t: Number = 1,
                          count: int = 100000, seed: int = 0, threads: int = 1) -> dict:
    return json.loads(_core.verify_moment_formula(m, _s(beta), _ss(omega), [list(k) for k in kappas], _s(t),
                                                  count, seed, threads))
