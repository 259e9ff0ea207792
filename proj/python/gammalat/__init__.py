"""Exact coefficient systems and high-precision Gamma derivatives at lattice points.

Rational results are returned as ``fractions.Fraction``; high-precision reals
are returned as decimal strings so no digits are lost.
"""

from fractions import Fraction

from . import _core
from ._core import GammalatError, gamma_derivatives, polygamma, recover_basis, run_cli

__all__ = [
    "GammalatError",
    "KNOWN_SHIFTS",
    "coefficient",
    "build_system",
    "det",
    "inverse",
    "structured_matrix",
    "cauchy_binet",
    "symmetric_table",
    "gamma_derivatives",
    "polygamma",
    "verify_identity",
    "recover_basis",
    "density_bound",
    "run_cli",
]

KNOWN_SHIFTS = tuple(Fraction(k) for k in _core.known_transcendental_shifts())


def _kappa(kappa):
    return None if kappa is None else str(Fraction(kappa))


def _matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _strings(rows):
    return [[str(Fraction(x)) for x in row] for row in rows]


def coefficient(family, n, ell, m, kappa=None):
    """Rational coefficient of Gamma^(ell) at the basis point in Gamma^(n) at the lattice point."""
    return Fraction(_core.coefficient(family, n, ell, m, _kappa(kappa)))


def build_system(family, indices, n, kappa=None):
    sys = _core.build_system(family, list(indices), n, _kappa(kappa))
    return {
        "matrix": _matrix(sys["matrix"]),
        "constants": [Fraction(c) for c in sys["constants"]],
        "unknowns": sys["unknowns"],
    }


def det(matrix):
    return Fraction(_core.det(_strings(matrix)))


def inverse(matrix):
    return _matrix(_core.inverse(_strings(matrix)))


def structured_matrix(m_primes, family, kind="elementary", kappa=None):
    return _matrix(_core.structured_matrix(list(m_primes), family, kind, _kappa(kappa)))


def cauchy_binet(m_primes, family, kind="elementary", kappa=None):
    cert = _core.cauchy_binet(list(m_primes), family, kind, _kappa(kappa))
    return {
        "total": Fraction(cert["total"]),
        "terms": [(tuple(s), Fraction(a), Fraction(b)) for s, a, b in cert["terms"]],
        "pruned": cert["pruned"],
        "all_positive": cert["all_positive"],
    }


def symmetric_table(family, kind, max_len, max_deg, kappa=None):
    return _matrix(_core.symmetric_table(family, kind, max_len, max_deg, _kappa(kappa)))


def verify_identity(family, n, m, kappa=None, digits=60):
    return _core.verify_identity(family, n, m, _kappa(kappa), digits)


def density_bound(variant, first, second=None):
    bound = _core.density_bound(variant, first, second)
    if bound["exact"]:
        bound["value"] = Fraction(bound["value"])
    return bound
