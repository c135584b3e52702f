"""Exact certification of hyperbolic homogeneous polynomials in two variables."""

import json as _json

from . import _core
from ._core import (
    CertificationFailed,
    DomainError,
    HesstopError,
    NotHomogeneous,
    NotHyperbolicHere,
    PreconditionFailed,
    RefinementLimit,
    SyntaxError,
    degree,
    evaluate,
    family_f,
    family_P,
    family_Q,
    is_elliptic,
    is_hyperbolic,
    multiply,
    normalize,
    partial,
    polar_max_value,
)


def second_fundamental_form(poly):
    return _json.loads(_core.second_fundamental_form(poly))


def sign_certificate(poly):
    return _json.loads(_core.sign_certificate(poly))


def verify_inequality(p, q):
    return _json.loads(_core.verify_inequality(p, q))


def certify_isotopy(p, q):
    return _json.loads(_core.certify_isotopy(p, q))


def index_at_origin(poly, samples=1024, branch="plus"):
    """Index of the asymptotic line field of II_poly at the origin, as a dict."""
    return _json.loads(_core.index_at_origin(poly, samples, branch))


def count_separatrices(poly):
    return _json.loads(_core.count_separatrices(poly))


def census(n):
    return _json.loads(_core.census(n))


def certify_census_row(n, k, m):
    return _json.loads(_core.certify_census_row(n, k, m))


def verify_identities(m_max=20, k_max=3):
    return _json.loads(_core.verify_identities(m_max, k_max))


def T(m, j):
    return int(_core.T(m, j))


def F(m, j):
    return int(_core.F(m, j))
