"""Exact local h*-polynomials of one-row Hermite normal form simplices."""

from boxpoly.core import (
    CoefficientDistribution,
    IntPolynomial,
    is_palindromic,
    is_strictly_unimodal,
    is_unimodal,
    to_distribution,
    tv_distance,
)
from boxpoly.invariants import hstar, local_hstar, stapledon_decompose
from boxpoly.kernels import BACKEND
from boxpoly.simplex import OneRowSimplex, parse_spec, validate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CoefficientDistribution",
    "IntPolynomial",
    "OneRowSimplex",
    "hstar",
    "is_palindromic",
    "is_strictly_unimodal",
    "is_unimodal",
    "local_hstar",
    "parse_spec",
    "stapledon_decompose",
    "to_distribution",
    "tv_distance",
    "validate",
]
