"""Exact bubble generating functions and cyclotomic quotient classification."""

import json
from fractions import Fraction

from ._bubbles import (
    NonPolynomialHat,
    ParseError,
    TheoryViolation,
    classify_brauer,
    classify_kauffman,
    commands,
    omega_of_roots,
    oo_of_poly,
    poly_gcd,
    roo_of_poly,
    run_json,
    sneeze_check,
)

__all__ = [
    "NonPolynomialHat",
    "ParseError",
    "TheoryViolation",
    "classify_brauer",
    "classify_kauffman",
    "commands",
    "omega_of_roots",
    "oo_of_poly",
    "poly_gcd",
    "roo_of_poly",
    "run",
    "run_json",
    "sneeze_check",
    "to_fractions",
]


def run(command, document, order=None, oracle=False):
    """Run a command on a dict; returns (exit_code, report dict)."""
    code, text = run_json(command, json.dumps(document), order, oracle)
    return code, json.loads(text)


def to_fractions(coeffs):
    return [Fraction(c) for c in coeffs]
