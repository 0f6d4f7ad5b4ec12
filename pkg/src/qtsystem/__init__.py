"""Exact solutions of the quantum A1 T-system via non-commutative networks."""

from .boundary import Boundary, Point, fundamental, lambda_exponent, mutate, parse_boundary, projection
from .network import classical_oracle, solve_above, solve_below, solve_point, verify_tsys_point
from .qlaurent import Polynomial, bar, commutation_certificate, eval_q1, parse, to_text

__all__ = [
    "Boundary",
    "Point",
    "Polynomial",
    "bar",
    "classical_oracle",
    "commutation_certificate",
    "eval_q1",
    "fundamental",
    "lambda_exponent",
    "mutate",
    "parse",
    "parse_boundary",
    "projection",
    "solve_above",
    "solve_below",
    "solve_point",
    "to_text",
    "verify_tsys_point",
]
