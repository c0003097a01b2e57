"""Exact scalars: Q(q), Laurent polynomials, Q(p0, p1) and linear algebra."""

from .laurent import LaurentPoly, quantum_factorial, quantum_integer
from .linalg import (
    InconsistentSystemError,
    LinearSolution,
    column_basis,
    inverse,
    kernel_basis,
    rank,
    solve_linear,
)
from .multivar import MultiRatFunc
from .ratfunc import ONE, Q, ZERO, PoleError, RatFunc, parse, q_pow, to_string

__all__ = [
    "InconsistentSystemError",
    "LaurentPoly",
    "LinearSolution",
    "MultiRatFunc",
    "ONE",
    "PoleError",
    "Q",
    "RatFunc",
    "ZERO",
    "column_basis",
    "field_arith",
    "inverse",
    "kernel_basis",
    "parse",
    "q_pow",
    "quantum_factorial",
    "quantum_integer",
    "rank",
    "solve_linear",
    "to_string",
]


def field_arith(x: RatFunc, y: RatFunc, op: str) -> RatFunc:
    """Apply ``op`` in {add, sub, mul, div}; division by zero raises ZeroDivisionError."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")
