"""Exact combinatorial polynomials: Eulerian, alternating run, type B and
dual Stirling families, computed by several independent methods."""

from ._core import (
    Error,
    derive,
    distribution,
    family,
    matrix,
    methods,
    run_cli,
    stanley_explicit_R,
    triangle_entry,
    verify,
)

__all__ = [
    "Error",
    "derive",
    "distribution",
    "family",
    "matrix",
    "methods",
    "run_cli",
    "stanley_explicit_R",
    "triangle_entry",
    "verify",
]
