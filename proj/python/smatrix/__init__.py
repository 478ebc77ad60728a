"""Frobenius-norm lower-bound toolkit for non-negative matrices.

Thin re-export of the compiled module: constructions, bound reports,
structure audits, the scalar contradiction scan, and the box-constrained
optimizer.
"""

from smatrix._core import (
    ToolkitError,
    audit_prop,
    binary_oracle,
    bound_report,
    cauchy_schwarz_chain,
    cheng_even_bound,
    contradiction_scan,
    extract_rounded_pair,
    find_good_indices,
    h_upper,
    h_value,
    inverse_frobenius_norm,
    is_hadamard,
    is_smatrix,
    minimize,
    paley_hadamard,
    quadratic_residue_smatrix,
    read_matrix,
    sloane_coefficient,
    sylvester_hadamard,
    write_matrix,
)

__all__ = [
    "ToolkitError",
    "audit_prop",
    "binary_oracle",
    "bound_report",
    "cauchy_schwarz_chain",
    "cheng_even_bound",
    "contradiction_scan",
    "extract_rounded_pair",
    "find_good_indices",
    "h_upper",
    "h_value",
    "inverse_frobenius_norm",
    "is_hadamard",
    "is_smatrix",
    "minimize",
    "paley_hadamard",
    "quadratic_residue_smatrix",
    "read_matrix",
    "sloane_coefficient",
    "sylvester_hadamard",
    "write_matrix",
]
