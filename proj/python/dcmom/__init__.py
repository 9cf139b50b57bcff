"""Dirac-Coulomb radial expectation values for hydrogenlike ions.

Computes the moment triples (A_p, B_p, C_p) of the relativistic Coulomb
problem and the nonrelativistic <r^k> by independent routes (closed forms in
Hahn/Chebyshev polynomials, three-term vector recurrences, two-term
relations, high-precision quadrature), and machine-verifies the algebraic
identities relating them.

All numeric results are decimal strings at the working precision; convert
with float(), decimal.Decimal, or mpmath.mpf as needed.
"""

from dcmom._core import (
    DegenerateCombinationError,
    DegenerateDenominatorError,
    DivergentIntegralError,
    IdentityViolationError,
    InvalidStateError,
    OutOfRangeError,
    QuadratureNonConvergenceError,
    SingularMatrixError,
    __version__,
    chebyshev_t,
    derive_parameters,
    factorization_check,
    hahn,
    indint1_residual,
    initial_vectors,
    nonrel_moment,
    quadrature_triple,
    radial_fg,
    rel_table,
    rel_triple,
    validate_power_range,
    verify,
)

__all__ = [
    "DegenerateCombinationError",
    "DegenerateDenominatorError",
    "DivergentIntegralError",
    "IdentityViolationError",
    "InvalidStateError",
    "OutOfRangeError",
    "QuadratureNonConvergenceError",
    "SingularMatrixError",
    "__version__",
    "chebyshev_t",
    "derive_parameters",
    "factorization_check",
    "hahn",
    "indint1_residual",
    "initial_vectors",
    "nonrel_moment",
    "quadrature_triple",
    "radial_fg",
    "rel_table",
    "rel_triple",
    "validate_power_range",
    "verify",
]
