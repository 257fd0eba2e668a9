"""Eigenfunctions of a two-parameter fourth-order differential operator.

The package evaluates the four families of eigenfunctions attached to the
operator

    D = (1/x^2) ((theta+nu)(theta+mu+nu) - x^2)(theta(theta+mu) - x^2)
        - (mu-nu)(mu+nu+2)/2,        theta = x d/dx,

on the positive half-line, applies the operator calculus exactly to a
structured Bessel-ladder representation, and ships verification suites for
every identity the functions satisfy (orthogonality, norms, recurrences,
integral representations, G-transform eigenfunction property).
"""

from .params import (
    FiveTermConstants,
    ParamSet,
    SolutionKind,
    eigenvalue,
    eigenvalue_casimir,
    five_term_constants,
    leading_asymptotic,
    norm_sq,
    parity_coefficients,
    parity_matrix,
)
from .specfun import (
    BesselKind,
    BesselLadder,
    bessel_i_norm,
    bessel_i_norm_scaled,
    bessel_j,
    bessel_k_norm,
    bessel_ladder,
    laguerre,
    pochhammer,
)

__version__ = "0.1.0"
