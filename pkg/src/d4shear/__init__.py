"""Exact and numeric verification engine for shear-coordinate geodesic
functions on the four-holed sphere and the D4 cubic surface."""

from .exactalg import BigRational, DomainError, EvalPoint, ExponentVector, LaurentPoly, evaluate, poisson_bracket
from .qtorus import QTorusElement, classical_limit, dagger, qmul
from .surface import HoleParams, Orbifold, geodesic_functions, mu_eval

__version__ = "0.1.0"

__all__ = [
    "BigRational", "DomainError", "EvalPoint", "ExponentVector", "HoleParams", "LaurentPoly",
    "Orbifold", "QTorusElement", "classical_limit", "dagger", "evaluate", "geodesic_functions",
    "mu_eval", "poisson_bracket", "qmul",
]
