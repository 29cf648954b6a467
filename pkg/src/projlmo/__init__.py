"""Convex-set oracles and projection-based approximate linear minimization.

The library provides a catalog of compact convex sets with exact Euclidean
projection and exact linear minimization, a Wolfe minimum-norm-point solver
for vertex-list polytopes, certified epsilon-approximate linear minimization
through a single projection, a finite-scale exactness search for polytopes,
and a Frank-Wolfe demo solver that consumes the approximate oracle.
"""

from ._backend import BACKEND
from .fw import (
    FwProblem,
    FwResult,
    FwTrace,
    constant_epsilon,
    fw_solve,
    harmonic_epsilon,
)
from .lmo import (
    LAMBDA_MIN,
    ApproxLmoResult,
    GapCertificate,
    LambdaStarResult,
    approx_lmo,
    approx_lmo_with_lambda,
    cert_tol,
    choose_lambda,
    duality_gap,
    lambda_star_search,
    projection_lmo_identity,
)
from .mnp import MnpResult, min_norm_point, mnp_project, tilted_min_norm
from .sets import (
    Ball1,
    Ball2,
    BallInf,
    Box,
    ConvexSet,
    PolytopeV,
    ProjectionOnly,
    SetConstants,
    Simplex,
    Singleton,
)
from .setspec import parse_set

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LAMBDA_MIN",
    "ApproxLmoResult",
    "Ball1",
    "Ball2",
    "BallInf",
    "Box",
    "ConvexSet",
    "FwProblem",
    "FwResult",
    "FwTrace",
    "GapCertificate",
    "LambdaStarResult",
    "MnpResult",
    "PolytopeV",
    "ProjectionOnly",
    "SetConstants",
    "Simplex",
    "Singleton",
    "approx_lmo",
    "approx_lmo_with_lambda",
    "cert_tol",
    "choose_lambda",
    "constant_epsilon",
    "duality_gap",
    "fw_solve",
    "harmonic_epsilon",
    "lambda_star_search",
    "min_norm_point",
    "mnp_project",
    "parse_set",
    "projection_lmo_identity",
    "tilted_min_norm",
]
