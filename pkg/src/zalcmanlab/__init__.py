"""Numerical laboratory for generalized Zalcman coefficient functionals.

Evaluates lam*a_n*a_m - a_{n+m-1} over normalized univalent candidates,
reconstructs the differential-equation data of extremal candidates,
verifies the trigonometric bound |3 a_2 a_3 - a_4| <= 14 and the lam=2
half-plane geometry at desk scale, and searches a dense slit-map family
via Loewner evolution for extremal driving functions.
"""

from .families import CoefficientVector, koebe_rotation
from .functionals import (
    FunctionalGradient,
    ZalcmanSpec,
    extend_bound_by_monotonicity,
    gradient,
    lambda_thresholds,
    zalcman_bound,
    zalcman_value,
)
from .loewner import DrivingFunction, HorizonError, evolve, random_driving
from .powerseries import TruncatedSeries, multiply, power
from .quaddiff import QuadDiffT1, TrajectoryPolyline, half_plane_check, trace_from_origin
from .schiffer import (
    FactorizedG,
    LaurentPoly,
    NoDoubleZeroError,
    SchifferData,
    canonical_rotation,
    check_reciprocal_symmetry,
    double_root_fit,
    matching_residuals,
    relation_check,
    rhs_polynomial,
    schaeffer_spencer,
)
from .search import SearchResult, SweepRow, lambda_sweep, objective, optimize

__all__ = [
    "CoefficientVector",
    "DrivingFunction",
    "FactorizedG",
    "FunctionalGradient",
    "HorizonError",
    "LaurentPoly",
    "NoDoubleZeroError",
    "QuadDiffT1",
    "SchifferData",
    "SearchResult",
    "SweepRow",
    "TrajectoryPolyline",
    "TruncatedSeries",
    "ZalcmanSpec",
    "canonical_rotation",
    "check_reciprocal_symmetry",
    "double_root_fit",
    "evolve",
    "extend_bound_by_monotonicity",
    "gradient",
    "half_plane_check",
    "koebe_rotation",
    "lambda_sweep",
    "lambda_thresholds",
    "matching_residuals",
    "multiply",
    "objective",
    "optimize",
    "power",
    "random_driving",
    "relation_check",
    "rhs_polynomial",
    "schaeffer_spencer",
    "trace_from_origin",
    "zalcman_bound",
    "zalcman_value",
]

__version__ = "0.1.0"
