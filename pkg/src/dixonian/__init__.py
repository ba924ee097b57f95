"""Dixonian elliptic functions sm and cm over the complex plane.

sm and cm solve cm' = -sm^2, sm' = cm^2 with cm(0) = 1, sm(0) = 0, satisfy
cm^3 + sm^3 = 1, and extend to elliptic functions with periods 3K, 3K*gamma
and 3K*conj(gamma). This package evaluates them globally (exact-rational
series, lattice reduction, duplication), inverts sm, exposes the algebraic
identity layer including the Weierstrass bridge, and renders domain-colored
grids.
"""

from .constants import (
    GAMMA,
    DixonConstants,
    compute_K_quadrature,
    compute_K_root,
    dixon_constants,
)
from .errors import (
    ConvergenceError,
    DegenerateDenominatorError,
    DixonError,
    EvaluationError,
    PoleError,
)
from .evaluator import (
    EllipticValue,
    FundamentalCell,
    LatticeReduction,
    cm,
    fundamental_cell,
    reduce_to_fundamental,
    sm,
    sm_cm,
    sm_cm_values,
    wp,
)
from .identities import (
    DENOM_TOL,
    FunctionPair,
    WeierstrassValue,
    add,
    duplicate,
    from_weierstrass,
    to_weierstrass,
    translate_2K,
    triplicate,
)
from .inverse import InverseResult, sm_inverse
from .render import Region, ValueGrid, domain_color, grid_to_csv, sample_grid
from .selftest import CheckResult, list_checks, run_selftest
from .series import SeriesPair, eval_series, export_json, generate_series

__version__ = "0.1.0"

__all__ = [
    "GAMMA",
    "DENOM_TOL",
    "CheckResult",
    "ConvergenceError",
    "DegenerateDenominatorError",
    "DixonConstants",
    "DixonError",
    "EllipticValue",
    "EvaluationError",
    "FunctionPair",
    "FundamentalCell",
    "InverseResult",
    "LatticeReduction",
    "PoleError",
    "Region",
    "SeriesPair",
    "ValueGrid",
    "WeierstrassValue",
    "add",
    "cm",
    "compute_K_quadrature",
    "compute_K_root",
    "dixon_constants",
    "domain_color",
    "duplicate",
    "eval_series",
    "export_json",
    "from_weierstrass",
    "fundamental_cell",
    "generate_series",
    "grid_to_csv",
    "list_checks",
    "reduce_to_fundamental",
    "run_selftest",
    "sample_grid",
    "sm",
    "sm_cm",
    "sm_cm_values",
    "sm_inverse",
    "to_weierstrass",
    "translate_2K",
    "triplicate",
    "wp",
]
