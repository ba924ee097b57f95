"""Inversion of sm on its principal domain.

The initial guess integrates (1 - sigma^3)^(-2/3) along the straight segment
from 0 to w with the principal-valued power (holomorphic throughout the open
unit disc), then Newton steps against the forward evaluator polish the
residual down to tolerance. The returned preimage is the principal one: the
value continuous along rays from 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import dixon_constants
from .errors import ConvergenceError
from .evaluator import sm_cm_values
from .quadrature import tanh_sinh

NEWTON_MAX_ITER = 50

#: Newton cannot improve the iterate once |cm^2| is this small (w at the
#: branch point 1, where z = K and cm vanishes).
_FLAT_DERIVATIVE = 1e-9


@dataclass(frozen=True)
class InverseResult:
    """Principal preimage and the verified forward residual |sm(z) - w|."""

    z: complex
    residual: float


def sm_inverse(w: complex, tol: float = 1e-12, *, order: int | None = None) -> InverseResult:
    """Solve sm(z) = w for the principal z.

    Defined for |w| < 1, and for real w with |w| = 1 (the endpoint w = 1
    maps to K, w = -1 to -K/2). Raises ConvergenceError with the best
    residual if Newton fails to reach ``tol`` in NEWTON_MAX_ITER steps.
    """
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ValueError(f"non-finite argument {w}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    consts = dixon_constants() if order is None else dixon_constants(order)
    if w == 0:
        return InverseResult(complex(0.0), 0.0)
    if abs(w) >= 1.0:
        if w.imag != 0.0 or abs(w.real) != 1.0:
            raise ValueError("sm_inverse requires |w| < 1, or real w with |w| = 1")
        z = complex(consts.K if w.real > 0 else -consts.K / 2.0, 0.0)
    else:
        z = w * tanh_sinh(lambda x, _: (1.0 - (w * x) ** 3) ** (-2.0 / 3.0), tol=1e-11)

    best_z, best_r = z, math.inf
    for _ in range(NEWTON_MAX_ITER):
        s, c = sm_cm_values(z, order=order)
        r = abs(s - w)
        if r < best_r:
            best_z, best_r = z, r
        if r <= tol:
            return InverseResult(z, r)
        c2 = c * c
        if abs(c2) < _FLAT_DERIVATIVE:
            break
        z = z - (s - w) / c2
    if best_r <= tol:
        return InverseResult(best_z, best_r)
    raise ConvergenceError(
        f"Newton did not reach {tol:.1e}; best residual {best_r:.3e}",
        residual=best_r,
    )
