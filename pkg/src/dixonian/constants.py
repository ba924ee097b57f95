"""Fundamental constants: K, gamma, the period lattice, poles and zeros.

K (the first positive zero of cm, 1.76663875...) is located with the
library's own machinery: series evaluation inside the safe disc plus two
argument halvings cover the bracket (1.5, 2.0). The defining singular
integral over (0, 1) is computed independently as a cross-check only.
Everything is computed once and frozen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import identities, series
from .errors import ConvergenceError
from .identities import FunctionPair
from .quadrature import tanh_sinh

#: gamma = exp(2*pi*i/3) = (-1 + i*sqrt(3))/2, the primitive cube root of unity.
GAMMA = complex(-0.5, math.sqrt(3.0) / 2.0)

#: Radius of guaranteed local existence for the defining initial value
#: problem, 2**(-2/3) = 0.62996...
R_LOCAL = 2.0 ** (-2.0 / 3.0)


@dataclass(frozen=True)
class DixonConstants:
    """Immutable record every other module reads.

    ``pole_reps`` and ``zero_reps`` are the representatives of the three pole
    and zero classes of sm inside the fundamental cell centered at 0.
    """

    K: float
    gamma: complex
    r: float
    periods: tuple[complex, complex]
    pole_reps: tuple[complex, complex, complex]
    zero_reps: tuple[complex, complex, complex]
    g2: float
    g3: float


def _pair_small(t: float, pair: series.SeriesPair) -> FunctionPair:
    # valid for |t| <= 2.0: two halvings land inside the series disc
    s, c = series.eval_series(pair, t / 4.0)
    p = identities.duplicate(FunctionPair(s, c))
    return identities.duplicate(p)


def compute_K_root(tol: float = 1e-14, order: int = series.DEFAULT_ORDER) -> float:
    """First positive zero of cm, by bisection then Newton (cm' = -sm^2).

    Returns t in (1.5, 2.0) with |cm(t)| <= tol.
    """
    if tol < 1e-14:
        raise ValueError("tol must be at least 1e-14")
    pair = series.generate_series(order)
    a, b = 1.5, 2.0
    fa = _pair_small(a, pair).c.real
    fb = _pair_small(b, pair).c.real
    if not (fa > 0.0 > fb):
        raise ConvergenceError(
            f"no sign change of cm on [{a}, {b}]: cm({a}) = {fa:.3g}, cm({b}) = {fb:.3g}"
        )
    for _ in range(20):
        mid = 0.5 * (a + b)
        if _pair_small(mid, pair).c.real > 0.0:
            a = mid
        else:
            b = mid
    t = 0.5 * (a + b)
    for _ in range(20):
        p = _pair_small(t, pair)
        c = p.c.real
        if abs(c) <= tol:
            return t
        t += c / (p.s.real * p.s.real)
    raise ConvergenceError(f"Newton stalled at |cm(t)| = {abs(c):.3e}", residual=abs(c))


def _k_integrand(sigma: float, one_minus_sigma: float) -> float:
    # (1 - sigma^3)^(-2/3), with the factor (1 - sigma) supplied exactly
    return (one_minus_sigma * (1.0 + sigma + sigma * sigma)) ** (-2.0 / 3.0)


def compute_K_quadrature(tol: float = 1e-12) -> float:
    """K as the integral of (1 - sigma^3)^(-2/3) over (0, 1).

    The integrand has an algebraic singularity at sigma = 1; the tanh-sinh
    transformation absorbs it. Cross-check only; the root-finder is the
    authoritative K.
    """
    if tol < 1e-12:
        raise ValueError("tol must be at least 1e-12")
    return tanh_sinh(_k_integrand, tol=tol).real


@lru_cache(maxsize=None)
def dixon_constants(order: int = series.DEFAULT_ORDER) -> DixonConstants:
    """Compute once per series order and freeze."""
    K = compute_K_root(order=order)
    g = GAMMA
    gbar = GAMMA.conjugate()
    return DixonConstants(
        K=K,
        gamma=g,
        r=R_LOCAL,
        periods=(complex(3.0 * K, 0.0), 3.0 * K * g),
        pole_reps=(complex(-K, 0.0), -K * g, -K * gbar),
        # the class of -K + K*gbar is represented by K - K*g, one period over
        zero_reps=(complex(0.0), -K + K * g, K - K * g),
        g2=0.0,
        g3=1.0 / 27.0,
    )
