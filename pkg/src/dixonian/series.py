"""Exact Taylor coefficients of sm and cm about 0, and their local evaluation.

sm and cm solve cm' = -sm^2, sm' = cm^2 with cm(0) = 1, sm(0) = 0. Equating
powers of z in the two equations gives a triangular recurrence over the
rationals:

    (n+1) * s[n+1] = sum_{k=0..n} c[k] * c[n-k]
    (n+1) * c[n+1] = -sum_{k=0..n} s[k] * s[n-k]

Coefficients are kept as exact `fractions.Fraction` values so the local
solution is ground truth; conversion to binary64 happens once, the first
time a pair is evaluated.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ConvergenceError

DEFAULT_ORDER = 48
MAX_ORDER = 64

#: Radius of the disc on which truncated evaluation is permitted. Chosen
#: inside the guaranteed-existence radius 2**(-2/3) = 0.62996..., leaving
#: ample tail margin at the default order.
SERIES_EVAL_RADIUS = 0.5

#: Conservative lower bound on the convergence radius (the nearest poles sit
#: at distance K = 1.7666... from 0); used only when a measured coefficient
#: ratio is unavailable.
_FALLBACK_STEP = (1.0 / 1.7) ** 3


@dataclass(eq=True)
class SeriesPair:
    """Taylor coefficients of sm (``s_coeffs``) and cm (``c_coeffs``) about 0.

    ``s_coeffs[n]`` is the exact rational coefficient of z**n; both tuples
    run from index 0 through ``order`` inclusive. Instances are immutable by
    convention once constructed.
    """

    s_coeffs: tuple[Fraction, ...]
    c_coeffs: tuple[Fraction, ...]
    order: int

    @cached_property
    def _s_packed(self) -> tuple[float, ...]:
        # sm(z) = z * P(z^3); these are P's coefficients in binary64
        return tuple(float(a) for a in self.s_coeffs[1::3])

    @cached_property
    def _c_packed(self) -> tuple[float, ...]:
        # cm(z) = Q(z^3)
        return tuple(float(a) for a in self.c_coeffs[0::3])


def generate_series(order: int = DEFAULT_ORDER) -> SeriesPair:
    """Generate exact coefficients 0..order from the defining recurrence.

    Deterministic and idempotent; ``order`` outside 1..MAX_ORDER is a usage
    error.
    """
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"series order must be in 1..{MAX_ORDER}, got {order}")
    s = [Fraction(0)] * (order + 1)
    c = [Fraction(0)] * (order + 1)
    c[0] = Fraction(1)
    for n in range(order):
        cc = sum(c[k] * c[n - k] for k in range(n + 1))
        ss = sum(s[k] * s[n - k] for k in range(n + 1))
        s[n + 1] = cc / (n + 1)
        c[n + 1] = -ss / (n + 1)
    return SeriesPair(tuple(s), tuple(c), order)


def eval_series(pair: SeriesPair, z: complex, tol: float = 1e-13) -> tuple[complex, complex]:
    """Evaluate the truncated series at z, for |z| <= SERIES_EVAL_RADIUS.

    Horner evaluation in u = z**3 (two of every three coefficients vanish).
    The truncation error is bounded by a geometric tail fitted to the decay
    of the retained coefficients, with a 2x guard; ConvergenceError is raised
    when that bound exceeds ``tol``, signalling the order is too small.
    """
    z = complex(z)
    r = abs(z)
    if r > SERIES_EVAL_RADIUS:
        raise ValueError(
            f"|z| = {r:.6g} exceeds the series evaluation radius {SERIES_EVAL_RADIUS}"
        )
    tail = max(
        _tail_estimate(pair._s_packed, 1, r),
        _tail_estimate(pair._c_packed, 0, r),
    )
    if tail > tol:
        raise ConvergenceError(
            f"series order {pair.order} cannot meet tol {tol:.1e} at |z| = {r:.3g} "
            f"(tail bound {tail:.1e})",
            residual=tail,
        )
    u = z * z * z
    return _horner(pair._s_packed, u) * z, _horner(pair._c_packed, u)


def export_json(pair: SeriesPair) -> str:
    """Coefficients as a JSON array of {n, s_num, s_den, c_num, c_den}.

    Numerators and denominators are decimal integer strings, exact at any
    order.
    """
    rows = [
        {
            "n": n,
            "s_num": str(pair.s_coeffs[n].numerator),
            "s_den": str(pair.s_coeffs[n].denominator),
            "c_num": str(pair.c_coeffs[n].numerator),
            "c_den": str(pair.c_coeffs[n].denominator),
        }
        for n in range(pair.order + 1)
    ]
    return json.dumps(rows)


def _horner(coeffs: tuple[float, ...], u: complex) -> complex:
    acc = complex(0.0)
    for a in reversed(coeffs):
        acc = acc * u + a
    return acc


def _tail_estimate(packed: tuple[float, ...], offset: int, r: float) -> float:
    """Bound on the dropped terms at radius r, from measured coefficient decay."""
    nonzero = [i for i, a in enumerate(packed) if a != 0.0]
    if not nonzero:
        return 0.0
    last = nonzero[-1]
    term = abs(packed[last]) * r ** (3 * last + offset)
    if len(nonzero) >= 2:
        prev = nonzero[-2]
        step = abs(packed[last] / packed[prev]) ** (1.0 / (last - prev))
    else:
        step = _FALLBACK_STEP
    x = step * r ** 3
    if x >= 1.0:
        return math.inf
    return 2.0 * term * x / (1.0 - x)
