"""Global evaluation of sm and cm anywhere in the complex plane.

Pipeline: reduce the argument modulo the period lattice to the cell centered
at 0; report a pole if the reduced point sits on one; rescue near-pole
arguments through the 2K translation identity (full relative accuracy where
direct duplication would cancel); otherwise halve into the series disc and
duplicate back out. A vanishing duplication denominator triggers one retry
at K - z with the outputs swapped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import identities, series
from .constants import DixonConstants, dixon_constants
from .errors import DegenerateDenominatorError, EvaluationError, PoleError
from .identities import FunctionPair

#: Closer than this to a pole: report the pole itself.
POLE_TOL = 1e-12
#: Closer than this to a pole: evaluate through the 2K translation.
NEAR_TOL = 0.05
#: The centered cell never needs more than 4 halvings; the cap is a defect guard.
MAX_HALVINGS = 6

_SERIES_TOL = 1e-13


@dataclass(frozen=True)
class EllipticValue:
    """A finite complex value, or a pole marker with its lattice representative."""

    value: complex | None
    pole_rep: complex | None = None

    @property
    def is_pole(self) -> bool:
        return self.value is None

    @classmethod
    def finite(cls, v: complex) -> "EllipticValue":
        return cls(value=complex(v))

    @classmethod
    def pole(cls, rep: complex) -> "EllipticValue":
        return cls(value=None, pole_rep=complex(rep))


@dataclass(frozen=True)
class LatticeReduction:
    """Integer lattice coordinates and the remainder in the centered cell."""

    m: int
    n: int
    z_reduced: complex


@dataclass(frozen=True)
class FundamentalCell:
    """Parallelogram spanned by the periods, centered at 0."""

    origin: complex
    edge1: complex
    edge2: complex


@dataclass(frozen=True)
class _Context:
    constants: DixonConstants
    pair: series.SeriesPair
    gamma_powers: tuple[complex, complex, complex]
    gamma_inverse_powers: tuple[complex, complex, complex]


@lru_cache(maxsize=8)
def _context(order: int) -> _Context:
    consts = dixon_constants(order)
    g = consts.gamma
    gbar = g.conjugate()
    return _Context(
        constants=consts,
        pair=series.generate_series(order),
        gamma_powers=(complex(1.0), g, gbar),
        gamma_inverse_powers=(complex(1.0), gbar, g),
    )


def reduce_to_fundamental(z: complex, consts: DixonConstants | None = None) -> LatticeReduction:
    """Split z = m*w1 + n*w2 + z_reduced with z_reduced in the centered cell."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z}")
    if consts is None:
        consts = dixon_constants()
    w1, w2 = consts.periods
    b = z.imag / w2.imag
    a = (z.real - b * w2.real) / w1.real
    m, n = round(a), round(b)
    return LatticeReduction(m, n, z - (m * w1 + n * w2))


def fundamental_cell(consts: DixonConstants | None = None) -> FundamentalCell:
    if consts is None:
        consts = dixon_constants()
    w1, w2 = consts.periods
    return FundamentalCell(origin=-(w1 + w2) / 2.0, edge1=w1, edge2=w2)


def sm_cm(z: complex, *, order: int | None = None) -> tuple[EllipticValue, EllipticValue]:
    """Evaluate (sm(z), cm(z)); both values share all intermediate work.

    Each result is finite or a pole marker; poles are reported when the
    reduced argument is within POLE_TOL of a pole representative.
    """
    ctx = _context(order if order is not None else series.DEFAULT_ORDER)
    zr = reduce_to_fundamental(z, ctx.constants).z_reduced
    j, w = _nearest_pole_frame(ctx, zr)
    dist = abs(w)
    if dist <= POLE_TOL:
        marker = EllipticValue.pole(ctx.constants.pole_reps[j])
        return marker, marker
    if dist <= NEAR_TOL:
        pair = _near_pole_pair(ctx, j, w)
    else:
        pair = _cell_pair(ctx, zr)
    return EllipticValue.finite(pair.s), EllipticValue.finite(pair.c)


def sm(z: complex, *, order: int | None = None) -> EllipticValue:
    return sm_cm(z, order=order)[0]


def cm(z: complex, *, order: int | None = None) -> EllipticValue:
    return sm_cm(z, order=order)[1]


def sm_cm_values(z: complex, *, order: int | None = None) -> tuple[complex, complex]:
    """Finite (sm, cm) values; raises PoleError when z is on a pole."""
    sv, cv = sm_cm(z, order=order)
    if sv.is_pole:
        raise PoleError(sv.pole_rep)
    return sv.value, cv.value


def wp(z: complex, *, order: int | None = None) -> EllipticValue:
    """Weierstrass p for the sm/cm lattice (invariants g2 = 0, g3 = 1/27).

    Double poles at the lattice points. Finite everywhere else, including at
    the simple poles of sm and cm, where s/(3(1 - c)) has the limit
    gamma**j / 3.
    """
    ctx = _context(order if order is not None else series.DEFAULT_ORDER)
    sv, cv = sm_cm(z, order=order)
    if sv.is_pole:
        j = ctx.constants.pole_reps.index(sv.pole_rep)
        return EllipticValue.finite(ctx.gamma_powers[j] / 3.0)
    den = 1.0 - cv.value
    if abs(den) < identities.DENOM_TOL:
        return EllipticValue.pole(complex(0.0))
    return EllipticValue.finite(sv.value / (3.0 * den))


def _nearest_pole_frame(ctx: _Context, zr: complex) -> tuple[int, complex]:
    """Index j of the nearest pole -K*gamma**j and w = gamma**-j * zr + K.

    |w| is the distance to that pole; w is the offset after rotating the pole
    onto the class of 2K. Non-interior pole copies sit at least 0.6 from the
    closed cell, so the three representatives suffice.
    """
    best_j, best_w = 0, zr - ctx.constants.pole_reps[0]
    for j in (1, 2):
        w = ctx.gamma_inverse_powers[j] * (zr - ctx.constants.pole_reps[j])
        if abs(w) < abs(best_w):
            best_j, best_w = j, w
    return best_j, best_w


def _near_pole_pair(ctx: _Context, j: int, w: complex) -> FunctionPair:
    # zr = gamma**j * (2K + w) modulo the lattice, with |w| < NEAR_TOL, so
    # s(zr) = gamma**j * (-c(w)/s(w)) and c(zr) = 1/s(w); s(w) ~ w carries
    # full relative accuracy this close to 0.
    s, c = series.eval_series(ctx.pair, w, tol=_SERIES_TOL)
    return FunctionPair(ctx.gamma_powers[j] * (-c / s), 1.0 / s)


def _duplication_path(ctx: _Context, zr: complex) -> FunctionPair:
    k = 0
    a = abs(zr)
    while a > series.SERIES_EVAL_RADIUS and k < MAX_HALVINGS:
        a *= 0.5
        k += 1
    s, c = series.eval_series(ctx.pair, zr / (1 << k), tol=_SERIES_TOL)
    p = FunctionPair(s, c)
    for _ in range(k):
        p = identities.duplicate(p)
    return p


def _cell_pair(ctx: _Context, zr: complex) -> FunctionPair:
    try:
        return _duplication_path(ctx, zr)
    except DegenerateDenominatorError:
        pass
    # a duplication denominator vanished short of the pole guard: evaluate at
    # K - z instead and swap, since sm(K - y) = cm(y) and cm(K - y) = sm(y)
    mirrored = reduce_to_fundamental(ctx.constants.K - zr, ctx.constants).z_reduced
    try:
        q = _duplication_path(ctx, mirrored)
    except DegenerateDenominatorError as exc:
        raise EvaluationError(
            f"both the direct path and the K - z fallback degenerated at "
            f"z_reduced = {zr}; argument is believed off the pole set"
        ) from exc
    return FunctionPair(q.c, q.s)
