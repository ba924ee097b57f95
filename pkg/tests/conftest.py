"""Shared sampling helpers and constants for the test suite."""

import pytest

from dixonian import dixon_constants
from dixonian.evaluator import sm_cm_values

CONSTS = dixon_constants()
K = CONSTS.K
GAMMA = CONSTS.gamma
W1, W2 = CONSTS.periods

#: representatives of the zeros of cm inside the centered cell
C_ZERO_REPS = (complex(K), K * GAMMA, K * GAMMA.conjugate())


def values(z):
    """Finite (sm, cm) at z; fails the test at a pole."""
    return sm_cm_values(z)


def cell_points(rng, count, pole_margin=0.05, avoid=(), avoid_margin=0.05):
    """Uniform points of the centered fundamental cell, away from the poles
    and optionally from extra loci (zero sets of denominators)."""
    pts = []
    while len(pts) < count:
        z = rng.uniform(-0.5, 0.5) * W1 + rng.uniform(-0.5, 0.5) * W2
        if min(abs(z - p) for p in CONSTS.pole_reps) < pole_margin:
            continue
        if avoid and min(abs(z - q) for q in avoid) < avoid_margin:
            continue
        pts.append(z)
    return pts


@pytest.fixture(scope="session")
def consts():
    return CONSTS
