"""Built-in verification suite.

Every analytic fact the library promises, packaged as named checks that
report a measured residual against a default tolerance. The CLI ``selftest``
subcommand runs the lot and renders a pass/fail table; ``run_selftest`` is
the programmatic entry.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import identities, series
from .constants import compute_K_quadrature, compute_K_root, dixon_constants
from .evaluator import sm_cm_values, wp
from .identities import FunctionPair
from .inverse import sm_inverse

K_REFERENCE = 1.76663875
QUARTIC_ROOT_REFERENCE = -0.0899798


@dataclass(frozen=True)
class Check:
    name: str
    tol: float
    fn: Callable[[], float]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float
    tol: float


_CHECKS: list[Check] = []


def _register(name: str, tol: float):
    def deco(fn):
        _CHECKS.append(Check(name, tol, fn))
        return fn

    return deco


def list_checks() -> list[str]:
    return [c.name for c in _CHECKS]


def run_selftest(tol: float | None = None, names: list[str] | None = None) -> list[CheckResult]:
    """Run all (or the named) checks; ``tol`` overrides every threshold."""
    results = []
    for check in _CHECKS:
        if names is not None and check.name not in names:
            continue
        threshold = check.tol if tol is None else tol
        residual = check.fn()
        results.append(CheckResult(check.name, residual <= threshold, residual, threshold))
    return results


# ---------------------------------------------------------------------------
# sampling helpers

def _values(z: complex) -> tuple[complex, complex]:
    return sm_cm_values(z)


def _cell_points(
    rng: random.Random,
    count: int,
    pole_margin: float = 0.05,
    avoid: tuple[complex, ...] = (),
    avoid_margin: float = 0.05,
) -> list[complex]:
    k = dixon_constants()
    w1, w2 = k.periods
    pts: list[complex] = []
    while len(pts) < count:
        z = rng.uniform(-0.5, 0.5) * w1 + rng.uniform(-0.5, 0.5) * w2
        if min(abs(z - p) for p in k.pole_reps) < pole_margin:
            continue
        if avoid and min(abs(z - q) for q in avoid) < avoid_margin:
            continue
        pts.append(z)
    return pts


def _c_zero_reps() -> tuple[complex, complex, complex]:
    k = dixon_constants()
    return (complex(k.K), k.K * k.gamma, k.K * k.gamma.conjugate())


# ---------------------------------------------------------------------------
# series layer

@_register("series_recurrence", 0.0)
def _check_series_recurrence() -> float:
    pair = series.generate_series()
    s, c = pair.s_coeffs, pair.c_coeffs
    for n in range(pair.order):
        cc = sum(c[k] * c[n - k] for k in range(n + 1))
        ss = sum(s[k] * s[n - k] for k in range(n + 1))
        if (n + 1) * s[n + 1] != cc or (n + 1) * c[n + 1] != -ss:
            return 1.0
    return 0.0


@_register("series_mod3_sparsity", 0.0)
def _check_series_sparsity() -> float:
    pair = series.generate_series()
    for n in range(pair.order + 1):
        if n % 3 != 1 and pair.s_coeffs[n] != 0:
            return 1.0
        if n % 3 != 0 and pair.c_coeffs[n] != 0:
            return 1.0
    return 0.0


@_register("series_landmarks", 0.0)
def _check_series_landmarks() -> float:
    pair = series.generate_series()
    expected = {
        ("s", 0): Fraction(0),
        ("s", 1): Fraction(1),
        ("s", 4): Fraction(-1, 6),
        ("s", 7): Fraction(2, 63),
        ("c", 0): Fraction(1),
        ("c", 3): Fraction(-1, 3),
        ("c", 6): Fraction(1, 18),
    }
    for (which, n), want in expected.items():
        got = pair.s_coeffs[n] if which == "s" else pair.c_coeffs[n]
        if got != want:
            return 1.0
    return 0.0


@_register("series_cube_identity", 1e-12)
def _check_series_cube() -> float:
    pair = series.generate_series()
    rng = random.Random(101)
    worst = 0.0
    for _ in range(300):
        z = cmath.rect(rng.uniform(0.0, 0.5), rng.uniform(0.0, 2.0 * math.pi))
        s, c = series.eval_series(pair, z)
        worst = max(worst, abs(s * s * s + c * c * c - 1.0))
    return worst


# ---------------------------------------------------------------------------
# constants layer

@_register("k_value_root", 1e-8)
def _check_k_root() -> float:
    return abs(compute_K_root() - K_REFERENCE)


@_register("k_value_quadrature", 1e-8)
def _check_k_quadrature() -> float:
    return abs(compute_K_quadrature(1e-11) - K_REFERENCE)


@_register("k_cross_agreement", 1e-9)
def _check_k_agreement() -> float:
    return abs(compute_K_root() - compute_K_quadrature(1e-11))


@_register("cardinal_values", 1e-10)
def _check_cardinals() -> float:
    k = dixon_constants()
    half = 2.0 ** (-1.0 / 3.0)
    sK, cK = _values(k.K)
    sh, ch = _values(k.K / 2.0)
    sn, cn = _values(-k.K / 2.0)
    return max(
        abs(sK - 1.0),
        abs(cK),
        abs(sh - half),
        abs(ch - half),
        abs(sn + 1.0),
        abs(cn - 2.0 ** (1.0 / 3.0)),
    )


@_register("pole_probe", 1e-8)
def _check_pole_probe() -> float:
    k = dixon_constants()
    rng = random.Random(202)
    worst = 0.0
    for rep in k.pole_reps:
        z = rep + cmath.rect(1e-9, rng.uniform(0.0, 2.0 * math.pi))
        s, _ = _values(z)
        worst = max(worst, 1.0 / abs(s))
    return worst


# ---------------------------------------------------------------------------
# global evaluator

@_register("cube_identity_cell", 1e-10)
def _check_cube_cell() -> float:
    rng = random.Random(303)
    worst = 0.0
    for z in _cell_points(rng, 400):
        s, c = _values(z)
        worst = max(worst, abs(s * s * s + c * c * c - 1.0))
    return worst


@_register("ivp_derivatives", 1e-6)
def _check_derivatives() -> float:
    # central differences at h = 1e-5; tolerance scales with the derivative
    # magnitude, which grows like d^-2 toward the poles
    rng = random.Random(404)
    h = 1e-5
    worst = 0.0
    for z in _cell_points(rng, 150):
        s0, c0 = _values(z)
        sp, cp = _values(z + h)
        sn, cn = _values(z - h)
        ds = (sp - sn) / (2.0 * h)
        dc = (cp - cn) / (2.0 * h)
        worst = max(
            worst,
            abs(ds - c0 * c0) / max(1.0, abs(c0 * c0)),
            abs(dc + s0 * s0) / max(1.0, abs(s0 * s0)),
        )
    return worst


@_register("periodicity", 1e-9)
def _check_periodicity() -> float:
    k = dixon_constants()
    w1, w2 = k.periods
    rng = random.Random(505)
    worst = 0.0
    for z in _cell_points(rng, 100):
        s, c = _values(z)
        for m, n in ((1, 0), (0, 1), (-1, -1), (2, -1), (-2, 2)):
            s2, c2 = _values(z + m * w1 + n * w2)
            worst = max(worst, abs(s2 - s), abs(c2 - c))
    return worst


@_register("conjugation_symmetry", 1e-10)
def _check_conjugation() -> float:
    rng = random.Random(606)
    worst = 0.0
    for z in _cell_points(rng, 150):
        s, c = _values(z)
        sb, cb = _values(z.conjugate())
        worst = max(worst, abs(sb - s.conjugate()), abs(cb - c.conjugate()))
    return worst


@_register("negation_symmetry", 1e-10)
def _check_negation() -> float:
    rng = random.Random(707)
    worst = 0.0
    for z in _cell_points(rng, 150, avoid=_c_zero_reps()):
        s, c = _values(z)
        sn, cn = _values(-z)
        worst = max(worst, abs(cn - 1.0 / c), abs(sn + s / c))
    return worst


@_register("rotation_symmetry", 1e-10)
def _check_rotation() -> float:
    g = dixon_constants().gamma
    rng = random.Random(808)
    worst = 0.0
    for z in _cell_points(rng, 150):
        s, c = _values(z)
        sg, cg = _values(g * z)
        worst = max(worst, abs(sg - g * s), abs(cg - c))
    return worst


@_register("reflection_identity", 1e-10)
def _check_reflection() -> float:
    k = dixon_constants()
    rng = random.Random(909)
    worst = 0.0
    for z in _cell_points(rng, 150):
        s, c = _values(z)
        sr, cr = _values(k.K - z)
        worst = max(worst, abs(sr - c), abs(cr - s))
    return worst


@_register("translation_2k", 1e-10)
def _check_translation() -> float:
    k = dixon_constants()
    rng = random.Random(1010)
    worst = 0.0
    for z in _cell_points(rng, 150, avoid=k.zero_reps):
        s, c = _values(z)
        st, ct = _values(2.0 * k.K + z)
        worst = max(worst, abs(ct - 1.0 / s), abs(st + c / s))
    return worst


@_register("zeros", 1e-9)
def _check_zeros() -> float:
    k = dixon_constants()
    w1, w2 = k.periods
    worst = 0.0
    for rep in k.zero_reps:
        for m, n in ((0, 0), (1, 0), (0, 1)):
            s, _ = _values(rep + m * w1 + n * w2)
            worst = max(worst, abs(s))
    return worst


def _ring_average(p: complex, component: int, radius: float = 1e-4) -> complex:
    total = 0.0j
    for i in range(8):
        z = p + cmath.rect(radius, i * math.pi / 4.0)
        total += (z - p) * _values(z)[component]
    return total / 8.0


@_register("residues_sm", 1e-5)
def _check_residues_sm() -> float:
    k = dixon_constants()
    g = k.gamma
    targets = [
        (complex(-k.K), complex(-1.0)),
        (2.0 * k.K * g, -g.conjugate()),
        (2.0 * k.K * g.conjugate(), -g),
    ]
    total = 0.0j
    worst = 0.0
    for p, expected in targets:
        got = _ring_average(p, 0)
        total += got
        worst = max(worst, abs(got - expected))
    return max(worst, abs(total))


@_register("residue_cm", 1e-5)
def _check_residue_cm() -> float:
    k = dixon_constants()
    return abs(_ring_average(complex(-k.K), 1) - 1.0)


@_register("triangle_boundary", 1e-9)
def _check_triangle() -> float:
    k = dixon_constants()
    g = k.gamma
    verts = [complex(k.K), k.K * g, k.K * g.conjugate()]
    worst = 0.0
    for a, b in zip(verts, verts[1:] + verts[:1]):
        for i in range(100):
            t = i / 99.0
            s, _ = _values((1.0 - t) * a + t * b)
            worst = max(worst, abs(abs(s) - 1.0))
    return worst


@_register("imaginary_axis", 1e-9)
def _check_imaginary_axis() -> float:
    worst = 0.0
    for i in range(100):
        t = -4.5 + 9.0 * i / 99.0
        _, c = _values(complex(0.0, t))
        worst = max(worst, abs(abs(c) - 1.0))
    return worst


@_register("hexagon_edge", 1e-9)
def _check_hexagon_edge() -> float:
    # edge from K toward -K*conj(gamma) = K + K*gamma; sm is real there and
    # cm lies on the line gamma * R; stop short of the pole at the far vertex
    k = dixon_constants()
    gbar = k.gamma.conjugate()
    worst = 0.0
    for i in range(100):
        t = i / 100.0
        s, c = _values(k.K + t * k.K * k.gamma)
        worst = max(worst, abs(s.imag), abs((c * gbar).imag))
    return worst


@_register("reality_rays", 1e-9)
def _check_reality_rays() -> float:
    worst = 0.0
    for sextant in range(6):
        direction = cmath.rect(1.0, sextant * math.pi / 3.0)
        for i in range(10):
            z = (0.05 + 0.54 * i / 9.0) * direction
            ratio = _values(z)[0] / z
            worst = max(worst, abs(ratio.imag), max(0.0, -ratio.real))
    return worst


@_register("quartic_root", 1e-6)
def _check_quartic_root() -> float:
    # sigma = sm(-K/4)**3 is the unique root of the quartic in the unit disc;
    # doubling -K/4 forces sm(-K/2)**3 = -1
    k = dixon_constants()
    s, _ = _values(-k.K / 4.0)
    sigma = s * s * s
    quartic = 1.0 + 10.0 * sigma - 12.0 * sigma ** 2 + 4.0 * sigma ** 3 - 2.0 * sigma ** 4
    return max(abs(sigma - QUARTIC_ROOT_REFERENCE), abs(quartic))


# ---------------------------------------------------------------------------
# identity layer

def _pair_at(z: complex) -> FunctionPair:
    return FunctionPair(*_values(z))


@_register("addition_formula", 1e-9)
def _check_addition() -> float:
    rng = random.Random(1111)
    worst = 0.0
    count = 0
    while count < 150:
        a, z = _cell_points(rng, 2)
        pa, pz = _pair_at(a), _pair_at(z)
        if abs(pa.s * pa.c * pz.s * pz.s + pz.c) < 0.05:
            continue
        got = identities.add(pa, pz)
        s, c = _values(a + z)
        worst = max(worst, abs(got.s - s), abs(got.c - c))
        count += 1
    return worst


@_register("duplication_consistency", 1e-11)
def _check_duplication() -> float:
    rng = random.Random(1212)
    worst = 0.0
    count = 0
    while count < 150:
        (z,) = _cell_points(rng, 1)
        p = _pair_at(z)
        if abs(p.c * (1.0 + p.s ** 3)) < 0.05:
            continue
        d = identities.duplicate(p)
        via_add = identities.add(p, p)
        worst = max(worst, abs(d.s - via_add.s), abs(d.c - via_add.c))
        count += 1
    return worst


@_register("triplication_consistency", 1e-10)
def _check_triplication() -> float:
    rng = random.Random(1313)
    worst = 0.0
    count = 0
    while count < 150:
        (z,) = _cell_points(rng, 1)
        p = _pair_at(z)
        s3, c3 = p.s ** 3, p.c ** 3
        trip_den = c3 - s3 * s3 + 3.0 * s3 * c3 + s3 * c3 * c3
        dup_den = p.c * (1.0 + s3)
        if abs(trip_den) < 0.05 or abs(dup_den) < 0.05:
            continue
        d = identities.duplicate(p)
        if abs(d.s * d.c * p.s * p.s + p.c) < 0.05:
            continue
        t = identities.triplicate(p)
        via = identities.add(d, p)
        worst = max(worst, abs(t.s - via.s), abs(t.c - via.c))
        count += 1
    return worst


@_register("weierstrass_bridge", 1e-10)
def _check_weierstrass() -> float:
    # (1 - cm) ~ z^3/3 cancels near the lattice points; stay clear of them
    rng = random.Random(1414)
    worst = 0.0
    count = 0
    while count < 150:
        (z,) = _cell_points(rng, 1, avoid=(complex(0.0),), avoid_margin=0.35)
        p = _pair_at(z)
        if abs(1.0 - p.c) < 0.05:
            continue
        w = identities.to_weierstrass(p)
        if abs(3.0 * w.p_prime - 1.0) < 0.05:
            continue
        ode = w.p_prime ** 2 - 4.0 * w.p ** 3 + 1.0 / 27.0
        back = identities.from_weierstrass(w)
        worst = max(worst, abs(ode), abs(back.s - p.s), abs(back.c - p.c))
        count += 1
    return worst


@_register("wp_periodicity", 1e-9)
def _check_wp_periodicity() -> float:
    k = dixon_constants()
    w1, w2 = k.periods
    rng = random.Random(1515)
    worst = 0.0
    for z in _cell_points(rng, 80, avoid=(complex(0.0),), avoid_margin=0.35):
        base = wp(z).value
        for shift in (w1, w2, w1 + w2):
            worst = max(worst, abs(wp(z + shift).value - base))
    return worst


# ---------------------------------------------------------------------------
# inverse layer

@_register("inverse_roundtrip", 1e-9)
def _check_inverse_roundtrip() -> float:
    rng = random.Random(1616)
    worst = 0.0
    for _ in range(60):
        w = cmath.rect(rng.uniform(0.0, 0.9), rng.uniform(0.0, 2.0 * math.pi))
        z = sm_inverse(w).z
        worst = max(worst, abs(_values(z)[0] - w))
    return worst


@_register("inverse_landmarks", 1e-7)
def _check_inverse_landmarks() -> float:
    k = dixon_constants()
    return max(
        abs(sm_inverse(1.0).z - k.K),
        abs(sm_inverse(2.0 ** (-1.0 / 3.0)).z - k.K / 2.0),
        abs(sm_inverse(-1.0).z + k.K / 2.0),
        abs(sm_inverse(-abs(QUARTIC_ROOT_REFERENCE) ** (1.0 / 3.0)).z + k.K / 4.0),
    )
