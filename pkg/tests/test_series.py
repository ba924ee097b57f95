"""Coefficient layer: exact recurrence, sparsity, landmarks, evaluation."""

import cmath
import json
import math
import random
from fractions import Fraction

import pytest

from dixonian import ConvergenceError, eval_series, export_json, generate_series
from oracles import picard_coefficients


def test_initial_conditions():
    pair = generate_series(1)
    assert pair.s_coeffs == (Fraction(0), Fraction(1))
    assert pair.c_coeffs == (Fraction(1), Fraction(0))


def test_hand_derived_landmarks():
    pair = generate_series(7)
    assert pair.s_coeffs[4] == Fraction(-1, 6)
    assert pair.c_coeffs[3] == Fraction(-1, 3)
    assert pair.s_coeffs[7] == Fraction(2, 63)
    assert pair.c_coeffs[6] == Fraction(1, 18)


def test_factorial_form_landmarks():
    # sm(z) = z - 4 z^4/4! + 160 z^7/7! - ...
    pair = generate_series(7)
    assert pair.s_coeffs[4] == Fraction(-4, math.factorial(4))
    assert pair.s_coeffs[7] == Fraction(160, math.factorial(7))


def test_recurrence_exact():
    pair = generate_series(48)
    s, c = pair.s_coeffs, pair.c_coeffs
    for n in range(48):
        assert (n + 1) * s[n + 1] == sum(c[k] * c[n - k] for k in range(n + 1))
        assert (n + 1) * c[n + 1] == -sum(s[k] * s[n - k] for k in range(n + 1))


def test_mod3_sparsity():
    pair = generate_series(48)
    for n in range(49):
        if n % 3 != 1:
            assert pair.s_coeffs[n] == 0
        if n % 3 != 0:
            assert pair.c_coeffs[n] == 0


def test_all_rational():
    pair = generate_series(20)
    assert all(isinstance(a, Fraction) for a in pair.s_coeffs + pair.c_coeffs)


def test_matches_picard_oracle():
    s_oracle, c_oracle = picard_coefficients(48)
    pair = generate_series(48)
    assert list(pair.s_coeffs) == s_oracle
    assert list(pair.c_coeffs) == c_oracle


def test_deterministic():
    assert generate_series(16) == generate_series(16)


def test_order_bounds():
    with pytest.raises(ValueError):
        generate_series(0)
    with pytest.raises(ValueError):
        generate_series(65)


def test_eval_at_zero():
    s, c = eval_series(generate_series(), 0.0)
    assert s == 0
    assert c == 1


def test_eval_real_point():
    s, c = eval_series(generate_series(), 0.3)
    assert s.imag == 0
    assert 0 < s.real < 0.3
    assert abs(s ** 3 + c ** 3 - 1) <= 1e-12


def test_cube_identity_random():
    pair = generate_series()
    rng = random.Random(7)
    for _ in range(1000):
        z = cmath.rect(rng.uniform(0, 0.5), rng.uniform(0, 2 * math.pi))
        s, c = eval_series(pair, z)
        assert abs(s ** 3 + c ** 3 - 1) <= 1e-12


def test_finite_difference_matches_ode():
    pair = generate_series()
    rng = random.Random(8)
    h = 1e-5
    for _ in range(100):
        z = cmath.rect(rng.uniform(0, 0.4), rng.uniform(0, 2 * math.pi))
        sp, cp = eval_series(pair, z + h)
        sn, cn = eval_series(pair, z - h)
        s0, c0 = eval_series(pair, z)
        assert abs((sp - sn) / (2 * h) - c0 * c0) <= 1e-6
        assert abs((cp - cn) / (2 * h) + s0 * s0) <= 1e-6


def test_radius_violation():
    with pytest.raises(ValueError):
        eval_series(generate_series(), 0.51)


def test_tail_bound_rejects_small_order():
    with pytest.raises(ConvergenceError):
        eval_series(generate_series(4), 0.5, tol=1e-13)


def test_small_order_ok_near_zero():
    s, c = eval_series(generate_series(10), 0.05, tol=1e-13)
    assert abs(s - 0.05) < 1e-5
    assert abs(c - 1.0) < 1e-3


def test_export_json():
    pair = generate_series(7)
    rows = json.loads(export_json(pair))
    assert len(rows) == 8
    assert rows[4] == {"n": 4, "s_num": "-1", "s_den": "6", "c_num": "0", "c_den": "1"}
    assert rows[3]["c_num"] == "-1" and rows[3]["c_den"] == "3"
    assert all(isinstance(r["s_num"], str) for r in rows)
