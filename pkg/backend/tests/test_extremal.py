import logging
import math

import numpy as np
import pytest

from app.exceptions import DomainError, ZeroPolynomial
from app.models.polynomial import QPolynomial
from app.models.quaternion import QI, QJ, Quaternion, UnitImaginary
from app.services.extremal import (
    chebyshev_grid,
    golden_section,
    modulus_profile,
    slice_extrema,
    slice_moduli,
    sphere_minimum,
    sup_norm,
)
from app.services.generators import random_polynomial
from app.services.qpolynomial import evaluate, evaluate_many
from app.services.quaternion_core import ball_array, qnorm, unit_imaginary_array, unit_sphere_array

SQRT19 = math.sqrt(19.0)
EXAMPLE_ALPHA = (1 - SQRT19) / 6
EXAMPLE_POINT = Quaternion(EXAMPLE_ALPHA, -(5 + SQRT19) / 12, 0.0, (1 - SQRT19) / 12)


def at(alpha: float, I: Quaternion) -> Quaternion:
    return Quaternion(alpha) + I * math.sqrt(max(0.0, 1.0 - alpha * alpha))


# ---------------------------------------------------------------- slice_extrema

def test_monomials_are_constant_on_slices():
    a = Quaternion(0.5, -1.0, 2.0, 0.3)
    P = QPolynomial.monomial(4, a)
    for alpha in (-1.0, -0.3, 0.0, 0.8, 1.0):
        ext = slice_extrema(P, alpha)
        assert ext.constant
        assert ext.argmax_axis is None
        assert ext.max == pytest.approx(a.norm(), rel=1e-12)
        assert ext.min == ext.max


def test_counterexample_slice_maximum_point(pair):
    P, _ = pair
    ext = slice_extrema(P, EXAMPLE_ALPHA)
    assert not ext.constant
    y = at(EXAMPLE_ALPHA, ext.argmax_axis)
    assert (y - EXAMPLE_POINT).norm() <= 1e-12
    assert evaluate(P, y).norm() == pytest.approx(ext.max, abs=1e-10)


def test_closed_form_matches_evaluation(rng):
    for _ in range(50):
        P = random_polynomial(rng, int(rng.integers(1, 8)))
        alpha = float(rng.uniform(-1, 1))
        ext = slice_extrema(P, alpha)
        if ext.constant:
            continue
        assert evaluate(P, at(alpha, ext.argmax_axis)).norm() == pytest.approx(ext.max, abs=1e-10)
        assert evaluate(P, at(alpha, ext.argmin_axis)).norm() == pytest.approx(ext.min, abs=1e-10)


def test_slice_extrema_against_sampled_axes(rng):
    axes = unit_imaginary_array(rng, 10_000)
    for _ in range(20):
        P = random_polynomial(rng, int(rng.integers(1, 7)))
        alpha = float(rng.uniform(-1, 1))
        ext = slice_extrema(P, alpha)
        sampled = slice_moduli(P, alpha, axes)
        assert sampled.max() <= ext.max + 1e-9
        assert sampled.min() >= ext.min - 1e-9
        # 10^4 axes leave angular gaps of a few hundredths
        assert sampled.max() >= ext.max - 1e-2 * max(1.0, ext.max)
        # near a zero of P the modulus grows linearly in the angle
        assert sampled.min() <= ext.min + 5e-2 * max(1.0, ext.max)


def test_slice_moduli_agree_with_evaluation(rng):
    P = random_polynomial(rng, 5)
    alphas = np.array([-0.9, 0.1, 0.6])
    axes = unit_imaginary_array(rng, 7)
    moduli = slice_moduli(P, alphas, axes)
    assert moduli.shape == (3, 7)
    for i, alpha in enumerate(alphas):
        beta = math.sqrt(1 - alpha * alpha)
        xs = axes * beta
        xs[:, 0] = alpha
        assert np.allclose(moduli[i], qnorm(evaluate_many(P, xs)), atol=1e-12)


def test_slice_extrema_endpoints(rng):
    P = random_polynomial(rng, 4)
    for alpha in (-1.0, 1.0):
        ext = slice_extrema(P, alpha)
        assert ext.constant
        assert ext.beta == 0.0
        assert ext.max == pytest.approx(evaluate(P, Quaternion(alpha)).norm(), abs=1e-12)


@pytest.mark.parametrize("alpha", [-1.5, 1.0000001])
def test_slice_extrema_domain(alpha):
    with pytest.raises(DomainError):
        slice_extrema(QPolynomial.monomial(1), alpha)


# ---------------------------------------------------------------- sup_norm

def test_sup_norm_of_a_monomial():
    report = sup_norm(QPolynomial.monomial(3, Quaternion(0.0, 1.2, 0.0, 1.6)))
    assert report.value == pytest.approx(2.0, rel=1e-12)
    assert report.constant_on_sphere


def test_sup_norm_of_the_counterexample_polynomial(pair):
    P, _ = pair
    report = sup_norm(P)
    assert report.value == pytest.approx(4.70, abs=5e-3)
    assert report.alpha_star == pytest.approx(EXAMPLE_ALPHA, abs=1e-6)
    assert np.max(np.abs(report.argmax.as_array() - EXAMPLE_POINT.as_array())) <= 1e-5
    assert not report.constant_on_sphere


def test_sup_norm_report_invariants(rng):
    for _ in range(20):
        P = random_polynomial(rng, int(rng.integers(1, 9)))
        report = sup_norm(P)
        assert abs(report.argmax.norm() - 1.0) <= 1e-12
        assert evaluate(P, report.argmax).norm() == pytest.approx(report.value, abs=1e-9)
        assert report.value >= report.grid_value - 1e-12
        assert report.bracket_width <= 1e-10
        assert report.grid_size == 2001


def test_sup_norm_dominates_samples(rng):
    xs = unit_sphere_array(rng, 100_000)
    inner = ball_array(rng, 10_000, 1.0)
    for _ in range(5):
        P = random_polynomial(rng, int(rng.integers(1, 7)))
        value = sup_norm(P).value
        assert qnorm(evaluate_many(P, xs)).max() <= value + 1e-9
        assert qnorm(evaluate_many(P, inner)).max() <= value + 1e-9


@pytest.mark.slow
def test_sup_norm_against_a_million_samples(rng):
    for _ in range(10):
        P = random_polynomial(rng, int(rng.integers(1, 6)))
        value = sup_norm(P).value
        best = 0.0
        for _ in range(10):
            best = max(best, float(qnorm(evaluate_many(P, unit_sphere_array(rng, 100_000))).max()))
        assert best <= value + 1e-9
        # the nearest of 10^6 samples sits about 0.02 away from the maximizer
        assert value - best <= 1e-2 * value


def test_sup_norm_keeps_the_profile(full_settings):
    settings = full_settings.with_overrides(norm={"grid": 101})
    report = sup_norm(QPolynomial.of(1.0, QI, QJ), settings, keep_profile=True)
    assert len(report.profile) == 101
    assert report.profile[0][0] == -1.0 and report.profile[-1][0] == 1.0
    assert max(v for _, v in report.profile) <= report.value + 1e-12


def test_sup_norm_of_zero():
    with pytest.raises(ZeroPolynomial):
        sup_norm(QPolynomial.zero())


def test_high_degree_warning(caplog, full_settings):
    settings = full_settings.with_overrides(norm={"grid": 101, "max_degree": 4})
    with caplog.at_level(logging.WARNING, logger="app.services.extremal"):
        sup_norm(QPolynomial.monomial(6), settings)
    assert any("denser grid" in r.getMessage() for r in caplog.records)


def test_high_degree_warning_can_be_disabled(caplog, full_settings):
    settings = full_settings.with_overrides(norm={"grid": 101, "max_degree": 4, "warn_high_degree": False})
    with caplog.at_level(logging.WARNING, logger="app.services.extremal"):
        sup_norm(QPolynomial.monomial(6), settings)
    assert not caplog.records


# ---------------------------------------------------------------- sphere_minimum

def test_sphere_minimum_of_a_monomial():
    report = sphere_minimum(QPolynomial.monomial(2, Quaternion(0, 0, 3, 4)))
    assert report.value == pytest.approx(5.0, rel=1e-12)


def test_sphere_minimum_of_counterexample_q(pair):
    # Q vanishes at i
    _, Q = pair
    report = sphere_minimum(Q)
    assert report.value <= 1e-6
    assert evaluate(Q, report.argmin).norm() == pytest.approx(report.value, abs=1e-6)


def test_sphere_minimum_is_below_samples(rng):
    xs = unit_sphere_array(rng, 50_000)
    for _ in range(5):
        P = random_polynomial(rng, int(rng.integers(1, 6)))
        report = sphere_minimum(P)
        assert abs(report.argmin.norm() - 1.0) <= 1e-12
        assert evaluate(P, report.argmin).norm() == pytest.approx(report.value, abs=1e-8)
        assert report.value <= qnorm(evaluate_many(P, xs)).min() + 1e-9


# ---------------------------------------------------------------- modulus_profile

def test_profile_of_a_monomial():
    rows = modulus_profile(QPolynomial.monomial(5), 11)
    assert len(rows) == 11
    assert rows[0].alpha == -1.0 and rows[-1].alpha == 1.0
    for row in rows:
        assert row.slice_max == pytest.approx(1.0, abs=1e-12)
        assert row.slice_min == pytest.approx(1.0, abs=1e-12)


def test_profile_of_the_counterexample_polynomial(pair):
    P, _ = pair
    rows = modulus_profile(P, 2001)
    assert max(r.slice_max for r in rows) == pytest.approx(4.70, abs=5e-3)
    assert rows[0].slice_max == pytest.approx(evaluate(P, Quaternion(-1.0)).norm(), abs=1e-12)
    assert rows[-1].slice_max == pytest.approx(evaluate(P, Quaternion(1.0)).norm(), abs=1e-12)
    assert all(r.slice_min <= r.slice_max for r in rows)


def test_profile_needs_two_points():
    with pytest.raises(DomainError):
        modulus_profile(QPolynomial.monomial(1), 1)


# ---------------------------------------------------------------- helpers

def test_chebyshev_grid():
    grid = chebyshev_grid(5)
    assert grid[0] == -1.0 and grid[-1] == 1.0 and grid[2] == 0.0
    assert np.all(np.diff(grid) > 0)
    with pytest.raises(DomainError):
        chebyshev_grid(1)


def test_golden_section_brackets_the_maximum():
    c, d = golden_section(lambda t: -(t - 0.3) ** 2, -1.0, 1.0, 1e-10)
    assert d - c <= 1e-10
    assert c - 1e-9 <= 0.3 <= d + 1e-9


def test_slice_extrema_accepts_any_axis_representation(pair):
    P, _ = pair
    ext = slice_extrema(P, 0.2)
    assert isinstance(ext.argmax_axis, UnitImaginary)
    assert (ext.argmax_axis + ext.argmin_axis).norm() == 0.0
    assert ext.max >= evaluate(P, at(0.2, QJ)).norm() >= ext.min
