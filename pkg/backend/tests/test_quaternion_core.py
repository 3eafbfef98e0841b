import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.exceptions import DomainError, InvalidUnitImaginary, NonFiniteQuaternion, RealAxisInput, ZeroDivisor
from app.models.quaternion import ONE, QI, QJ, QK, Quaternion, SlicePoint, UnitImaginary
from app.services.quaternion_core import (
    as_qarray,
    axis,
    ball_array,
    inverse,
    mul,
    qmul,
    random_rotation_fixing_one,
    sample_unit_sphere,
    slice_project,
    sphere_point,
)

from .strategies import nonzero_quaternions, quaternions

SQRT2 = math.sqrt(2.0)


def close(a: Quaternion, b: Quaternion, tol: float = 1e-14) -> bool:
    return (a - b).norm() <= tol


# ---------------------------------------------------------------- mul

def test_defining_relations():
    assert mul(QI, QJ) == QK
    assert mul(QJ, QI) == -QK
    assert mul(QI, QI) == -ONE
    assert mul(QJ, QK) == QI
    assert mul(QK, QI) == QJ


def test_mul_distributes():
    assert mul(Quaternion(1, 1), Quaternion(1, 0, 1)) == Quaternion(1, 1, 1, 1)


def test_real_scalars_commute():
    q = Quaternion(1, -2, 3, 0.5)
    assert q * 2.0 == 2.0 * q == Quaternion(2, -4, 6, 1)
    assert q / 2 == Quaternion(0.5, -1, 1.5, 0.25)


# ---------------------------------------------------------------- inverse

@pytest.mark.parametrize(
    "q, expected",
    [
        (QI, -QI),
        (Quaternion(2.0), Quaternion(0.5)),
        (Quaternion(1, 1, 1, 1), Quaternion(0.25, -0.25, -0.25, -0.25)),
    ],
)
def test_inverse_examples(q, expected):
    assert close(inverse(q), expected)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisor):
        inverse(Quaternion())


@pytest.mark.parametrize("scale", [1e200, 1e-200, 1e-160, 1e150, 1e-300])
def test_inverse_at_extreme_magnitudes(scale):
    for q in (Quaternion(scale), Quaternion(scale, -scale, 0.5 * scale, 2 * scale)):
        inv = inverse(q)
        assert close(q * inv, ONE, 1e-14)
        assert close(inv * q, ONE, 1e-14)


def test_inverse_below_the_zero_guard():
    with pytest.raises(ZeroDivisor):
        inverse(Quaternion(1e-310))


# ---------------------------------------------------------------- slice_project

def test_slice_project_coordinate_split():
    par, perp = slice_project(Quaternion(1, 2, 3, 4), QI)
    assert par == Quaternion(1, 2)
    assert perp == Quaternion(0, 0, 3, 4)


def test_slice_project_real_input():
    I = UnitImaginary.from_vector(1, -2, 2)
    par, perp = slice_project(Quaternion(3.5), I)
    assert par == Quaternion(3.5)
    assert perp.norm() == 0.0


def test_slice_project_diagonal_axis():
    I = UnitImaginary.from_vector(1, 1, 0)
    par, perp = slice_project(QI, I)
    assert close(par, Quaternion(0, 0.5, 0.5, 0), 1e-15)
    assert close(perp, Quaternion(0, 0.5, -0.5, 0), 1e-15)


def test_slice_project_idempotent():
    rng = np.random.default_rng(3)
    for _ in range(50):
        q = Quaternion(*rng.uniform(-1, 1, 4))
        I = UnitImaginary.from_vector(*rng.standard_normal(3))
        par, _ = slice_project(q, I)
        again, rest = slice_project(par, I)
        assert close(again, par, 1e-15)
        assert rest.norm() <= 1e-15


# ---------------------------------------------------------------- axis

def test_axis_examples():
    assert axis(Quaternion(1, 2)) == QI
    assert axis(QK) == QK


def test_axis_rejects_reals():
    with pytest.raises(RealAxisInput):
        axis(Quaternion(3.0))


# ---------------------------------------------------------------- sphere_point

def test_sphere_point_examples():
    assert sphere_point(0.0, 1.0, QI) == QI
    p = sphere_point(1 / SQRT2, 1 / SQRT2, QJ)
    assert close(p, Quaternion(1 / SQRT2, 0, 1 / SQRT2, 0))
    assert p.norm() == pytest.approx(1.0, abs=1e-15)
    assert sphere_point(0.3, 0.0, QK) == Quaternion(0.3)


def test_sphere_point_negative_beta():
    with pytest.raises(DomainError):
        sphere_point(0.0, -0.1, QI)


@pytest.mark.parametrize("alpha, beta", [(0.0, 1.0), (-0.3, 0.7), (0.6, 0.0), (1e-3, 2.5)])
def test_slice_point_realizes_exactly(alpha, beta):
    I = UnitImaginary.from_vector(1, -2, 2)
    point = SlicePoint(alpha, beta, I)
    q = point.realize()
    assert q == Quaternion(alpha, beta * I.x, beta * I.y, beta * I.z)
    assert sphere_point(alpha, beta, I) == q
    assert point.is_real == (beta == 0.0)


def test_slice_point_negative_beta():
    with pytest.raises(DomainError):
        SlicePoint(0.2, -1e-9, QI)


# ---------------------------------------------------------------- sampling

def test_sample_unit_sphere_deterministic():
    assert sample_unit_sphere(11, 1) == sample_unit_sphere(11, 1)
    assert sample_unit_sphere(11, 5) != sample_unit_sphere(12, 5)


def test_sample_unit_sphere_normalized():
    for q in sample_unit_sphere(5, 1000):
        assert abs(q.norm() - 1.0) <= 1e-14


def test_sample_unit_sphere_is_centred():
    arr = as_qarray(sample_unit_sphere(2024, 100_000))
    assert abs(arr[:, 0].mean()) < 0.01


def test_sample_unit_sphere_needs_points():
    with pytest.raises(DomainError):
        sample_unit_sphere(1, 0)


def test_ball_array_radius(rng):
    pts = ball_array(rng, 500, 2.0)
    assert pts.shape == (500, 4)
    assert np.all(np.linalg.norm(pts, axis=1) < 2.0)


def test_rotation_fixes_the_real_axis(rng):
    t = random_rotation_fixing_one(rng)
    assert np.allclose(t @ t.T, np.eye(4), atol=1e-14)
    assert np.linalg.det(t) == pytest.approx(1.0)
    assert np.allclose(t[:, 0], [1, 0, 0, 0])


# ---------------------------------------------------------------- value types

def test_unit_imaginary_validation():
    with pytest.raises(InvalidUnitImaginary):
        UnitImaginary(0.0, 1.0, 1.0, 0.0)
    with pytest.raises(InvalidUnitImaginary):
        UnitImaginary(0.1, 1.0, 0.0, 0.0)
    assert UnitImaginary.from_vector(0, 3, 4) == Quaternion(0, 0, 0.6, 0.8)


def test_non_finite_components():
    with pytest.raises(NonFiniteQuaternion):
        Quaternion(math.nan)
    with pytest.raises(NonFiniteQuaternion):
        Quaternion(0, math.inf)


def test_unit_imaginary_squares_to_minus_one():
    I = UnitImaginary.from_vector(0.3, -0.4, 1.2)
    assert close(I * I, -ONE, 1e-12)


def test_vectorized_product_matches_scalar():
    rng = np.random.default_rng(8)
    a = rng.uniform(-1, 1, (20, 4))
    b = rng.uniform(-1, 1, (20, 4))
    out = qmul(a, b)
    for row_a, row_b, row in zip(a, b, out):
        assert np.allclose((Quaternion.from_array(row_a) * Quaternion.from_array(row_b)).as_array(), row, atol=1e-15)


# ---------------------------------------------------------------- properties

@given(quaternions, quaternions)
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm() == pytest.approx(a.norm() * b.norm(), rel=1e-12, abs=1e-12)


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    assert close((a * b) * c, a * (b * c), 1e-12)


@given(nonzero_quaternions)
def test_inverse_is_two_sided(a):
    assert close(a * inverse(a), ONE, 1e-12)
    assert close(inverse(a) * a, ONE, 1e-12)


@given(nonzero_quaternions, quaternions)
def test_conjugation_preserves_the_sphere(a, x):
    y = a * x * inverse(a)
    assert y.norm() == pytest.approx(x.norm(), rel=1e-12, abs=1e-12)
    assert y.w == pytest.approx(x.w, abs=1e-12 * max(1.0, x.norm()))


@given(quaternions.filter(lambda q: q.im_norm() > 1e-6))
def test_axis_squares_to_minus_one(q):
    I = axis(q)
    assert close(I * I, -ONE, 1e-12)


@given(st.floats(min_value=-1.0, max_value=1.0), st.sampled_from([QI, QJ, QK]))
def test_sphere_points_have_unit_modulus(alpha, I):
    beta = math.sqrt(max(0.0, 1.0 - alpha * alpha))
    assert sphere_point(alpha, beta, I).norm() == pytest.approx(1.0, abs=1e-12)
