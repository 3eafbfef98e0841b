import numpy as np
import pytest

from app.config import RootFinderSettings
from app.exceptions import NumericalNonconvergence, ZeroPolynomial
from app.models.polynomial import QPolynomial
from app.models.quaternion import Quaternion
from app.services.qpolynomial import evaluate, linear_factor, root_spheres, star_product
from app.services.roots import aberth_roots, cluster_roots


def test_aberth_simple_roots():
    # (X - 1)(X - 2)(X - 3)
    roots = np.sort_complex(aberth_roots(np.array([-6.0, 11.0, -6.0, 1.0])))
    assert np.allclose(roots, [1.0, 2.0, 3.0], atol=1e-12)


def test_aberth_deflates_zero_roots():
    roots = aberth_roots(np.array([0.0, 0.0, 1.0, 0.0, 1.0]))
    assert np.sum(roots == 0) == 2
    assert np.allclose(np.sort(np.abs(roots)), [0.0, 0.0, 1.0, 1.0], atol=1e-12)


def test_aberth_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        aberth_roots(np.zeros(3))


def test_aberth_reports_nonconvergence():
    settings = RootFinderSettings(max_sweeps=1, restarts=2)
    with pytest.raises(NumericalNonconvergence) as info:
        aberth_roots(np.array([1.0, -3.0, 0.5, 2.0, -1.0, 1.0]), settings)
    assert info.value.sweeps == 1
    assert len(info.value.residuals) == 5


def test_root_spheres_of_counterexample_q(pair):
    _, Q = pair
    spheres = root_spheres(Q)
    assert [s.multiplicity for s in spheres] == [2, 2]
    origin, unit = sorted(spheres, key=lambda s: s.beta)
    assert origin.alpha == 0.0 and origin.beta == 0.0
    assert unit.alpha == pytest.approx(0.0, abs=1e-6)
    assert unit.beta == pytest.approx(1.0, abs=1e-6)


def test_root_spheres_of_x_squared_plus_one():
    spheres = root_spheres(QPolynomial.of(1.0, 0.0, 1.0))
    assert len(spheres) == 1
    assert spheres[0].multiplicity == 2
    assert spheres[0].alpha == pytest.approx(0.0, abs=1e-6)
    assert spheres[0].beta == pytest.approx(1.0, abs=1e-6)


def test_root_sphere_of_a_linear_factor():
    q = Quaternion(1.2, -0.8, 0.4, np.sqrt(4.0 - 1.44 - 0.64 - 0.16))
    (sphere,) = root_spheres(linear_factor(q))
    assert sphere.multiplicity == 1
    assert sphere.alpha == pytest.approx(1.2, abs=1e-12)
    assert sphere.modulus == pytest.approx(2.0, abs=1e-12)


def test_root_spheres_contain_the_zeros(rng):
    roots = [Quaternion(*rng.uniform(-1, 1, 4)) for _ in range(4)]
    P = star_product(*[linear_factor(q) for q in roots])
    spheres = root_spheres(P)
    # the left-most factor's root is a zero of P
    assert evaluate(P, roots[0]).norm() <= 1e-12
    alpha, beta = roots[0].w, roots[0].im_norm()
    assert any(abs(s.alpha - alpha) <= 1e-8 and abs(s.beta - beta) <= 1e-8 for s in spheres)
    assert sum(s.multiplicity for s in spheres) == 4


def test_root_spheres_of_constants():
    assert root_spheres(QPolynomial.constant(3.0)) == []
    with pytest.raises(ZeroPolynomial):
        root_spheres(QPolynomial.zero())


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_repeated_linear_factor_gives_one_sphere(m):
    q = Quaternion(0.1, 0.5, 0.2, 0.0)
    spheres = root_spheres(star_product(*[linear_factor(q)] * m))
    assert len(spheres) == 1
    (sphere,) = spheres
    assert sphere.multiplicity == m
    assert sphere.alpha == pytest.approx(0.1, abs=5e-4)
    assert sphere.beta == pytest.approx(np.sqrt(0.29), abs=5e-4)


def test_repeated_factor_next_to_a_simple_one():
    q = Quaternion(0.1, 0.5, 0.2, 0.0)
    P = star_product(linear_factor(q), linear_factor(q), linear_factor(q), linear_factor(Quaternion(-0.7, 0.0, 0.0, 0.4)))
    spheres = root_spheres(P)
    assert [(s.multiplicity, round(s.alpha, 3)) for s in spheres] == [(1, -0.7), (3, 0.1)]


def test_cluster_roots_of_a_fourfold_real_root():
    # (X - 1/2)^4
    coeffs = np.array([0.0625, -0.5, 1.5, -2.0, 1.0])
    grouped = cluster_roots(aberth_roots(coeffs), coeffs)
    assert len(grouped) == 1
    centre, multiplicity = grouped[0]
    assert multiplicity == 4
    assert abs(centre - 0.5) <= 5e-4


def test_cluster_roots_keeps_close_simple_roots_apart():
    # (X - 1)(X - 1.001)(X + 2)
    coeffs = np.polynomial.polynomial.polyfromroots([1.0, 1.001, -2.0])
    grouped = sorted(cluster_roots(aberth_roots(coeffs), coeffs), key=lambda g: g[0].real)
    assert [m for _, m in grouped] == [1, 1, 1]
    assert np.allclose([c.real for c, _ in grouped], [-2.0, 1.0, 1.001], atol=1e-8)
