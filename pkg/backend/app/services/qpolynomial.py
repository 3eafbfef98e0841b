"""The ring H[X] with right coefficients.

Evaluation is left evaluation, P(x) = sum_k x^k a_k. Horner's scheme is not
valid here because the coefficients do not commute with x: powers are
accumulated on the left and coefficients multiplied on the right, which costs
O(d) quaternion products.
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from ..config import RootFinderSettings, Settings, ToleranceSettings, get_settings, resolve_settings
from ..exceptions import ZeroPolynomial
from ..models.polynomial import QPolynomial, RootSphere
from ..models.quaternion import ONE, ZERO, QI, Quaternion, UnitImaginary
from .quaternion_core import inverse, qmul, slice_project
from .roots import aberth_roots, cluster_roots

logger = logging.getLogger(__name__)


# ============================================================
# Construction helpers
# ============================================================

def linear_factor(q: Quaternion) -> QPolynomial:
    """X - q"""
    return QPolynomial((-q, ONE))


def scale_right(P: QPolynomial, c) -> QPolynomial:
    """P(X) c, i.e. every coefficient right-multiplied by c"""
    c = Quaternion.coerce(c)
    return QPolynomial(tuple(a * c for a in P.coeffs))


def star_product(*factors: QPolynomial) -> QPolynomial:
    """Left-to-right *-product of several polynomials"""
    if not factors:
        return QPolynomial.constant(ONE)
    out = factors[0]
    for f in factors[1:]:
        out = star_mul(out, f)
    return out


# ============================================================
# Ring operations
# ============================================================

def evaluate(P: QPolynomial, x: Quaternion) -> Quaternion:
    """sum_k x^k a_k"""
    acc = ZERO
    power = ONE
    for k, a in enumerate(P.coeffs):
        acc = acc + power * a
        if k < len(P.coeffs) - 1:
            power = power * x
    return acc


def evaluate_many(P: QPolynomial, xs: np.ndarray) -> np.ndarray:
    """Vectorized ``evaluate`` over an array of points with last axis 4"""
    xs = np.asarray(xs, dtype=float)
    acc = np.zeros_like(xs)
    power = np.zeros_like(xs)
    power[..., 0] = 1.0
    coeffs = P.array
    for k in range(len(coeffs)):
        acc = acc + qmul(power, coeffs[k])
        if k < len(coeffs) - 1:
            power = qmul(power, xs)
    return acc


def star_mul(P: QPolynomial, Q: QPolynomial) -> QPolynomial:
    """c_n = sum_{h+k=n} a_h b_k, X commuting with the coefficients"""
    if P.is_zero() or Q.is_zero():
        return QPolynomial.zero()
    n = P.degree() + Q.degree() + 1
    out = np.zeros((n, 4))
    a, b = P.array, Q.array
    for h in range(len(a)):
        out[h : h + len(b)] += qmul(a[h], b)
    return QPolynomial.from_array(out)


def derivative(P: QPolynomial) -> QPolynomial:
    """P'(X) = sum_{k>=1} X^{k-1} k a_k"""
    if P.is_constant():
        return QPolynomial.zero()
    return QPolynomial(tuple(a * k for k, a in enumerate(P.coeffs) if k > 0))


def conjugate(P: QPolynomial) -> QPolynomial:
    """P^c with coefficients conj(a_k)"""
    return QPolynomial(tuple(a.conj() for a in P.coeffs))


def normal(P: QPolynomial, tol: Optional[ToleranceSettings] = None) -> QPolynomial:
    """N(P) = P * P^c, a polynomial with real coefficients"""
    tol = tol or get_settings().tolerances
    raw = star_mul(P, conjugate(P)).array.copy()
    scale = max(1.0, float(np.max(np.abs(raw)))) if raw.size else 1.0
    residue = float(np.max(np.abs(raw[:, 1:]))) if raw.size else 0.0
    if residue > tol.unit * scale:
        logger.warning(f"Normal polynomial has imaginary residue {residue:.3g} (scale {scale:.3g})")
    else:
        logger.debug(f"Normal polynomial imaginary residue {residue:.3g} truncated")
    raw[:, 1:] = 0.0
    return QPolynomial.from_array(raw)


def slice_project_poly(P: QPolynomial, I: UnitImaginary) -> QPolynomial:
    """P^I with coefficients pi_I(a_k)"""
    return QPolynomial(tuple(slice_project(a, I)[0] for a in P.coeffs))


def _imaginary_matrix(P: QPolynomial) -> np.ndarray:
    return np.asarray(P.array[:, 1:], dtype=float)


def is_slice_polynomial(P: QPolynomial, tol: Optional[ToleranceSettings] = None) -> Optional[UnitImaginary]:
    """An I with every coefficient in C_I, or None.

    Real polynomials lie in every slice; ``i`` is returned for them.
    """
    tol = tol or get_settings().tolerances
    m = _imaginary_matrix(P)
    row_norms = np.linalg.norm(m, axis=1)
    if float(row_norms.max()) <= tol.slice_rank:
        return QI
    _, _, vt = np.linalg.svd(m, full_matrices=False)
    direction = vt[0]
    residual = m - np.outer(m @ direction, direction)
    if float(np.linalg.norm(residual, axis=1).max()) > tol.slice_rank:
        return None
    # orient along the highest-degree coefficient with a visible imaginary part
    for k in range(len(m) - 1, -1, -1):
        if row_norms[k] > tol.slice_rank:
            if float(m[k] @ direction) < 0.0:
                direction = -direction
            break
    return UnitImaginary.from_vector(*direction)


def independent_imaginary_directions(
    P: QPolynomial, tol: Optional[ToleranceSettings] = None
) -> Optional[Tuple[Quaternion, Quaternion]]:
    """Two coefficient imaginary parts that no single slice contains"""
    tol = tol or get_settings().tolerances
    m = _imaginary_matrix(P)
    norms = np.linalg.norm(m, axis=1)
    if float(norms.max()) <= tol.slice_rank:
        return None
    first = int(np.argmax(norms))
    u = m[first] / norms[first]
    residuals = np.linalg.norm(m - np.outer(m @ u, u), axis=1)
    second = int(np.argmax(residuals))
    if residuals[second] <= tol.slice_rank:
        return None
    return (
        Quaternion(0.0, *m[first]),
        Quaternion(0.0, *m[second]),
    )


def spherical_derivative_at(
    P: QPolynomial, x: Quaternion, tol: Optional[ToleranceSettings] = None
) -> Quaternion:
    """(2 im x)^{-1} (P(x) - P(conj x)), continued by B(x) on the real axis"""
    tol = tol or get_settings().tolerances
    if x.im_norm() >= tol.real_axis:
        diff = evaluate(P, x) - evaluate(P, x.conj())
        return inverse(x.im * 2.0, tol) * diff
    from .harmonics import almansi, zonal_eval

    return zonal_eval(almansi(P).B, x)


# ============================================================
# Root localization
# ============================================================

def root_spheres(P: QPolynomial, settings: Optional[Settings] = None) -> List[RootSphere]:
    """Circular sets alpha + I beta containing every zero of P.

    The zeros of P lie among those of N(P); the complex roots of N(P) come in
    conjugate pairs alpha +- i beta, each pair standing for one 2-sphere.
    """
    settings = resolve_settings(settings)
    if P.is_zero():
        raise ZeroPolynomial("root_spheres is undefined for the zero polynomial")
    if P.is_constant():
        return []

    n = normal(P, settings.tolerances)
    coeffs = n.array[:, 0].copy()
    roots = aberth_roots(coeffs, settings.roots)
    spheres = _group_roots(roots, coeffs, settings.roots)
    logger.info(
        f"Located {len(spheres)} root sphere(s) of a degree-{P.degree()} polynomial "
        f"(max modulus {max((s.modulus for s in spheres), default=0.0):.6g})"
    )
    return spheres


def _group_roots(roots: np.ndarray, coeffs: np.ndarray, settings: RootFinderSettings) -> List[RootSphere]:
    """Collapse repeated roots, then keep one root of each conjugate pair"""
    spheres: List[RootSphere] = []
    for centre, multiplicity in cluster_roots(roots, coeffs, settings):
        if abs(centre.imag) <= settings.cluster * max(1.0, abs(centre)):
            spheres.append(RootSphere(alpha=float(centre.real), beta=0.0, multiplicity=multiplicity))
        elif centre.imag > 0:
            spheres.append(RootSphere(alpha=float(centre.real), beta=float(centre.imag), multiplicity=multiplicity))
    spheres.sort(key=lambda s: (s.alpha, s.beta))
    return spheres
