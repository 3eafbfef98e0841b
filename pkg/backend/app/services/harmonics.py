"""Zonal harmonics with pole 1 and the Almansi-type decomposition.

Z_k(x) is evaluated through homogeneity, Z_k(x) = r^k U_k(x0 / r) with
r = |x|, where U_k is the Chebyshev polynomial of the second kind (the
Gegenbauer polynomial C^(1)_k). On the unit sphere Z_k(x) = U_k(x0).
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import ToleranceSettings, get_settings
from ..exceptions import DomainError, OffSphere
from ..models.polynomial import AlmansiPair, QPolynomial, ZonalPolynomial
from ..models.quaternion import ZERO, Quaternion
from .quaternion_core import as_qarray, qconj, qmul

logger = logging.getLogger(__name__)


def gegenbauer_u(k: int, t: float) -> float:
    """U_k(t) by the three-term recurrence; U_{-1} = 0"""
    if k < -1:
        raise DomainError(f"Gegenbauer index must be >= -1, got {k}")
    if k == -1:
        return 0.0
    prev, cur = 0.0, 1.0
    for _ in range(k):
        prev, cur = cur, 2.0 * t * cur - prev
    return cur


def gegenbauer_table(kmax: int, t) -> np.ndarray:
    """U_0..U_kmax at every t; shape t.shape + (kmax + 1,)"""
    t = np.asarray(t, dtype=float)
    out = np.empty(t.shape + (max(kmax, -1) + 1,))
    if kmax < 0:
        return out
    out[..., 0] = 1.0
    if kmax >= 1:
        out[..., 1] = 2.0 * t
    for k in range(1, kmax):
        out[..., k + 1] = 2.0 * t * out[..., k] - out[..., k - 1]
    return out


def zonal(k: int, x: Quaternion) -> float:
    """Real zonal harmonic Z_k(x) with pole 1; Z_{-1} = 0"""
    if k < -1:
        raise DomainError(f"Zonal harmonic degree must be >= -1, got {k}")
    if k == -1:
        return 0.0
    if k == 0:
        return 1.0
    r = x.norm()
    if r == 0.0:
        return 0.0
    return r**k * gegenbauer_u(k, x.w / r)


def zonal_table(kmax: int, xs: np.ndarray) -> np.ndarray:
    """Z_0..Z_kmax at every point; shape xs.shape[:-1] + (kmax + 1,)"""
    xs = np.asarray(xs, dtype=float)
    r = np.sqrt(np.sum(xs**2, axis=-1))
    safe_r = np.where(r > 0.0, r, 1.0)
    t = np.where(r > 0.0, xs[..., 0] / safe_r, 0.0)
    table = gegenbauer_table(kmax, t)
    if kmax < 0:
        return table
    powers = safe_r[..., None] ** np.arange(kmax + 1)
    out = table * powers
    # continuity at the origin: Z_k(0) = 0 for k >= 1
    origin = r == 0.0
    if np.any(origin):
        out[origin, 1:] = 0.0
        out[origin, 0] = 1.0
    return out


def almansi(P: QPolynomial) -> AlmansiPair:
    """A with the coefficients of P, B with the coefficients shifted down by one"""
    coeffs = P.coeffs
    logger.debug(f"Almansi decomposition of a degree-{P.degree()} polynomial")
    A = ZonalPolynomial(coeffs)
    B = ZonalPolynomial(coeffs[1:] if len(coeffs) > 1 else (ZERO,))
    return AlmansiPair(A=A, B=B, source=P)


def zonal_eval(Z: ZonalPolynomial, x: Quaternion) -> Quaternion:
    """sum_k Z_k(x) c_k"""
    if not Z.coeffs:
        return ZERO
    weights = zonal_table(len(Z.coeffs) - 1, x.as_array()[None, :])[0]
    return Quaternion.from_array(weights @ Z.array)


def zonal_eval_many(Z: ZonalPolynomial, xs: np.ndarray) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    if not Z.coeffs:
        return np.zeros_like(xs)
    return zonal_table(len(Z.coeffs) - 1, xs) @ Z.array


def on_sphere_values(Z: ZonalPolynomial, alphas) -> np.ndarray:
    """sum_k U_k(alpha) c_k, the restriction of Z to S^3 as a function of re(x)"""
    alphas = np.asarray(alphas, dtype=float)
    if not Z.coeffs:
        return np.zeros(alphas.shape + (4,))
    return gegenbauer_table(len(Z.coeffs) - 1, alphas) @ Z.array


def almansi_eval_many(pair: AlmansiPair, xs: np.ndarray) -> np.ndarray:
    """A(x) - conj(x) B(x) for an array of points"""
    xs = np.asarray(xs, dtype=float)
    return zonal_eval_many(pair.A, xs) - qmul(qconj(xs), zonal_eval_many(pair.B, xs))


def spherical_value(P: QPolynomial, x: Quaternion) -> Quaternion:
    """(P(x) + P(conj x)) / 2"""
    from .qpolynomial import evaluate

    return (evaluate(P, x) + evaluate(P, x.conj())) * 0.5


def derivative_coefficients(alpha_coeffs: Sequence[Quaternion]) -> List[Quaternion]:
    """alpha -> alpha' = (a_1, 2 a_2, ..., d a_d, 0)"""
    coeffs = [Quaternion.coerce(a) for a in alpha_coeffs]
    return [coeffs[k] * k for k in range(1, len(coeffs))] + [ZERO]


def biharmonic_restriction(
    alpha_coeffs: Sequence[Quaternion], x: Quaternion, tol: Optional[ToleranceSettings] = None
) -> Quaternion:
    """sum_k (U_k(x0) - conj(x) U_{k-1}(x0)) a_k for x on S^3"""
    tol = tol or get_settings().tolerances
    if abs(x.norm() - 1.0) > tol.on_sphere:
        raise OffSphere(f"{x} is not on S^3 (|x| = {x.norm():.17g})")
    coeffs = as_qarray([Quaternion.coerce(a) for a in alpha_coeffs])
    if len(coeffs) == 0:
        return ZERO
    u = gegenbauer_table(len(coeffs) - 1, x.w)
    shifted = np.concatenate([[0.0], u[:-1]])
    a = u @ coeffs
    b = shifted @ coeffs
    return Quaternion.from_array(a - qmul(qconj(x.as_array()), b))


def zonal_grid_rows(kmax: int, points: np.ndarray) -> Iterator[Tuple[int, float, float, float, float, float]]:
    """Rows (k, x0, x1, x2, x3, Z_k(x)) for CSV emission"""
    table = zonal_table(kmax, points)
    for idx, point in enumerate(np.asarray(points, dtype=float)):
        for k in range(kmax + 1):
            yield (k, float(point[0]), float(point[1]), float(point[2]), float(point[3]), float(table[idx, k]))
