"""Seeded random polynomials for property sweeps and the theorem suite"""
import logging
from typing import Optional, Tuple

import numpy as np

from ..config import Settings, resolve_settings
from ..exceptions import DomainError
from ..models.polynomial import QPolynomial
from ..models.quaternion import Quaternion, UnitImaginary
from .qpolynomial import linear_factor, scale_right, star_product

logger = logging.getLogger(__name__)


def random_polynomial(rng: np.random.Generator, degree: int) -> QPolynomial:
    """Coefficients uniform in [-1, 1]^4; the leading one is redrawn until nonzero"""
    if degree < 0:
        raise DomainError(f"degree must be >= 0, got {degree}")
    coeffs = rng.uniform(-1.0, 1.0, size=(degree + 1, 4))
    while not np.any(coeffs[-1]):
        coeffs[-1] = rng.uniform(-1.0, 1.0, size=4)
    return QPolynomial.from_array(coeffs)


def random_non_monomial(rng: np.random.Generator, degree: int) -> QPolynomial:
    """Random polynomial of exact degree >= 1 with a nonzero lower coefficient"""
    if degree < 1:
        raise DomainError(f"a non-monomial needs degree >= 1, got {degree}")
    P = random_polynomial(rng, degree)
    if all(c.is_zero() for c in P.coeffs[:-1]):
        return QPolynomial((Quaternion(1.0),) + P.coeffs[1:])
    return P


def random_slice_polynomial(
    rng: np.random.Generator, degree: int, I: Optional[UnitImaginary] = None
) -> QPolynomial:
    """Complex coefficients embedded in C_I (I = i unless given)"""
    if degree < 0:
        raise DomainError(f"degree must be >= 0, got {degree}")
    I = I or UnitImaginary(0.0, 1.0, 0.0, 0.0)
    re = rng.uniform(-1.0, 1.0, size=degree + 1)
    im = rng.uniform(-1.0, 1.0, size=degree + 1)
    if re[-1] == 0.0 and im[-1] == 0.0:
        re[-1] = 1.0
    return QPolynomial(tuple(Quaternion(a) + I * b for a, b in zip(re, im)))


def slice_pair(
    rng: np.random.Generator,
    degree: int,
    p_degree: Optional[int] = None,
    root_radius: float = 0.9,
    settings: Optional[Settings] = None,
) -> Tuple[QPolynomial, QPolynomial]:
    """(P, Q) meeting the hypotheses of the Bernstein theorem on C_i.

    Q = (X - q_1)...(X - q_d) c with every q_k in the disc of radius
    ``root_radius`` of C_i, and P arbitrary of degree ``p_degree`` rescaled
    so that ||P|| <= min_{S^3} |Q|.
    """
    from .extremal import sphere_minimum, sup_norm

    settings = resolve_settings(settings)
    if degree < 1:
        raise DomainError(f"degree must be >= 1, got {degree}")
    if not 0.0 <= root_radius < 1.0:
        raise DomainError(f"root_radius must lie in [0, 1), got {root_radius}")
    p_degree = degree if p_degree is None else p_degree
    if not 0 <= p_degree <= degree:
        raise DomainError(f"p_degree must lie in [0, {degree}], got {p_degree}")

    radii = root_radius * np.sqrt(rng.uniform(0.0, 1.0, size=degree))
    angles = rng.uniform(0.0, 2.0 * np.pi, size=degree)
    factors = [linear_factor(Quaternion(r * np.cos(t), r * np.sin(t))) for r, t in zip(radii, angles)]
    scale = Quaternion(*rng.uniform(-1.0, 1.0, size=2))
    if scale.is_zero():
        scale = Quaternion(1.0)
    Q = scale_right(star_product(*factors), scale)

    P = random_polynomial(rng, p_degree)
    floor = sphere_minimum(Q, settings).value
    ceiling = sup_norm(P, settings).value
    # shrink a little below the sampled floor so grid error cannot break |P| <= |Q|
    factor = 0.999 * floor / ceiling
    P = scale_right(P, factor)
    logger.debug(f"slice pair: deg Q={degree}, deg P={p_degree}, min|Q|={floor:.6g}, factor={factor:.6g}")
    return P, Q
