"""Quaternion arithmetic, slice geometry and sampling.

Two layers live here: the named scalar operations on ``Quaternion`` values and
the vectorized numpy kernels used by the sweep-heavy modules. The kernels work
on float arrays whose last axis holds (w, x, y, z) and broadcast like numpy.
"""
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from ..config import ToleranceSettings, get_settings
from ..exceptions import DomainError, RealAxisInput, ZeroDivisor
from ..models.quaternion import Quaternion, SlicePoint, UnitImaginary

logger = logging.getLogger(__name__)


# ============================================================
# Scalar operations
# ============================================================

def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a*b"""
    return a * b


def inverse(a: Quaternion, tol: Optional[ToleranceSettings] = None) -> Quaternion:
    """conj(a)/|a|^2, evaluated on a/max|a_i|"""
    tol = tol or get_settings().tolerances
    s = max(abs(a.w), abs(a.x), abs(a.y), abs(a.z))
    if s == 0.0:
        raise ZeroDivisor(f"Cannot invert {a}")
    b = Quaternion(a.w / s, a.x / s, a.y / s, a.z / s)
    n2 = b.norm2()
    if s * math.sqrt(n2) < tol.zero_guard:
        raise ZeroDivisor(f"Cannot invert {a}: modulus below {tol.zero_guard:g}")
    c = b.conj() * (1.0 / n2)
    return Quaternion(c.w / s, c.x / s, c.y / s, c.z / s)


def slice_project(a: Quaternion, I: UnitImaginary) -> Tuple[Quaternion, Quaternion]:
    """Orthogonal split a = par + perp with par in C_I = span{1, I}"""
    t = a.x * I.x + a.y * I.y + a.z * I.z
    par = Quaternion(a.w, t * I.x, t * I.y, t * I.z)
    perp = Quaternion(0.0, a.x - par.x, a.y - par.y, a.z - par.z)
    return par, perp


def axis(q: Quaternion, tol: Optional[ToleranceSettings] = None) -> UnitImaginary:
    """im(q)/|im(q)|"""
    tol = tol or get_settings().tolerances
    n = q.im_norm()
    if n < tol.real_axis:
        raise RealAxisInput(
            f"{q} has |im| = {n:.3g} below {tol.real_axis:g}; use the real-point branch"
        )
    return UnitImaginary(0.0, q.x / n, q.y / n, q.z / n)


def sphere_point(alpha: float, beta: float, I: UnitImaginary) -> Quaternion:
    """alpha + I beta, a point of the circular set S_{alpha + I beta}"""
    return SlicePoint(alpha, beta, I).realize()


def sample_unit_sphere(seed: int, n: int) -> List[Quaternion]:
    """n points uniformly distributed on S^3 (normalized Gaussians)"""
    if n < 1:
        raise DomainError(f"sample_unit_sphere needs n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    return [Quaternion.from_array(row) for row in unit_sphere_array(rng, n)]


# ============================================================
# Vectorized kernels
# ============================================================

def as_qarray(values) -> np.ndarray:
    """Stack Quaternions (or an array) into a float array with last axis 4"""
    if isinstance(values, np.ndarray):
        return values.astype(float, copy=False)
    if isinstance(values, Quaternion):
        return values.as_array()
    return np.array([q.to_list() for q in values], dtype=float).reshape(-1, 4)


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product along the last axis"""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def qconj(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float, copy=True)
    out[..., 1:] = -out[..., 1:]
    return out


def qnorm(a: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.asarray(a, dtype=float) ** 2, axis=-1))


def unit_sphere_array(rng: np.random.Generator, n: int) -> np.ndarray:
    """(n, 4) uniform samples on S^3"""
    g = rng.standard_normal((n, 4))
    norms = np.linalg.norm(g, axis=1)
    # redraw exact zeros
    while np.any(norms == 0.0):
        bad = norms == 0.0
        g[bad] = rng.standard_normal((int(bad.sum()), 4))
        norms = np.linalg.norm(g, axis=1)
    return g / norms[:, None]


def unit_imaginary_array(rng: np.random.Generator, n: int) -> np.ndarray:
    """(n, 4) uniform samples on the 2-sphere S of imaginary units"""
    g = rng.standard_normal((n, 3))
    norms = np.linalg.norm(g, axis=1)
    while np.any(norms == 0.0):
        bad = norms == 0.0
        g[bad] = rng.standard_normal((int(bad.sum()), 3))
        norms = np.linalg.norm(g, axis=1)
    out = np.zeros((n, 4))
    out[:, 1:] = g / norms[:, None]
    return out


def ball_array(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    """(n, 4) uniform samples in the open 4-ball of the given radius"""
    directions = unit_sphere_array(rng, n)
    radii = radius * rng.random(n) ** 0.25
    return directions * radii[:, None]


def random_rotation_fixing_one(rng: np.random.Generator) -> np.ndarray:
    """4x4 orthogonal matrix acting as a random rotation of (x1, x2, x3)"""
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    t = np.eye(4)
    t[1:, 1:] = q
    return t
