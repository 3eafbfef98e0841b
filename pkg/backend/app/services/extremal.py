"""Sup-norm of quaternionic polynomials on S^3 through slice reduction.

On S^3 the Almansi parts A and B depend only on alpha = re(x). For
y = alpha + I beta, with a = A(y), b = B(y) and v = a conj(b),

    |P(alpha + I beta)|^2 = |a|^2 + |b|^2 - 2 alpha re(v) + 2 beta <im(v), I>,

so on each 2-sphere S_y the modulus is extremal at I = +-im(v)/|im(v)| and
constant when v is real. What is left is a one-dimensional problem in alpha,
solved by a dense Chebyshev grid plus golden-section refinement.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from ..config import Settings, resolve_settings
from ..exceptions import DomainError, ZeroPolynomial
from ..models.polynomial import AlmansiPair, QPolynomial
from ..models.quaternion import QI, Quaternion, UnitImaginary
from ..models.reports import ExtremumReport, ProfileRow, SliceExtrema, SphereMinimum
from .harmonics import almansi, on_sphere_values
from .quaternion_core import qconj, qmul

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

PolyOrPair = Union[QPolynomial, AlmansiPair]


def _pair(P: PolyOrPair) -> AlmansiPair:
    return P if isinstance(P, AlmansiPair) else almansi(P)


@dataclass
class SliceProfile:
    """Vectorized slice data for an array of alphas"""

    alpha: np.ndarray
    beta: np.ndarray
    a: np.ndarray
    b: np.ndarray
    v: np.ndarray
    im_norm: np.ndarray
    constant: np.ndarray
    smax: np.ndarray
    smin: np.ndarray


def slice_profile(pair: AlmansiPair, alphas, constant_tol: float) -> SliceProfile:
    alphas = np.clip(np.asarray(alphas, dtype=float), -1.0, 1.0)
    beta = np.sqrt(np.maximum(0.0, 1.0 - alphas**2))
    a = on_sphere_values(pair.A, alphas)
    b = on_sphere_values(pair.B, alphas)
    v = qmul(a, qconj(b))
    na2 = np.sum(a**2, axis=-1)
    nb2 = np.sum(b**2, axis=-1)
    im_norm = np.sqrt(np.sum(v[..., 1:] ** 2, axis=-1))
    base = na2 + nb2 - 2.0 * alphas * v[..., 0]
    constant = (im_norm < constant_tol * (np.sqrt(na2 * nb2) + 1.0)) | (beta == 0.0)
    spread = np.where(constant, 0.0, 2.0 * beta * im_norm)
    smax = np.sqrt(np.maximum(base + spread, 0.0))
    smin = np.sqrt(np.maximum(base - spread, 0.0))
    return SliceProfile(alphas, beta, a, b, v, im_norm, constant, smax, smin)


def slice_extrema(P: PolyOrPair, alpha: float, settings: Optional[Settings] = None) -> SliceExtrema:
    """Max and min of |P| on the slice sphere of S^3 with real part alpha"""
    settings = resolve_settings(settings)
    if not -1.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [-1, 1], got {alpha}")
    pair = _pair(P)
    prof = slice_profile(pair, np.array([alpha]), settings.tolerances.constant_slice)
    a = Quaternion.from_array(prof.a[0])
    b = Quaternion.from_array(prof.b[0])
    v = Quaternion.from_array(prof.v[0])
    beta = float(prof.beta[0])

    if bool(prof.constant[0]):
        # any representative works; take the axis i (the real point when beta = 0)
        y = Quaternion(alpha, beta, 0.0, 0.0)
        value = (a - y.conj() * b).norm()
        return SliceExtrema(
            alpha=alpha, beta=beta, max=value, min=value,
            argmax_axis=None, argmin_axis=None, constant=True, a=a, b=b, v=v,
        )

    # The maximum sits at +im(v)/|im(v)|, the minimum at the opposite axis;
    # the sign was fixed against brute-force sampling of axes on S_y.
    n = float(prof.im_norm[0])
    I = UnitImaginary(0.0, v.x / n, v.y / n, v.z / n)
    return SliceExtrema(
        alpha=alpha, beta=beta,
        max=float(prof.smax[0]), argmax_axis=I,
        min=float(prof.smin[0]), argmin_axis=-I,
        constant=False, a=a, b=b, v=v,
    )


def chebyshev_grid(n: int) -> np.ndarray:
    """n Chebyshev-Lobatto points of [-1, 1] in ascending order, endpoints exact"""
    if n < 2:
        raise DomainError(f"grid needs at least 2 points, got {n}")
    grid = -np.cos(np.pi * np.arange(n) / (n - 1))
    grid[0], grid[-1] = -1.0, 1.0
    if n % 2 == 1:
        grid[n // 2] = 0.0
    return grid


def golden_section(f: Callable[[float], float], a: float, b: float, tol: float) -> Tuple[float, float]:
    """Bracket [c, d] with d - c <= tol around the maximum of a unimodal f"""
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    # Required steps to achieve tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        return a, d
    return c, b


def _optimize(
    values: np.ndarray,
    grid: np.ndarray,
    f: Callable[[float], float],
    brackets: int,
    tol: float,
    tie_tol: float,
) -> Tuple[float, float, float, float]:
    """Maximize f over [-1, 1] from its grid values.

    Returns (alpha_star, value, grid_value, bracket_width). Ties within
    ``tie_tol`` resolve to the smallest alpha.
    """
    n = len(grid)
    left = np.concatenate([[-np.inf], values[:-1]])
    right = np.concatenate([values[1:], [-np.inf]])
    peaks = np.flatnonzero((values >= left) & (values >= right))
    # best peaks first; stable sort keeps the smaller alpha first on equal values
    order = peaks[np.argsort(-values[peaks], kind="stable")][:brackets]

    grid_idx = int(np.argmax(values))
    grid_value = float(values[grid_idx])
    candidates: List[Tuple[float, float]] = [(float(grid[grid_idx]), grid_value)]
    width = 0.0
    for j in order:
        lo = grid[max(j - 1, 0)]
        hi = grid[min(j + 1, n - 1)]
        c, d = golden_section(f, float(lo), float(hi), tol)
        width = max(width, d - c)
        for alpha in (0.5 * (c + d), c, d):
            candidates.append((alpha, f(alpha)))
        candidates.append((float(grid[j]), float(values[j])))

    best_value = max(v for _, v in candidates)
    alpha_star = min(a for a, v in candidates if v >= best_value - tie_tol)
    value = max(v for a, v in candidates if a == alpha_star)
    return alpha_star, value, grid_value, width


def _check_degree(P: QPolynomial, settings: Settings) -> None:
    if settings.norm.warn_high_degree and P.degree() > settings.norm.max_degree:
        logger.warning(
            f"Degree {P.degree()} exceeds {settings.norm.max_degree}; "
            f"the alpha grid of {settings.norm.grid} points may miss local maxima, "
            f"consider a denser grid"
        )


def sup_norm(P: QPolynomial, settings: Optional[Settings] = None, keep_profile: bool = False) -> ExtremumReport:
    """||P|| = max_{|x|=1} |P(x)|"""
    settings = resolve_settings(settings)
    if P.is_zero():
        raise ZeroPolynomial("sup_norm is undefined for the zero polynomial")
    _check_degree(P, settings)
    pair = almansi(P)
    ctol = settings.tolerances.constant_slice

    grid = chebyshev_grid(settings.norm.grid)
    prof = slice_profile(pair, grid, ctol)

    def slice_max(alpha: float) -> float:
        return float(slice_profile(pair, np.array([alpha]), ctol).smax[0])

    alpha_star, value, grid_value, width = _optimize(
        prof.smax, grid, slice_max, settings.norm.brackets, settings.norm.bracket_tol, settings.norm.tie_tol
    )

    ext = slice_extrema(pair, alpha_star, settings)
    axis = ext.argmax_axis if ext.argmax_axis is not None else QI
    argmax = Quaternion(alpha_star) + axis * ext.beta
    constant_on_sphere = bool(np.ptp(prof.smax) <= settings.tolerances.unit * max(1.0, value)) and bool(
        np.all(prof.constant)
    )
    logger.info(
        f"sup-norm of degree-{P.degree()} polynomial: {value:.12g} at alpha={alpha_star:.12g} "
        f"(grid value {grid_value:.12g})"
    )
    return ExtremumReport(
        value=max(ext.max, value),
        argmax=argmax,
        alpha_star=alpha_star,
        constant_on_sphere=constant_on_sphere,
        profile=list(zip(grid.tolist(), prof.smax.tolist())) if keep_profile else None,
        grid_value=grid_value,
        grid_size=len(grid),
        bracket_width=width,
    )


def sphere_minimum(P: QPolynomial, settings: Optional[Settings] = None) -> SphereMinimum:
    """min_{|x|=1} |P(x)|, attained on each slice at alpha - I beta"""
    settings = resolve_settings(settings)
    if P.is_zero():
        raise ZeroPolynomial("sphere_minimum is undefined for the zero polynomial")
    _check_degree(P, settings)
    pair = almansi(P)
    ctol = settings.tolerances.constant_slice

    grid = chebyshev_grid(settings.norm.grid)
    prof = slice_profile(pair, grid, ctol)

    def neg_slice_min(alpha: float) -> float:
        return -float(slice_profile(pair, np.array([alpha]), ctol).smin[0])

    alpha_star, neg_value, _, _ = _optimize(
        -prof.smin, grid, neg_slice_min, settings.norm.brackets, settings.norm.bracket_tol, settings.norm.tie_tol
    )
    ext = slice_extrema(pair, alpha_star, settings)
    axis = ext.argmin_axis if ext.argmin_axis is not None else QI
    return SphereMinimum(
        value=min(ext.min, -neg_value),
        argmin=Quaternion(alpha_star) + axis * ext.beta,
        alpha_star=alpha_star,
    )


def modulus_profile(P: QPolynomial, n: int, settings: Optional[Settings] = None) -> List[ProfileRow]:
    """(alpha, slice_max, slice_min) on n evenly spaced alphas of [-1, 1]"""
    settings = resolve_settings(settings)
    if n < 2:
        raise DomainError(f"modulus_profile needs n >= 2, got {n}")
    alphas = np.linspace(-1.0, 1.0, n)
    prof = slice_profile(almansi(P), alphas, settings.tolerances.constant_slice)
    return [
        ProfileRow(alpha=float(a), slice_max=float(mx), slice_min=float(mn))
        for a, mx, mn in zip(alphas, prof.smax, prof.smin)
    ]


def slice_moduli(P: PolyOrPair, alphas, axes: np.ndarray) -> np.ndarray:
    """|P(alpha + I beta)| for arrays of alphas and unit imaginary axes.

    ``axes`` has shape (n, 4), shared by every alpha, or (m, n, 4) with one
    row of axes per alpha. The result has shape (m, n), or (n,) for a
    scalar alpha.
    """
    pair = _pair(P)
    scalar = np.ndim(alphas) == 0
    alphas = np.atleast_1d(np.asarray(alphas, dtype=float))
    beta = np.sqrt(np.maximum(0.0, 1.0 - alphas**2))
    a = on_sphere_values(pair.A, alphas)
    b = on_sphere_values(pair.B, alphas)
    # P(alpha + I beta) = a - alpha b + beta I b
    base = a - alphas[:, None] * b
    axes = np.asarray(axes, dtype=float)
    if axes.ndim == 2:
        axes = axes[None, :, :]
    values = base[:, None, :] + beta[:, None, None] * qmul(axes, b[:, None, :])
    moduli = np.sqrt(np.sum(values**2, axis=-1))
    return moduli[0] if scalar else moduli
