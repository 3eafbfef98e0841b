"""Aberth-Ehrlich simultaneous iteration for real-coefficient polynomials.

Used on normal polynomials N(P), whose real coefficients make the roots come
in conjugate pairs. Exact zero roots (trailing zero low-order coefficients)
are deflated before iterating.
"""
import logging
import math
from typing import List, Optional, Tuple

import numpy as np
import tenacity

from ..config import RootFinderSettings
from ..exceptions import NumericalNonconvergence, ZeroPolynomial

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps


def _initial_guesses(coeffs: np.ndarray, rng: np.random.Generator, jitter: float) -> np.ndarray:
    """Points on a circle of radius (1 + max|c_k / c_n|)^(1/2) with angular jitter"""
    n = len(coeffs) - 1
    ratio = float(np.max(np.abs(coeffs[:-1] / coeffs[-1]))) if n > 0 else 0.0
    radius = np.sqrt(1.0 + ratio)
    base = 2.0 * np.pi * np.arange(n) / n + np.pi / (2.0 * n)
    angles = base + jitter * (2.0 * np.pi / n) * rng.uniform(-0.5, 0.5, size=n)
    return radius * np.exp(1j * angles)


def _aberth_sweeps(coeffs: np.ndarray, settings: RootFinderSettings, seed: int) -> np.ndarray:
    """One Aberth-Ehrlich run; raises NumericalNonconvergence"""
    n = len(coeffs) - 1
    rng = np.random.default_rng(seed)
    z = _initial_guesses(coeffs, rng, settings.jitter)

    # np.polyval wants the highest degree first
    p = coeffs[::-1].astype(complex)
    dp = np.polyder(p)
    abs_p = np.abs(coeffs[::-1])

    converged = np.zeros(n, dtype=bool)
    for sweep in range(1, settings.max_sweeps + 1):
        pz = np.polyval(p, z)
        dpz = np.polyval(dp, z)
        bound = np.polyval(abs_p, np.abs(z))
        small_residual = np.abs(pz) <= settings.residual_factor * _EPS * bound

        with np.errstate(divide="ignore", invalid="ignore"):
            newton = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            repulsion = (1.0 / diff).sum(axis=1) - 1.0
            correction = newton / (1.0 - newton * repulsion)

        correction = np.where(small_residual | ~np.isfinite(correction), 0.0, correction)
        z = z - correction
        converged = small_residual | (np.abs(correction) <= settings.convergence * np.maximum(np.abs(z), 1.0))
        if converged.all():
            logger.debug(f"Aberth converged after {sweep} sweeps (degree {n})")
            return z

    residuals = np.abs(np.polyval(p, z)).tolist()
    raise NumericalNonconvergence(
        f"Aberth-Ehrlich did not converge in {settings.max_sweeps} sweeps (degree {n})",
        residuals=residuals,
        sweeps=settings.max_sweeps,
    )


def aberth_roots(coeffs: np.ndarray, settings: Optional[RootFinderSettings] = None) -> np.ndarray:
    """All complex roots of sum_k coeffs[k] X^k (lowest degree first)"""
    settings = settings or RootFinderSettings()
    c = np.asarray(coeffs, dtype=float)
    nonzero = np.flatnonzero(c)
    if nonzero.size == 0:
        raise ZeroPolynomial("The zero polynomial has no finite root set")
    c = c[: nonzero[-1] + 1]
    zero_roots = int(nonzero[0])
    c = c[zero_roots:]
    found = np.zeros(zero_roots, dtype=complex)
    if len(c) == 1:
        return found
    if len(c) == 2:
        return np.concatenate([found, np.array([-c[0] / c[1]], dtype=complex)])

    retrying = tenacity.Retrying(
        stop=tenacity.stop_after_attempt(settings.restarts),
        retry=tenacity.retry_if_exception_type(NumericalNonconvergence),
        before_sleep=lambda state: logger.warning(
            f"Aberth attempt {state.attempt_number} failed; restarting with new jitter"
        ),
        reraise=True,
    )
    for attempt in retrying:
        with attempt:
            seed = settings.seed + attempt.retry_state.attempt_number
            roots = _aberth_sweeps(c, settings, seed)
    return np.concatenate([found, roots])


def _cluster_radius(p: np.ndarray, abs_p: np.ndarray, centre: complex, m: int, residual_factor: float) -> float:
    """Distance from an m-fold root within which the stopping test cannot separate roots.

    Near an m-fold root p(z) ~ p^(m)(c)/m! (z - c)^m, so a residual of
    residual_factor * eps * bound leaves the m copies spread over this radius.
    """
    leading = abs(np.polyval(np.polyder(p, m), centre)) / math.factorial(m)
    if leading == 0.0:
        return 0.0
    bound = float(np.polyval(abs_p, abs(centre)))
    return float((residual_factor * _EPS * bound / leading) ** (1.0 / m))


def cluster_roots(
    roots: np.ndarray, coeffs: np.ndarray, settings: Optional[RootFinderSettings] = None
) -> List[Tuple[complex, int]]:
    """Merge numerically repeated roots into (centre, multiplicity) pairs.

    Each remaining root is grouped with its m - 1 nearest neighbours for the
    largest m whose members all lie within the larger of ``settings.cluster``
    (relative) and twice the radius an m-fold root spreads to under the
    stopping test.
    """
    settings = settings or RootFinderSettings()
    c = np.asarray(coeffs, dtype=float)
    p = c[::-1].astype(complex)
    abs_p = np.abs(c[::-1])

    def accepts(members: np.ndarray) -> bool:
        centre = complex(members.mean())
        spread = float(np.max(np.abs(members - centre)))
        tol = max(
            settings.cluster * max(1.0, abs(centre)),
            2.0 * _cluster_radius(p, abs_p, centre, len(members), settings.residual_factor),
        )
        return spread <= tol

    remaining = np.asarray(roots, dtype=complex)
    grouped: List[Tuple[complex, int]] = []
    while remaining.size:
        nearest = np.argsort(np.abs(remaining - remaining[0]), kind="stable")
        m = next(m for m in range(len(remaining), 0, -1) if m == 1 or accepts(remaining[nearest[:m]]))
        grouped.append((complex(remaining[nearest[:m]].mean()), m))
        remaining = np.delete(remaining, nearest[:m])

    if len(grouped) < len(roots):
        logger.debug(f"Merged {len(roots)} roots into {len(grouped)} clusters")
    return grouped
