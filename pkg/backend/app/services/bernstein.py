"""Verification harness for the quaternionic Bernstein theorem and inequality.

Every verdict here is numerical: the hypothesis |P| <= |Q| on S^3 and the
conclusions are checked on seeded samples, and the report records how many
points were looked at. Nothing in this module is a proof.
"""
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import Settings, resolve_settings
from ..exceptions import (
    EXIT_CONCLUSION_VIOLATED,
    EXIT_HYPOTHESIS_VIOLATED,
    EXIT_OK,
    ConstantPolynomial,
    DomainError,
    ZeroPolynomial,
)
from ..models.polynomial import QPolynomial
from ..models.quaternion import QI, QJ, QK, ONE, Quaternion, UnitImaginary
from ..models.reports import (
    CheckReport,
    CounterexampleReport,
    EqualityVerdict,
    HypothesisCheck,
    ProbeResult,
    SweepSummary,
)
from .extremal import SliceProfile, slice_moduli, slice_profile, sup_norm
from .generators import random_polynomial
from .harmonics import almansi
from .qpolynomial import (
    derivative,
    evaluate,
    evaluate_many,
    independent_imaginary_directions,
    is_slice_polynomial,
    linear_factor,
    root_spheres,
    slice_project_poly,
    star_product,
)
from .quaternion_core import qnorm, slice_project, unit_imaginary_array, unit_sphere_array

logger = logging.getLogger(__name__)

HYPOTHESIS_DEGREE = "degree"
HYPOTHESIS_SLICE = "slice"
HYPOTHESIS_ROOTS = "roots"
HYPOTHESIS_MODULUS = "modulus"


# ============================================================
# Inequality ||P'|| <= d ||P||
# ============================================================

def _equality_verdict(P: QPolynomial, norm_p: float, norm_dp: float, settings: Settings) -> EqualityVerdict:
    tol = settings.tolerances
    d = P.degree()
    lead = P.leading().norm()
    lower = P.coeffs[:-1]
    is_monomial = all(c.norm() <= tol.monomial * lead for c in lower)
    if is_monomial:
        witness = P.leading()
    else:
        witness = max(lower, key=lambda c: c.norm())
    ratio = norm_dp / (d * norm_p)
    return EqualityVerdict(
        is_monomial=is_monomial,
        witness=witness,
        ratio=ratio,
        contradiction=(ratio >= 1.0 - tol.equality_ratio) and not is_monomial,
    )


def equality_case(P: QPolynomial, settings: Optional[Settings] = None) -> EqualityVerdict:
    """Is P = X^d a, and does ||P'|| = d ||P|| occur without it?

    The witness is the leading coefficient a for a monomial, otherwise the
    lower-order coefficient of largest modulus.
    """
    settings = resolve_settings(settings)
    if P.is_zero():
        raise ZeroPolynomial("equality_case is undefined for the zero polynomial")
    if P.is_constant():
        raise ConstantPolynomial("equality_case needs degree >= 1")
    norm_p = sup_norm(P, settings).value
    norm_dp = sup_norm(derivative(P), settings).value
    return _equality_verdict(P, norm_p, norm_dp, settings)


def check_inequality(P: QPolynomial, settings: Optional[Settings] = None) -> CheckReport:
    """||P'|| <= d ||P|| with both sup-norms from the slice-reduction engine"""
    settings = resolve_settings(settings)
    tol = settings.tolerances
    if P.is_zero():
        raise ZeroPolynomial("check_inequality is undefined for the zero polynomial")

    d = P.degree()
    if d == 0:
        norm_p = sup_norm(P, settings).value
        return CheckReport(
            kind="inequality",
            conclusion_satisfied=True,
            conclusion_margin=0.0,
            norms={"P": norm_p, "dP": 0.0, "bound": 0.0},
            notes=["constant polynomial: the derivative vanishes and the inequality is trivial"],
        )

    report_p = sup_norm(P, settings)
    report_dp = sup_norm(derivative(P), settings)
    bound = d * report_p.value
    margin = bound - report_dp.value
    near = margin <= tol.near_equality * bound
    verdict = _equality_verdict(P, report_p.value, report_dp.value, settings)
    if near:
        logger.info(f"Near equality for degree {d}: margin {margin:.3g}, monomial={verdict.is_monomial}")

    notes: List[str] = []
    if verdict.contradiction:
        notes.append("equality attained by a non-monomial polynomial")
    return CheckReport(
        kind="inequality",
        conclusion_satisfied=margin >= -tol.inequality and not verdict.contradiction,
        conclusion_margin=margin,
        worst_point=report_dp.argmax,
        norms={"P": report_p.value, "dP": report_dp.value, "bound": bound},
        near_equality=near,
        equality=verdict,
        notes=notes,
    )


def _circle_points(I: Quaternion, n: int) -> np.ndarray:
    """n equispaced points of the unit circle of C_I"""
    theta = 2.0 * np.pi * np.arange(n) / n
    xs = np.zeros((n, 4))
    xs[:, 0] = np.cos(theta)
    xs[:, 1:] = np.sin(theta)[:, None] * I.as_array()[1:]
    return xs


def check_slice_inequality(
    P: QPolynomial, I: UnitImaginary, settings: Optional[Settings] = None
) -> CheckReport:
    """max |(P^I)'| on the unit circle of C_I against d ||P||"""
    settings = resolve_settings(settings)
    if P.is_zero():
        raise ZeroPolynomial("check_slice_inequality is undefined for the zero polynomial")
    d = P.degree()
    n = settings.sampling.circle_samples
    norm_p = sup_norm(P, settings).value
    projected = slice_project_poly(P, I)
    xs = _circle_points(I, n)
    on_circle = qnorm(evaluate_many(projected, xs))
    deriv = qnorm(evaluate_many(derivative(projected), xs))
    worst = int(np.argmax(deriv))
    bound = d * norm_p
    margin = bound - float(deriv[worst])
    return CheckReport(
        kind="slice-inequality",
        conclusion_satisfied=margin >= -settings.tolerances.inequality,
        conclusion_margin=margin,
        worst_point=Quaternion.from_array(xs[worst]),
        slice_axis=I,
        norms={"P": norm_p, "P_slice": float(on_circle.max()), "dP_slice": float(deriv[worst]), "bound": bound},
        samples={"circle": n},
    )


# ============================================================
# Theorem: hypotheses
# ============================================================

def _degree_check(P: QPolynomial, Q: QPolynomial) -> HypothesisCheck:
    gap = Q.degree() - P.degree()
    # a violation is witnessed by the leading coefficients of P and Q
    return HypothesisCheck(
        name=HYPOTHESIS_DEGREE,
        satisfied=gap >= 0,
        margin=float(gap),
        witness=P.leading() if gap < 0 else None,
        secondary_witness=Q.leading() if gap < 0 else None,
        detail=f"deg P = {P.degree()}, deg Q = {Q.degree()}",
    )


def _slice_check(
    Q: QPolynomial, axis: Optional[UnitImaginary], settings: Settings
) -> Tuple[HypothesisCheck, Optional[UnitImaginary]]:
    tol = settings.tolerances
    if axis is not None:
        # every coefficient of Q must lie in C_axis
        perps = [slice_project(c, axis)[1] for c in Q.coeffs]
        worst = max(perps, key=lambda q: q.norm())
        if worst.norm() <= tol.slice_rank:
            return HypothesisCheck(name=HYPOTHESIS_SLICE, satisfied=True, margin=0.0, witness=axis), axis
        return (
            HypothesisCheck(
                name=HYPOTHESIS_SLICE,
                satisfied=False,
                margin=-worst.norm(),
                witness=axis,
                secondary_witness=worst,
                detail="a coefficient of Q leaves the requested slice",
            ),
            None,
        )

    I = is_slice_polynomial(Q, tol)
    if I is not None:
        return HypothesisCheck(name=HYPOTHESIS_SLICE, satisfied=True, margin=0.0, witness=I), I

    directions = independent_imaginary_directions(Q, tol)
    first, second = directions if directions is not None else (None, None)
    margin = 0.0
    if first is not None and second is not None:
        u = first.as_array() / first.norm()
        w = second.as_array()
        margin = -float(np.linalg.norm(w - (w @ u) * u))
    return (
        HypothesisCheck(
            name=HYPOTHESIS_SLICE,
            satisfied=False,
            margin=margin,
            witness=first,
            secondary_witness=second,
            detail="no slice C_I contains every coefficient of Q",
        ),
        None,
    )


def _roots_check(Q: QPolynomial, I: Optional[UnitImaginary], settings: Settings):
    spheres = root_spheres(Q, settings)
    if not spheres:
        return HypothesisCheck(name=HYPOTHESIS_ROOTS, satisfied=True, margin=1.0, detail="Q has no zeros"), spheres
    worst = max(spheres, key=lambda s: s.alpha**2 + s.beta**2)
    radius2 = worst.alpha**2 + worst.beta**2
    witness = Quaternion(worst.alpha) + (I or QI) * worst.beta
    return (
        HypothesisCheck(
            name=HYPOTHESIS_ROOTS,
            satisfied=radius2 <= 1.0 + settings.tolerances.hypothesis,
            margin=1.0 - radius2,
            witness=witness,
            detail=f"{len(spheres)} root sphere(s), largest modulus {math.sqrt(radius2):.6g}",
        ),
        spheres,
    )


def _extremal_axes(profile: SliceProfile, sign: float) -> np.ndarray:
    """sign * im(v)/|im(v)| per alpha, i on constant slices"""
    out = np.zeros(profile.v.shape)
    out[..., 1] = 1.0
    ok = profile.im_norm > 0.0
    out[ok, 1:] = sign * profile.v[ok, 1:] / profile.im_norm[ok, None]
    out[ok, 0] = 0.0
    return out


def _modulus_check(P: QPolynomial, Q: QPolynomial, rng: np.random.Generator, settings: Settings) -> HypothesisCheck:
    """min (|Q| - |P|) over an alpha grid times sampled axes plus global points"""
    s = settings.sampling
    ctol = settings.tolerances.constant_slice
    pair_p, pair_q = almansi(P), almansi(Q)
    alphas = np.linspace(-1.0, 1.0, s.alpha_grid)
    axes = unit_imaginary_array(rng, s.axes_per_slice)

    worst_margin = math.inf
    worst_point = None
    for start in range(0, len(alphas), s.chunk):
        block = alphas[start : start + s.chunk]
        m = len(block)
        # add the axis maximizing |P| and the axis minimizing |Q| on each slice
        extra = np.stack(
            [
                _extremal_axes(slice_profile(pair_p, block, ctol), 1.0),
                _extremal_axes(slice_profile(pair_q, block, ctol), -1.0),
            ],
            axis=1,
        )
        block_axes = np.concatenate([np.broadcast_to(axes, (m,) + axes.shape), extra], axis=1)
        diff = slice_moduli(pair_q, block, block_axes) - slice_moduli(pair_p, block, block_axes)
        i, j = np.unravel_index(int(np.argmin(diff)), diff.shape)
        if diff[i, j] < worst_margin:
            worst_margin = float(diff[i, j])
            beta = math.sqrt(max(0.0, 1.0 - block[i] ** 2))
            point = beta * block_axes[i, j]
            point[0] = block[i]
            worst_point = point

    if s.global_samples > 0:
        xs = unit_sphere_array(rng, s.global_samples)
        diff = qnorm(evaluate_many(Q, xs)) - qnorm(evaluate_many(P, xs))
        k = int(np.argmin(diff))
        if diff[k] < worst_margin:
            worst_margin = float(diff[k])
            worst_point = xs[k]

    return HypothesisCheck(
        name=HYPOTHESIS_MODULUS,
        satisfied=worst_margin >= -settings.tolerances.hypothesis,
        margin=worst_margin,
        witness=Quaternion.from_array(worst_point),
        detail=(
            f"sampled {s.alpha_grid} x {s.axes_per_slice + 2} slice points "
            f"and {s.global_samples} global points"
        ),
    )


# ============================================================
# Theorem: conclusion
# ============================================================

def _on_sphere(point: Quaternion, settings: Settings, notes: List[str]) -> Quaternion:
    n = point.norm()
    if n == 0.0:
        raise DomainError("probe point 0 has no projection onto S^3")
    if abs(n - 1.0) > settings.tolerances.on_sphere:
        notes.append(f"probe {point} projected onto S^3 (|x| = {n:.17g})")
        return point / n
    return point


def _probe(dP: QPolynomial, dQ: QPolynomial, x: Quaternion, tol: float) -> ProbeResult:
    lhs = evaluate(dP, x).norm()
    rhs = evaluate(dQ, x).norm()
    return ProbeResult(point=x, lhs=lhs, rhs=rhs, margin=rhs - lhs, satisfied=rhs - lhs >= -tol)


def _in_slice(x: Quaternion, I: UnitImaginary, tol: float) -> bool:
    return slice_project(x, I)[1].norm() <= tol


def check_theorem(
    P: QPolynomial,
    Q: QPolynomial,
    probes: Iterable[Quaternion] = (),
    settings: Optional[Settings] = None,
    axis: Optional[UnitImaginary] = None,
    probe_off_slice: bool = False,
) -> CheckReport:
    """Hypotheses and conclusion of the Bernstein theorem for the pair (P, Q).

    The four hypotheses are checked independently and all reported. The
    conclusion |P'| <= |Q'| is tested on the unit circle of C_I when Q is a
    C_I-polynomial, else on sampled points of S^3; explicit ``probes`` are
    always evaluated and reported one by one.
    """
    settings = resolve_settings(settings)
    tol = settings.tolerances
    s = settings.sampling
    if P.is_zero() or Q.is_zero():
        raise ZeroPolynomial("check_theorem needs two nonzero polynomials")

    rng = np.random.default_rng(s.seed)
    notes: List[str] = []

    degree = _degree_check(P, Q)
    slice_hyp, I = _slice_check(Q, axis, settings)
    roots_hyp, spheres = _roots_check(Q, I, settings)
    modulus = _modulus_check(P, Q, rng, settings)
    hypotheses = [degree, slice_hyp, roots_hyp, modulus]

    dP, dQ = derivative(P), derivative(Q)
    if I is not None:
        xs = _circle_points(I, s.circle_samples)
        samples_key = "circle"
    else:
        xs = unit_sphere_array(rng, s.circle_samples)
        samples_key = "sphere"
        notes.append("Q is not a slice polynomial; conclusion sampled on S^3")
    diff = qnorm(evaluate_many(dQ, xs)) - qnorm(evaluate_many(dP, xs))
    k = int(np.argmin(diff))
    margin = float(diff[k])
    worst_point = Quaternion.from_array(xs[k])

    probe_results: List[ProbeResult] = []
    for raw in probes:
        x = _on_sphere(Quaternion.coerce(raw), settings, notes)
        result = _probe(dP, dQ, x, tol.conclusion)
        probe_results.append(result)
        # off-slice probes illustrate sharpness only
        if I is None or _in_slice(x, I, tol.unit):
            if result.margin < margin:
                margin = result.margin
                worst_point = x

    off_slice_margin = None
    if probe_off_slice and I is not None:
        ys = unit_sphere_array(rng, s.circle_samples)
        off_slice_margin = float(np.min(qnorm(evaluate_many(dQ, ys)) - qnorm(evaluate_many(dP, ys))))

    report = CheckReport(
        kind="theorem",
        hypotheses=hypotheses,
        conclusion_satisfied=margin >= -tol.conclusion,
        conclusion_margin=margin,
        worst_point=worst_point,
        slice_axis=I,
        probes=probe_results,
        norms={"P": sup_norm(P, settings).value, "Q": sup_norm(Q, settings).value},
        samples={
            "alpha_grid": s.alpha_grid,
            "axes_per_slice": s.axes_per_slice,
            "global": s.global_samples,
            samples_key: s.circle_samples,
        },
        root_spheres=spheres,
        off_slice_margin=off_slice_margin,
        notes=notes,
    )
    logger.info(
        f"Theorem check: hypotheses {[h.satisfied for h in hypotheses]}, "
        f"conclusion margin {margin:.6g}"
    )
    return report


def exit_code_for(report: CheckReport) -> int:
    """0 pass, 1 hypothesis violated, 2 conclusion violated"""
    if not report.hypotheses_satisfied:
        return EXIT_HYPOTHESIS_VIOLATED
    if not report.conclusion_satisfied:
        return EXIT_CONCLUSION_VIOLATED
    return EXIT_OK


# ============================================================
# Counterexample with a Q outside every slice
# ============================================================

SQRT2 = math.sqrt(2.0)

COUNTEREXAMPLE_POINT = Quaternion(0.1, 0.9, 0.4, -SQRT2 / 10.0)

# expanded displays, index = power
EXPECTED_P = (ONE, QI - QJ + QK, -(QI + QJ + QK), ONE)
EXPECTED_Q = (Quaternion(), QK * 2.0, (QI + QJ) * -2.0, Quaternion(2.0))
EXPECTED_DP = (QI - QJ + QK, (QI + QJ + QK) * -2.0, Quaternion(3.0))
EXPECTED_DQ = (QK * 2.0, (QI + QJ) * -4.0, Quaternion(6.0))

DP_SQUARED = 7.0 / 25.0 * (5.0 + SQRT2)
DQ_SQUARED = 4.0 / 25.0 * (10.0 - 3.0 * SQRT2)


def counterexample_pair() -> Tuple[QPolynomial, QPolynomial]:
    """P = (X - i)(X - j)(X - k) and Q = 2X (X - i)(X - j)"""
    P = star_product(linear_factor(QI), linear_factor(QJ), linear_factor(QK))
    Q = star_product(QPolynomial.monomial(1, Quaternion(2.0)), linear_factor(QI), linear_factor(QJ))
    return P, Q


def _matches(P: QPolynomial, expected: Sequence[Quaternion]) -> bool:
    return QPolynomial(tuple(expected)) == P


def counterexample_report(settings: Optional[Settings] = None) -> CounterexampleReport:
    """Rebuild the pair, its derivatives and the moduli at the witness point"""
    settings = resolve_settings(settings)
    P, Q = counterexample_pair()
    dP, dQ = derivative(P), derivative(Q)
    y = COUNTEREXAMPLE_POINT

    dp2 = evaluate(dP, y).norm2()
    dq2 = evaluate(dQ, y).norm2()

    rng = np.random.default_rng(settings.sampling.seed)
    xs = unit_sphere_array(rng, max(settings.sampling.global_samples, 1))
    sampled = float(np.min(qnorm(evaluate_many(Q, xs)) - qnorm(evaluate_many(P, xs))))

    check = check_theorem(P, Q, probes=[y], settings=settings)
    structure = [_matches(P, EXPECTED_P), _matches(Q, EXPECTED_Q), _matches(dP, EXPECTED_DP), _matches(dQ, EXPECTED_DQ)]
    passed = (
        all(structure)
        and abs(dp2 - DP_SQUARED) <= 1e-12
        and abs(dq2 - DQ_SQUARED) <= 1e-12
        and sampled >= -settings.tolerances.hypothesis
        and not check.hypothesis(HYPOTHESIS_SLICE).satisfied
        and not check.probes[0].satisfied
    )
    logger.info(f"Counterexample: |P'(y)|^2={dp2:.15g}, |Q'(y)|^2={dq2:.15g}, passed={passed}")
    return CounterexampleReport(
        p_coefficients_match=structure[0],
        q_coefficients_match=structure[1],
        dp_coefficients_match=structure[2],
        dq_coefficients_match=structure[3],
        y=y,
        y_norm=y.norm(),
        dp_squared=dp2,
        dq_squared=dq2,
        dp_squared_expected=DP_SQUARED,
        dq_squared_expected=DQ_SQUARED,
        sampled_margin=sampled,
        samples=len(xs),
        check=check,
        passed=passed,
    )


# ============================================================
# Sweeps
# ============================================================

def inequality_sweep(
    count: int,
    seed: int,
    max_degree: int = 8,
    threads: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> SweepSummary:
    """check_inequality on ``count`` seeded random polynomials of degree 1..max_degree"""
    settings = resolve_settings(settings)
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if max_degree < 1:
        raise DomainError(f"max_degree must be >= 1, got {max_degree}")

    rng = np.random.default_rng(seed)
    polys = [random_polynomial(rng, int(rng.integers(1, max_degree + 1))) for _ in range(count)]

    workers = threads or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda P: check_inequality(P, settings), polys))

    margins = [r.conclusion_margin for r in reports]
    relative = [r.conclusion_margin / r.norms["bound"] for r in reports]
    ratios = [r.norms["dP"] / r.norms["bound"] for r in reports]
    failures = sum(1 for r in reports if not r.conclusion_satisfied)
    worst = int(np.argmin(relative))
    logger.info(
        f"Inequality sweep of {count} polynomials (seed {seed}): "
        f"min margin {min(margins):.3g}, max ratio {max(ratios):.12g}, failures {failures}"
    )
    return SweepSummary(
        count=count,
        seed=seed,
        max_degree=max_degree,
        min_margin=min(margins),
        min_relative_margin=relative[worst],
        max_ratio=max(ratios),
        failures=failures,
        worst_index=worst,
        margins=margins,
    )
