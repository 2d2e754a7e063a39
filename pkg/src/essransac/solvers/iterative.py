"""Iterative hypothesis generators on the 5-DoF pose parameterization.

``solve_gn`` and ``solve_lm`` fit a minimal set of five matches by driving
the algebraic residuals to zero.  ``solve_robust`` fits a larger set with
Cauchy-reweighted Levenberg-Marquardt on the epipolar distances, so a few
outliers in the set are tolerated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..geom import (
    EssentialPose,
    Matches,
    essential_from_pose,
    pose_derivatives,
    residuals_and_jacobian,
)

GN, LM, ROBUST, FIVEPOINT = "GN", "LM", "ROBUST", "FIVEPOINT"
GENERATOR_NAMES = (LM, GN, ROBUST, FIVEPOINT)

MAX_CONDITION = 1e12
LAMBDA_FLOOR = 1e-12
LAMBDA_CEIL = 1e12

# Epipolar error stand-in for epipole-degenerate matches when summing the
# (unbounded but slowly growing) Cauchy cost.
_SENTINEL_ERROR = 1e6


@dataclass(frozen=True)
class SolverConfig:
    gn_max_iters: int = 10
    lm_max_iters: int = 20
    lm_lambda_init: float = 1e-3
    converge_rms: float = 1e-8
    robust_set_size: int = 10
    robust_scale: float = 0.01
    robust_max_iters: int = 20
    fivepoint_accept_tol: float = 1e-6
    fivepoint_z_max: float = 100.0

    def __post_init__(self):
        for name in ("gn_max_iters", "lm_max_iters", "robust_max_iters"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in ("lm_lambda_init", "converge_rms", "robust_scale", "fivepoint_accept_tol", "fivepoint_z_max"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive")
        if self.robust_set_size < 6:
            raise ValueError("robust_set_size must be >= 6")


@dataclass(frozen=True)
class Hypothesis:
    """A candidate essential matrix and where it came from."""

    essential: np.ndarray
    pose: Optional[EssentialPose]
    generator: str
    iterations: int
    residual_rms: float
    indices: Optional[tuple] = field(default=None, compare=False)


def random_rotation(rng) -> np.ndarray:
    """Uniformly distributed rotation from a normalized Gaussian quaternion."""
    while True:
        v = rng.standard_normal(4)
        n = np.linalg.norm(v)
        if n > 1e-12:
            break
    a, b, c, d = v / n
    return np.array([
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ])


def random_pose(rng) -> EssentialPose:
    """Uniform rotation and uniform translation direction."""
    return EssentialPose(random_rotation(rng), random_rotation(rng))


def _as_arrays(matches):
    if isinstance(matches, Matches):
        return matches.q, matches.qp
    q, qp = matches
    return np.atleast_2d(np.asarray(q, dtype=float)), np.atleast_2d(np.asarray(qp, dtype=float))


def _check_minimal(q):
    if len(q) != 5:
        raise ValueError(f"minimal-set solvers need exactly 5 matches, got {len(q)}")


def _converged(r, tol):
    # every residual under tol, which also bounds the RMS
    return bool(np.max(np.abs(r)) < tol)


def _hypothesis(pose, generator, iterations, rms):
    return Hypothesis(essential_from_pose(pose), pose, generator, iterations, rms)


def solve_gn(matches, init: EssentialPose, cfg: SolverConfig = SolverConfig()) -> Optional[Hypothesis]:
    """Gauss-Newton on five algebraic residuals.

    Gives up when the normal equations are near singular, when the error
    grows on two consecutive iterations, or after ``gn_max_iters`` steps.
    """
    q, qp = _as_arrays(matches)
    _check_minimal(q)
    pose = init
    r, J = residuals_and_jacobian(pose, q, qp)
    err = float(r @ r)
    tol = cfg.converge_rms
    if _converged(r, tol):
        return _hypothesis(pose, GN, 0, math.sqrt(err / 5.0))
    increases = 0
    for it in range(1, cfg.gn_max_iters + 1):
        A = J.T @ J
        if not np.all(np.isfinite(A)):
            return None
        ev = np.linalg.eigvalsh(A)  # condition number of the symmetric A
        if not ev[0] > ev[-1] / MAX_CONDITION:
            return None
        pose = pose.updated(np.linalg.solve(A, -(J.T @ r)))
        r, J = residuals_and_jacobian(pose, q, qp)
        new = float(r @ r)
        if _converged(r, tol):
            return _hypothesis(pose, GN, it, math.sqrt(new / 5.0))
        increases = increases + 1 if new > err else 0
        if increases >= 2:
            return None
        err = new
    return None


def solve_lm(
    matches, init: EssentialPose, cfg: SolverConfig = SolverConfig(), trace: Optional[list] = None
) -> Optional[Hypothesis]:
    """Levenberg-Marquardt on five algebraic residuals.

    The damping ``lambda * I`` is divided by ten after an accepted step and
    multiplied by ten after a rejected one.  Every iteration, accepted or
    not, counts against ``lm_max_iters``.  If ``trace`` is given, the
    squared error after the start and after every accepted step is
    appended to it.
    """
    q, qp = _as_arrays(matches)
    _check_minimal(q)
    pose = init
    r, J = residuals_and_jacobian(pose, q, qp)
    err = float(r @ r)
    if trace is not None:
        trace.append(err)
    tol = cfg.converge_rms
    if _converged(r, tol):
        return _hypothesis(pose, LM, 0, math.sqrt(err / 5.0))
    lam = cfg.lm_lambda_init
    eye = np.eye(5)
    for it in range(1, cfg.lm_max_iters + 1):
        A = J.T @ J + lam * eye
        try:
            step = np.linalg.solve(A, -(J.T @ r))
        except np.linalg.LinAlgError:
            return None
        cand = pose.updated(step)
        rc, Jc = residuals_and_jacobian(cand, q, qp)
        new = float(rc @ rc)
        if new < err:
            pose, r, J, err = cand, rc, Jc, new
            if trace is not None:
                trace.append(err)
            if _converged(r, tol):
                return _hypothesis(pose, LM, it, math.sqrt(err / 5.0))
            lam = max(lam / 10.0, LAMBDA_FLOOR)
        else:
            lam *= 10.0
            if lam > LAMBDA_CEIL:
                return None
    return None


def cauchy_weights(e, scale: float) -> np.ndarray:
    """``1 / (1 + (e/scale)^2)``; infinite errors get weight 0."""
    u = np.asarray(e, dtype=float) / scale
    with np.errstate(over="ignore"):
        return 1.0 / (1.0 + u * u)


def cauchy_cost(e, scale: float) -> float:
    """Sum of ``scale^2/2 * log(1 + (e/scale)^2)``."""
    u = np.minimum(np.asarray(e, dtype=float), _SENTINEL_ERROR) / scale
    return float(0.5 * scale * scale * np.sum(np.log1p(u * u)))


def epipolar_residuals_and_jacobian(pose: EssentialPose, q, qp):
    """Signed epipolar distance of each match and its 5-parameter gradient.

    Per match this is whichever of ``g`` and ``g'`` has the larger
    magnitude, so ``|s| == epipolar_error``.  Epipole-degenerate matches get
    ``s = inf`` and a zero gradient row.
    """
    E, dE = pose_derivatives(pose)
    u = q @ E.T  # E q
    v = qp @ E  # E^T qp
    r = np.einsum("ij,ij->i", qp, u)
    du = np.einsum("kab,nb->nka", dE[:, :2, :], q)  # (N, 5, 2)
    dv = np.einsum("kab,na->nkb", dE[:, :, :2], qp)
    dr = np.einsum("na,kab,nb->nk", qp, dE, q)
    n1 = np.hypot(u[:, 0], u[:, 1])
    n2 = np.hypot(v[:, 0], v[:, 1])
    eps = 1e-12 * float(np.linalg.norm(E)) / math.sqrt(2.0)
    bad = (n1 < eps) | (n2 < eps)
    n1 = np.where(bad, 1.0, n1)
    n2 = np.where(bad, 1.0, n2)
    g1 = r / n1
    g2 = r / n2
    # d(r/n) = (dr - (r/n) dn) / n with dn = (u . du) / n
    dn1 = np.einsum("nka,na->nk", du, u[:, :2]) / n1[:, None]
    dn2 = np.einsum("nkb,nb->nk", dv, v[:, :2]) / n2[:, None]
    J1 = (dr - g1[:, None] * dn1) / n1[:, None]
    J2 = (dr - g2[:, None] * dn2) / n2[:, None]
    first = np.abs(g1) >= np.abs(g2)
    s = np.where(first, g1, g2)
    J = np.where(first[:, None], J1, J2)
    s = np.where(bad, np.inf, s)
    J[bad] = 0.0
    return s, J


def irls_lm(q, qp, init: EssentialPose, scale: float, max_iters: int, lambda_init: float = 1e-3):
    """Cauchy-reweighted Levenberg-Marquardt on the epipolar distances.

    Weights are recomputed from the current errors at every iteration; a
    step is kept only if it lowers the total Cauchy cost.  Returns
    ``(pose, errors, iterations)``.
    """
    pose = init
    s, J = epipolar_residuals_and_jacobian(pose, q, qp)
    e = np.abs(s)
    cost = cauchy_cost(e, scale)
    lam = lambda_init
    it = 0
    for it in range(1, max_iters + 1):
        w = cauchy_weights(e, scale)
        finite = np.isfinite(s)
        sw = np.where(finite, s, 0.0) * w
        Jw = J * w[:, None]
        A = J.T @ Jw
        b = J.T @ sw
        # Marquardt scaling: the weights shrink A by orders of magnitude.
        D = np.diag(np.maximum(np.diag(A), 1e-12 * np.trace(A) + 1e-300))
        improved = converged = False
        while lam <= LAMBDA_CEIL:
            try:
                step = np.linalg.solve(A + lam * D, -b)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            cand = pose.updated(step)
            sc, Jc = epipolar_residuals_and_jacobian(cand, q, qp)
            ec = np.abs(sc)
            new = cauchy_cost(ec, scale)
            if new < cost:
                converged = cost - new <= 1e-12 * cost or float(step @ step) < 1e-24
                pose, s, J, e, cost = cand, sc, Jc, ec, new
                lam = max(lam / 10.0, LAMBDA_FLOOR)
                improved = True
                break
            lam *= 10.0
        if not improved or converged:
            break
    return pose, e, it


def majority_rms(e) -> float:
    """RMS error over the ``ceil(N/2) + 2`` best-weighted (lowest-error) matches.

    The errors are not weighted inside the RMS: a Cauchy-weighted mean of
    ``e^2`` stays below ``scale^2`` whenever five matches fit exactly, which
    any five matches do.
    """
    e = np.asarray(e, dtype=float)
    k = min(len(e), -(-len(e) // 2) + 2)
    top = np.sort(e)[:k]
    return float(math.sqrt(np.mean(top * top)))


def solve_robust(matches, init: EssentialPose, cfg: SolverConfig = SolverConfig()) -> Optional[Hypothesis]:
    """Robust fit of a super-minimal set, rejected unless a majority fits well."""
    q, qp = _as_arrays(matches)
    if len(q) < 6:
        raise ValueError(f"solve_robust needs at least 6 matches, got {len(q)}")
    pose, e, it = irls_lm(q, qp, init, cfg.robust_scale, cfg.robust_max_iters, cfg.lm_lambda_init)
    rms = majority_rms(e)
    if not rms < 3.0 * cfg.robust_scale:
        return None
    return _hypothesis(pose, ROBUST, it, rms)


__all__ = [
    "FIVEPOINT",
    "GENERATOR_NAMES",
    "GN",
    "Hypothesis",
    "LM",
    "ROBUST",
    "SolverConfig",
    "cauchy_cost",
    "cauchy_weights",
    "epipolar_residuals_and_jacobian",
    "irls_lm",
    "random_pose",
    "random_rotation",
    "solve_gn",
    "solve_lm",
    "solve_robust",
    "majority_rms",
]
