"""Preemptive breadth-first RANSAC and the final robust refinement.

Hypotheses come from any of the four generators.  They are scored block
by block on a randomly ordered copy of the matches; after every full block
of ``B`` matches the worse half of the survivors is dropped, following
``f(i) = floor(M * 2 ** -floor(i / B))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geom import (
    EPIPOLE_EPS,
    Matches,
    decompose_essential,
    epipolar_error,
    normalize_essential,
    pose_from_essential,
)
from .errors import DegenerateError
from .solvers.fivepoint import solve_five_point
from .solvers.iterative import (
    FIVEPOINT,
    GENERATOR_NAMES,
    GN,
    LM,
    ROBUST,
    Hypothesis,
    SolverConfig,
    cauchy_cost,
    irls_lm,
    random_pose,
    solve_gn,
    solve_lm,
    solve_robust,
)

DEFAULT_THRESHOLD = 0.003


@dataclass(frozen=True)
class RansacConfig:
    num_hypotheses: int = 500
    block_size: int = 100
    inlier_threshold: float = DEFAULT_THRESHOLD
    algorithm: str = GN
    refine: bool = True
    seed: Optional[int] = None
    # Cauchy scale and iteration cap of the final refinement on all matches.
    refine_scale: float = 0.003
    refine_max_iters: int = 50

    def __post_init__(self):
        if self.num_hypotheses < 0:
            raise ValueError("num_hypotheses must be >= 0")
        if self.block_size < 1:
            raise ValueError("block_size must be >= 1")
        if not self.inlier_threshold > 0.0:
            raise ValueError("inlier_threshold must be positive")
        if self.algorithm not in GENERATOR_NAMES:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {GENERATOR_NAMES}")
        if not self.refine_scale > 0.0 or self.refine_max_iters < 1:
            raise ValueError("refine_scale must be positive and refine_max_iters >= 1")


@dataclass(frozen=True)
class ScoredHypothesis:
    hypothesis: Hypothesis
    score: float
    matches_consumed: int


@dataclass(frozen=True)
class HypothesisPool:
    hypotheses: list
    attempts: int  # generator calls made
    budget_used: int  # units charged against num_hypotheses


@dataclass(frozen=True)
class Estimate:
    """Outcome of a full run: pool statistics, preemptive winner, refined matrix."""

    essential: Optional[np.ndarray]
    best: Optional[ScoredHypothesis]
    pool_size: int
    attempts: int
    stats: dict = field(default_factory=dict)


def match_cost(E, q, qp, tau: float = DEFAULT_THRESHOLD):
    """Truncated quadratic ``min(e^2, tau^2)`` of the epipolar error."""
    e = epipolar_error(E, q, qp)
    return np.minimum(np.square(e), tau * tau)


def _batch_costs(Es: np.ndarray, q: np.ndarray, qp: np.ndarray, tau: float) -> np.ndarray:
    """Costs of ``K`` matrices (each of norm sqrt(2)) on ``n`` matches, shape ``(K, n)``."""
    Eq = np.einsum("kij,nj->kni", Es, q)
    Etqp = np.einsum("kij,ni->knj", Es, qp)
    r = np.einsum("ni,kni->kn", qp, Eq)
    n1 = np.hypot(Eq[..., 0], Eq[..., 1])
    n2 = np.hypot(Etqp[..., 0], Etqp[..., 1])
    d = np.minimum(n1, n2)
    tau2 = tau * tau
    with np.errstate(divide="ignore", invalid="ignore"):
        e2 = (r * r) / (d * d)
    return np.where(d < EPIPOLE_EPS, tau2, np.minimum(e2, tau2))


def _master_seed(seed) -> np.random.SeedSequence:
    return np.random.SeedSequence(seed)


def match_order(n: int, seed) -> np.ndarray:
    """The single random permutation used for block scoring."""
    ss = _master_seed(seed)
    rng = np.random.default_rng(np.random.SeedSequence(ss.entropy, spawn_key=(0,)))
    return rng.permutation(n)


def draw_rng(seed, k: int) -> np.random.Generator:
    """Independent substream for the ``k``-th generator call."""
    ss = _master_seed(seed)
    return np.random.default_rng(np.random.SeedSequence(ss.entropy, spawn_key=(1, k)))


def set_size(algorithm: str, solver_cfg: SolverConfig) -> int:
    return solver_cfg.robust_set_size if algorithm == ROBUST else 5


def draw_subset(n: int, k: int, rng) -> np.ndarray:
    """Sorted indices of ``k`` distinct matches out of ``n``."""
    return np.sort(rng.choice(n, size=k, replace=False))


def generate_one(matches: Matches, algorithm: str, solver_cfg: SolverConfig, rng) -> tuple[list, np.ndarray]:
    """One generator call on a fresh random subset; returns ``(hypotheses, indices)``."""
    n = set_size(algorithm, solver_cfg)
    idx = draw_subset(len(matches), n, rng)
    sub = matches.take(idx)
    if algorithm == FIVEPOINT:
        hyps = solve_five_point(sub, solver_cfg)
    else:
        init = random_pose(rng)
        solver = {GN: solve_gn, LM: solve_lm, ROBUST: solve_robust}[algorithm]
        h = solver(sub, init, solver_cfg)
        hyps = [] if h is None else [h]
    key = tuple(int(i) for i in idx)
    return [Hypothesis(h.essential, h.pose, h.generator, h.iterations, h.residual_rms, key) for h in hyps], idx


def generate_hypotheses(matches: Matches, cfg: RansacConfig, solver_cfg: Optional[SolverConfig] = None) -> HypothesisPool:
    """Call the generator until ``num_hypotheses`` budget units are spent.

    Each call of an iterative generator costs one unit whether or not it
    converges.  For the five-point solver every returned solution costs one
    unit (a set with no solution costs one), and the pool is cut at the
    budget.
    """
    solver_cfg = solver_cfg or SolverConfig()
    if len(matches) < set_size(cfg.algorithm, solver_cfg):
        raise ValueError(
            f"{cfg.algorithm} needs at least {set_size(cfg.algorithm, solver_cfg)} matches, got {len(matches)}"
        )
    pool = []
    used = 0
    k = 0
    while used < cfg.num_hypotheses:
        hyps, _ = generate_one(matches, cfg.algorithm, solver_cfg, draw_rng(cfg.seed, k))
        k += 1
        used += max(1, len(hyps))
        pool.extend(hyps)
    return HypothesisPool(pool[: cfg.num_hypotheses], k, min(used, cfg.num_hypotheses))


def preemptive_score(
    hypotheses: list, matches: Matches, block_size: int, tau: float, order: np.ndarray
) -> tuple[Optional[ScoredHypothesis], int]:
    """Breadth-first block scoring.  Returns the winner and the number of
    match-cost evaluations performed."""
    m = len(hypotheses)
    if m == 0:
        return None, 0
    Es = np.stack([normalize_essential(h.essential) for h in hypotheses])
    q = matches.q[order]
    qp = matches.qp[order]
    n = len(order)
    scores = np.zeros(m)
    alive = np.arange(m)
    consumed = 0
    evaluations = 0
    while consumed < n and len(alive) > 1:
        stop = min(n, consumed + block_size)
        scores[alive] += _batch_costs(Es[alive], q[consumed:stop], qp[consumed:stop], tau).sum(axis=1)
        evaluations += len(alive) * (stop - consumed)
        consumed = stop
        keep = max(1, m >> (consumed // block_size))
        if keep < len(alive):
            alive = alive[np.argsort(scores[alive], kind="stable")[:keep]]
    if consumed == 0:
        # a single hypothesis still gets its first block scored
        stop = min(n, block_size)
        scores[alive] += _batch_costs(Es[alive], q[:stop], qp[:stop], tau).sum(axis=1)
        evaluations += stop
        consumed = stop
    best = int(alive[np.argmin(scores[alive])])
    return ScoredHypothesis(hypotheses[best], float(scores[best]), consumed), evaluations


def preemptive_ransac(
    matches: Matches, cfg: RansacConfig, solver_cfg: Optional[SolverConfig] = None
) -> Optional[ScoredHypothesis]:
    """Generate the hypothesis pool and return the preemptive winner (or ``None``)."""
    pool = generate_hypotheses(matches, cfg, solver_cfg)
    best, _ = preemptive_score(pool.hypotheses, matches, cfg.block_size, cfg.inlier_threshold, match_order(len(matches), cfg.seed))
    return best


def refine_irls(E0, matches: Matches, cfg: RansacConfig = RansacConfig(), pose=None) -> np.ndarray:
    """Cauchy-reweighted LM on all matches starting from ``E0``.

    Falls back to ``E0`` (normalized) if the robust cost did not go down.
    The result has the sign of ``E0``.
    """
    E0 = normalize_essential(E0)
    if pose is None:
        try:
            pose = pose_from_essential(E0)
        except DegenerateError:
            return E0
    start = cauchy_cost(epipolar_error(E0, matches.q, matches.qp), cfg.refine_scale)
    pose, e, _ = irls_lm(matches.q, matches.qp, pose, cfg.refine_scale, cfg.refine_max_iters)
    if not cauchy_cost(e, cfg.refine_scale) < start:
        return E0
    E = normalize_essential(pose.essential)
    if np.sum(E * E0) < 0.0:
        E = -E
    return E


def estimate(matches: Matches, cfg: RansacConfig, solver_cfg: Optional[SolverConfig] = None) -> Estimate:
    """Generate, score preemptively and optionally refine."""
    pool = generate_hypotheses(matches, cfg, solver_cfg)
    order = match_order(len(matches), cfg.seed)
    best, evaluations = preemptive_score(pool.hypotheses, matches, cfg.block_size, cfg.inlier_threshold, order)
    stats = {"cost_evaluations": evaluations, "budget_used": pool.budget_used}
    if best is None:
        return Estimate(None, None, 0, pool.attempts, stats)
    E = best.hypothesis.essential
    if cfg.refine:
        E = refine_irls(E, matches, cfg, best.hypothesis.pose)
    return Estimate(normalize_essential(E), best, len(pool.hypotheses), pool.attempts, stats)


def count_inliers(E, matches: Matches, tau: float = DEFAULT_THRESHOLD) -> int:
    return int(np.count_nonzero(np.atleast_1d(epipolar_error(E, matches.q, matches.qp)) < tau))


def relative_pose_or_none(E, matches: Matches, tau: float = DEFAULT_THRESHOLD):
    """Chirality-resolved pose from the inliers of ``E``; ``None`` if degenerate."""
    inl = np.flatnonzero(np.atleast_1d(epipolar_error(E, matches.q, matches.qp)) < tau)
    if len(inl) < 2:
        return None
    try:
        return decompose_essential(E, matches.q[inl], matches.qp[inl])
    except DegenerateError:
        return None


__all__ = [
    "DEFAULT_THRESHOLD",
    "Estimate",
    "HypothesisPool",
    "RansacConfig",
    "ScoredHypothesis",
    "count_inliers",
    "draw_subset",
    "estimate",
    "generate_hypotheses",
    "match_cost",
    "match_order",
    "preemptive_ransac",
    "preemptive_score",
    "refine_irls",
]
