"""Synthetic two-view scenes with a known essential matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import EssransacError
from .geom import Matches, RelativePose, SQRT2, rms_epipolar_error, skew

DEFAULT_CORRECT_THRESHOLD = 0.002


@dataclass(frozen=True)
class SceneConfig:
    fov_degrees: float = 90.0
    max_translation: float = 1.0
    max_rotation_degrees: float = 35.0
    noise_sigma: float = 0.001
    num_inliers: int = 100
    num_outliers: int = 0
    min_depth: float = 1.0
    seed: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.fov_degrees < 180.0:
            raise ValueError("fov_degrees must lie in (0, 180)")
        if self.noise_sigma < 0.0:
            raise ValueError("noise_sigma must be non-negative")
        if self.num_inliers < 0 or self.num_outliers < 0:
            raise ValueError("match counts must be non-negative")
        if self.min_depth <= 0.0:
            raise ValueError("min_depth must be positive")

    @property
    def half_width(self) -> float:
        """Half-width of the image square in normalized coordinates."""
        return math.tan(math.radians(self.fov_degrees) / 2.0)


@dataclass(frozen=True)
class SyntheticScene:
    rotation: np.ndarray
    translation: np.ndarray
    essential: np.ndarray
    matches: Matches
    # First-camera 3D points for inliers, NaN rows for outliers.
    points: np.ndarray = field(repr=False)

    @property
    def labels(self) -> np.ndarray:
        return self.matches.labels

    @property
    def relative_pose(self) -> RelativePose:
        return RelativePose(self.rotation, self.translation / np.linalg.norm(self.translation))


def random_unit_vector(rng) -> np.ndarray:
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def axis_angle_rotation(axis, angle: float) -> np.ndarray:
    K = skew(axis)
    return np.eye(3) + math.sin(angle) * K + (1.0 - math.cos(angle)) * (K @ K)


def _sample_transform(cfg: SceneConfig, rng):
    axis = random_unit_vector(rng)
    angle = rng.uniform(0.0, math.radians(cfg.max_rotation_degrees))
    R = axis_angle_rotation(axis, angle)
    # uniform in the ball
    t = random_unit_vector(rng) * cfg.max_translation * rng.uniform() ** (1.0 / 3.0)
    return R, t


def _sample_visible(cfg: SceneConfig, R, t, n: int, rng):
    h = cfg.half_width
    xy = rng.uniform(-h, h, size=(n, 2))
    inv_depth = (1.0 - rng.uniform(size=n)) / cfg.min_depth  # in (0, 1/min_depth]
    depth = 1.0 / inv_depth
    X = np.column_stack([xy * depth[:, None], depth])
    X2 = X @ R.T + t
    ok = X2[:, 2] > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        p2 = X2[:, :2] / X2[:, 2:3]
    ok &= np.all(np.abs(p2) <= h, axis=1)
    return X[ok], xy[ok], p2[ok]


def generate_scene(cfg: SceneConfig, rng=None) -> SyntheticScene:
    """Sample a scene: transform, visible inliers with noise, outliers, shuffle.

    Points are uniform in the first image and in inverse depth.  Points
    leaving the second view (before noise is added) are culled and replaced
    until exactly ``num_inliers`` remain.
    """
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    n_in = cfg.num_inliers
    for _ in range(100):
        R, t = _sample_transform(cfg, rng)
        if np.linalg.norm(t) == 0.0:
            continue
        pts, p1, p2 = [], [], []
        have = 0
        empty = 0
        while have < n_in and empty < 10:
            X, a, b = _sample_visible(cfg, R, t, max(2 * (n_in - have), 16), rng)
            if len(X) == 0:
                empty += 1
                continue
            pts.append(X)
            p1.append(a)
            p2.append(b)
            have += len(X)
        if have >= n_in:
            break
    else:
        raise EssransacError("could not generate visible points after 100 transforms")

    if n_in:
        X = np.concatenate(pts)[:n_in]
        a = np.concatenate(p1)[:n_in]
        b = np.concatenate(p2)[:n_in]
    else:
        X = np.empty((0, 3))
        a = b = np.empty((0, 2))
    sigma = cfg.noise_sigma
    if sigma > 0.0:
        a = a + rng.normal(0.0, sigma, size=a.shape)
        b = b + rng.normal(0.0, sigma, size=b.shape)

    h = cfg.half_width
    n_out = cfg.num_outliers
    oa = rng.uniform(-h, h, size=(n_out, 2))
    ob = rng.uniform(-h, h, size=(n_out, 2))

    xy = np.vstack([np.hstack([a, b]), np.hstack([oa, ob])])
    labels = np.concatenate([np.ones(n_in, bool), np.zeros(n_out, bool)])
    points = np.vstack([X, np.full((n_out, 3), np.nan)])
    order = rng.permutation(len(xy))
    matches = Matches.from_xy(xy[order], labels[order])

    tn = t / np.linalg.norm(t)
    E = skew(tn) @ R
    return SyntheticScene(R, t, E * (SQRT2 / np.linalg.norm(E)), matches, points[order])


def classify_correct(E_est, scene: SyntheticScene, threshold: float = DEFAULT_CORRECT_THRESHOLD) -> bool:
    """True when the RMS epipolar error on the labelled inliers is below ``threshold``."""
    if E_est is None:
        return False
    if math.isinf(threshold) and threshold > 0:
        return True
    inl = scene.matches.inliers()
    if len(inl) == 0:
        raise ValueError("scene has no labelled inliers")
    return rms_epipolar_error(E_est, inl.q, inl.qp) < threshold
