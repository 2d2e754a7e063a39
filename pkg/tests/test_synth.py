import math

import numpy as np
import pytest
from scipy import stats

import essransac.synth as synth
from essransac.errors import EssransacError
from essransac.geom import essential_constraint_violation, residual, rotation_angle
from essransac.solvers.iterative import random_pose
from essransac.synth import SceneConfig, classify_correct, generate_scene


def clean_projections(scene):
    """Noise-free image points of the inliers, from the stored 3D points."""
    inl = scene.labels
    X = scene.points[inl]
    X2 = X @ scene.rotation.T + scene.translation
    return X[:, :2] / X[:, 2:], X2[:, :2] / X2[:, 2:]


def test_config_validation():
    for bad in (dict(fov_degrees=0.0), dict(fov_degrees=180.0), dict(noise_sigma=-1e-3),
                dict(num_inliers=-1), dict(num_outliers=-2), dict(min_depth=0.0)):
        with pytest.raises(ValueError):
            SceneConfig(**bad)


def test_noiseless_inliers_satisfy_epipolar_identity(rng):
    for _ in range(20):
        scene = generate_scene(SceneConfig(noise_sigma=0.0, num_inliers=200, num_outliers=50), rng)
        inl = scene.matches.inliers()
        assert np.max(np.abs(residual(scene.essential, inl.q, inl.qp))) < 1e-12


def test_counts_and_labels(rng):
    scene = generate_scene(SceneConfig(num_inliers=37, num_outliers=0), rng)
    assert len(scene.matches) == 37 and scene.labels.all()
    scene = generate_scene(SceneConfig(num_inliers=30, num_outliers=70), rng)
    assert len(scene.matches) == 100 and scene.labels.sum() == 30
    scene = generate_scene(SceneConfig(num_inliers=0, num_outliers=5), rng)
    assert len(scene.matches) == 5 and not scene.labels.any()


def test_order_is_shuffled(rng):
    scene = generate_scene(SceneConfig(num_inliers=50, num_outliers=50), rng)
    assert not (scene.labels[:50].all() and not scene.labels[50:].any())


def test_true_pose_within_configured_limits(rng):
    cfg = SceneConfig(num_inliers=10)
    for _ in range(200):
        scene = generate_scene(cfg, rng)
        assert rotation_angle(scene.rotation, np.eye(3)) <= math.radians(cfg.max_rotation_degrees) + 1e-12
        assert 0 < np.linalg.norm(scene.translation) <= cfg.max_translation
        assert abs(np.linalg.norm(scene.essential) - math.sqrt(2)) < 1e-12
        assert max(essential_constraint_violation(scene.essential)) < 1e-12


def test_noise_std_matches_sigma(rng):
    sigma = 0.001
    scene = generate_scene(SceneConfig(noise_sigma=sigma, num_inliers=10_000), rng)
    a, b = clean_projections(scene)
    inl = scene.matches.inliers()
    d = np.concatenate([(inl.q[:, :2] - a).ravel(), (inl.qp[:, :2] - b).ravel()])
    assert abs(d.std() - sigma) < 0.05 * sigma
    assert abs(d.mean()) < 5 * sigma / math.sqrt(len(d))


def test_inlier_points_inside_both_frustums_and_in_front(rng):
    cfg = SceneConfig(noise_sigma=0.0, num_inliers=2000)
    h = cfg.half_width
    for _ in range(5):
        scene = generate_scene(cfg, rng)
        X = scene.points[scene.labels]
        X2 = X @ scene.rotation.T + scene.translation
        assert np.all(X[:, 2] >= cfg.min_depth - 1e-12) and np.all(X2[:, 2] > 0)
        a, b = clean_projections(scene)
        assert np.all(np.abs(a) <= h + 1e-12) and np.all(np.abs(b) <= h + 1e-12)


def test_outliers_uniform_in_image(rng):
    cfg = SceneConfig(num_inliers=0, num_outliers=20_000)
    scene = generate_scene(cfg, rng)
    h = cfg.half_width
    for col in (scene.matches.q[:, 0], scene.matches.qp[:, 1]):
        assert stats.kstest(col, stats.uniform(-h, 2 * h).cdf).pvalue > 0.01


@pytest.mark.xfail(strict=True, reason="culling at the second view removes near points preferentially")
def test_inverse_depth_uniform():
    for seed in range(20):
        scene = generate_scene(SceneConfig(num_inliers=10_000), np.random.default_rng(seed))
        inv = 1.0 / scene.points[scene.labels][:, 2]
        assert stats.kstest(inv, "uniform").pvalue > 0.01


def test_inverse_depth_uniform_without_culling():
    cfg = SceneConfig(num_inliers=10_000)
    X, _, _ = synth._sample_visible(cfg, np.eye(3), np.zeros(3), 10_000, np.random.default_rng(31))
    assert len(X) == 10_000
    assert stats.kstest(1.0 / X[:, 2], "uniform").pvalue > 0.01


def test_near_identity_transform_keeps_inverse_depth_uniform(monkeypatch):
    # with a tiny translation and no rotation nothing leaves the view
    monkeypatch.setattr(synth, "_sample_transform", lambda cfg, rng: (np.eye(3), np.array([1e-9, 0.0, 0.0])))
    scene = generate_scene(SceneConfig(num_inliers=10_000), np.random.default_rng(31))
    assert stats.kstest(1.0 / scene.points[:, 2], "uniform").pvalue > 0.01


def test_deterministic_given_seed():
    cfg = SceneConfig(num_inliers=40, num_outliers=10, seed=5)
    a, b = generate_scene(cfg), generate_scene(cfg)
    assert np.array_equal(a.matches.q, b.matches.q) and np.array_equal(a.matches.qp, b.matches.qp)
    assert np.array_equal(a.labels, b.labels) and np.array_equal(a.essential, b.essential)
    c = generate_scene(SceneConfig(num_inliers=40, num_outliers=10, seed=6))
    assert not np.array_equal(a.matches.q, c.matches.q)


def test_retry_limit_raises(monkeypatch):
    # a half turn about the y axis puts every point behind the second camera
    behind = np.diag([-1.0, 1.0, -1.0])
    monkeypatch.setattr(synth, "_sample_transform", lambda cfg, rng: (behind, np.array([0.0, 0.0, 0.1])))
    with pytest.raises(EssransacError):
        generate_scene(SceneConfig(num_inliers=10), np.random.default_rng(0))


def test_classify_true_essential_correct(rng):
    scene = generate_scene(SceneConfig(noise_sigma=0.0, num_inliers=100, num_outliers=100), rng)
    assert classify_correct(scene.essential, scene)
    assert classify_correct(-3.0 * scene.essential, scene)


def test_classify_unrelated_pose_incorrect(rng):
    wrong = 0
    for _ in range(1000):
        scene = generate_scene(SceneConfig(num_inliers=50), rng)
        wrong += not classify_correct(random_pose(rng).essential, scene)
    assert wrong >= 999


def test_classify_infinite_threshold_and_monotone(rng):
    scene = generate_scene(SceneConfig(num_inliers=50), rng)
    E = random_pose(rng).essential
    assert classify_correct(E, scene, math.inf)
    results = [classify_correct(scene.essential, scene, t) for t in np.geomspace(1e-6, 1.0, 30)]
    assert results == sorted(results)


def test_classify_none_and_no_inliers(rng):
    scene = generate_scene(SceneConfig(num_inliers=0, num_outliers=10), rng)
    assert classify_correct(None, scene) is False
    with pytest.raises(ValueError):
        classify_correct(np.eye(3), scene)
