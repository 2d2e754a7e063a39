import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import noiseless_scene
from essransac.errors import DegenerateError
from essransac.geom import (
    G1,
    G2,
    G3,
    EssentialPose,
    Matches,
    RelativePose,
    decompose_essential,
    epipolar_errors,
    essential_candidates,
    essential_constraint_violation,
    essential_from_pose,
    is_rotation,
    residual,
    residual_jacobian,
    residuals_and_jacobian,
    rms_epipolar_error,
    rotation_angle,
    skew,
    so3_exp,
    so3_log,
    triangulate,
    vector_angle,
)
from essransac.solvers.iterative import random_pose

E_X = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
finite = st.floats(-10, 10, allow_nan=False)
vec3 = arrays(np.float64, 3, elements=finite)


def test_skew_examples():
    assert np.array_equal(skew((1, 0, 0)), E_X)
    assert np.array_equal(skew((0, 0, 0)), np.zeros((3, 3)))
    assert np.array_equal(skew((1, 2, 3)), [[0, -3, 2], [3, 0, -1], [-2, 1, 0]])


@given(vec3, vec3)
def test_skew_is_cross_product(t, v):
    S = skew(t)
    assert np.allclose(S, -S.T)
    assert np.allclose(S @ v, np.cross(t, v), atol=1e-12)


def test_generators_match_skew_convention():
    w = np.array([0.3, -0.2, 0.7])
    assert np.allclose(w[0] * G1 + w[1] * G2 + w[2] * G3, skew((-w[2], w[1], -w[0])))


def test_so3_exp_zero_and_inverse():
    assert np.array_equal(so3_exp((0, 0, 0)), np.eye(3))
    w = (math.pi / 2, 0, 0)
    R = so3_exp(w)
    assert np.allclose(R @ so3_exp((-math.pi / 2, 0, 0)), np.eye(3), atol=1e-15)
    # quarter turn in the plane selected by G1 (x-y plane)
    assert np.allclose(R, [[0, 1, 0], [-1, 0, 0], [0, 0, 1]], atol=1e-15)


def test_so3_exp_against_matrix_exponential(rng):
    for _ in range(200):
        w = rng.normal(size=3)
        w *= rng.uniform(0, math.pi * 0.99) / np.linalg.norm(w)
        A = w[0] * G1 + w[1] * G2 + w[2] * G3
        R = so3_exp(w)
        ref = scipy.linalg.expm(A)
        assert np.linalg.norm(R - ref) < 1e-10
        assert np.linalg.norm(so3_log(R) - w) < 1e-10 * max(1.0, np.linalg.norm(w))


def test_so3_exp_small_angle_taylor():
    w = np.array([1e-9, -2e-9, 3e-10])
    ref = scipy.linalg.expm(w[0] * G1 + w[1] * G2 + w[2] * G3)
    assert np.linalg.norm(so3_exp(w) - ref) < 1e-15
    assert is_rotation(so3_exp(w))


def test_essential_from_identity_pose():
    E = essential_from_pose(EssentialPose(np.eye(3), np.eye(3)))
    assert np.array_equal(E, E_X)
    EEt = E @ E.T
    assert np.allclose(EEt, np.diag([0, 1, 1]))
    assert np.allclose(2 * EEt @ E - np.trace(EEt) * E, 0)


def test_random_pose_essential_invariants(rng):
    for _ in range(10_000 // 10):
        pose = random_pose(rng)
        E = pose.essential
        assert abs(np.linalg.norm(pose.translation) - 1) < 1e-12
        assert abs(np.linalg.norm(E) - math.sqrt(2)) < 1e-12
        det_v, trace_v = essential_constraint_violation(E)
        assert det_v < 1e-9 and trace_v < 1e-9
        s = np.linalg.svd(E, compute_uv=False)
        assert abs(s[0] - s[1]) < 1e-9 * s[0] and s[2] < 1e-9 * s[0]


def test_residual_examples():
    assert residual(E_X, (0, 1, 0), (0, 0, 1)) == 1.0
    for xp in (-3.0, 0.0, 2.5):
        assert residual(E_X, (0, 0, 1), (xp, 0, 1)) == 0.0


def test_residual_noiseless_scene(rng):
    scene = noiseless_scene(rng, 50)
    r = residual(scene.essential, scene.matches.q, scene.matches.qp)
    assert np.max(np.abs(r)) < 1e-12


@given(vec3, vec3, st.floats(-5, 5), st.floats(-5, 5))
def test_residual_bilinear(q, qp, a, b):
    E = essential_from_pose(EssentialPose(so3_exp((0.1, 0.2, -0.3)), so3_exp((0.5, -0.1, 0.2))))
    lhs = residual(E, a * q, b * qp)
    rhs = a * b * residual(E, q, qp)
    assert abs(lhs - rhs) <= 1e-9 * (1 + abs(rhs))


def _fd_jacobian(pose, q, qp, h=1e-6):
    J = np.empty(5)
    for k in range(5):
        d = np.zeros(5)
        d[k] = h
        J[k] = (residual(pose.updated(d).essential, q, qp) - residual(pose.updated(-d).essential, q, qp)) / (2 * h)
    return J


def test_residual_jacobian_matches_finite_differences(rng):
    for _ in range(100):
        pose = random_pose(rng)
        q, qp = rng.normal(size=3), rng.normal(size=3)
        J = residual_jacobian(pose, q, qp)
        fd = _fd_jacobian(pose, q, qp)
        assert np.linalg.norm(J - fd) <= 1e-5 * np.linalg.norm(fd)


def test_fast_jacobian_agrees_with_reference(rng):
    for _ in range(20):
        pose = random_pose(rng)
        q, qp = rng.normal(size=(7, 3)), rng.normal(size=(7, 3))
        r, J = residuals_and_jacobian(pose, q, qp)
        assert np.allclose(r, residual(pose.essential, q, qp), atol=1e-13)
        assert np.allclose(J, residual_jacobian(pose, q, qp), atol=1e-13)


def test_epipolar_errors_examples():
    g, gp = epipolar_errors(E_X, (0, 1, 1), (0, 0, 1))
    assert g == 1.0
    g, gp = epipolar_errors(E_X, (0, 0, 1), (2.0, 0, 1))
    assert g == 0.0 and gp == 0.0
    g, _ = epipolar_errors(E_X, (0, 1, 0), (0, 0, 1))
    assert g == math.inf


@given(vec3, vec3)
def test_epipolar_errors_share_sign_with_residual(q, qp):
    E = essential_from_pose(EssentialPose(so3_exp((0.4, 0.1, -0.2)), so3_exp((0.3, 0.2, 0.1))))
    r = residual(E, q, qp)
    g, gp = epipolar_errors(E, q, qp)
    for v in (g, gp):
        if math.isfinite(v) and r != 0:
            assert np.sign(v) == np.sign(r)


def test_rms_epipolar_error_zero_and_empty():
    assert rms_epipolar_error(E_X, np.array([[0.0, 0, 1]]), np.array([[2.0, 0, 1]])) == 0.0
    with pytest.raises(ValueError):
        rms_epipolar_error(E_X, np.empty((0, 3)), np.empty((0, 3)))


def test_rms_single_match_is_max_of_both():
    q = np.array([[0.0, 0.0, 1.0]])
    qp = np.array([[0.0, 0.003, 0.75]])  # g = 0.003, g' = 0.004
    g, gp = epipolar_errors(E_X, q[0], qp[0])
    assert math.isclose(abs(g), 0.003) and math.isclose(abs(gp), 0.004)
    assert math.isclose(rms_epipolar_error(E_X, q, qp), 0.004)


@given(st.floats(1e-3, 1e3))
@settings(max_examples=30)
def test_rms_scale_invariant(c):
    rng = np.random.default_rng(3)
    scene = noiseless_scene(rng, 20)
    q = scene.matches.q + rng.normal(scale=1e-3, size=(20, 3)) * [1, 1, 0]
    E = scene.essential
    assert math.isclose(rms_epipolar_error(c * E, q, scene.matches.qp), rms_epipolar_error(E, q, scene.matches.qp), rel_tol=1e-9)


def test_rms_of_noisy_inliers_near_sigma_sqrt2(rng):
    from essransac.synth import SceneConfig, generate_scene

    scene = generate_scene(SceneConfig(noise_sigma=0.001, num_inliers=1000), rng)
    rms = rms_epipolar_error(scene.essential, scene.matches.q, scene.matches.qp)
    assert 0.001 * math.sqrt(2) / 2 < rms < 0.001 * math.sqrt(2) * 2


def test_triangulate_examples():
    pose = RelativePose(np.eye(3), np.array([1.0, 0, 0]))
    X = np.array([0.0, 0.0, 5.0])
    q = X / X[2]
    X2 = X + pose.translation
    Y, d1, d2 = triangulate(pose, q, X2 / X2[2])
    assert np.linalg.norm(Y - X) < 1e-9 and d1 > 0 and d2 > 0
    with pytest.raises(DegenerateError):
        triangulate(pose, (0.2, 0.1, 1.0), (0.2, 0.1, 1.0))


def test_triangulate_noiseless_depths_positive(rng):
    scene = noiseless_scene(rng, 200)
    pose = scene.relative_pose
    for q, qp in zip(scene.matches.q[:50], scene.matches.qp[:50]):
        _, d1, d2 = triangulate(pose, q, qp)
        assert d1 > 0 and d2 > 0


def test_decompose_recovers_pose_and_sign_invariant(rng):
    for _ in range(50):
        scene = noiseless_scene(rng, 30)
        m = scene.matches
        for E in (scene.essential, -scene.essential):
            pose = decompose_essential(E, m.q, m.qp)
            assert rotation_angle(pose.rotation, scene.rotation) < 1e-6
            assert vector_angle(pose.translation, scene.translation) < 1e-6


def test_decompose_never_picks_candidate_with_points_behind(rng):
    scene = noiseless_scene(rng, 30)
    m = scene.matches
    pose = decompose_essential(scene.essential, m.q, m.qp)
    for R, t in essential_candidates(scene.essential):
        from essransac.geom import _triangulate_many

        _, d1, d2, _ = _triangulate_many(R, t, m.q, m.qp)
        if np.all((d1 < 0) | (d2 < 0)):
            assert not (np.allclose(R, pose.rotation) and np.allclose(t, pose.translation))


def test_decompose_rejects_wrong_rank():
    with pytest.raises(DegenerateError):
        essential_candidates(np.diag([1.0, 0.0, 0.0]))
    with pytest.raises(DegenerateError):
        essential_candidates(np.eye(3))


def test_decompose_needs_two_matches():
    E = E_X
    with pytest.raises(DegenerateError):
        decompose_essential(E, np.array([[0.1, 0.2, 1.0]]), np.array([[0.3, 0.2, 1.0]]))


def test_matches_validation():
    with pytest.raises(ValueError):
        Matches(np.zeros((3, 3)), np.zeros((2, 3)))
    m = Matches.from_xy([[0.1, 0.2, 0.3, 0.4]], [True])
    assert len(m) == 1 and np.array_equal(m.q[0], [0.1, 0.2, 1.0])
    assert len(m.inliers()) == 1
