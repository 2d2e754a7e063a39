import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import noiseless_scene
from essransac.geom import EssentialPose, epipolar_error, essential_distance, normalize_essential, so3_exp
from essransac.ransac import (
    RansacConfig,
    estimate,
    generate_hypotheses,
    match_cost,
    match_order,
    preemptive_ransac,
    preemptive_score,
    refine_irls,
)
from essransac.solvers.iterative import FIVEPOINT, GN, ROBUST, Hypothesis, cauchy_cost, random_pose
from essransac.synth import SceneConfig, classify_correct, generate_scene

E_X = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
TAU = 0.003


def hyp(E):
    return Hypothesis(np.asarray(E, dtype=float), None, GN, 0, 0.0)


def test_config_validation():
    with pytest.raises(ValueError):
        RansacConfig(block_size=0)
    with pytest.raises(ValueError):
        RansacConfig(inlier_threshold=0.0)
    with pytest.raises(ValueError):
        RansacConfig(algorithm="SIXPOINT")


def test_match_cost_examples():
    q = np.array([[0.0, 0.0, 1.0]])
    assert match_cost(E_X, q, np.array([[0.3, 0.0, 1.0]]), TAU)[0] == 0.0
    # epipolar error of (0, y', 1) against the line of (0, 0, 1) is |y'|
    assert match_cost(E_X, q, np.array([[0.0, TAU, 1.0]]), TAU)[0] == TAU * TAU
    assert match_cost(E_X, q, np.array([[0.0, 0.5, 1.0]]), TAU)[0] == TAU * TAU
    assert math.isclose(match_cost(E_X, q, np.array([[0.0, TAU / 2, 1.0]]), TAU)[0], TAU * TAU / 4, rel_tol=1e-12)


def test_match_cost_sentinel_saturates():
    # q on the epipole direction of E_X: Eq has no image-plane component
    assert match_cost(E_X, np.array([[1.0, 0.0, 0.0]]), np.array([[0.0, 0.0, 1.0]]), TAU)[0] == TAU * TAU


@given(st.floats(1e-3, 1e3), st.booleans())
@settings(max_examples=30)
def test_match_cost_scale_invariant(c, flip):
    rng = np.random.default_rng(4)
    scene = generate_scene(SceneConfig(num_inliers=20, num_outliers=20), rng)
    m = scene.matches
    s = -c if flip else c
    assert np.allclose(match_cost(s * scene.essential, m.q, m.qp), match_cost(scene.essential, m.q, m.qp), rtol=1e-9, atol=0)


def test_planted_essential_wins(rng):
    for _ in range(10):
        scene = noiseless_scene(rng, 300)
        hyps = [hyp(random_pose(rng).essential) for _ in range(63)]
        hyps.insert(int(rng.integers(64)), hyp(scene.essential))
        best, _ = preemptive_score(hyps, scene.matches, 50, TAU, rng.permutation(300))
        assert essential_distance(best.hypothesis.essential, scene.essential) < 1e-12
        assert best.score < 1e-20


def test_single_hypothesis_scored_on_first_block(rng):
    scene = noiseless_scene(rng, 250)
    for B, expected in ((100, 100), (400, 250)):
        best, evals = preemptive_score([hyp(scene.essential)], scene.matches, B, TAU, np.arange(250))
        assert best.matches_consumed == expected and evals == expected


def test_empty_pool_gives_nothing(rng):
    scene = noiseless_scene(rng, 20)
    assert preemptive_score([], scene.matches, 10, TAU, np.arange(20)) == (None, 0)


def test_no_preemption_is_exhaustive_argmin(rng):
    for _ in range(20):
        scene = generate_scene(SceneConfig(num_inliers=60, num_outliers=40), rng)
        m = scene.matches
        hyps = [hyp(random_pose(rng).essential) for _ in range(int(rng.integers(1, 40)))]
        best, _ = preemptive_score(hyps, m, len(m), TAU, rng.permutation(len(m)))
        totals = [match_cost(h.essential, m.q, m.qp, TAU).sum() for h in hyps]
        assert best.hypothesis is hyps[int(np.argmin(totals))]
        assert math.isclose(best.score, min(totals), rel_tol=1e-9)


def test_survivor_schedule_and_work_bound(rng):
    scene = generate_scene(SceneConfig(num_inliers=300, num_outliers=200), rng)
    m = scene.matches
    for M, B in ((1, 10), (7, 3), (64, 50), (100, 7), (500, 100)):
        hyps = [hyp(random_pose(rng).essential) for _ in range(M)]
        best, evals = preemptive_score(hyps, m, B, TAU, np.arange(len(m)))
        assert best is not None
        assert evals <= 2 * M * B * math.ceil(math.log2(M) + 1)
        # exact count implied by f(i) = floor(M * 2^-floor(i/B))
        expected, alive, consumed = 0, M, 0
        while consumed < len(m) and alive > 1:
            stop = min(len(m), consumed + B)
            expected += alive * (stop - consumed)
            consumed = stop
            alive = min(alive, max(1, M >> (consumed // B)))
        if consumed == 0:
            expected = min(len(m), B)
        assert evals == expected


def test_generate_hypotheses_budget(rng):
    scene = generate_scene(SceneConfig(num_inliers=60, num_outliers=40), rng)
    pool = generate_hypotheses(scene.matches, RansacConfig(num_hypotheses=40, seed=3))
    assert pool.attempts == 40 and len(pool.hypotheses) <= 40
    pool = generate_hypotheses(scene.matches, RansacConfig(num_hypotheses=40, seed=3, algorithm=FIVEPOINT))
    assert len(pool.hypotheses) <= 40 and pool.budget_used == 40 and pool.attempts <= 40
    for h in pool.hypotheses:
        assert len(set(h.indices)) == 5


def test_generate_hypotheses_too_few_matches(rng):
    scene = noiseless_scene(rng, 8)
    with pytest.raises(ValueError):
        generate_hypotheses(scene.matches, RansacConfig(algorithm=ROBUST))


def test_match_order_is_permutation_and_seeded():
    a = match_order(100, 5)
    assert sorted(a) == list(range(100))
    assert np.array_equal(a, match_order(100, 5))
    assert not np.array_equal(a, match_order(100, 6))


def test_preemptive_ransac_deterministic(rng):
    scene = generate_scene(SceneConfig(num_inliers=100, num_outliers=100), rng)
    cfg = RansacConfig(num_hypotheses=100, block_size=20, seed=42)
    a = preemptive_ransac(scene.matches, cfg)
    b = preemptive_ransac(scene.matches, cfg)
    assert np.array_equal(a.hypothesis.essential, b.hypothesis.essential) and a.score == b.score


def test_estimate_deterministic_and_clean_scene(rng):
    scene = generate_scene(SceneConfig(num_inliers=200), rng)
    cfg = RansacConfig(num_hypotheses=100, seed=9)
    a = estimate(scene.matches, cfg)
    b = estimate(scene.matches, cfg)
    assert np.array_equal(a.essential, b.essential)
    assert classify_correct(a.essential, scene)


def test_refine_fixed_point(rng):
    for _ in range(10):
        scene = noiseless_scene(rng, 200)
        E0 = normalize_essential(scene.essential)
        assert np.linalg.norm(refine_irls(E0, scene.matches) - E0) < 1e-10


def test_refine_never_worse_than_start(rng):
    cfg = RansacConfig()
    for _ in range(30):
        scene = generate_scene(SceneConfig(num_inliers=100, num_outliers=100), rng)
        m = scene.matches
        E0 = normalize_essential(random_pose(rng).essential)
        E = refine_irls(E0, m, cfg)
        c = lambda X: cauchy_cost(epipolar_error(X, m.q, m.qp), cfg.refine_scale)  # noqa: E731
        assert c(E) <= c(E0)


def test_refine_keeps_sign(rng):
    scene = generate_scene(SceneConfig(num_inliers=200), rng)
    E0 = -normalize_essential(EssentialPose.from_rt(so3_exp((0.01, 0, 0)) @ scene.rotation, scene.translation).essential)
    assert np.sum(refine_irls(E0, scene.matches) * E0) > 0


def _perturbed(scene, rng, size):
    # a pose step whose essential matrix moves by about ``size``
    pose = EssentialPose.from_rt(scene.rotation, scene.translation)
    while True:
        P = pose.updated(rng.normal(scale=size, size=5))
        if abs(essential_distance(P.essential, scene.essential) - size) < 0.5 * size:
            return normalize_essential(P.essential)


@pytest.mark.slow
def test_refine_improves_perturbed_start():
    rng = np.random.default_rng(2024)
    closer = 0
    for _ in range(100):
        scene = generate_scene(SceneConfig(num_inliers=1400, num_outliers=600), rng)
        Et = normalize_essential(scene.essential)
        E0 = _perturbed(scene, rng, 1e-3)
        d0 = essential_distance(E0, Et)
        closer += essential_distance(refine_irls(E0, scene.matches), Et) < d0
    print(f"refine closer in {closer}/100")
    assert closer >= 95


@pytest.mark.slow
def test_gn_half_inliers_reliability():
    correct = 0
    for trial in range(100):
        rng = np.random.default_rng(np.random.SeedSequence(77, spawn_key=(trial,)))
        scene = generate_scene(SceneConfig(num_inliers=250, num_outliers=250), rng)
        cfg = RansacConfig(num_hypotheses=500, block_size=100, algorithm=GN, seed=trial)
        est = estimate(scene.matches, cfg)
        correct += est.essential is not None and classify_correct(est.essential, scene)
    print(f"GN 50% inliers M=500: {correct}/100 correct")
    assert correct >= 90
