import numpy as np
import pytest

from essransac.geom import Matches
from essransac.synth import SceneConfig, generate_scene


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def noiseless_scene(rng, n=5, **kw):
    return generate_scene(SceneConfig(noise_sigma=0.0, num_inliers=n, **kw), rng)


def random_matches(rng, n):
    return Matches(rng.normal(size=(n, 3)), rng.normal(size=(n, 3)))


# PASS/FAIL lines recorded by the acceptance suite, echoed after the run.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
