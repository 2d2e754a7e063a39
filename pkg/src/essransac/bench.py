"""Seeded benchmark trials, reliability tables and plot data."""

from __future__ import annotations

import csv
import json
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EssransacError
from .geom import Matches
from .ransac import RansacConfig, draw_rng, draw_subset, estimate
from .solvers.iterative import GENERATOR_NAMES, SolverConfig
from .synth import DEFAULT_CORRECT_THRESHOLD, SceneConfig, classify_correct, generate_scene

GROUP_KEYS = ("algorithm", "inlier_fraction", "num_matches", "hypotheses", "block_size")
CSV_COLUMNS = GROUP_KEYS + (
    "trials",
    "reliability",
    "reliability_lo",
    "reliability_hi",
    "mean_time_s",
    "median_time_s",
)
TIMING_COLUMNS = ("mean_time_s", "median_time_s")
WILSON_Z = 1.959963984540054


@dataclass(frozen=True)
class BenchPoint:
    """One grid entry: ``trials`` seeded runs of one configuration."""

    algorithm: str
    inlier_fraction: float
    num_matches: int
    hypotheses: int
    block_size: int
    trials: int
    seed: int
    noise_sigma: float = 0.001

    def __post_init__(self):
        if self.algorithm not in GENERATOR_NAMES:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {GENERATOR_NAMES}")
        if not 0.0 < self.inlier_fraction <= 1.0:
            raise ValueError("inlier_fraction must lie in (0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.num_matches < 1 or self.hypotheses < 0 or self.block_size < 1:
            raise ValueError("num_matches and block_size must be >= 1, hypotheses >= 0")

    @property
    def num_inliers(self) -> int:
        return int(round(self.inlier_fraction * self.num_matches))

    def key(self) -> tuple:
        return tuple(getattr(self, k) for k in GROUP_KEYS)


@dataclass(frozen=True)
class TrialResult:
    algorithm: str
    inlier_fraction: float
    num_matches: int
    hypotheses: int
    block_size: int
    trial: int
    seed: int
    wall_time_s: float
    correct: bool
    hypotheses_generated: int
    generator_successes: int

    def key(self) -> tuple:
        return tuple(getattr(self, k) for k in GROUP_KEYS)


_POINT_FIELDS = {f.name for f in fields(BenchPoint)}
_REQUIRED_FIELDS = _POINT_FIELDS - {"noise_sigma"}


def parse_grid(entries) -> list[BenchPoint]:
    if not isinstance(entries, list):
        raise ValueError("grid must be a JSON array of objects")
    points = []
    for i, e in enumerate(entries):
        if not isinstance(e, dict):
            raise ValueError(f"grid entry {i} is not an object")
        missing = _REQUIRED_FIELDS - e.keys()
        extra = e.keys() - _POINT_FIELDS
        if missing or extra:
            raise ValueError(f"grid entry {i}: missing {sorted(missing)}, unknown {sorted(extra)}")
        points.append(
            BenchPoint(
                algorithm=str(e["algorithm"]),
                inlier_fraction=float(e["inlier_fraction"]),
                num_matches=int(e["num_matches"]),
                hypotheses=int(e["hypotheses"]),
                block_size=int(e["block_size"]),
                trials=int(e["trials"]),
                seed=int(e["seed"]),
                noise_sigma=float(e.get("noise_sigma", 0.001)),
            )
        )
    return points


def load_grid(path) -> list[BenchPoint]:
    with open(path) as f:
        return parse_grid(json.load(f))


def trial_seeds(point: BenchPoint, trial: int) -> tuple[np.random.SeedSequence, int]:
    """Scene seed sequence and RANSAC seed of one trial.

    Both depend only on the base seed and the trial index, so different
    algorithms at the same grid coordinates see the same scenes.
    """
    ss = np.random.SeedSequence(point.seed, spawn_key=(trial,))
    scene_ss, ransac_ss = ss.spawn(2)
    return scene_ss, int(ransac_ss.generate_state(1, dtype=np.uint64)[0])


def run_trial(
    point: BenchPoint,
    trial: int,
    solver_cfg: Optional[SolverConfig] = None,
    ransac_cfg: Optional[RansacConfig] = None,
    threshold: float = DEFAULT_CORRECT_THRESHOLD,
) -> TrialResult:
    """Scene, preemptive RANSAC, refinement and classification.

    Only the estimation is timed.
    """
    scene_ss, ransac_seed = trial_seeds(point, trial)
    n_in = point.num_inliers
    scene_cfg = SceneConfig(
        noise_sigma=point.noise_sigma, num_inliers=n_in, num_outliers=point.num_matches - n_in
    )
    scene = generate_scene(scene_cfg, np.random.default_rng(scene_ss))
    cfg = replace(
        ransac_cfg or RansacConfig(),
        num_hypotheses=point.hypotheses,
        block_size=point.block_size,
        algorithm=point.algorithm,
        seed=ransac_seed,
    )
    start = time.perf_counter()
    est = estimate(scene.matches, cfg, solver_cfg)
    elapsed = time.perf_counter() - start
    return TrialResult(
        algorithm=point.algorithm,
        inlier_fraction=point.inlier_fraction,
        num_matches=point.num_matches,
        hypotheses=point.hypotheses,
        block_size=point.block_size,
        trial=trial,
        seed=point.seed,
        wall_time_s=elapsed,
        correct=bool(n_in > 0 and classify_correct(est.essential, scene, threshold)),
        hypotheses_generated=est.attempts,
        generator_successes=est.pool_size,
    )


def _run_job(args) -> TrialResult:
    return run_trial(*args)


def run_grid(
    points: Sequence[BenchPoint],
    threads: int = 1,
    solver_cfg: Optional[SolverConfig] = None,
    ransac_cfg: Optional[RansacConfig] = None,
) -> list[TrialResult]:
    """All trials of all points, in grid order; ``threads > 1`` uses worker processes."""
    jobs = [(p, t, solver_cfg, ransac_cfg) for p in points for t in range(p.trials)]
    if threads <= 1:
        return [_run_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(_run_job, jobs, chunksize=max(1, len(jobs) // (4 * threads))))


def wilson_interval(k: int, n: int, z: float = WILSON_Z) -> tuple[float, float]:
    if n <= 0:
        raise ValueError("Wilson interval needs n >= 1")
    p = k / n
    z2 = z * z
    denom = 1.0 + z2 / n
    centre = (p + z2 / (2 * n)) / denom
    half = z * math.sqrt(p * (1.0 - p) / n + z2 / (4 * n * n)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


def usable_set_rate(
    num_matches: int, inlier_fraction: float, set_size: int, required: int, draws: int, seed=None
) -> float:
    """Fraction of sampled sets holding at least ``required`` inliers.

    Sets are drawn exactly as the generators draw them, from a match list
    with ``round(inlier_fraction * num_matches)`` inliers.
    """
    labels = np.zeros(num_matches, bool)
    labels[: int(round(inlier_fraction * num_matches))] = True
    hits = 0
    for k in range(draws):
        idx = draw_subset(num_matches, set_size, draw_rng(seed, k))
        hits += np.count_nonzero(labels[idx]) >= required
    return hits / draws


def reliability(results: Iterable[TrialResult]) -> list[dict]:
    """One row per grid coordinate with the fraction correct and timing stats."""
    groups: dict = {}
    for r in results:
        groups.setdefault(r.key(), []).append(r)
    rows = []
    for key in sorted(groups):
        rs = groups[key]
        n = len(rs)
        k = sum(r.correct for r in rs)
        lo, hi = wilson_interval(k, n)
        times = [r.wall_time_s for r in rs]
        row = dict(zip(GROUP_KEYS, key))
        row.update(
            trials=n,
            reliability=k / n,
            reliability_lo=lo,
            reliability_hi=hi,
            mean_time_s=statistics.fmean(times),
            median_time_s=statistics.median(times),
        )
        rows.append(row)
    return rows


def _coerce_row(row: dict) -> dict:
    out = {}
    for c in CSV_COLUMNS:
        v = row[c]
        if c == "algorithm":
            out[c] = str(v)
        elif c in ("num_matches", "hypotheses", "block_size", "trials"):
            out[c] = int(v)
        else:
            out[c] = float(v)
    return out


def emit_results(rows: Sequence[dict], path, fmt: str = "csv") -> None:
    """Write the reliability table as CSV or JSON."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    rows = [_coerce_row(r) for r in rows]
    try:
        with open(path, "w", newline="") as f:
            if fmt == "csv":
                w = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
                w.writeheader()
                w.writerows(rows)
            else:
                json.dump(rows, f, indent=2)
                f.write("\n")
    except OSError as exc:
        raise EssransacError(f"cannot write results to {os.fspath(path)}: {exc.strerror or exc}") from exc


def read_results(path) -> list[dict]:
    """Read a table written by :func:`emit_results` (format from the content)."""
    with open(path) as f:
        text = f.read()
    if text.lstrip().startswith("["):
        rows = json.loads(text)
    else:
        rows = list(csv.DictReader(text.splitlines()))
    return [_coerce_row(r) for r in rows]


SERIES_KEYS = ("algorithm", "inlier_fraction", "num_matches", "block_size")


def curves(rows: Sequence[dict]) -> str:
    """Reliability-vs-time plot data.

    One block per series (algorithm, inlier fraction, match count, block
    size), points ordered by hypothesis budget, columns ``mean_time_s
    reliability``.  Blocks are separated by a blank line.
    """
    series: dict = {}
    for r in rows:
        series.setdefault(tuple(r[k] for k in SERIES_KEYS), []).append(r)
    blocks = []
    for key in sorted(series):
        pts = sorted(series[key], key=lambda r: r["hypotheses"])
        lines = ["# " + " ".join(f"{k}={v}" for k, v in zip(SERIES_KEYS, key)), "# mean_time_s reliability"]
        lines += [f"{r['mean_time_s']:.9g} {r['reliability']:.9g}" for r in pts]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def strip_timing(rows: Sequence[dict]) -> list[dict]:
    return [{k: v for k, v in r.items() if k not in TIMING_COLUMNS} for r in rows]


def write_matches(path, matches, header: Sequence[str] = ()) -> None:
    """Matches file: ``qx qy q'x q'y [label]`` per line, ``#`` comments."""
    q = matches.q[:, :2] / matches.q[:, 2:]
    qp = matches.qp[:, :2] / matches.qp[:, 2:]
    try:
        with open(path, "w") as f:
            for line in header:
                f.write(f"# {line}\n")
            for i in range(len(q)):
                row = f"{q[i, 0]:.17g} {q[i, 1]:.17g} {qp[i, 0]:.17g} {qp[i, 1]:.17g}"
                if matches.labels is not None:
                    row += f" {int(matches.labels[i])}"
                f.write(row + "\n")
    except OSError as exc:
        raise EssransacError(f"cannot write matches to {os.fspath(path)}: {exc.strerror or exc}") from exc


def parse_matches(lines: Iterable[str]):
    """Parse matches-file lines into :class:`Matches` (labels kept if every row has one)."""
    rows, labels = [], []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (4, 5):
            raise ValueError(f"line {lineno}: expected 4 or 5 fields, got {len(parts)}")
        try:
            rows.append([float(v) for v in parts[:4]])
            if len(parts) == 5:
                if parts[4] not in ("0", "1"):
                    raise ValueError
                labels.append(parts[4] == "1")
        except ValueError:
            raise ValueError(f"line {lineno}: malformed field in {raw.strip()!r}") from None
    if labels and len(labels) != len(rows):
        raise ValueError("labels must be given on every line or on none")
    xy = np.array(rows, dtype=float).reshape(-1, 4)
    return Matches.from_xy(xy, np.array(labels) if labels else None)


def read_matches(path):
    with open(path) as f:
        return parse_matches(f)
