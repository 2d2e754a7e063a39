"""Command-line interface: ``essransac {synth,estimate,bench,curves}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields, replace


from . import bench
from .errors import EssransacError
from .ransac import RansacConfig, count_inliers, estimate, relative_pose_or_none
from .solvers.iterative import GENERATOR_NAMES, GN, SolverConfig
from .synth import SceneConfig, generate_scene


def load_config(path):
    """``(SolverConfig, RansacConfig)`` from a JSON file with optional
    ``"solver"`` and ``"ransac"`` objects of field overrides."""
    solver_cfg, ransac_cfg = SolverConfig(), RansacConfig()
    if path is None:
        return solver_cfg, ransac_cfg
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict) or data.keys() - {"solver", "ransac"}:
        raise ValueError('config must be an object with optional "solver" and "ransac" keys')
    for section, cfg in (("solver", solver_cfg), ("ransac", ransac_cfg)):
        over = data.get(section, {})
        known = {f.name for f in fields(cfg)}
        unknown = set(over) - known
        if unknown:
            raise ValueError(f"unknown {section} config keys: {sorted(unknown)}")
        if section == "solver":
            solver_cfg = replace(cfg, **over)
        else:
            ransac_cfg = replace(cfg, **over)
    return solver_cfg, ransac_cfg


def _cmd_synth(args) -> int:
    cfg = SceneConfig(
        fov_degrees=args.fov,
        max_translation=args.max_translation,
        max_rotation_degrees=args.max_rotation,
        noise_sigma=args.noise,
        num_inliers=args.inliers,
        num_outliers=args.outliers,
        seed=args.seed,
    )
    scene = generate_scene(cfg)
    header = [
        f"seed {args.seed}",
        "essential " + " ".join(f"{v:.17g}" for v in scene.essential.ravel()),
        "rotation " + " ".join(f"{v:.17g}" for v in scene.rotation.ravel()),
        "translation " + " ".join(f"{v:.17g}" for v in scene.translation),
        "columns: qx qy q'x q'y inlier",
    ]
    bench.write_matches(args.output, scene.matches, header)
    return 0


def _cmd_estimate(args) -> int:
    solver_cfg, ransac_cfg = load_config(args.config)
    over = {}
    if args.algorithm is not None:
        over["algorithm"] = args.algorithm
    if args.hypotheses is not None:
        over["num_hypotheses"] = args.hypotheses
    if args.block_size is not None:
        over["block_size"] = args.block_size
    if args.seed is not None:
        over["seed"] = args.seed
    if args.no_refine:
        over["refine"] = False
    cfg = replace(ransac_cfg, **over)
    matches = bench.read_matches(args.matches)
    est = estimate(matches, cfg, solver_cfg)
    out = {"num_matches": len(matches), "hypotheses": est.pool_size, "generator_calls": est.attempts}
    if est.essential is None:
        out.update(essential=None, rotation=None, translation=None, inliers=0)
    else:
        E = est.essential
        pose = relative_pose_or_none(E, matches, cfg.inlier_threshold)
        out.update(
            essential=E.tolist(),
            rotation=None if pose is None else pose.rotation.tolist(),
            translation=None if pose is None else pose.translation.tolist(),
            inliers=count_inliers(E, matches, cfg.inlier_threshold),
        )
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if est.essential is not None else 1


def _cmd_bench(args) -> int:
    solver_cfg, ransac_cfg = load_config(args.config)
    points = bench.load_grid(args.grid)
    if args.seed is not None:
        points = [replace(p, seed=args.seed) for p in points]
    results = bench.run_grid(points, args.threads, solver_cfg, ransac_cfg)
    bench.emit_results(bench.reliability(results), args.output, args.format)
    return 0


def _cmd_curves(args) -> int:
    text = bench.curves(bench.read_results(args.results))
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.output, "w") as f:
                f.write(text)
        except OSError as exc:
            raise EssransacError(f"cannot write curves to {args.output}: {exc.strerror or exc}") from exc
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="essransac", description="Robust essential-matrix estimation and benchmarks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synth", help="write a synthetic matches file")
    s.add_argument("output", help="matches file to write")
    s.add_argument("--inliers", type=int, default=100)
    s.add_argument("--outliers", type=int, default=0)
    s.add_argument("--noise", type=float, default=0.001, help="noise sigma in normalized units")
    s.add_argument("--fov", type=float, default=90.0, help="field of view in degrees")
    s.add_argument("--max-rotation", type=float, default=35.0, help="degrees")
    s.add_argument("--max-translation", type=float, default=1.0)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_synth)

    e = sub.add_parser("estimate", help="estimate E from a matches file and print JSON")
    e.add_argument("matches")
    e.add_argument("--algorithm", choices=GENERATOR_NAMES, default=None, help=f"generator (default {GN})")
    e.add_argument("--hypotheses", type=int, default=None)
    e.add_argument("--block-size", type=int, default=None)
    e.add_argument("--no-refine", action="store_true")
    e.add_argument("--seed", type=int, default=None)
    e.add_argument("--config", default=None, help="JSON with solver/ransac overrides")
    e.set_defaults(func=_cmd_estimate)

    b = sub.add_parser("bench", help="run a grid file and write a reliability table")
    b.add_argument("grid", help="JSON array of grid entries")
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--format", choices=("csv", "json"), default="csv")
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--seed", type=int, default=None, help="override every entry's base seed")
    b.add_argument("--config", default=None, help="JSON with solver/ransac overrides")
    b.set_defaults(func=_cmd_bench)

    c = sub.add_parser("curves", help="reliability-vs-time plot data from a results table")
    c.add_argument("results")
    c.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    c.set_defaults(func=_cmd_curves)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EssransacError, ValueError, OSError) as exc:
        print(f"essransac: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
