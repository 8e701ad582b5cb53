"""Command-line interface: thin delegation onto the core modules.

Exit codes: 0 success, 1 validation failure (bad domain values), 2 usage
error (argparse). Every numeric in the output comes straight from the
underlying module call, rendered through the canonical serializer, so
repeated identical invocations are byte-identical.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import arbiter, matter, serialize
from .config import ConfigError, RunConfig, load_config
from .game import GameParameters, Strategy, StrategyProfile, symmetric_mixed_ne
from .layout import solve_layout
from .serialize import canonical_json


def _parse_coeffs(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 4 comma-separated values t,r,p,s, got {text!r}")
    try:
        return tuple(float(x) for x in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"coefficients must be numbers, got {text!r}")


def _parse_lambda_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"range bounds must be numbers, got {text!r}")
    if not 0 <= lo < hi:
        raise argparse.ArgumentTypeError(f"need 0 <= lo < hi, got {text!r}")
    return lo, hi


def _parse_profile(text: str) -> StrategyProfile:
    try:
        return StrategyProfile.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text}")
    return value


def _config_from_args(args) -> RunConfig:
    cfg = load_config(getattr(args, "config", None))
    coeffs = getattr(args, "coeffs", None)
    overrides = {}
    if coeffs is not None:
        overrides.update(dict(zip("trps", coeffs)))
    for flag, field in (
        ("lam", "lam"),
        ("k", "k"),
        ("mode", "payoff_mode"),
        ("layout", "layout_mode"),
        ("width", "slit_width"),
        ("samples", "grid_samples"),
        ("umax", "grid_umax"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[field] = value
    return cfg.override(**overrides)


def _emit(args, text: str) -> None:
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_round(args) -> int:
    cfg = _config_from_args(args)
    profile = StrategyProfile(Strategy.parse(args.alice), Strategy.parse(args.bob))
    apparatus = cfg.apparatus()
    outcome = arbiter.play_round(profile, apparatus)
    _emit(args, canonical_json(serialize.outcome_dict(outcome, apparatus.params, apparatus.payoff_mode)))
    return 0


def _cmd_sweep(args) -> int:
    cfg = _config_from_args(args)
    if args.lambda_range is not None:
        lo, hi = args.lambda_range
    else:
        lo, hi = cfg.sweep_lo, cfg.sweep_hi
    steps = args.steps if args.steps is not None else cfg.sweep_steps
    if steps < 2:
        raise ConfigError(f"steps must be >= 2, got {steps}")
    result = arbiter.sweep_lambda(lo, hi, steps, cfg.coeffs(), cfg.k)
    if args.format == "csv":
        _emit(args, serialize.sweep_csv(result))
    else:
        _emit(args, canonical_json(serialize.sweep_dict(result, cfg.coeffs(), cfg.k)))
    return 0


def parse_open_tags(text: str | None) -> set[str] | None:
    if text is None:
        return None
    return {tag.strip() for tag in text.split(",") if tag.strip()}


def _cmd_pattern(args) -> int:
    cfg = _config_from_args(args)
    if cfg.lam <= 0:
        raise ConfigError(f"pattern simulation needs lambda > 0, got {cfg.lam}")
    profile = args.profile if args.profile is not None else StrategyProfile.parse("C,C")
    bundle = arbiter.pattern_bundle(profile, cfg.apparatus(), parse_open_tags(args.open))
    if bundle.pattern.all_closed:
        print("warning: all slits closed; pattern is identically zero", file=sys.stderr)
    _emit(args, serialize.pattern_csv(bundle.pattern))
    return 0


def _cmd_geometry(args) -> int:
    cfg = _config_from_args(args)
    solution = solve_layout(cfg.coeffs())
    _emit(args, canonical_json(serialize.layout_dict(solution)))
    return 0


def _cmd_thresholds(args) -> int:
    cfg = _config_from_args(args)
    coeffs = cfg.coeffs()
    wavelength = args.lam if args.lam is not None else None
    classification = None
    mixed = None
    if wavelength is not None:
        params = GameParameters(coeffs, wavelength, cfg.k)
        classification = arbiter.classify_regime(params)
        if args.mixed:
            mixed = symmetric_mixed_ne(params)
    doc = serialize.thresholds_dict(
        coeffs,
        cfg.k,
        arbiter.defection_threshold(coeffs, cfg.k),
        arbiter.cooperation_threshold(coeffs, cfg.k),
        wavelength=wavelength,
        classification=classification,
        mixed=mixed,
    )
    _emit(args, canonical_json(doc))
    return 0


def _cmd_matter(args) -> int:
    cfg = _config_from_args(args)
    scale = matter.UnitScale(args.sigma)
    mass = args.mass
    doc = {
        "mass": mass,
        "sigma": args.sigma,
        "velocity": args.velocity,
    }
    if args.velocity is not None:
        particle = matter.Particle(mass=mass, velocity=args.velocity)
        lam_m = matter.de_broglie_wavelength(particle)
        doc["lambda_meters"] = lam_m
        doc["lambda_game_units"] = lam_m / scale.sigma
    coeffs = cfg.coeffs()
    doc["velocity_bound"] = matter.velocity_bound_for_cooperation(
        coeffs, cfg.k, scale=scale, mass=mass
    )
    if args.target_velocity is not None:
        doc["k_for_target_velocity"] = matter.scaling_factor_for_velocity(
            args.target_velocity, coeffs, scale=scale, mass=mass
        )
    doc["coeffs"] = coeffs.as_dict()
    doc["k"] = cfg.k
    _emit(args, canonical_json(doc))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    cfg = _config_from_args(args)
    port = args.port if args.port is not None else cfg.port
    app = create_app(cfg, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fringe-arena",
        description=(
            "Multi-slit diffraction Prisoners' Dilemma: simulate rounds, sweep the "
            "wavelength, and inspect equilibrium regimes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_game=True):
        p.add_argument("--config", help="path to a JSON config file (else $FRINGE_ARENA_CONFIG)")
        p.add_argument("--output", help="write the result to this file instead of stdout")
        if with_game:
            p.add_argument("--coeffs", type=_parse_coeffs, metavar="t,r,p,s",
                           help="payoff coefficients, strictly decreasing and positive")
            p.add_argument("--k", type=_positive_float, help="payoff scaling factor (u^2)")

    p_round = sub.add_parser("round", help="play one round and print the outcome as JSON")
    add_common(p_round)
    p_round.add_argument("--alice", required=True, choices=["C", "D"], help="Alice's slit choice")
    p_round.add_argument("--bob", required=True, choices=["C", "D"], help="Bob's slit choice")
    p_round.add_argument("--lambda", dest="lam", type=_nonnegative_float, help="wavelength (u)")
    p_round.add_argument("--mode", choices=[arbiter.MODE_DIRECT, arbiter.MODE_MEASURED],
                         help="payoff source: analytic formula or fringe measurement")
    p_round.add_argument("--layout", choices=[arbiter.LAYOUT_ABSTRACT, arbiter.LAYOUT_FIXED])
    p_round.set_defaults(handler=_cmd_round)

    p_sweep = sub.add_parser("sweep", help="classify equilibria over a wavelength range")
    add_common(p_sweep)
    p_sweep.add_argument("--lambda-range", type=_parse_lambda_range, metavar="lo:hi")
    p_sweep.add_argument("--steps", type=int, help="number of grid points (>= 2)")
    p_sweep.add_argument("--format", choices=["json", "csv"], default="json")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_pattern = sub.add_parser("pattern", help="write the diffraction pattern as CSV (u,intensity)")
    add_common(p_pattern)
    p_pattern.add_argument("--profile", type=_parse_profile, metavar="A,B",
                           help="strategy pair like C,C (default C,C)")
    p_pattern.add_argument("--lambda", dest="lam", type=_positive_float, help="wavelength (u)")
    p_pattern.add_argument("--open", metavar="IDS",
                           help="comma-separated slit ids (a_c,a_d,b_c,b_d) forced open, all others closed")
    p_pattern.add_argument("--width", type=_positive_float, help="slit width (u)")
    p_pattern.add_argument("--samples", type=int, help="screen sample count")
    p_pattern.add_argument("--umax", type=_positive_float, help="screen half-range in u")
    p_pattern.add_argument("--layout", choices=[arbiter.LAYOUT_ABSTRACT, arbiter.LAYOUT_FIXED])
    p_pattern.set_defaults(handler=_cmd_pattern)

    p_geometry = sub.add_parser("geometry", help="fixed four-slit window feasibility as JSON")
    add_common(p_geometry)
    p_geometry.set_defaults(handler=_cmd_geometry)

    p_thresholds = sub.add_parser("thresholds", help="regime thresholds (and classification) as JSON")
    add_common(p_thresholds)
    p_thresholds.add_argument("--lambda", dest="lam", type=_nonnegative_float,
                              help="classify this wavelength")
    p_thresholds.add_argument("--mixed", action="store_true",
                              help="include the mixed-equilibrium extension in the report")
    p_thresholds.set_defaults(handler=_cmd_thresholds)

    p_matter = sub.add_parser("matter", help="de Broglie wavelength and k calibration as JSON")
    add_common(p_matter)
    p_matter.add_argument("--velocity", type=_positive_float, help="particle speed (m/s)")
    p_matter.add_argument("--mass", type=_positive_float, default=matter.ELECTRON_MASS,
                          help="particle mass in kg (default: electron)")
    p_matter.add_argument("--sigma", type=_positive_float, default=1.0,
                          help="meters per game length unit")
    p_matter.add_argument("--target-velocity", type=_positive_float,
                          help="report the k that puts the cooperation bound at this speed")
    p_matter.set_defaults(handler=_cmd_matter)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", help="path to a JSON config file (else $FRINGE_ARENA_CONFIG)")
    p_serve.add_argument("--port", type=int, help="listen port (default from config)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--ui", metavar="DIR",
                         help="also serve a built web client (frontend/dist) at /")
    p_serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
