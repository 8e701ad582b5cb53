"""Run configuration: a flat, human-editable JSON file of key-value settings.

Precedence is explicit path > FRINGE_ARENA_CONFIG environment variable >
built-in demo defaults. Unknown keys are rejected with the full list of
offenders so typos never silently fall back to defaults.

The demo defaults use coeffs (5,3,2,1) with k = 100, which puts the
cooperation threshold r*t/k = 0.15 below the smallest slit separation so the
pattern stays physically measurable throughout the cooperation regime.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

from .arbiter import ApparatusConfig, LAYOUT_ABSTRACT, LAYOUT_FIXED, MODE_DIRECT, MODE_MEASURED
from .game import GameParameters, PayoffCoefficients
from .optics import Detector, ScreenGrid, default_grid

ENV_CONFIG_PATH = "FRINGE_ARENA_CONFIG"


class ConfigError(ValueError):
    """Invalid or malformed run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """Flat bag of every tunable: game, apparatus, service, and output settings.

    `None` for slit_width, grid_umax, or detector_bin_width means "derive":
    slit width d_min/20, screen half-range min(1, 6*lambda/d_min), detector
    bin equal to the simulation grid step.
    """

    t: float = 5.0
    r: float = 3.0
    p: float = 2.0
    s: float = 1.0
    k: float = 100.0
    lam: float = 0.2
    payoff_mode: str = MODE_DIRECT
    layout_mode: str = LAYOUT_ABSTRACT
    slit_width: float | None = None
    grid_samples: int = 4096
    grid_umax: float | None = None
    detector_bin_width: float | None = None
    peak_threshold: float = 0.05
    min_resolvable_spacing_bins: int = 2
    sigma: float = 1.0
    port: int = 8000
    sweep_lo: float = 0.0
    sweep_hi: float = 0.3
    sweep_steps: int = 64
    output_dir: str | None = None

    def coeffs(self) -> PayoffCoefficients:
        return PayoffCoefficients(t=self.t, r=self.r, p=self.p, s=self.s)

    def parameters(self, wavelength: float | None = None) -> GameParameters:
        lam = self.lam if wavelength is None else wavelength
        return GameParameters(self.coeffs(), lam, self.k)

    def screen_grid(self, wavelength: float) -> ScreenGrid | None:
        """Concrete grid: explicit half-range when set, else the lambda-derived
        default; None only when wavelength is 0 (nothing to simulate)."""
        if self.grid_umax is not None:
            return ScreenGrid(-self.grid_umax, self.grid_umax, self.grid_samples)
        if wavelength > 0:
            return default_grid(wavelength, self.coeffs().min_separation, self.grid_samples)
        return None

    def build_detector(self, grid: ScreenGrid) -> Detector:
        """Detector for a concrete grid, deriving bin width from the grid step
        when unset."""
        return Detector(
            bin_width=self.detector_bin_width if self.detector_bin_width is not None else grid.step,
            peak_threshold=self.peak_threshold,
            min_resolvable_spacing_bins=self.min_resolvable_spacing_bins,
        )

    def apparatus(
        self,
        wavelength: float | None = None,
        payoff_mode: str | None = None,
    ) -> ApparatusConfig:
        params = self.parameters(wavelength)
        grid = self.screen_grid(params.wavelength)
        return ApparatusConfig(
            params=params,
            layout_mode=self.layout_mode,
            slit_width=self.slit_width,
            grid=grid,
            detector=self.build_detector(grid) if grid is not None else None,
            payoff_mode=self.payoff_mode if payoff_mode is None else payoff_mode,
        )

    def to_dict(self) -> dict:
        doc = {}
        for field_name in _FIELD_TYPES:
            key = "lambda" if field_name == "lam" else field_name
            doc[key] = getattr(self, field_name)
        return doc

    def override(self, **kwargs) -> "RunConfig":
        provided = {k: v for k, v in kwargs.items() if v is not None}
        if not provided:
            return self
        cfg = replace(self, **provided)
        _validate(cfg)
        return cfg


_FIELD_TYPES = {
    "t": float,
    "r": float,
    "p": float,
    "s": float,
    "k": float,
    "lam": float,
    "payoff_mode": str,
    "layout_mode": str,
    "slit_width": (float, type(None)),
    "grid_samples": int,
    "grid_umax": (float, type(None)),
    "detector_bin_width": (float, type(None)),
    "peak_threshold": float,
    "min_resolvable_spacing_bins": int,
    "sigma": float,
    "port": int,
    "sweep_lo": float,
    "sweep_hi": float,
    "sweep_steps": int,
    "output_dir": (str, type(None)),
}


def _coerce(field_name: str, value):
    expected = _FIELD_TYPES[field_name]
    if isinstance(expected, tuple):
        if value is None:
            return None
        expected = expected[0]
    if expected is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"config key for {field_name!r} must be a number, got {value!r}")
        return float(value)
    if expected is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"config key for {field_name!r} must be an integer, got {value!r}")
        return value
    if expected is str and not isinstance(value, str):
        raise ConfigError(f"config key for {field_name!r} must be a string, got {value!r}")
    return value


def _validate(cfg: RunConfig) -> None:
    cfg.coeffs()  # raises on ordering/positivity violations
    if cfg.lam < 0:
        raise ConfigError(f"lambda must be >= 0, got {cfg.lam}")
    if cfg.k <= 0:
        raise ConfigError(f"k must be > 0, got {cfg.k}")
    if cfg.payoff_mode not in (MODE_DIRECT, MODE_MEASURED):
        raise ConfigError(f"payoff_mode must be direct or measured, got {cfg.payoff_mode!r}")
    if cfg.layout_mode not in (LAYOUT_ABSTRACT, LAYOUT_FIXED):
        raise ConfigError(f"layout_mode must be abstract or fixed_window, got {cfg.layout_mode!r}")
    if cfg.grid_samples < 16:
        raise ConfigError(f"grid_samples must be >= 16, got {cfg.grid_samples}")
    if cfg.grid_umax is not None and not 0 < cfg.grid_umax <= 1:
        raise ConfigError(f"grid_umax must be in (0, 1], got {cfg.grid_umax}")
    if cfg.slit_width is not None and cfg.slit_width <= 0:
        raise ConfigError(f"slit_width must be > 0, got {cfg.slit_width}")
    if cfg.detector_bin_width is not None and cfg.detector_bin_width <= 0:
        raise ConfigError(f"detector_bin_width must be > 0, got {cfg.detector_bin_width}")
    if not 0 < cfg.peak_threshold < 1:
        raise ConfigError(f"peak_threshold must be in (0,1), got {cfg.peak_threshold}")
    if cfg.min_resolvable_spacing_bins < 2:
        raise ConfigError("min_resolvable_spacing_bins must be >= 2")
    if cfg.sigma <= 0:
        raise ConfigError(f"sigma must be > 0, got {cfg.sigma}")
    if not 0 <= cfg.sweep_lo < cfg.sweep_hi:
        raise ConfigError(f"need 0 <= sweep_lo < sweep_hi, got [{cfg.sweep_lo}, {cfg.sweep_hi}]")
    if cfg.sweep_steps < 2:
        raise ConfigError(f"sweep_steps must be >= 2, got {cfg.sweep_steps}")
    if not 0 < cfg.port < 65536:
        raise ConfigError(f"port must be in (0, 65536), got {cfg.port}")


def load_config(path: str | Path | None = None) -> RunConfig:
    """Load the run configuration, rejecting unknown keys.

    With no explicit path, FRINGE_ARENA_CONFIG names the file; with neither,
    built-in defaults apply.
    """
    if path is None:
        env_path = os.environ.get(ENV_CONFIG_PATH)
        if env_path:
            path = env_path
    if path is None:
        cfg = RunConfig()
        _validate(cfg)
        return cfg

    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must hold a JSON object of key-value settings")

    known = {("lambda" if f == "lam" else f): f for f in _FIELD_TYPES}
    unknown = sorted(set(raw) - set(known))
    if unknown:
        raise ConfigError(
            f"unknown config keys {unknown} in {path}; known keys: {sorted(known)}"
        )
    values = {known[key]: _coerce(known[key], value) for key, value in raw.items()}
    cfg = RunConfig(**values)
    _validate(cfg)
    return cfg
