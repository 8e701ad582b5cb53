"""Round execution, regime classification, and wavelength sweeps.

The arbiter knows the source wavelength, builds the aperture the players'
moves imply, simulates the pattern, and reads the payoff off the fringe
spacing: d is inferred as lambda/delta_u and the focal payoff is
d_inferred + k*delta_u. A pattern too fine for the detector collapses the
round to the classical game, which is how the classical limit emerges from
the apparatus instead of being special-cased.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .game import (
    GameParameters,
    PayoffCoefficients,
    PayoffPair,
    Strategy,
    StrategyProfile,
    focal_payoff,
    quantum_payoff,
    separation_for_profile,
)
from .layout import abstract_window_for_profile, fixed_window, solve_layout, state_for_profile
from .optics import (
    ApertureWindow,
    Detector,
    DiffractionPattern,
    FringeMeasurement,
    ScreenGrid,
    SlitState,
    central_peak_region,
    default_grid,
    intensity_pattern,
    measure_fringe_spacing,
    peak_estimates,
)

LAYOUT_ABSTRACT = "abstract"
LAYOUT_FIXED = "fixed_window"

MODE_DIRECT = "direct"
MODE_MEASURED = "measured"

REGIME_CLASSICAL = "classical_unresolved"
REGIME_QUANTUM = "quantum_resolved"

CLASSIFICATION_DEFECTION = "defection_ne"
CLASSIFICATION_COOPERATION = "cooperation_ne"
CLASSIFICATION_BOTH = "both"
CLASSIFICATION_NONE = "no_pure_symmetric_ne"


def defection_threshold(coeffs: PayoffCoefficients, k: float) -> float:
    """Largest wavelength at which defection stays a symmetric NE: s*p/k."""
    return coeffs.s * coeffs.p / k


def cooperation_threshold(coeffs: PayoffCoefficients, k: float) -> float:
    """Smallest wavelength at which cooperation becomes a symmetric NE: r*t/k."""
    return coeffs.r * coeffs.t / k


@dataclass(frozen=True)
class ApparatusConfig:
    """Everything a round needs besides the players' moves.

    Derived defaults: slit width d_min/20, screen grid 4096 samples over
    |u| <= min(1, 6*lambda/d_min), detector bin width equal to the grid step.
    The slit widths and screen geometry are implementation choices; only the
    separations themselves are dictated by the payoff matrix.
    """

    params: GameParameters
    layout_mode: str = LAYOUT_ABSTRACT
    slit_width: float | None = None
    grid: ScreenGrid | None = None
    detector: Detector | None = None
    payoff_mode: str = MODE_DIRECT

    def __post_init__(self) -> None:
        if self.layout_mode not in (LAYOUT_ABSTRACT, LAYOUT_FIXED):
            raise ValueError(f"unknown layout mode {self.layout_mode!r}")
        if self.payoff_mode not in (MODE_DIRECT, MODE_MEASURED):
            raise ValueError(f"unknown payoff mode {self.payoff_mode!r}")
        if self.slit_width is not None and not self.slit_width > 0:
            raise ValueError(f"slit width must be > 0, got {self.slit_width}")

    def resolved_slit_width(self) -> float:
        if self.slit_width is not None:
            return self.slit_width
        return self.params.coeffs.min_separation / 20

    def resolved_grid(self) -> ScreenGrid:
        if self.grid is not None:
            return self.grid
        return default_grid(self.params.wavelength, self.params.coeffs.min_separation)

    def resolved_detector(self, grid: ScreenGrid) -> Detector:
        if self.detector is not None:
            return self.detector
        return Detector(bin_width=grid.step)


@dataclass(frozen=True)
class GameOutcome:
    """Result of one round: payoffs, regime tag, and the measurement behind them.

    `payoff_discrepancy` is the worst per-player gap between the payoffs
    actually assigned and the analytic d + k*lambda/d values; it is 0 in
    direct mode by construction.
    """

    profile: StrategyProfile
    payoffs: PayoffPair
    regime: str
    measurement: FringeMeasurement | None
    payoff_discrepancy: float


def aperture_for_profile(
    profile: StrategyProfile, config: ApparatusConfig
) -> tuple[ApertureWindow, SlitState]:
    """Build the aperture the profile implies under the configured layout mode.

    Fixed-window mode falls back to the per-round abstract aperture whenever
    the coefficients admit no exact four-slit layout (or the slits would
    overlap at this width); the least-squares layout is never used for play.
    """
    width = config.resolved_slit_width()
    if config.layout_mode == LAYOUT_FIXED:
        solution = solve_layout(config.params.coeffs)
        if solution.feasible:
            try:
                window = fixed_window(solution, width)
            except ValueError:
                pass
            else:
                return window, state_for_profile(window, profile)
    return abstract_window_for_profile(profile, config.params.coeffs, width)


@dataclass(frozen=True, eq=False)
class PatternBundle:
    """A simulated pattern with everything the measurement pipeline extracted."""

    window: ApertureWindow
    state: SlitState
    pattern: DiffractionPattern
    peaks: list[float]
    used_peaks: list[float]
    measurement: FringeMeasurement | None


def pattern_bundle(
    profile: StrategyProfile,
    config: ApparatusConfig,
    open_tags: set[str] | None = None,
) -> PatternBundle:
    """Simulate the profile's pattern and run the full measurement pipeline.

    `open_tags`, when given, forces exactly those slit ids (a_c, a_d, b_c,
    b_d) open and every other slit closed; an all-closed override yields the
    flagged zero pattern rather than an error.
    """
    if not config.params.wavelength > 0:
        raise ValueError("pattern simulation needs wavelength > 0")
    window, state = aperture_for_profile(profile, config)
    if open_tags is not None:
        tags = [slit.tag for slit in window.slits]
        unknown = set(open_tags) - {t for t in tags if t}
        if unknown:
            raise ValueError(
                f"unknown slit ids {sorted(unknown)}; this window has {sorted(t for t in tags if t)}"
            )
        state = SlitState(tuple(tag in open_tags for tag in tags))
    grid = config.resolved_grid()
    detector = config.resolved_detector(grid)
    pattern = intensity_pattern(window, state, config.params.wavelength, grid)
    if pattern.all_closed:
        return PatternBundle(window, state, pattern, [], [], None)
    positions, heights = peak_estimates(pattern, detector)
    measurement = measure_fringe_spacing(
        positions, config.params.wavelength, detector, heights=heights
    )
    used = central_peak_region(positions, heights) if positions.size else positions
    return PatternBundle(
        window,
        state,
        pattern,
        [float(x) for x in positions],
        [float(x) for x in used],
        measurement,
    )


def play_round(profile: StrategyProfile, config: ApparatusConfig) -> GameOutcome:
    """Execute one round: aperture, pattern, measurement, payoffs.

    Direct mode assigns the analytic payoffs and uses the simulation only for
    the regime tag and measurement report. Measured mode assigns the focal
    player d_inferred + k*delta_u from the pattern; the non-focal payoff uses
    the symmetry relabeling with its own analytic separation. Unresolved
    patterns (including lambda = 0) fall back to the classical matrix
    entries under the classical_unresolved regime.
    """
    params = config.params
    analytic = quantum_payoff(profile, params)

    measurement: FringeMeasurement | None = None
    if params.wavelength > 0:
        measurement = pattern_bundle(profile, config).measurement

    resolved = measurement is not None and measurement.resolved

    if config.payoff_mode == MODE_DIRECT:
        payoffs = analytic
    elif resolved:
        focal = measurement.d_inferred + params.k * measurement.delta_u
        payoffs = PayoffPair(alice=focal, bob=analytic.bob)
    else:
        payoffs = PayoffPair(
            alice=separation_for_profile(profile, params.coeffs),
            bob=separation_for_profile(profile.swapped(), params.coeffs),
        )

    discrepancy = max(abs(payoffs.alice - analytic.alice), abs(payoffs.bob - analytic.bob))
    return GameOutcome(
        profile=profile,
        payoffs=payoffs,
        regime=REGIME_QUANTUM if resolved else REGIME_CLASSICAL,
        measurement=measurement,
        payoff_discrepancy=discrepancy,
    )


def classify_regime(params: GameParameters) -> str:
    """Threshold-form regime of the pure symmetric equilibria at this wavelength.

    Defection holds up to s*p/k, cooperation from r*t/k; the band between has
    no pure symmetric NE. Valid coefficient orderings force s*p < r*t, so
    `both` can only arise if the thresholds coincide.
    """
    lam = params.wavelength
    low = defection_threshold(params.coeffs, params.k)
    high = cooperation_threshold(params.coeffs, params.k)
    defection = lam <= low
    cooperation = lam >= high
    if defection and cooperation:
        return CLASSIFICATION_BOTH
    if defection:
        return CLASSIFICATION_DEFECTION
    if cooperation:
        return CLASSIFICATION_COOPERATION
    return CLASSIFICATION_NONE


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Classification over a wavelength grid plus detected and analytic thresholds.

    `payoff_table` columns follow the export order: payoff_CC, payoff_DD,
    payoff_CD_focal, payoff_DC_focal.
    """

    lambda_grid: np.ndarray
    classifications: list[str]
    detected_low: float | None
    detected_high: float | None
    analytic_low: float
    analytic_high: float
    payoff_table: np.ndarray


_SWEEP_PROFILES = (
    StrategyProfile(Strategy.COOPERATE, Strategy.COOPERATE),
    StrategyProfile(Strategy.DEFECT, Strategy.DEFECT),
    StrategyProfile(Strategy.COOPERATE, Strategy.DEFECT),
    StrategyProfile(Strategy.DEFECT, Strategy.COOPERATE),
)


def _bisect_threshold(
    inequality,
    lo: float,
    hi: float,
    tolerance: float,
) -> float | None:
    """Root of a monotone NE inequality inside [lo, hi], or None when not bracketed."""
    f_lo, f_hi = inequality(lo), inequality(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        return None
    return float(bisect(inequality, lo, hi, xtol=tolerance))


def sweep_lambda(
    lo: float,
    hi: float,
    steps: int,
    coeffs: PayoffCoefficients,
    k: float,
) -> SweepResult:
    """Classify every grid wavelength and locate the regime boundaries.

    Boundaries are found by bisection on the relevant NE inequality (both are
    monotone in lambda) to 1e-9 of the range width; when a threshold lies
    outside [lo, hi] it is reported absent while the grid classifications are
    still returned.
    """
    if not 0 <= lo < hi:
        raise ValueError(f"need 0 <= lo < hi, got [{lo}, {hi}]")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")

    grid = np.linspace(lo, hi, steps)
    classifications = [
        classify_regime(GameParameters(coeffs, float(lam), k)) for lam in grid
    ]
    table = np.empty((steps, 4))
    for i, lam in enumerate(grid):
        params = GameParameters(coeffs, float(lam), k)
        table[i] = [focal_payoff(p, params) for p in _SWEEP_PROFILES]

    tolerance = 1e-9 * (hi - lo)

    def defection_gap(lam: float) -> float:
        params = GameParameters(coeffs, lam, k)
        return focal_payoff(StrategyProfile(Strategy.DEFECT, Strategy.DEFECT), params) - focal_payoff(
            StrategyProfile(Strategy.COOPERATE, Strategy.DEFECT), params
        )

    def cooperation_gap(lam: float) -> float:
        params = GameParameters(coeffs, lam, k)
        return focal_payoff(
            StrategyProfile(Strategy.COOPERATE, Strategy.COOPERATE), params
        ) - focal_payoff(StrategyProfile(Strategy.DEFECT, Strategy.COOPERATE), params)

    return SweepResult(
        lambda_grid=grid,
        classifications=classifications,
        detected_low=_bisect_threshold(defection_gap, lo, hi, tolerance),
        detected_high=_bisect_threshold(cooperation_gap, lo, hi, tolerance),
        analytic_low=defection_threshold(coeffs, k),
        analytic_high=cooperation_threshold(coeffs, k),
        payoff_table=table,
    )
