"""Scalar Fraunhofer diffraction engine over the angular coordinate u = sin(theta).

With u as the screen coordinate the interference maxima of two equal slits of
separation d sit exactly at u = m*lambda/d, so the measured peak-to-peak
spacing equals lambda/d with no small-angle approximation in the interference
term. The amplitude of each rectangular slit is summed in closed form (sinc
envelope times a phase factor), which keeps the engine exact for rectangular
apertures and removes aperture discretization as an error source.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.signal import find_peaks

OWNER_ALICE = "alice"
OWNER_BOB = "bob"


@dataclass(frozen=True)
class Slit:
    """One rectangular slit: center position and width in game length units.

    `owner` and `label` tie a slit to a player's strategy; both may be None
    for anonymous apertures.
    """

    center: float
    width: float
    owner: str | None = None
    label: str | None = None

    def __post_init__(self) -> None:
        if not self.width > 0:
            raise ValueError(f"slit width must be > 0, got {self.width}")
        if self.owner not in (None, OWNER_ALICE, OWNER_BOB):
            raise ValueError(f"unknown slit owner {self.owner!r}")
        if self.label not in (None, "C", "D"):
            raise ValueError(f"unknown slit label {self.label!r}")

    @property
    def tag(self) -> str | None:
        """Short id like 'a_c' used by CLI --open overrides; None when unowned."""
        if self.owner is None or self.label is None:
            return None
        return f"{self.owner[0]}_{self.label.lower()}"


@dataclass(frozen=True)
class ApertureWindow:
    """An ordered, non-overlapping collection of slits along one axis."""

    slits: tuple[Slit, ...]

    def __post_init__(self) -> None:
        if len(self.slits) < 1:
            raise ValueError("a window needs at least one slit")
        for i, a in enumerate(self.slits):
            for b in self.slits[i + 1:]:
                if abs(a.center - b.center) <= (a.width + b.width) / 2:
                    raise ValueError(
                        f"slits at {a.center} and {b.center} overlap "
                        f"(widths {a.width}, {b.width})"
                    )


@dataclass(frozen=True)
class SlitState:
    """Open/closed flags, parallel to a window's slit list."""

    open_flags: tuple[bool, ...]

    @classmethod
    def all_open(cls, count: int) -> "SlitState":
        return cls((True,) * count)


@dataclass(frozen=True)
class ScreenGrid:
    """Uniform sampling of the angular coordinate u = sin(theta), |u| <= 1."""

    u_min: float
    u_max: float
    sample_count: int

    def __post_init__(self) -> None:
        if not self.u_min < self.u_max:
            raise ValueError(f"need u_min < u_max, got [{self.u_min}, {self.u_max}]")
        if max(abs(self.u_min), abs(self.u_max)) > 1:
            raise ValueError("u = sin(theta) is bounded by |u| <= 1")
        if self.sample_count < 16:
            raise ValueError(f"sample_count must be >= 16, got {self.sample_count}")

    def samples(self) -> np.ndarray:
        return np.linspace(self.u_min, self.u_max, self.sample_count)

    @property
    def step(self) -> float:
        return (self.u_max - self.u_min) / (self.sample_count - 1)


def default_grid(wavelength: float, min_separation: float, sample_count: int = 4096) -> ScreenGrid:
    """Default screen: 4096 samples over |u| <= min(1, 6*lambda/d_min).

    Guarantees several interference orders of the widest-fringe pattern in
    view while staying inside the physical |sin(theta)| <= 1 range.
    """
    if not wavelength > 0:
        raise ValueError(f"wavelength must be > 0, got {wavelength}")
    u_max = min(1.0, 6.0 * wavelength / min_separation)
    return ScreenGrid(-u_max, u_max, sample_count)


@dataclass(frozen=True)
class Detector:
    """Finite detector model: granularity and what counts as a detectable peak."""

    bin_width: float
    peak_threshold: float = 0.05
    min_resolvable_spacing_bins: int = 2

    def __post_init__(self) -> None:
        if not self.bin_width > 0:
            raise ValueError(f"bin_width must be > 0, got {self.bin_width}")
        if not 0 < self.peak_threshold < 1:
            raise ValueError(f"peak_threshold must be in (0,1), got {self.peak_threshold}")
        if self.min_resolvable_spacing_bins < 2:
            raise ValueError("min_resolvable_spacing_bins must be >= 2")

    @property
    def resolution_floor(self) -> float:
        return self.min_resolvable_spacing_bins * self.bin_width


@dataclass(frozen=True, eq=False)
class DiffractionPattern:
    """Sampled intensity, normalized so the maximum is 1 unless all slits are closed."""

    grid: ScreenGrid
    intensity: np.ndarray
    all_closed: bool = False


@dataclass(frozen=True)
class FringeMeasurement:
    """Estimated peak-to-peak spacing and the separation inferred from it.

    When unresolved (fewer than 3 usable peaks, or spacing below the detector
    floor) `delta_u` and `d_inferred` are absent. By construction
    d_inferred * delta_u = lambda whenever resolved.
    """

    delta_u: float | None
    d_inferred: float | None
    resolved: bool
    peaks_used: int


def intensity_pattern(
    window: ApertureWindow,
    state: SlitState,
    wavelength: float,
    grid: ScreenGrid,
) -> DiffractionPattern:
    """Fraunhofer intensity for the open slits of `window` at the given wavelength.

    Amplitude is the closed-form superposition over open slits j:
    width_j * sinc(pi*width_j*u/lambda) * exp(i*2*pi*center_j*u/lambda);
    intensity is |A|^2 normalized to peak 1. All slits closed yields an
    all-zero pattern flagged `all_closed` rather than an error.
    """
    if not wavelength > 0:
        raise ValueError(f"wavelength must be > 0, got {wavelength}")
    if len(state.open_flags) != len(window.slits):
        raise ValueError(
            f"state has {len(state.open_flags)} flags for {len(window.slits)} slits"
        )
    u = grid.samples()
    open_slits = [s for s, is_open in zip(window.slits, state.open_flags) if is_open]
    if not open_slits:
        return DiffractionPattern(grid, np.zeros_like(u), all_closed=True)
    amplitude = np.zeros_like(u, dtype=complex)
    for slit in open_slits:
        # np.sinc(x) = sin(pi x)/(pi x), so this is the rectangular-slit envelope
        amplitude += (
            slit.width
            * np.sinc(slit.width * u / wavelength)
            * np.exp(2j * np.pi * slit.center * u / wavelength)
        )
    intensity = np.abs(amplitude) ** 2
    peak = intensity.max()
    if peak > 0:
        intensity = intensity / peak
    return DiffractionPattern(grid, intensity)


def peak_estimates(pattern: DiffractionPattern, detector: Detector) -> tuple[np.ndarray, np.ndarray]:
    """Sub-sample peak positions and their heights.

    Strict local maxima above peak_threshold*max are refined by 3-point
    parabolic interpolation; plateau maxima report the plateau midpoint
    without refinement.
    """
    intensity = pattern.intensity
    top = intensity.max()
    if top <= 0:
        return np.array([]), np.array([])
    u = pattern.grid.samples()
    step = pattern.grid.step
    indices, props = find_peaks(intensity, height=detector.peak_threshold * top, plateau_size=1)
    positions = []
    heights = []
    for j, i in enumerate(indices):
        if props["plateau_sizes"][j] > 1:
            left = props["left_edges"][j]
            right = props["right_edges"][j]
            positions.append((u[left] + u[right]) / 2)
            heights.append(intensity[i])
            continue
        denom = intensity[i - 1] - 2 * intensity[i] + intensity[i + 1]
        shift = 0.0 if denom == 0 else 0.5 * (intensity[i - 1] - intensity[i + 1]) / denom
        positions.append(u[i] + shift * step)
        heights.append(intensity[i])
    return np.asarray(positions), np.asarray(heights)


def detect_peaks(pattern: DiffractionPattern, detector: Detector) -> list[float]:
    """Positions (u) of detected peaks; empty when nothing clears the threshold."""
    positions, _ = peak_estimates(pattern, detector)
    return positions.tolist()


def central_peak_region(positions: Sequence[float], heights: Sequence[float]) -> np.ndarray:
    """Peaks lying between the two outermost peaks that exceed half the maximum.

    This trims envelope-suppressed outliers before spacing estimation while
    keeping interior peaks that survive a missing order.
    """
    pos = np.asarray(positions, dtype=float)
    h = np.asarray(heights, dtype=float)
    if pos.size == 0:
        return pos
    strong = pos[h >= 0.5 * h.max()]
    lo, hi = strong.min(), strong.max()
    return np.sort(pos[(pos >= lo) & (pos <= hi)])


def measure_fringe_spacing(
    peaks: Sequence[float],
    wavelength: float,
    detector: Detector,
    heights: Sequence[float] | None = None,
) -> FringeMeasurement:
    """Median adjacent spacing of the central peaks, and the separation it implies.

    `heights`, when provided, restricts the estimate to the central
    half-maximum region; bare position lists use every adjacent spacing.
    Resolution requires at least 3 usable peaks and a spacing at or above the
    detector floor.
    """
    if not wavelength > 0:
        raise ValueError(f"wavelength must be > 0, got {wavelength}")
    if heights is not None:
        central = central_peak_region(peaks, heights)
    else:
        central = np.sort(np.asarray(peaks, dtype=float))
    used = int(central.size)
    if used < 3:
        return FringeMeasurement(None, None, False, used)
    delta_u = float(np.median(np.diff(central)))
    if not math.isfinite(delta_u) or delta_u < detector.resolution_floor:
        return FringeMeasurement(None, None, False, used)
    return FringeMeasurement(delta_u, wavelength / delta_u, True, used)


def measure_pattern(
    pattern: DiffractionPattern,
    wavelength: float,
    detector: Detector,
) -> tuple[FringeMeasurement, np.ndarray]:
    """Full detection + spacing pipeline; also returns the peaks the median used."""
    positions, heights = peak_estimates(pattern, detector)
    measurement = measure_fringe_spacing(positions, wavelength, detector, heights=heights)
    used = central_peak_region(positions, heights) if positions.size else positions
    return measurement, used
