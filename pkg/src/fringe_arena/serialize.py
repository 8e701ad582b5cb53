"""Canonical output formatting shared by the CLI and the HTTP service.

Every float is rendered as the shortest string that round-trips to its value
rounded at 12 significant digits, and JSON objects always sort their keys, so
identical inputs produce byte-identical documents regardless of which surface
emitted them.
"""
from __future__ import annotations

import io
import json
import math
from typing import Iterable

from .arbiter import GameOutcome, SweepResult
from .game import GameParameters, MixedEquilibrium, PayoffCoefficients, StrategyProfile
from .layout import LayoutSolution
from .optics import DiffractionPattern, FringeMeasurement

SWEEP_CSV_COLUMNS = ("lambda", "classification", "payoff_CC", "payoff_DD", "payoff_CD_focal", "payoff_DC_focal")
PATTERN_CSV_COLUMNS = ("u", "intensity")


def format_float(value: float) -> str:
    """Shortest decimal that round-trips to the value at 12 significant digits."""
    if not math.isfinite(value):
        raise ValueError(f"cannot canonically format non-finite value {value!r}")
    if value == 0:
        return "0"  # collapses -0.0 as well
    target = float(format(value, ".12g"))
    candidates = [
        text
        for precision in range(1, 13)
        if float(text := format(target, f".{precision}g")) == target
    ]
    if not candidates:
        return format(target, ".12g")
    return min(candidates, key=len)


def _render(obj, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        keys = sorted(obj)
        for i, key in enumerate(keys):
            out.append(f'{pad}  {json.dumps(str(key))}: ')
            _render(obj[key], out, indent + 1)
            out.append(",\n" if i < len(keys) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(obj):
            out.append(pad + "  ")
            _render(item, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent, canonical floats."""
    out: list[str] = []
    _render(obj, out, 0)
    return "".join(out)


def write_csv(header: Iterable[str], rows: Iterable[Iterable]) -> str:
    """CSV text with canonical float cells and newline line endings."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        cells = [format_float(c) if isinstance(c, float) else str(c) for c in row]
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def profile_dict(profile: StrategyProfile) -> dict:
    return {"alice": profile.alice.value, "bob": profile.bob.value}


def measurement_dict(measurement: FringeMeasurement | None) -> dict | None:
    if measurement is None:
        return None
    return {
        "delta_u": measurement.delta_u,
        "d_inferred": measurement.d_inferred,
        "resolved": measurement.resolved,
        "peaks_used": measurement.peaks_used,
    }


def outcome_dict(outcome: GameOutcome, params: GameParameters, mode: str) -> dict:
    return {
        "alice": outcome.profile.alice.value,
        "bob": outcome.profile.bob.value,
        "coeffs": params.coeffs.as_dict(),
        "k": params.k,
        "lambda": params.wavelength,
        "mode": mode,
        "payoffs": {"alice": outcome.payoffs.alice, "bob": outcome.payoffs.bob},
        "payoff_discrepancy": outcome.payoff_discrepancy,
        "regime": outcome.regime,
        "measurement": measurement_dict(outcome.measurement),
    }


def thresholds_dict(
    coeffs: PayoffCoefficients,
    k: float,
    lambda_low: float,
    lambda_high: float,
    wavelength: float | None = None,
    classification: str | None = None,
    mixed: MixedEquilibrium | None = None,
) -> dict:
    doc = {
        "coeffs": coeffs.as_dict(),
        "k": k,
        "lambda": wavelength,
        "classification": classification,
        "thresholds": {"lambda_low": lambda_low, "lambda_high": lambda_high},
    }
    if mixed is not None:
        doc["mixed_extension"] = {
            "q_cooperate": mixed.q_cooperate,
            "degenerate": mixed.degenerate,
        }
    return doc


def sweep_dict(result: SweepResult, coeffs: PayoffCoefficients, k: float) -> dict:
    return {
        "coeffs": coeffs.as_dict(),
        "k": k,
        "lambda_grid": [float(x) for x in result.lambda_grid],
        "classifications": list(result.classifications),
        "thresholds": {
            "detected": {"lambda_low": result.detected_low, "lambda_high": result.detected_high},
            "analytic": {"lambda_low": result.analytic_low, "lambda_high": result.analytic_high},
        },
        "payoffs": {
            "payoff_CC": [float(x) for x in result.payoff_table[:, 0]],
            "payoff_DD": [float(x) for x in result.payoff_table[:, 1]],
            "payoff_CD_focal": [float(x) for x in result.payoff_table[:, 2]],
            "payoff_DC_focal": [float(x) for x in result.payoff_table[:, 3]],
        },
    }


def sweep_csv(result: SweepResult) -> str:
    rows = []
    for i, lam in enumerate(result.lambda_grid):
        rows.append(
            (
                float(lam),
                result.classifications[i],
                float(result.payoff_table[i, 0]),
                float(result.payoff_table[i, 1]),
                float(result.payoff_table[i, 2]),
                float(result.payoff_table[i, 3]),
            )
        )
    return write_csv(SWEEP_CSV_COLUMNS, rows)


def layout_dict(solution: LayoutSolution) -> dict:
    return {
        "feasible": solution.feasible,
        "positions": {key: float(v) for key, v in solution.positions.items()},
        "residual": solution.residual,
        "sign_pattern": solution.sign_pattern,
    }


def pattern_csv(pattern: DiffractionPattern) -> str:
    u = pattern.grid.samples()
    rows = zip((float(x) for x in u), (float(y) for y in pattern.intensity))
    return write_csv(PATTERN_CSV_COLUMNS, rows)


def pattern_dict(
    pattern: DiffractionPattern,
    wavelength: float,
    profile: StrategyProfile | None,
    window_slits,
    open_flags,
    peaks,
    used_peaks,
    measurement: FringeMeasurement | None,
) -> dict:
    return {
        "lambda": wavelength,
        "profile": profile_dict(profile) if profile is not None else None,
        "all_closed": pattern.all_closed,
        "slits": [
            {
                "center": slit.center,
                "width": slit.width,
                "owner": slit.owner,
                "label": slit.label,
                "open": bool(flag),
            }
            for slit, flag in zip(window_slits, open_flags)
        ],
        "u": [float(x) for x in pattern.grid.samples()],
        "intensity": [float(y) for y in pattern.intensity],
        "peaks": [float(x) for x in peaks],
        "used_peaks": [float(x) for x in used_peaks],
        "measurement": measurement_dict(measurement),
    }
