import type { PatternResponse } from "./types";

// Pure plotting geometry: service arrays in, pixel coordinates out. The
// canvas painters in render.ts consume these untouched.

export interface PlotPoint {
  x: number;
  y: number;
}

export interface PlotBox {
  width: number;
  height: number;
  pad: number;
}

function xScale(u: number, u0: number, u1: number, box: PlotBox): number {
  return box.pad + ((u - u0) / (u1 - u0)) * (box.width - 2 * box.pad);
}

function yScale(intensity: number, box: PlotBox): number {
  return box.height - box.pad - intensity * (box.height - 2 * box.pad);
}

export function curvePoints(pattern: PatternResponse, box: PlotBox): PlotPoint[] {
  const u0 = pattern.u[0];
  const u1 = pattern.u[pattern.u.length - 1];
  return pattern.u.map((u, i) => ({
    x: xScale(u, u0, u1, box),
    y: yScale(pattern.intensity[i], box),
  }));
}

function interpolateIntensity(pattern: PatternResponse, u: number): number {
  const us = pattern.u;
  if (u <= us[0]) return pattern.intensity[0];
  if (u >= us[us.length - 1]) return pattern.intensity[us.length - 1];
  let lo = 0;
  let hi = us.length - 1;
  while (hi - lo > 1) {
    const mid = (lo + hi) >> 1;
    if (us[mid] <= u) lo = mid;
    else hi = mid;
  }
  const w = (u - us[lo]) / (us[hi] - us[lo]);
  return pattern.intensity[lo] * (1 - w) + pattern.intensity[hi] * w;
}

// One marker per peak the arbiter's spacing estimate used; the count equals
// the measurement's peaks_used by construction on the service side.
export function peakMarkers(pattern: PatternResponse, box: PlotBox): PlotPoint[] {
  const u0 = pattern.u[0];
  const u1 = pattern.u[pattern.u.length - 1];
  return pattern.used_peaks.map((u) => ({
    x: xScale(u, u0, u1, box),
    y: yScale(interpolateIntensity(pattern, u), box),
  }));
}

// Annotation shown under the plot: the measured spacing and inferred
// separation, straight from the service measurement block.
export function spacingAnnotation(pattern: PatternResponse): string {
  const m = pattern.measurement;
  if (!m || !m.resolved || m.delta_u === null || m.d_inferred === null) {
    return "unresolved pattern";
  }
  return `peak spacing Δu = ${trim(m.delta_u)}  →  d = ${trim(m.d_inferred)}`;
}

// Display-only trimming of a service number; the raw value is untouched.
function trim(value: number): string {
  const text = value.toPrecision(6);
  return text.includes(".") ? text.replace(/\.?0+$/, "") : text;
}
