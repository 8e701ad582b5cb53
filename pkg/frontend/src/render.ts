import type { Classification, PatternResponse, SweepResponse } from "./types";
import { curvePoints, peakMarkers, spacingAnnotation, type PlotBox } from "./plot";

// Canvas painters. All geometry comes from plot.ts; these only draw.

const REGIME_COLORS: Record<Classification, string> = {
  defection_ne: "#b55",
  cooperation_ne: "#4a8",
  both: "#caa",
  no_pure_symmetric_ne: "#b93",
};

export function drawPattern(canvas: HTMLCanvasElement, pattern: PatternResponse | null): string {
  const ctx = canvas.getContext("2d");
  if (!ctx) return "";
  const box: PlotBox = { width: canvas.width, height: canvas.height, pad: 12 };
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.fillStyle = "#10141c";
  ctx.fillRect(0, 0, canvas.width, canvas.height);

  if (!pattern || pattern.all_closed) {
    ctx.fillStyle = "#667";
    ctx.font = "14px system-ui";
    ctx.textAlign = "center";
    ctx.fillText(
      pattern ? "all slits closed" : "no round played yet",
      canvas.width / 2,
      canvas.height / 2,
    );
    return "";
  }

  const unresolved = !pattern.measurement || !pattern.measurement.resolved;
  const points = curvePoints(pattern, box);
  ctx.strokeStyle = unresolved ? "#555c66" : "#7fd4ff";
  ctx.lineWidth = 1.2;
  ctx.beginPath();
  points.forEach((pt, i) => (i === 0 ? ctx.moveTo(pt.x, pt.y) : ctx.lineTo(pt.x, pt.y)));
  ctx.stroke();

  if (unresolved) {
    ctx.fillStyle = "#99a";
    ctx.font = "13px system-ui";
    ctx.textAlign = "center";
    ctx.fillText("unresolved: fringes below detector resolution", canvas.width / 2, 24);
  } else {
    ctx.fillStyle = "#ffd479";
    for (const marker of peakMarkers(pattern, box)) {
      ctx.beginPath();
      ctx.arc(marker.x, marker.y, 3, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
  return spacingAnnotation(pattern);
}

export function drawRegimeStrip(
  canvas: HTMLCanvasElement,
  sweep: SweepResponse | null,
  lambda: number,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!sweep || sweep.lambda_grid.length === 0) return;

  const lo = sweep.lambda_grid[0];
  const hi = sweep.lambda_grid[sweep.lambda_grid.length - 1];
  const cell = canvas.width / sweep.lambda_grid.length;
  sweep.classifications.forEach((c, i) => {
    ctx.fillStyle = REGIME_COLORS[c];
    ctx.fillRect(i * cell, 0, Math.ceil(cell), canvas.height);
  });

  // marker for the current slider position
  const frac = Math.min(1, Math.max(0, (lambda - lo) / (hi - lo)));
  const x = frac * canvas.width;
  ctx.strokeStyle = "#fff";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(x, 0);
  ctx.lineTo(x, canvas.height);
  ctx.stroke();
}
