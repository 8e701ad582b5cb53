// Shapes of the service responses. The client renders these values verbatim;
// it never derives physics locally.

export type StrategyLabel = "C" | "D";

export type Regime = "classical_unresolved" | "quantum_resolved";

export type Classification =
  | "defection_ne"
  | "cooperation_ne"
  | "both"
  | "no_pure_symmetric_ne";

export interface Coeffs {
  t: number;
  r: number;
  p: number;
  s: number;
}

export interface Measurement {
  delta_u: number | null;
  d_inferred: number | null;
  resolved: boolean;
  peaks_used: number;
}

export interface RoundOutcome {
  alice: StrategyLabel;
  bob: StrategyLabel;
  coeffs: Coeffs;
  k: number;
  lambda: number;
  mode: string;
  payoffs: { alice: number; bob: number };
  payoff_discrepancy: number;
  regime: Regime;
  measurement: Measurement | null;
}

export interface SlitInfo {
  center: number;
  width: number;
  owner: "alice" | "bob" | null;
  label: StrategyLabel | null;
  open: boolean;
}

export interface PatternResponse {
  lambda: number;
  profile: { alice: StrategyLabel; bob: StrategyLabel } | null;
  all_closed: boolean;
  slits: SlitInfo[];
  u: number[];
  intensity: number[];
  peaks: number[];
  used_peaks: number[];
  measurement: Measurement | null;
}

export interface Thresholds {
  lambda_low: number;
  lambda_high: number;
}

export interface EquilibriumResponse {
  classification: Classification;
  coeffs: Coeffs;
  k: number;
  lambda: number;
  thresholds: Thresholds;
}

export interface SweepResponse {
  coeffs: Coeffs;
  k: number;
  lambda_grid: number[];
  classifications: Classification[];
  thresholds: { detected: Partial<Thresholds>; analytic: Thresholds };
  payoffs: Record<string, number[]>;
}

export interface ServerConfig {
  t: number;
  r: number;
  p: number;
  s: number;
  k: number;
  lambda: number;
  payoff_mode: string;
  layout_mode: string;
  sweep_lo: number;
  sweep_hi: number;
  sweep_steps: number;
  [key: string]: unknown;
}
