import type {
  EquilibriumResponse,
  PatternResponse,
  RoundOutcome,
  ServerConfig,
  StrategyLabel,
  SweepResponse,
} from "./types";

// Thin fetch client for the service; all game numbers originate here.
export class ServiceClient {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string, params?: Record<string, string | number>): Promise<T> {
    const query = params
      ? "?" + new URLSearchParams(
          Object.entries(params).map(([k, v]) => [k, String(v)]),
        ).toString()
      : "";
    const response = await fetch(this.base + path + query);
    if (!response.ok) {
      throw new Error(`${path} failed: HTTP ${response.status}`);
    }
    return (await response.json()) as T;
  }

  config(): Promise<ServerConfig> {
    return this.get("/config");
  }

  async round(alice: StrategyLabel, bob: StrategyLabel, lambda: number): Promise<RoundOutcome> {
    const response = await fetch(this.base + "/round", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ alice, bob, lambda }),
    });
    if (!response.ok) {
      throw new Error(`/round failed: HTTP ${response.status}`);
    }
    return (await response.json()) as RoundOutcome;
  }

  pattern(alice: StrategyLabel, bob: StrategyLabel, lambda: number): Promise<PatternResponse> {
    return this.get("/pattern", { profile: `${alice},${bob}`, lambda });
  }

  equilibrium(lambda: number): Promise<EquilibriumResponse> {
    return this.get("/equilibrium", { lambda });
  }

  sweep(lo: number, hi: number, steps: number): Promise<SweepResponse> {
    return this.get("/sweep", { lo, hi, steps });
  }
}
