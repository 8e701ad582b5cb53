import { ServiceClient } from "./api";
import { badgeClass, badgeText } from "./badge";
import { drawPattern, drawRegimeStrip } from "./render";
import {
  applyClassification,
  applyError,
  applyOutcome,
  applySweep,
  chooseSlit,
  formatPayoffs,
  initialState,
  setLambda,
  setOpponent,
  type RoundRequest,
  type SessionState,
} from "./state";
import type { OpponentKind } from "./opponent";
import type { StrategyLabel } from "./types";

const client = new ServiceClient("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

let state: SessionState;
let lastRequest: RoundRequest | null = null;

function renderState(): void {
  el<HTMLSpanElement>("payoffs").textContent = state.lastOutcome
    ? formatPayoffs(state.lastOutcome)
    : "—";
  el<HTMLSpanElement>("regime-tag").textContent = state.lastOutcome
    ? state.lastOutcome.regime.replace(/_/g, " ")
    : "";

  const badge = el<HTMLSpanElement>("badge");
  if (state.lastClassification) {
    badge.textContent = badgeText(state.lastClassification);
    badge.className = "badge " + badgeClass(state.lastClassification);
  }

  el<HTMLSpanElement>("lambda-value").textContent = state.lambda.toFixed(3);

  const banner = el<HTMLDivElement>("error-banner");
  banner.style.display = state.error ? "flex" : "none";
  el<HTMLSpanElement>("error-text").textContent = state.error ?? "";

  for (const player of ["alice", "bob"] as const) {
    for (const label of ["C", "D"] as const) {
      const button = el<HTMLButtonElement>(`${player}-${label}`);
      const pending = player === "alice" ? state.pendingAlice : state.pendingBob;
      button.classList.toggle("chosen", pending === label);
      button.disabled = state.roundInFlight || (player === "bob" && state.opponent !== "human");
    }
  }

  drawRegimeStrip(el<HTMLCanvasElement>("strip"), state.sweep, state.lambda);
}

async function fireRound(request: RoundRequest): Promise<void> {
  lastRequest = request;
  try {
    const outcome = await client.round(request.alice, request.bob, request.lambda);
    state = applyOutcome(state, outcome);
    renderState();
    const pattern =
      outcome.lambda > 0
        ? await client.pattern(outcome.alice, outcome.bob, outcome.lambda)
        : null;
    const note = drawPattern(el<HTMLCanvasElement>("pattern"), pattern);
    el<HTMLSpanElement>("spacing-note").textContent = note;
  } catch (error) {
    state = applyError(state, `service unreachable: ${String(error)}`);
    renderState();
  }
}

function onChoose(player: "alice" | "bob", label: StrategyLabel): void {
  const result = chooseSlit(state, player, label);
  state = result.state;
  renderState();
  if (result.fire) {
    void fireRound(result.fire);
  }
}

async function refreshBadge(): Promise<void> {
  try {
    const eq = await client.equilibrium(state.lambda);
    state = applyClassification(state, eq.classification);
  } catch (error) {
    state = applyError(state, `service unreachable: ${String(error)}`);
  }
  renderState();
}

async function boot(): Promise<void> {
  const config = await client.config();
  state = initialState(config);

  const slider = el<HTMLInputElement>("lambda");
  slider.min = String(config.sweep_lo);
  slider.max = String(config.sweep_hi);
  slider.step = String((config.sweep_hi - config.sweep_lo) / 300);
  slider.value = String(state.lambda);
  slider.addEventListener("input", () => {
    state = setLambda(state, Number(slider.value));
    renderState();
    void refreshBadge();
  });

  el<HTMLSelectElement>("opponent").addEventListener("change", (event) => {
    state = setOpponent(state, (event.target as HTMLSelectElement).value as OpponentKind);
    renderState();
  });

  for (const player of ["alice", "bob"] as const) {
    for (const label of ["C", "D"] as const) {
      el<HTMLButtonElement>(`${player}-${label}`).addEventListener("click", () =>
        onChoose(player, label),
      );
    }
  }

  el<HTMLButtonElement>("retry").addEventListener("click", () => {
    if (lastRequest) void fireRound(lastRequest);
  });

  try {
    state = applySweep(state, await client.sweep(config.sweep_lo, config.sweep_hi, config.sweep_steps));
  } catch {
    // strip stays empty; the badge path reports connectivity problems
  }
  await refreshBadge();
  drawPattern(el<HTMLCanvasElement>("pattern"), null);
}

boot().catch((error) => {
  document.body.insertAdjacentHTML(
    "afterbegin",
    `<div class="banner">failed to reach the service: ${String(error)}</div>`,
  );
});
