/**
 * Application wiring: connect form, session bootstrap, and the
 * submit/render loop. Every render follows a server response; there is
 * no optimistic UI.
 */

import { ApiError, Client } from "./api.js";
import { renderSession } from "./render.js";
import { buildViewState, DEFAULT_REPAIR_THRESHOLD } from "./state.js";

interface AppState {
  client: Client;
  sessionId: string;
  threshold: number;
}

function showError(root: HTMLElement, message: string): void {
  let box = root.querySelector<HTMLElement>(".error-box");
  if (!box) {
    box = document.createElement("div");
    box.className = "error-box";
    root.prepend(box);
  }
  box.textContent = message;
}

async function refresh(root: HTMLElement, app: AppState): Promise<void> {
  const session = await app.client.fetchSession(app.sessionId);
  const state = buildViewState(session, app.threshold);
  renderSession(document, root, state, {
    onSubmit: (i, j, ratio) => {
      void app.client
        .submitComparison(app.sessionId, i, j, ratio)
        .then(() => refresh(root, app))
        .catch((err) => showError(root, describe(err)));
    },
    onApplyRepair: (labels, proposed) => {
      void app.client
        .submitComparison(app.sessionId, labels[0], labels[1], proposed)
        .then(() => refresh(root, app))
        .catch((err) => showError(root, describe(err)));
    },
    onThresholdChange: (value) => {
      app.threshold = value;
      void refresh(root, app);
    },
  });
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`;
  return `connection error: ${String(err)} (retry the last action)`;
}

function setup(): void {
  const form = document.querySelector<HTMLFormElement>("#connect-form");
  const root = document.querySelector<HTMLElement>("#app");
  if (!form || !root) return;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const base = (form.querySelector<HTMLInputElement>("[name=base]")?.value ?? "").trim();
    const labelsRaw = form.querySelector<HTMLInputElement>("[name=entities]")?.value ?? "";
    const indicator =
      form.querySelector<HTMLSelectElement>("[name=indicator]")?.value ?? "kii";
    const existing = (form.querySelector<HTMLInputElement>("[name=session]")?.value ?? "").trim();
    const client = new Client(base.replace(/\/$/, ""));
    const app: AppState = {
      client,
      sessionId: existing,
      threshold: DEFAULT_REPAIR_THRESHOLD,
    };
    const start = existing
      ? Promise.resolve(existing)
      : client.createSession(
          labelsRaw.split(",").map((s) => s.trim()).filter((s) => s.length > 0),
          indicator,
        );
    void start
      .then((id) => {
        app.sessionId = id;
        return refresh(root, app);
      })
      .catch((err) => showError(root, describe(err)));
  });
}

setup();
