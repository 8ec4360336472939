/**
 * DOM rendering for one elicitation session.
 *
 * Upper-triangle cells are editable inputs; the lower triangle mirrors
 * them read-only as reciprocals; the diagonal is fixed at 1. The gauge
 * bar and label show the report value exactly as the service sent it.
 */

import {
  CellRef,
  ViewState,
  parseRatio,
  pairKey,
  reciprocalText,
  SCALE_HINT,
} from "./state.js";

export interface Handlers {
  /** Validated submission: (labelI, labelJ, ratioText). */
  onSubmit(i: string, j: string, ratio: string): void;
  onApplyRepair(labels: [string, string], proposed: string): void;
  onThresholdChange(value: number): void;
}

function isHighlighted(cells: CellRef[] | null, row: number, col: number): boolean {
  if (cells === null) return false;
  return cells.some((c) => c.row === row && c.col === col);
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderGauge(doc: Document, state: ViewState): HTMLElement {
  const wrap = el(doc, "div", "gauge");
  if (state.gauge === null) {
    wrap.appendChild(el(doc, "span", "gauge-empty", "no full triad yet"));
    return wrap;
  }
  const bar = el(doc, "div", "gauge-bar");
  const fill = el(doc, "div", "gauge-fill");
  // width is presentation only; the label below is the authoritative value
  const fraction = Math.max(0, Math.min(1, Number(state.gauge)));
  fill.style.width = `${fraction * 100}%`;
  bar.appendChild(fill);
  wrap.appendChild(bar);
  const label = el(doc, "span", "gauge-value", state.gauge);
  label.setAttribute("data-role", "gauge-value");
  wrap.appendChild(label);
  return wrap;
}

export function renderMatrix(
  doc: Document,
  state: ViewState,
  handlers: Handlers,
): HTMLTableElement {
  const n = state.entities.length;
  const table = el(doc, "table", "matrix");
  const head = doc.createElement("tr");
  head.appendChild(el(doc, "th"));
  for (const label of state.entities) head.appendChild(el(doc, "th", "", label));
  table.appendChild(head);

  for (let i = 1; i <= n; i++) {
    const tr = doc.createElement("tr");
    tr.appendChild(el(doc, "th", "", state.entities[i - 1]));
    for (let j = 1; j <= n; j++) {
      const td = el(doc, "td");
      if (isHighlighted(state.highlight, i, j)) td.classList.add("worst");
      if (i === j) {
        td.classList.add("diagonal");
        td.textContent = "1";
      } else if (i < j) {
        const input = doc.createElement("input");
        input.type = "text";
        input.className = "ratio-input";
        input.placeholder = `${SCALE_HINT.min.toPrecision(3)}..${SCALE_HINT.max}`;
        input.setAttribute("data-pair", pairKey(i, j));
        const existing = state.filled.get(pairKey(i, j));
        if (existing !== undefined) input.value = existing;
        if (state.nextPair && state.nextPair[0] === i && state.nextPair[1] === j) {
          td.classList.add("next-pair");
        }
        const labelI = state.entities[i - 1]!;
        const labelJ = state.entities[j - 1]!;
        input.addEventListener("change", () => {
          try {
            parseRatio(input.value);
          } catch (err) {
            td.classList.add("invalid");
            input.setAttribute("data-error", String(err));
            return; // no request on invalid input
          }
          td.classList.remove("invalid");
          input.removeAttribute("data-error");
          handlers.onSubmit(labelI, labelJ, input.value.trim());
        });
        td.appendChild(input);
      } else {
        // mirrored cell: read-only reciprocal of the upper entry
        td.classList.add("reciprocal");
        const stored = state.filled.get(pairKey(j, i));
        td.textContent = stored !== undefined ? reciprocalText(stored) : "";
      }
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  return table;
}

export function renderRepairBanner(
  doc: Document,
  state: ViewState,
  handlers: Handlers,
): HTMLElement | null {
  if (state.repair === null) return null;
  const banner = el(doc, "div", "repair-banner");
  banner.setAttribute("data-role", "repair-banner");
  const [a, b] = state.repair.labels;
  banner.appendChild(
    el(
      doc,
      "span",
      "repair-text",
      `worst triad suggests (${a}, ${b}) = ${state.repair.proposed} ` +
        `(currently ${state.repair.current})`,
    ),
  );
  const apply = el(doc, "button", "repair-apply", "apply");
  apply.addEventListener("click", () =>
    handlers.onApplyRepair([a, b], state.repair!.proposed),
  );
  banner.appendChild(apply);
  return banner;
}

export function renderNextPrompt(doc: Document, state: ViewState): HTMLElement {
  if (state.nextPair === null) {
    return el(doc, "p", "next-prompt", "all pairs filled");
  }
  const [i, j] = state.nextPair;
  return el(
    doc,
    "p",
    "next-prompt",
    `next: how does ${state.entities[i - 1]} compare to ${state.entities[j - 1]}?`,
  );
}

export function renderSession(
  doc: Document,
  root: HTMLElement,
  state: ViewState,
  handlers: Handlers,
): void {
  root.textContent = "";
  const heading = el(doc, "h2", "", `session ${state.sessionId} (${state.indicator})`);
  root.appendChild(heading);
  root.appendChild(renderGauge(doc, state));
  const banner = renderRepairBanner(doc, state, handlers);
  if (banner !== null) root.appendChild(banner);
  root.appendChild(renderMatrix(doc, state, handlers));
  root.appendChild(renderNextPrompt(doc, state));

  const thresholdRow = el(doc, "div", "threshold-row");
  thresholdRow.appendChild(el(doc, "label", "", "repair banner threshold"));
  const threshold = doc.createElement("input");
  threshold.type = "number";
  threshold.step = "0.05";
  threshold.min = "0";
  threshold.max = "1";
  threshold.className = "threshold-input";
  threshold.addEventListener("change", () => {
    const v = Number(threshold.value);
    if (Number.isFinite(v) && v >= 0 && v <= 1) handlers.onThresholdChange(v);
  });
  thresholdRow.appendChild(threshold);
  root.appendChild(thresholdRow);
}
