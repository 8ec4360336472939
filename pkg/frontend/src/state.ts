/**
 * Pure view-state derivation: everything the renderer needs, computed
 * from the last server response alone. The gauge field carries the
 * report's value string verbatim.
 */

import type { Report, SessionState } from "./api.js";

/** 1-based matrix cell. */
export interface CellRef {
  row: number;
  col: number;
}

export interface RepairProposal {
  cell: CellRef;
  labels: [string, string];
  current: string;
  proposed: string;
}

export interface ViewState {
  sessionId: string;
  entities: string[];
  indicator: string;
  /** "i,j" (1-based, i < j) -> ratio string as stored by the service. */
  filled: Map<string, string>;
  /** Unfilled upper-triangle pairs in row-major order. */
  pairQueue: Array<[number, number]>;
  nextPair: [number, number] | null;
  complete: boolean;
  /** Report value verbatim; null until a full triad exists. */
  gauge: string | null;
  /** Upper-triangle cells of the worst triad. */
  highlight: CellRef[] | null;
  worstKernel: number | null;
  /** Present only when the worst kernel exceeds the banner threshold. */
  repair: RepairProposal | null;
}

/** Ratio input hint from the recommended judgment scale; not enforced. */
export const SCALE_HINT = { min: 1 / 3, max: 3 };

export const DEFAULT_REPAIR_THRESHOLD = 1 / 3;

export function pairKey(i: number, j: number): string {
  return `${i},${j}`;
}

/** Parse a positive ratio: decimal or exact "p/q". Throws on anything else. */
export function parseRatio(text: string): number {
  const s = text.trim();
  if (s.length === 0) throw new Error("empty ratio");
  let value: number;
  if (s.includes("/")) {
    const parts = s.split("/");
    if (parts.length !== 2) throw new Error(`cannot parse ratio ${JSON.stringify(text)}`);
    const p = Number(parts[0]);
    const q = Number(parts[1]);
    if (!Number.isFinite(p) || !Number.isFinite(q) || q === 0) {
      throw new Error(`cannot parse ratio ${JSON.stringify(text)}`);
    }
    value = p / q;
  } else {
    value = Number(s);
  }
  if (!Number.isFinite(value)) throw new Error(`cannot parse ratio ${JSON.stringify(text)}`);
  if (value <= 0) throw new Error("ratio must be strictly positive");
  return value;
}

/** Display text for the mirrored, read-only cell. */
export function reciprocalText(ratio: string): string {
  const v = Number(ratio);
  if (!Number.isFinite(v) || v <= 0) return "";
  const r = 1 / v;
  return formatRatio(r);
}

/** Short display form; full precision stays on the server. */
export function formatRatio(v: number): string {
  const text = v.toPrecision(6);
  return text.includes(".") || text.includes("e")
    ? String(Number(text))
    : text;
}

function worstKernelOf(report: Report): number | null {
  const worst = report.worst_triad;
  if (worst === null) return null;
  const key = worst.triad.join(",");
  for (const entry of report.per_triad) {
    if (entry.triad.join(",") === key) return Number(entry.kernel);
  }
  return null;
}

export function buildViewState(
  session: SessionState,
  threshold: number = DEFAULT_REPAIR_THRESHOLD,
): ViewState {
  const n = session.entities.length;
  const filled = new Map<string, string>();
  for (const row of session.comparisons) {
    filled.set(pairKey(row.i, row.j), row.ratio);
  }
  const pairQueue: Array<[number, number]> = [];
  for (let i = 1; i <= n; i++) {
    for (let j = i + 1; j <= n; j++) {
      if (!filled.has(pairKey(i, j))) pairQueue.push([i, j]);
    }
  }
  const report = session.report;
  let highlight: CellRef[] | null = null;
  if (report.worst_triad !== null) {
    const [i, j, k] = report.worst_triad.triad;
    highlight = [
      { row: i, col: j },
      { row: i, col: k },
      { row: j, col: k },
    ];
  }
  const worstKernel = worstKernelOf(report);
  let repair: RepairProposal | null = null;
  if (
    report.suggested_repair !== null &&
    report.worst_triad !== null &&
    worstKernel !== null &&
    worstKernel > threshold
  ) {
    const [i, , k] = report.worst_triad.triad;
    repair = {
      cell: { row: i, col: k },
      labels: report.suggested_repair.position,
      current: report.suggested_repair.current,
      proposed: report.suggested_repair.proposed,
    };
  }
  return {
    sessionId: session.id,
    entities: session.entities,
    indicator: session.indicator,
    filled,
    pairQueue,
    nextPair: pairQueue.length > 0 ? pairQueue[0]! : null,
    complete: report.complete,
    gauge: report.value,
    highlight,
    worstKernel,
    repair,
  };
}
