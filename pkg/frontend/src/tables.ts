/** Render service payloads into table cell values.
 *
 *  Nothing is computed here: every cell is a service number passed through
 *  display formatting only, so rendered values stay traceable to responses.
 */

import type { ArePayload, EffectsizePayload, SamplesizePayload } from "./types.js";

export function fmt(value: number, decimals = 4): string {
  return value.toFixed(decimals);
}

export interface TableModel {
  header: string[];
  rows: string[][];
}

export function effectTable(payload: EffectsizePayload): TableModel {
  const c = payload.control;
  const t = payload.treated;
  const flag = (beyond: boolean) => (beyond ? " *" : "");
  return {
    header: ["Effect measure", "Value", "Group measure", "Reference", "Treated"],
    rows: [
      ["gAHR", fmt(payload.gahr), "", "", ""],
      ["AHR", fmt(payload.ahr), "", "", ""],
      ["RMST ratio", fmt(payload.rmst_ratio), "RMST", fmt(c.rmst), fmt(t.rmst)],
      [
        "Median ratio",
        fmt(payload.median_ratio),
        "Median",
        fmt(c.median) + flag(c.median_beyond_followup),
        fmt(t.median) + flag(t.median_beyond_followup),
      ],
      ["", "", "Prob. E1", fmt(c.prob_e1), fmt(t.prob_e1)],
      ["", "", "Prob. E2", fmt(c.prob_e2), fmt(t.prob_e2)],
      ["", "", "Prob. CE", fmt(c.prob_ce), fmt(t.prob_ce)],
    ],
  };
}

export function samplesizeTable(payload: SamplesizePayload): TableModel {
  return {
    header: ["Endpoint", "Total sample size"],
    rows: [
      ["Endpoint 1", String(payload.endpoint1)],
      ["Endpoint 2", String(payload.endpoint2)],
      ["Composite endpoint", String(payload.composite)],
    ],
  };
}

export function areReadout(payload: ArePayload): string {
  return payload.are.toFixed(3);
}

export function tableHtml(model: TableModel): string {
  const head = model.header.map((h) => `<th>${h}</th>`).join("");
  const body = model.rows
    .map((row) => `<tr>${row.map((cell) => `<td>${cell}</td>`).join("")}</tr>`)
    .join("\n");
  return `<table><thead><tr>${head}</tr></thead><tbody>\n${body}\n</tbody></table>`;
}
