/** Pure construction of the four exploration panels as SVG fragments.
 *
 *  Series data comes verbatim from the service curves payload; this module
 *  only scales coordinates for display.  Keeping it DOM-free makes the panel
 *  geometry directly testable.
 */

import type { CurvesPayload, Series } from "./types.js";

export interface PanelGeometry {
  width: number;
  height: number;
  padding: number;
}

export const DEFAULT_GEOMETRY: PanelGeometry = { width: 320, height: 220, padding: 36 };

const SERIES_COLORS = ["#1c6dd0", "#d0481c", "#2d9456", "#8451c9", "#b0218f"];

export function panelSeries(payload: CurvesPayload): {
  survival: Series[];
  hazardRatio: Series[];
  areVsRho: Series[];
  samplesizeVsRho: Series[];
} {
  return {
    survival: [
      { label: "control", x: payload.survival.time, y: payload.survival.control_ce },
      { label: "treated", x: payload.survival.time, y: payload.survival.treated_ce },
    ],
    hazardRatio: [
      { label: "HR*(t)", x: payload.hazard_ratio.time, y: payload.hazard_ratio.values },
    ],
    areVsRho: [{ label: "ARE", x: payload.are_vs_rho.rho, y: payload.are_vs_rho.are }],
    samplesizeVsRho: [
      { label: "n", x: payload.samplesize_vs_rho.rho, y: payload.samplesize_vs_rho.n },
    ],
  };
}

export interface Overlay {
  label: string;
  rho: number[];
  n: number[];
}

/** Overlay curves sorted so the legend lists them bottom-to-top by their
 *  level on the plot (a larger component effect needs fewer subjects). */
export function orderedOverlays(overlays: Overlay[]): Overlay[] {
  const level = (o: Overlay) => o.n.reduce((a, b) => a + b, 0) / o.n.length;
  return [...overlays].sort((a, b) => level(a) - level(b));
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  return [lo, hi];
}

export function seriesToPath(series: Series, geometry: PanelGeometry, xDomain: [number, number], yDomain: [number, number]): string {
  const inner = {
    w: geometry.width - 2 * geometry.padding,
    h: geometry.height - 2 * geometry.padding,
  };
  const sx = (x: number) =>
    geometry.padding + ((x - xDomain[0]) / (xDomain[1] - xDomain[0] || 1)) * inner.w;
  const sy = (y: number) =>
    geometry.height - geometry.padding - ((y - yDomain[0]) / (yDomain[1] - yDomain[0] || 1)) * inner.h;
  return series.x
    .map((x, i) => `${i === 0 ? "M" : "L"}${sx(x).toFixed(2)},${sy(series.y[i]).toFixed(2)}`)
    .join(" ");
}

export function renderPanel(
  title: string,
  seriesList: Series[],
  geometry: PanelGeometry = DEFAULT_GEOMETRY,
  yFromZero = false,
): string {
  const allX = seriesList.flatMap((s) => s.x);
  const allY = seriesList.flatMap((s) => s.y);
  const xDomain = extent(allX);
  let yDomain = extent(allY);
  if (yFromZero) yDomain = [Math.min(0, yDomain[0]), yDomain[1]];
  const paths = seriesList
    .map(
      (s, i) =>
        `<path d="${seriesToPath(s, geometry, xDomain, yDomain)}" fill="none" ` +
        `stroke="${SERIES_COLORS[i % SERIES_COLORS.length]}" stroke-width="1.6" data-label="${s.label}"/>`,
    )
    .join("\n    ");
  const legend = seriesList
    .map(
      (s, i) =>
        `<tspan fill="${SERIES_COLORS[i % SERIES_COLORS.length]}">${s.label}</tspan>`,
    )
    .join(" ");
  const axis =
    `<line x1="${geometry.padding}" y1="${geometry.height - geometry.padding}" ` +
    `x2="${geometry.width - geometry.padding}" y2="${geometry.height - geometry.padding}" stroke="#888"/>` +
    `<line x1="${geometry.padding}" y1="${geometry.padding}" x2="${geometry.padding}" ` +
    `y2="${geometry.height - geometry.padding}" stroke="#888"/>`;
  const labels =
    `<text x="${geometry.padding}" y="${geometry.height - 6}" class="tick">${xDomain[0].toPrecision(3)}</text>` +
    `<text x="${geometry.width - geometry.padding}" y="${geometry.height - 6}" text-anchor="end" class="tick">${xDomain[1].toPrecision(3)}</text>` +
    `<text x="4" y="${geometry.height - geometry.padding}" class="tick">${yDomain[0].toPrecision(3)}</text>` +
    `<text x="4" y="${geometry.padding + 4}" class="tick">${yDomain[1].toPrecision(3)}</text>`;
  return [
    `<svg viewBox="0 0 ${geometry.width} ${geometry.height}" role="img" aria-label="${title}">`,
    `  <text x="${geometry.width / 2}" y="16" text-anchor="middle" class="title">${title}</text>`,
    `  <text x="${geometry.width / 2}" y="30" text-anchor="middle" class="legend">${legend}</text>`,
    `  ${axis}`,
    `  ${labels}`,
    `    ${paths}`,
    `</svg>`,
  ].join("\n");
}
