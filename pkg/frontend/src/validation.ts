/** Client-side validation mirroring the service rules, so most bad input is
 *  flagged before any request; the service stays the source of truth and its
 *  422 payloads land on the same per-field error slots. */

import type { CBEForm, TTEForm } from "./types.js";

export type FieldErrors = Partial<Record<string, string>>;

const COPULAS = ["frank", "gumbel", "clayton", "independence"];
const RHO_TYPES = ["spearman", "kendall"];
const MEASURES = ["diff", "rr", "or"];

function inOpenUnit(value: number): boolean {
  return Number.isFinite(value) && value > 0 && value < 1;
}

export function validateTTE(form: TTEForm): FieldErrors {
  const errors: FieldErrors = {};
  if (!inOpenUnit(form.p0_e1)) errors.p0_e1 = "must lie strictly in (0, 1)";
  if (!inOpenUnit(form.p0_e2)) errors.p0_e2 = "must lie strictly in (0, 1)";
  for (const key of ["hr_e1", "hr_e2"] as const) {
    const hr = form[key];
    if (!(Number.isFinite(hr) && hr > 0 && hr <= 1)) errors[key] = "must lie in (0, 1]";
  }
  if (form.hr_e1 === 1 && form.hr_e2 === 1) {
    errors.hr_e1 = "no detectable effect";
    errors.hr_e2 = "no detectable effect";
  }
  for (const key of ["beta_e1", "beta_e2"] as const) {
    if (!(Number.isFinite(form[key]) && form[key] > 0)) errors[key] = "must be positive";
  }
  if (![1, 2, 3, 4].includes(form.case)) errors.case = "must be 1, 2, 3 or 4";
  if (!COPULAS.includes(form.copula)) errors.copula = "unknown copula family";
  if (!RHO_TYPES.includes(form.rho_type)) errors.rho_type = "spearman or kendall";
  if (!(Number.isFinite(form.rho) && form.rho >= 0 && form.rho < 1)) {
    errors.rho = "must lie in [0, 1)";
  }
  if (!(Number.isFinite(form.followup_time) && form.followup_time > 0)) {
    errors.followup_time = "must be positive";
  }
  if (!inOpenUnit(form.alpha)) errors.alpha = "must lie in (0, 1)";
  if (!inOpenUnit(form.power)) errors.power = "must lie in (0, 1)";
  if (form.case === 4 && form.p0_e1 + form.p0_e2 >= 1) {
    errors.p0_e2 = "two fatal events: probabilities must sum below 1";
  }
  return errors;
}

/** Treated-arm probability implied by a component effect (validation only:
 *  displayed statistics always come from the service). */
export function impliedTreatedProb(p0: number, eff: number, measure: string): number {
  if (measure === "diff") return p0 + eff;
  if (measure === "rr") return p0 * eff;
  const odds = (eff * p0) / (1 - p0);
  return odds / (1 + odds);
}

export function validateCBE(form: CBEForm, rhoBounds?: { lower: number; upper: number }): FieldErrors {
  const errors: FieldErrors = {};
  if (!inOpenUnit(form.p0_e1)) errors.p0_e1 = "must lie strictly in (0, 1)";
  if (!inOpenUnit(form.p0_e2)) errors.p0_e2 = "must lie strictly in (0, 1)";
  for (const [effKey, measureKey, pKey] of [
    ["eff_e1", "effm_e1", "p0_e1"],
    ["eff_e2", "effm_e2", "p0_e2"],
  ] as const) {
    if (!MEASURES.includes(form[measureKey])) {
      errors[measureKey] = "diff, rr or or";
      continue;
    }
    if (!Number.isFinite(form[effKey])) {
      errors[effKey] = "must be a number";
      continue;
    }
    if (inOpenUnit(form[pKey])) {
      const implied = impliedTreatedProb(form[pKey], form[effKey], form[measureKey]);
      if (!inOpenUnit(implied)) {
        errors[effKey] = `pushes the probability to ${implied.toFixed(4)}`;
      }
    }
  }
  if (!MEASURES.includes(form.effm_ce)) errors.effm_ce = "diff, rr or or";
  if (!Number.isFinite(form.rho) || form.rho < -1 || form.rho > 1) {
    errors.rho = "must lie in [-1, 1]";
  } else if (rhoBounds && (form.rho < rhoBounds.lower || form.rho > rhoBounds.upper)) {
    errors.rho = `outside the feasible range [${rhoBounds.lower.toFixed(4)}, ${rhoBounds.upper.toFixed(4)}]`;
  }
  if (!inOpenUnit(form.alpha)) errors.alpha = "must lie in (0, 1)";
  if (!inOpenUnit(form.beta)) errors.beta = "must lie in (0, 1)";
  return errors;
}

export function hasErrors(errors: FieldErrors): boolean {
  return Object.keys(errors).length > 0;
}
