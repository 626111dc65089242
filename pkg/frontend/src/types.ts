/** Shared types: form state and service payload shapes. */

export type EndpointMode = "tte" | "cbe";

export interface TTEForm {
  p0_e1: number;
  p0_e2: number;
  hr_e1: number;
  hr_e2: number;
  rho: number;
  beta_e1: number;
  beta_e2: number;
  case: number;
  copula: string;
  rho_type: string;
  followup_time: number;
  alpha: number;
  power: number;
  ss_formula: string;
}

export interface CBEForm {
  p0_e1: number;
  p0_e2: number;
  eff_e1: number;
  eff_e2: number;
  rho: number;
  effm_e1: string;
  effm_e2: string;
  effm_ce: string;
  alpha: number;
  beta: number;
  unpooled: boolean;
}

export interface ArmSummaryPayload {
  rmst: number;
  median: number;
  median_beyond_followup: boolean;
  prob_e1: number;
  prob_e2: number;
  prob_ce: number;
}

export interface EffectsizePayload {
  gahr: number;
  ahr: number;
  rmst_ratio: number;
  median_ratio: number;
  control: ArmSummaryPayload;
  treated: ArmSummaryPayload;
}

export interface SamplesizePayload {
  endpoint1: number;
  endpoint2: number;
  composite: number;
  events_composite: number;
  gahr: number;
  alpha: number;
  power: number;
  formula: string;
}

export interface ArePayload {
  are: number;
  noncentrality_relevant: number;
  noncentrality_composite: number;
}

export interface CurvesPayload {
  survival: {
    time: number[];
    control_ce: number[];
    treated_ce: number[];
    [column: string]: number[];
  };
  hazard_ratio: { time: number[]; values: number[] };
  are_vs_rho: { rho: number[]; are: number[] };
  samplesize_vs_rho: { rho: number[]; n: number[] };
}

export interface CorrBoundsPayload {
  lower: number;
  upper: number;
}

export interface ScenarioRecord {
  id: string;
  name: string;
  kind: EndpointMode;
  design: Record<string, unknown>;
  created: string;
  modified: string;
}

export interface ServiceError {
  code: string;
  field: string | null;
  message: string;
}

/** One plotted series: x is monotone increasing. */
export interface Series {
  label: string;
  x: number[];
  y: number[];
}
