/** DOM wiring: form -> debounced service calls -> panels and tables.
 *
 *  All statistics render from service responses; this module only routes
 *  values.  Stale responses are discarded by the client's sequence numbers,
 *  and only the latest response per endpoint reaches the screen.
 */

import {
  ApiClient,
  ApiError,
  StaleResponseError,
  UnreachableError,
  debounce,
} from "./api.js";
import { orderedOverlays, panelSeries, renderPanel, type Overlay } from "./panels.js";
import { ScenarioApi } from "./scenarios.js";
import { areReadout, effectTable, samplesizeTable, tableHtml, fmt } from "./tables.js";
import type {
  ArePayload,
  CBEForm,
  CorrBoundsPayload,
  CurvesPayload,
  EffectsizePayload,
  SamplesizePayload,
  TTEForm,
} from "./types.js";
import { hasErrors, validateCBE, validateTTE } from "./validation.js";

const SERVICE_URL = (window as { COMPOSITE_DESIGN_SERVICE?: string }).COMPOSITE_DESIGN_SERVICE ?? "";
const client = new ApiClient(SERVICE_URL);
const scenarios = new ScenarioApi(client);

const TTE_DEFAULTS: TTEForm = {
  p0_e1: 0.59, p0_e2: 0.74, hr_e1: 0.91, hr_e2: 0.77, rho: 0.5,
  beta_e1: 1, beta_e2: 2, case: 3, copula: "frank", rho_type: "spearman",
  followup_time: 1, alpha: 0.05, power: 0.8, ss_formula: "schoenfeld",
};
const CBE_DEFAULTS: CBEForm = {
  p0_e1: 0.3, p0_e2: 0.2, eff_e1: -0.1, eff_e2: -0.05, rho: 0,
  effm_e1: "diff", effm_e2: "diff", effm_ce: "diff",
  alpha: 0.05, beta: 0.2, unpooled: true,
};

type OverlayKind = "none" | "hr_e2" | "beta_e2";
const OVERLAY_VALUES: Record<Exclude<OverlayKind, "none">, number[]> = {
  hr_e2: [0.65, 0.77, 0.85],
  beta_e2: [0.5, 1, 2],
};

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
};

let mode: "tte" | "cbe" = "tte";
let overlayKind: OverlayKind = "none";
let compareBaseline: { name: string; curve: Overlay } | null = null;

function readNumber(id: string): number {
  return Number((el<HTMLInputElement>(id)).value);
}

function readTTEForm(): TTEForm {
  return {
    p0_e1: readNumber("p0_e1"), p0_e2: readNumber("p0_e2"),
    hr_e1: readNumber("hr_e1"), hr_e2: readNumber("hr_e2"),
    rho: readNumber("rho"),
    beta_e1: readNumber("beta_e1"), beta_e2: readNumber("beta_e2"),
    case: Number(el<HTMLSelectElement>("case").value),
    copula: el<HTMLSelectElement>("copula").value,
    rho_type: el<HTMLSelectElement>("rho_type").value,
    followup_time: readNumber("followup_time"),
    alpha: readNumber("alpha"), power: readNumber("power"),
    ss_formula: el<HTMLSelectElement>("ss_formula").value,
  };
}

function readCBEForm(): CBEForm {
  return {
    p0_e1: readNumber("cbe_p0_e1"), p0_e2: readNumber("cbe_p0_e2"),
    eff_e1: readNumber("cbe_eff_e1"), eff_e2: readNumber("cbe_eff_e2"),
    rho: readNumber("cbe_rho"),
    effm_e1: el<HTMLSelectElement>("cbe_effm_e1").value,
    effm_e2: el<HTMLSelectElement>("cbe_effm_e2").value,
    effm_ce: el<HTMLSelectElement>("cbe_effm_ce").value,
    alpha: readNumber("cbe_alpha"), beta: readNumber("cbe_beta"),
    unpooled: el<HTMLInputElement>("cbe_unpooled").checked,
  };
}

function writeForm(values: Record<string, unknown>, prefix = ""): void {
  for (const [key, value] of Object.entries(values)) {
    const node = document.getElementById(prefix + key);
    if (!node) continue;
    if (node instanceof HTMLInputElement && node.type === "checkbox") {
      node.checked = Boolean(value);
    } else if (node instanceof HTMLInputElement || node instanceof HTMLSelectElement) {
      node.value = String(value);
    }
  }
}

function clearFieldErrors(): void {
  document.querySelectorAll(".field-error").forEach((n) => (n.textContent = ""));
  document.querySelectorAll("input, select").forEach((n) => n.classList.remove("invalid"));
}

function showFieldError(field: string, message: string): void {
  const ids = mode === "tte" ? [field] : [`cbe_${field}`, field];
  for (const id of ids) {
    const slot = document.getElementById(`${id}-error`);
    const input = document.getElementById(id);
    if (slot) slot.textContent = message;
    if (input) input.classList.add("invalid");
    if (slot || input) return;
  }
  banner(`${field}: ${message}`, false);
}

function banner(message: string, retry: boolean): void {
  const box = el("banner");
  box.textContent = message;
  box.classList.remove("hidden");
  el("retry").classList.toggle("hidden", !retry);
}

function clearBanner(): void {
  el("banner").classList.add("hidden");
  el("retry").classList.add("hidden");
}

function toast(message: string): void {
  const node = el("toast");
  node.textContent = message;
  node.classList.remove("hidden");
  setTimeout(() => node.classList.add("hidden"), 4000);
}

function handleFailure(err: unknown): void {
  if (err instanceof StaleResponseError) return;
  if (err instanceof UnreachableError) {
    banner("design service unreachable", true);
    return;
  }
  if (err instanceof ApiError) {
    if (err.payload.field) showFieldError(err.payload.field, err.payload.message);
    else banner(err.payload.message, false);
    return;
  }
  banner(String(err), false);
}

async function refreshTTE(): Promise<void> {
  const form = readTTEForm();
  clearFieldErrors();
  const errors = validateTTE(form);
  if (hasErrors(errors)) {
    for (const [field, message] of Object.entries(errors)) showFieldError(field, message!);
    return;
  }
  const body = { ...form };
  try {
    const [effect, size, are, curves] = await Promise.all([
      client.post<EffectsizePayload>("/api/tte/effectsize", body),
      client.post<SamplesizePayload>("/api/tte/samplesize", body),
      client.post<ArePayload>("/api/tte/are", body),
      client.post<CurvesPayload>("/api/tte/curves", { ...body, grid: 120 }),
    ]);
    clearBanner();
    el("effect-table").innerHTML = tableHtml(effectTable(effect));
    el("size-table").innerHTML = tableHtml(samplesizeTable(size));
    el("are-readout").textContent = areReadout(are);
    renderPanels(curves);
    await refreshOverlays(body);
  } catch (err) {
    handleFailure(err);
  }
}

function renderPanels(curves: CurvesPayload): void {
  const series = panelSeries(curves);
  el("panel-survival").innerHTML = renderPanel("Composite survival", series.survival, undefined, true);
  el("panel-hr").innerHTML = renderPanel("Hazard ratio over time", series.hazardRatio);
  el("panel-are").innerHTML = renderPanel("ARE vs association", series.areVsRho, undefined, true);
  el("panel-n").innerHTML = renderPanel("Sample size vs association", series.samplesizeVsRho, undefined, true);
}

async function refreshOverlays(body: TTEForm): Promise<void> {
  if (overlayKind === "none" && !compareBaseline) return;
  const overlays: Overlay[] = [];
  if (overlayKind !== "none") {
    const values = OVERLAY_VALUES[overlayKind];
    const responses = await Promise.all(
      values.map((value) =>
        client.post<CurvesPayload>(`/api/tte/curves?overlay=${overlayKind}-${value}`, {
          ...body,
          [overlayKind]: value,
          grid: 10,
        }),
      ),
    );
    responses.forEach((r, i) =>
      overlays.push({
        label: `${overlayKind === "hr_e2" ? "HR2" : "beta2"}=${values[i]}`,
        rho: r.samplesize_vs_rho.rho,
        n: r.samplesize_vs_rho.n,
      }),
    );
  }
  if (compareBaseline) overlays.push({ ...compareBaseline.curve, label: compareBaseline.name });
  if (!overlays.length) return;
  const ordered = orderedOverlays(overlays);
  el("panel-n").innerHTML = renderPanel(
    "Sample size vs association",
    ordered.map((o) => ({ label: o.label, x: o.rho, y: o.n })),
    undefined,
    true,
  );
}

async function refreshCBE(): Promise<void> {
  const form = readCBEForm();
  clearFieldErrors();
  let bounds: CorrBoundsPayload | undefined;
  try {
    bounds = await client.post<CorrBoundsPayload>("/api/cbe/corr-bounds", {
      p1: form.p0_e1,
      p2: form.p0_e2,
    });
    el("cbe-bounds").textContent =
      `feasible correlation: [${fmt(bounds.lower)}, ${fmt(bounds.upper)}]`;
  } catch (err) {
    if (!(err instanceof ApiError)) return handleFailure(err);
  }
  const errors = validateCBE(form, bounds);
  if (hasErrors(errors)) {
    for (const [field, message] of Object.entries(errors)) showFieldError(field, message!);
    return;
  }
  try {
    const [effect, size, are] = await Promise.all([
      client.post<{ prob_ce_control: number; prob_ce_treated: number; effect: number; measure: string }>(
        "/api/cbe/effectsize", form),
      client.post<{ total: number; per_arm: number }>("/api/cbe/samplesize", form),
      client.post<{ are: number }>("/api/cbe/are", form),
    ]);
    clearBanner();
    el("cbe-results").innerHTML = tableHtml({
      header: ["Quantity", "Value"],
      rows: [
        [`Composite effect (${effect.measure})`, fmt(effect.effect)],
        ["Prob. CE reference", fmt(effect.prob_ce_control)],
        ["Prob. CE treated", fmt(effect.prob_ce_treated)],
        ["Total sample size", String(size.total)],
        ["ARE", are.are.toFixed(3)],
      ],
    });
  } catch (err) {
    handleFailure(err);
  }
}

const explore = debounce(() => {
  void (mode === "tte" ? refreshTTE() : refreshCBE());
}, 300);

async function refreshScenarioList(): Promise<void> {
  try {
    const records = await scenarios.list();
    const select = el<HTMLSelectElement>("scenario-list");
    select.innerHTML = records
      .map((r) => `<option value="${r.id}">${r.name} (${r.kind})</option>`)
      .join("");
  } catch (err) {
    handleFailure(err);
  }
}

function currentDesign(): Record<string, unknown> {
  return mode === "tte" ? { ...readTTEForm() } : { ...readCBEForm() };
}

async function saveScenario(): Promise<void> {
  const name = el<HTMLInputElement>("scenario-name").value || "unnamed";
  try {
    await scenarios.save(name, mode, currentDesign());
    toast(`saved "${name}"`);
    await refreshScenarioList();
  } catch (err) {
    handleFailure(err);
  }
}

async function loadScenario(): Promise<void> {
  const id = el<HTMLSelectElement>("scenario-list").value;
  if (!id) return;
  try {
    const record = await scenarios.load(id);
    setMode(record.kind);
    writeForm(record.design, record.kind === "cbe" ? "cbe_" : "");
    el<HTMLInputElement>("scenario-name").value = record.name;
    explore();
  } catch (err) {
    if (err instanceof ApiError && err.status === 404) toast("scenario not found");
    else handleFailure(err);
  }
}

async function deleteScenario(): Promise<void> {
  const id = el<HTMLSelectElement>("scenario-list").value;
  if (!id) return;
  try {
    await scenarios.remove(id);
    toast("scenario deleted");
    await refreshScenarioList();
  } catch (err) {
    if (err instanceof ApiError && err.status === 404) toast("scenario not found");
    else handleFailure(err);
  }
}

async function compareScenario(): Promise<void> {
  const id = el<HTMLSelectElement>("scenario-list").value;
  if (!id) return;
  try {
    const record = await scenarios.load(id);
    if (record.kind !== "tte") {
      toast("comparison needs a time-to-event scenario");
      return;
    }
    const curves = await client.post<CurvesPayload>("/api/tte/curves?compare=1", {
      ...record.design,
      grid: 10,
    });
    compareBaseline = {
      name: record.name,
      curve: {
        label: record.name,
        rho: curves.samplesize_vs_rho.rho,
        n: curves.samplesize_vs_rho.n,
      },
    };
    explore();
  } catch (err) {
    if (err instanceof ApiError && err.status === 404) toast("scenario not found");
    else handleFailure(err);
  }
}

function setMode(next: "tte" | "cbe"): void {
  mode = next;
  el("tte-section").classList.toggle("hidden", next !== "tte");
  el("cbe-section").classList.toggle("hidden", next !== "cbe");
  el<HTMLInputElement>(`mode-${next}`).checked = true;
}

export function boot(): void {
  writeForm({ ...TTE_DEFAULTS });
  writeForm({ ...CBE_DEFAULTS }, "cbe_");
  document.querySelectorAll("input, select").forEach((node) => {
    node.addEventListener("input", () => explore());
  });
  el("mode-tte").addEventListener("change", () => { setMode("tte"); explore(); });
  el("mode-cbe").addEventListener("change", () => { setMode("cbe"); explore(); });
  el<HTMLSelectElement>("overlay-kind").addEventListener("change", (event) => {
    overlayKind = (event.target as HTMLSelectElement).value as OverlayKind;
    explore();
  });
  el("scenario-save").addEventListener("click", () => void saveScenario());
  el("scenario-load").addEventListener("click", () => void loadScenario());
  el("scenario-delete").addEventListener("click", () => void deleteScenario());
  el("scenario-compare").addEventListener("click", () => void compareScenario());
  el("scenario-clear-compare").addEventListener("click", () => {
    compareBaseline = null;
    explore();
  });
  el("retry").addEventListener("click", () => explore());
  void refreshScenarioList();
  explore();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
