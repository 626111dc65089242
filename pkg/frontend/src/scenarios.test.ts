import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "./api.js";
import { ScenarioApi } from "./scenarios.js";
import type { ScenarioRecord } from "./types.js";

/** In-memory double of the service's scenario endpoints. */
function fakeStore() {
  const records = new Map<string, ScenarioRecord>();
  let counter = 0;
  const fetchImpl = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const asJson = (body: unknown, status = 200) =>
      new Response(JSON.stringify(body), { status });
    const notFound = () =>
      asJson({ code: "not_found", field: "id", message: "unknown scenario" }, 404);
    if (url === "/api/scenarios" && method === "POST") {
      const body = JSON.parse(String(init!.body));
      const record: ScenarioRecord = {
        id: `s${++counter}`,
        created: new Date().toISOString(),
        modified: new Date().toISOString(),
        ...body,
      };
      records.set(record.id, record);
      return asJson(record, 201);
    }
    if (url === "/api/scenarios") return asJson([...records.values()]);
    const id = url.split("/").pop()!;
    if (!records.has(id)) return notFound();
    if (method === "DELETE") {
      records.delete(id);
      return new Response(null, { status: 204 });
    }
    if (method === "PUT") {
      const body = JSON.parse(String(init!.body));
      const next = { ...records.get(id)!, ...body, modified: new Date().toISOString() };
      records.set(id, next);
      return asJson(next);
    }
    return asJson(records.get(id));
  };
  return { fetchImpl };
}

const LUNG_DESIGN = {
  p0_e1: 0.59, p0_e2: 0.74, hr_e1: 0.91, hr_e2: 0.77, rho: 0.5,
  beta_e1: 1, beta_e2: 2, case: 3,
};

describe("scenario management", () => {
  it("save then load returns the identical design", async () => {
    const api = new ScenarioApi(new ApiClient("", fakeStore().fetchImpl));
    const saved = await api.save("lung", "tte", LUNG_DESIGN);
    const loaded = await api.load(saved.id);
    expect(loaded.design).toEqual(LUNG_DESIGN);
    expect(loaded.name).toBe("lung");
    expect(loaded.kind).toBe("tte");
  });

  it("delete then load reports not-found", async () => {
    const api = new ScenarioApi(new ApiClient("", fakeStore().fetchImpl));
    const saved = await api.save("temp", "tte", LUNG_DESIGN);
    await api.remove(saved.id);
    const failure = await api.load(saved.id).catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(404);
  });

  it("lists every saved scenario", async () => {
    const api = new ScenarioApi(new ApiClient("", fakeStore().fetchImpl));
    await api.save("one", "tte", LUNG_DESIGN);
    await api.save("two", "cbe", { p0_e1: 0.3 });
    const names = (await api.list()).map((r) => r.name);
    expect(names).toEqual(["one", "two"]);
  });

  it("update rewrites the record in place", async () => {
    const api = new ScenarioApi(new ApiClient("", fakeStore().fetchImpl));
    const saved = await api.save("draft", "tte", LUNG_DESIGN);
    const renamed = await api.update({ ...saved, name: "final" });
    expect(renamed.id).toBe(saved.id);
    expect((await api.load(saved.id)).name).toBe("final");
  });
});
