/** Scenario persistence against the service's /api/scenarios store. */

import { ApiClient } from "./api.js";
import type { EndpointMode, ScenarioRecord } from "./types.js";

export class ScenarioApi {
  constructor(private client: ApiClient) {}

  list(): Promise<ScenarioRecord[]> {
    return this.client.get<ScenarioRecord[]>("/api/scenarios");
  }

  save(name: string, kind: EndpointMode, design: Record<string, unknown>): Promise<ScenarioRecord> {
    return this.client.post<ScenarioRecord>("/api/scenarios", { name, kind, design });
  }

  load(id: string): Promise<ScenarioRecord> {
    return this.client.get<ScenarioRecord>(`/api/scenarios/${id}`);
  }

  update(record: ScenarioRecord): Promise<ScenarioRecord> {
    const { name, kind, design } = record;
    return this.client.put<ScenarioRecord>(`/api/scenarios/${record.id}`, { name, kind, design });
  }

  remove(id: string): Promise<void> {
    return this.client.delete(`/api/scenarios/${id}`);
  }
}
