/** Typed client for the design service.
 *
 *  Every endpoint carries a monotonically increasing sequence number; a
 *  response arriving after a newer request for the same endpoint is reported
 *  as stale so the caller can discard it (the UI only ever renders the
 *  latest).  Service-side validation/infeasibility (400/422) surfaces as
 *  `ApiError` with the structured payload; transport failures as
 *  `UnreachableError` for the retry banner.
 */

import type { ServiceError } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public payload: ServiceError,
  ) {
    super(payload.message);
  }
}

export class UnreachableError extends Error {}

export class StaleResponseError extends Error {}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private sequence = new Map<string, number>();

  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private nextSeq(key: string): number {
    const seq = (this.sequence.get(key) ?? 0) + 1;
    this.sequence.set(key, seq);
    return seq;
  }

  private isCurrent(key: string, seq: number): boolean {
    return this.sequence.get(key) === seq;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const seq = this.nextSeq(path);
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new UnreachableError(String(err));
    }
    if (!this.isCurrent(path, seq)) throw new StaleResponseError(path);
    if (response.status === 204) return undefined as T;
    if (!response.ok) {
      let payload: ServiceError;
      try {
        payload = (await response.json()) as ServiceError;
      } catch {
        payload = { code: "unknown", field: null, message: response.statusText };
      }
      throw new ApiError(response.status, payload);
    }
    return (await response.json()) as T;
  }

  post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>("POST", path, body);
  }

  get<T>(path: string): Promise<T> {
    return this.request<T>("GET", path);
  }

  put<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>("PUT", path, body);
  }

  delete(path: string): Promise<void> {
    return this.request<void>("DELETE", path);
  }
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}
