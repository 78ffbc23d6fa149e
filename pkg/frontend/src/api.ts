// Typed client for the clusterchar JSON service.  Every value shown in the
// UI comes from these payloads; the client performs no algebra.

export interface VariablePayload {
  canonical: string;
  display: string;
}

export interface QuiverArrow {
  id: string;
  s: number;
  t: number;
}

export interface QuiverPayload {
  n: number;
  arrows: QuiverArrow[];
}

export interface SeedPayload {
  quiver: QuiverPayload;
  cluster: VariablePayload[];
}

export interface SummandPayload {
  label: string;
  name: string;
  cc: VariablePayload;
  index: number[];
}

export interface CTPayload {
  quiver: QuiverPayload;
  summands: SummandPayload[];
}

export interface SessionPayload {
  id: string;
  history: number[];
  seed: SeedPayload;
  ct: CTPayload | null;
  vertex?: number;
  variable?: VariablePayload;
}

export interface CCTableEntry {
  label: string;
  name: string;
  index: number[];
  cc: VariablePayload;
  fpoly: string;
  rep: unknown | null;
}

export interface GrassRow {
  e: number[];
  chi: number;
}

export interface GrassPayload {
  dims: number[];
  table: GrassRow[];
  fpoly: string;
}

export interface ArQuiverPayload {
  quiver: QuiverPayload;
  vertices: {
    interval: number[];
    name: string;
    dims: number[];
    projective: boolean;
    injective: boolean;
  }[];
  arrows: { from: number[]; to: number[] }[];
  tau: { from: number[]; to: number[] }[];
  meshes: { tau: number[]; middle: number[][]; top: number[] }[];
}

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly payload: { error?: string; detail?: string },
  ) {
    super(`${status}: ${payload.error ?? ""} ${payload.detail ?? ""}`.trim());
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(`${base}${path}`, init);
  if (!res.ok) {
    let payload: { error?: string; detail?: string } = {};
    try {
      payload = await res.json();
    } catch {
      // non-JSON error body; keep the status only
    }
    throw new ServiceError(res.status, payload);
  }
  return res.json() as Promise<T>;
}

export class Api {
  constructor(readonly base: string) {}

  getQuiver(): Promise<QuiverPayload> {
    return request(this.base, "/quiver");
  }

  createSession(quiver?: QuiverPayload): Promise<SessionPayload> {
    return request(this.base, "/session", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(quiver ? { quiver } : {}),
    });
  }

  getSession(id: string): Promise<SessionPayload> {
    return request(this.base, `/session/${id}`);
  }

  mutate(id: string, vertex: number): Promise<SessionPayload> {
    return request(this.base, `/session/${id}/mutate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
  }

  getSnapshot(id: string): Promise<{ quiver: QuiverPayload; history: number[] }> {
    return request(this.base, `/session/${id}/snapshot`);
  }

  importSession(snapshot: { quiver: QuiverPayload; history: number[] }): Promise<SessionPayload> {
    return request(this.base, "/session/import", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(snapshot),
    });
  }

  getCCTable(): Promise<{ entries: CCTableEntry[] }> {
    return request(this.base, "/cc-table");
  }

  getArQuiver(): Promise<ArQuiverPayload> {
    return request(this.base, "/ar-quiver");
  }

  getGrassmannian(rep: unknown): Promise<GrassPayload> {
    const encoded = encodeURIComponent(JSON.stringify(rep));
    return request(this.base, `/grassmannian?rep=${encoded}`);
  }
}
