// View state driven purely by service payloads.  The store keeps the raw
// responses it received; everything the panels show is a string taken
// verbatim from one of them, which is what the payload-diff test checks.

import {
  Api,
  CCTableEntry,
  GrassPayload,
  QuiverPayload,
  SessionPayload,
  ServiceError,
} from "./api.js";

export interface Detail {
  label: string;
  name: string;
  ccDisplay: string;
  ccCanonical: string;
  index: number[];
  fpoly: string;
  grassmannian: { e: number[]; chi: number }[] | null;
}

export class ViewStore {
  session: SessionPayload | null = null;
  detail: Detail | null = null;
  error: string | null = null;
  private ccTable: CCTableEntry[] | null = null;
  private grassCache = new Map<string, GrassPayload>();

  constructor(readonly api: Api) {}

  get sessionId(): string {
    if (!this.session) throw new Error("no live session");
    return this.session.id;
  }

  get history(): number[] {
    return this.session ? this.session.history : [];
  }

  /** Cluster variable display strings by slot, exactly as served. */
  get variableDisplays(): string[] {
    return this.session ? this.session.seed.cluster.map((v) => v.display) : [];
  }

  get variableCanonicals(): string[] {
    return this.session ? this.session.seed.cluster.map((v) => v.canonical) : [];
  }

  /** Labels of the cluster-tilting summands (empty outside type A). */
  get summandLabels(): string[] {
    return this.session?.ct ? this.session.ct.summands.map((s) => s.label) : [];
  }

  get summandNames(): string[] {
    return this.session?.ct ? this.session.ct.summands.map((s) => s.name) : [];
  }

  async start(quiver?: QuiverPayload): Promise<void> {
    this.session = await this.api.createSession(quiver);
    this.detail = null;
    this.error = null;
  }

  async mutate(vertex: number): Promise<void> {
    try {
      this.session = await this.api.mutate(this.sessionId, vertex);
      this.error = null;
    } catch (err) {
      if (err instanceof ServiceError) {
        // surface exchange diagnostics verbatim
        this.error = err.message;
        return;
      }
      throw err;
    }
  }

  /** Detail panel for the CT summand in the given slot (1-based). */
  async inspectSlot(slot: number): Promise<void> {
    if (!this.session?.ct) throw new Error("no categorical mirror for this session");
    await this.inspectLabel(this.session.ct.summands[slot - 1].label);
  }

  async inspectLabel(label: string): Promise<void> {
    if (this.ccTable === null) {
      this.ccTable = (await this.api.getCCTable()).entries;
    }
    const entry = this.ccTable.find((e) => e.label === label);
    if (!entry) {
      this.error = `no table entry for ${label}`;
      return;
    }
    let grass: GrassPayload | null = null;
    if (entry.rep !== null) {
      const cached = this.grassCache.get(label);
      if (cached) {
        grass = cached;
      } else {
        try {
          grass = await this.api.getGrassmannian(entry.rep);
          this.grassCache.set(label, grass);
        } catch (err) {
          if (err instanceof ServiceError) {
            this.error = err.message;
            return;
          }
          throw err;
        }
      }
    }
    this.detail = {
      label: entry.label,
      name: entry.name,
      ccDisplay: entry.cc.display,
      ccCanonical: entry.cc.canonical,
      index: entry.index,
      fpoly: entry.fpoly,
      grassmannian: grass ? grass.table : null,
    };
    this.error = null;
  }

  /** Replay the current history into a fresh session (same initial quiver,
   * via the snapshot endpoints); used by the history strip and by the
   * determinism test. */
  async replay(): Promise<ViewStore> {
    const snapshot = await this.api.getSnapshot(this.sessionId);
    const fresh = new ViewStore(this.api);
    fresh.session = await this.api.importSession(snapshot);
    return fresh;
  }

  /** Everything the panels would show, flattened; the tests diff this
   * against the raw payloads to prove the client did no arithmetic. */
  displayedStrings(): string[] {
    const out: string[] = [];
    out.push(...this.variableDisplays, ...this.variableCanonicals);
    if (this.session?.ct) {
      for (const s of this.session.ct.summands) {
        out.push(s.label, s.name, s.cc.display, s.cc.canonical);
      }
    }
    if (this.detail) {
      out.push(
        this.detail.label,
        this.detail.name,
        this.detail.ccDisplay,
        this.detail.ccCanonical,
        this.detail.fpoly,
      );
    }
    return out;
  }
}
