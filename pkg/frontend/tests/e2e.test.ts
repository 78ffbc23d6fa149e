// End-to-end tests against the real service: the scripted click sequence,
// replay determinism, and the payload diff proving the client does no
// algebra.  The service is spawned from the installed Python package.

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Api } from "../src/api.js";
import { ViewStore } from "../src/state.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;

async function waitForService(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/quiver`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  service = spawn("python3", ["-m", "clusterchar.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForService();
}, 30000);

afterAll(() => {
  service.kill();
});

function freshStore(): ViewStore {
  return new ViewStore(new Api(BASE));
}

describe("scripted click sequence on A4", () => {
  it("mutate 2, inspect slot 2, mutate 2 restores the initial seed", async () => {
    const store = freshStore();
    await store.start();
    expect(store.variableDisplays).toEqual(["x1", "x2", "x3", "x4"]);
    expect(store.summandLabels).toEqual(["T1", "T2", "T3", "T4"]);

    await store.mutate(2);
    expect(store.variableDisplays[1]).toBe("(x1 + x3)/x2");
    expect(store.summandLabels[1]).toBe("[2,2]");

    await store.inspectSlot(2);
    expect(store.detail?.label).toBe("[2,2]");
    expect(store.detail?.ccDisplay).toBe("(x1 + x3)/x2");
    expect(store.detail?.index).toEqual([0, -1, 1, 0]);
    expect(store.detail?.fpoly).toBe("1 + y2");
    expect(store.detail?.grassmannian).toContainEqual({ e: [0, 1, 0, 0], chi: 1 });

    await store.mutate(2);
    expect(store.variableDisplays).toEqual(["x1", "x2", "x3", "x4"]);
    expect(store.history).toEqual([2, 2]);
  });

  it("surfaces exchange diagnostics without crashing", async () => {
    const store = freshStore();
    await store.start();
    await store.mutate(99 as number).catch(() => undefined);
    // out-of-range vertex is a 400; the store records it verbatim
    expect(store.error).toContain("400");
  });
});

describe("inspect panel", () => {
  it("shows the served character, index and F-polynomial of [1,3]", async () => {
    const store = freshStore();
    await store.start();
    await store.inspectLabel("[1,3]");
    expect(store.detail?.name).toBe("3/2/1");
    expect(store.detail?.ccDisplay).toBe(
      "(x1*x2 + x1*x4 + x3*x4 + x2*x3*x4)/(x1*x2*x3)",
    );
    expect(store.detail?.index).toEqual([-1, 0, 0, 1]);
    expect(store.detail?.fpoly).toBe("1 + y1 + y1*y2 + y1*y2*y3");
    expect(store.detail?.grassmannian).toContainEqual({ e: [1, 1, 0, 0], chi: 1 });
    expect(store.detail?.grassmannian).toContainEqual({ e: [0, 1, 0, 0], chi: 0 });
  });

  it("shows summands without a Grassmannian table", async () => {
    const store = freshStore();
    await store.start();
    await store.inspectLabel("T2");
    expect(store.detail?.ccDisplay).toBe("x2");
    expect(store.detail?.index).toEqual([0, 1, 0, 0]);
    expect(store.detail?.grassmannian).toBeNull();
  });
});

describe("Kronecker session", () => {
  it("grows new variables on repeated clicks, with no categorical mirror", async () => {
    const store = freshStore();
    await store.start({
      n: 2,
      arrows: [
        { id: "a1", s: 1, t: 2 },
        { id: "a2", s: 1, t: 2 },
      ],
    });
    expect(store.session?.ct).toBeNull();
    const seen = new Set<string>(store.variableCanonicals);
    for (const vertex of [1, 2, 1, 2]) {
      await store.mutate(vertex);
      store.variableCanonicals.forEach((v) => seen.add(v));
    }
    expect(seen.size).toBe(6);
    expect(store.history.length).toBe(4);
  });
});

describe("determinism", () => {
  it("replaying the history reproduces the view state exactly", async () => {
    const store = freshStore();
    await store.start();
    for (const v of [2, 1, 3, 2, 4, 1]) {
      await store.mutate(v);
    }
    const replayed = await store.replay();
    expect(replayed.session?.seed).toEqual(store.session?.seed);
    expect(replayed.session?.ct).toEqual(store.session?.ct);
    expect(replayed.history).toEqual(store.history);
  });
});

function harvestStrings(doc: unknown, out: Set<string>): void {
  if (typeof doc === "string") {
    out.add(doc);
  } else if (Array.isArray(doc)) {
    doc.forEach((x) => harvestStrings(x, out));
  } else if (doc && typeof doc === "object") {
    Object.values(doc).forEach((x) => harvestStrings(x, out));
  }
}

describe("no client-side arithmetic", () => {
  it("every displayed value occurs verbatim in a raw service payload", async () => {
    const store = freshStore();
    await store.start();
    await store.mutate(2);
    await store.mutate(3);
    await store.inspectSlot(2);

    // fetch the raw payloads independently of the client abstractions
    const raw = new Set<string>();
    const session = await (await fetch(`${BASE}/session/${store.sessionId}`)).json();
    harvestStrings(session, raw);
    const table = await (await fetch(`${BASE}/cc-table`)).json();
    harvestStrings(table, raw);

    for (const shown of store.displayedStrings()) {
      expect(raw.has(shown), `displayed value ${shown} not served`).toBe(true);
    }
  });
});
