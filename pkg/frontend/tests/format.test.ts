import { describe, expect, it } from "vitest";

import { prettyDisplay, prettyIndex, prettyPoly } from "../src/format.js";
import { hashSeed, isPathGraph, layoutQuiver } from "../src/layout.js";

describe("polynomial formatter", () => {
  it("subscripts variables and superscripts exponents", () => {
    expect(prettyPoly("x1^-1*x4 + 2*x2")).toBe("x₁⁻¹ x₄ + 2 x₂");
  });

  it("renders the display fraction unchanged apart from cosmetics", () => {
    expect(prettyDisplay("(x1 + x3)/x2")).toBe("(x₁ + x₃)/x₂");
  });

  it("renders index vectors", () => {
    expect(prettyIndex([0, -1, 1, 0])).toBe("(0, -1, 1, 0)");
  });
});

describe("layout", () => {
  const a4 = {
    n: 4,
    arrows: [
      { id: "a1", s: 1, t: 2 },
      { id: "a2", s: 2, t: 3 },
      { id: "a3", s: 3, t: 4 },
    ],
  };

  it("recognizes path graphs regardless of orientation", () => {
    expect(isPathGraph(a4)).toBe(true);
    expect(
      isPathGraph({ n: 2, arrows: [{ id: "a1", s: 1, t: 2 }, { id: "a2", s: 1, t: 2 }] }),
    ).toBe(false);
  });

  it("lays type A on a horizontal line", () => {
    const pts = layoutQuiver(a4, 560, 220, 1);
    expect(new Set(pts.map((p) => p.y)).size).toBe(1);
    expect(pts.map((p) => p.x)).toEqual([...pts.map((p) => p.x)].sort((a, b) => a - b));
  });

  it("is deterministic for a fixed seed", () => {
    const cycle = {
      n: 3,
      arrows: [
        { id: "a1", s: 2, t: 1 },
        { id: "a2", s: 3, t: 2 },
        { id: "a3", s: 1, t: 3 },
      ],
    };
    const seed = hashSeed("session-xyz");
    expect(layoutQuiver(cycle, 560, 220, seed)).toEqual(layoutQuiver(cycle, 560, 220, seed));
  });
});
