import { readFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { BRANCH_COLORS, EP_FILL } from "../src/figures.js";
import { renderFigure } from "../src/render.js";
import { fmt, niceTicks, decadeTicks } from "../src/svg.js";

function fixture(name: string): string {
  return readFileSync(join(__dirname, "fixtures", name), "utf-8");
}

describe("branch color convention", () => {
  it("maps mono/plus/minus to black/orange/blue", () => {
    expect(BRANCH_COLORS.mono).toBe("#000000");
    expect(BRANCH_COLORS.plus).toBe("#e66100");
    expect(BRANCH_COLORS.minus).toBe("#1f77b4");
  });
});

describe("renderFigure on engine output", () => {
  for (const id of ["1b", "1d", "3a", "4a"] as const) {
    it(`renders figure ${id} without error`, () => {
      const { svg, warnings } = renderFigure(id, fixture(`fig${id}.csv`));
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain("</svg>");
      expect(svg).toContain("polyline");
      expect(warnings).toEqual([]);
    });
  }

  it("colors the three branch families in figure 1d", () => {
    const { svg } = renderFigure("1d", fixture("fig1d.csv"));
    expect(svg).toContain(`stroke="${BRANCH_COLORS.mono}"`);
    expect(svg).toContain(`stroke="${BRANCH_COLORS.plus}"`);
    expect(svg).toContain(`stroke="${BRANCH_COLORS.minus}"`);
    expect(svg).toContain(`stroke="${BRANCH_COLORS.unstable}"`);
  });

  it("is byte-identical across repeated renders", () => {
    const a = renderFigure("1b", fixture("fig1b.csv")).svg;
    const b = renderFigure("1b", fixture("fig1b.csv")).svg;
    expect(a).toBe(b);
  });

  it("shades the real-eigenvalue region of figure 3c", () => {
    const { svg } = renderFigure("3c", fixture("fig3c.csv"));
    expect(svg).toContain(`fill="${EP_FILL}"`);
  });

  it("shades cooling and heating regions of figure 3a", () => {
    const { svg } = renderFigure("3a", fixture("fig3a.csv"));
    expect(svg).toContain('fill-opacity="0.45"');
  });

  it("renders 4c with a log frequency axis", () => {
    const { svg } = renderFigure("4c", fixture("fig4c.csv"));
    expect(svg).toContain("polyline");
  });

  it("renders empty data as empty axes with a warning", () => {
    const { svg, warnings } = renderFigure("1b", fixture("empty1b.csv"));
    expect(svg).toContain("</svg>");
    expect(svg).not.toContain("polyline");
    expect(warnings.some((w) => w.includes("no plottable data"))).toBe(true);
  });

  it("rejects a schema mismatch naming the column", () => {
    expect(() => renderFigure("3c", fixture("fig1b.csv"))).toThrow(
      /missing required column '(ej_ratio|lambda_plus_re)'/,
    );
  });

  it("rejects unknown figure ids", () => {
    expect(() => renderFigure("9z", fixture("fig1b.csv"))).toThrow(/unknown figure/);
  });
});

describe("svg helpers", () => {
  it("formats numbers deterministically", () => {
    expect(fmt(0)).toBe("0");
    expect(fmt(-0)).toBe("0");
    expect(fmt(1.5)).toBe("1.5");
    expect(fmt(0.30000000001)).toBe("0.3");
    expect(fmt(123456.789)).toBe("123457");
  });

  it("produces 1-2-5 ticks", () => {
    const t = niceTicks(0, 1000);
    expect(t).toContain(0);
    expect(t).toContain(200);
    expect(t[t.length - 1]).toBeLessThanOrEqual(1000);
    const steps = new Set(t.slice(1).map((v, i) => v - t[i]));
    expect(steps.size).toBe(1);
  });

  it("produces decade ticks", () => {
    expect(decadeTicks(0.05, 5)).toEqual([0.1, 1]);
  });
});
