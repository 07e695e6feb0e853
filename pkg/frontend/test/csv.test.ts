import { describe, expect, it } from "vitest";

import { numericCell, parseCsv, requireColumns, SchemaError } from "../src/csv.js";

describe("parseCsv", () => {
  it("parses header and rows", () => {
    const t = parseCsv("a,b\n1,2\n3,4\n");
    expect(t.columns).toEqual(["a", "b"]);
    expect(t.rows).toEqual([
      ["1", "2"],
      ["3", "4"],
    ]);
  });

  it("accepts a header-only document", () => {
    const t = parseCsv("a,b\n");
    expect(t.rows).toEqual([]);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1\n")).toThrow(SchemaError);
  });

  it("rejects an empty document", () => {
    expect(() => parseCsv("")).toThrow(SchemaError);
  });
});

describe("requireColumns", () => {
  it("names the missing column", () => {
    const t = parseCsv("a,b\n");
    expect(() => requireColumns(t, ["a", "zz"])).toThrow(/zz/);
  });
});

describe("numericCell", () => {
  it("parses numbers and nan", () => {
    expect(numericCell("3.5")).toBe(3.5);
    expect(numericCell("-1e-3")).toBe(-1e-3);
    expect(Number.isNaN(numericCell("nan"))).toBe(true);
    expect(Number.isNaN(numericCell(""))).toBe(true);
  });
});
