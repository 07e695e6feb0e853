import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

const CLI = join(__dirname, "..", "dist", "cli.js");
const FIXTURES = join(__dirname, "fixtures");

function runCli(args: string[]): { status: number; stderr: string } {
  const res = spawnSync("node", [CLI, ...args], { encoding: "utf-8" });
  if (res.error) {
    throw res.error;
  }
  return { status: res.status ?? -1, stderr: res.stderr ?? "" };
}

describe("render CLI (built dist)", () => {
  it("renders a figure CSV to SVG, byte-identical across runs", () => {
    const dir = mkdtempSync(join(tmpdir(), "optocool-fig-"));
    const out1 = join(dir, "a.svg");
    const out2 = join(dir, "b.svg");
    const input = join(FIXTURES, "fig1b.csv");
    expect(runCli(["render", "--figure", "1b", "--in", input, "--out", out1]).status).toBe(0);
    expect(runCli(["render", "--figure", "1b", "--in", input, "--out", out2]).status).toBe(0);
    expect(readFileSync(out1)).toEqual(readFileSync(out2));
    expect(readFileSync(out1, "utf-8")).toContain("<svg");
  });

  it("exits 0 with a warning on empty data", () => {
    const dir = mkdtempSync(join(tmpdir(), "optocool-fig-"));
    const out = join(dir, "empty.svg");
    const res = runCli([
      "render", "--figure", "1b", "--in", join(FIXTURES, "empty1b.csv"), "--out", out,
    ]);
    expect(res.status).toBe(0);
    expect(res.stderr).toContain("no plottable data");
  });

  it("exits 1 on schema mismatch", () => {
    const dir = mkdtempSync(join(tmpdir(), "optocool-fig-"));
    const res = runCli([
      "render", "--figure", "3c", "--in", join(FIXTURES, "fig1b.csv"),
      "--out", join(dir, "x.svg"),
    ]);
    expect(res.status).toBe(1);
    expect(res.stderr).toContain("schema error");
  });

  it("exits 2 on usage errors", () => {
    expect(runCli(["render", "--figure", "1b"]).status).toBe(2);
  });

  it("does not modify its input", () => {
    const dir = mkdtempSync(join(tmpdir(), "optocool-fig-"));
    const input = join(dir, "in.csv");
    writeFileSync(input, readFileSync(join(FIXTURES, "fig4a.csv")));
    const before = readFileSync(input);
    runCli(["render", "--figure", "4a", "--in", input, "--out", join(dir, "o.svg")]);
    expect(readFileSync(input)).toEqual(before);
  });
});
