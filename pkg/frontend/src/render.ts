/** Figure rendering: CSV rows -> branch-colored polylines -> SVG text. */

import {
  columnIndex,
  numericCell,
  parseCsv,
  requireColumns,
  SchemaError,
  type CsvTable,
} from "./csv.js";
import {
  BRANCH_COLORS,
  COOLING_FILL,
  EP_FILL,
  FIGURES,
  HEATING_FILL,
  type FigureSpec,
} from "./figures.js";
import { renderScene, type Polyline, type Scene, type ShadeBand } from "./svg.js";

export interface RenderResult {
  svg: string;
  warnings: string[];
}

interface SeriesPoint {
  x: number;
  y: number;
}

function seriesStyle(branch: string, dashedFamily: boolean): { color: string; dashed: boolean } {
  const color = BRANCH_COLORS[branch] ?? "#555555";
  return { color, dashed: dashedFamily || branch === "unstable" };
}

/** Contiguous x-intervals over which `flag` holds on sorted sample points. */
function flaggedBands(samples: Array<[number, boolean]>, fill: string): ShadeBand[] {
  const bands: ShadeBand[] = [];
  let start: number | null = null;
  let last = 0;
  for (const [x, on] of samples) {
    if (on) {
      if (start === null) {
        start = x;
      }
      last = x;
    } else if (start !== null) {
      bands.push({ x0: start, x1: last, fill });
      start = null;
    }
  }
  if (start !== null) {
    bands.push({ x0: start, x1: last, fill });
  }
  return bands.filter((b) => b.x1 > b.x0);
}

function computeBands(spec: FigureSpec, table: CsvTable, okRows: string[][]): ShadeBand[] {
  if (spec.shade === null) {
    return [];
  }
  const xIdx = columnIndex(table, spec.x);
  const signCol = spec.shade === "gamma_opt" ? "gamma_opt" : "ep_gap";
  const signIdx = columnIndex(table, signCol);
  const byX = new Map<number, number[]>();
  for (const row of okRows) {
    const x = numericCell(row[xIdx]);
    const v = numericCell(row[signIdx]);
    if (!Number.isFinite(x) || !Number.isFinite(v)) {
      continue;
    }
    const list = byX.get(x) ?? [];
    list.push(v);
    byX.set(x, list);
  }
  const xs = [...byX.keys()].sort((a, b) => a - b);
  if (spec.shade === "gamma_opt") {
    const cooling: Array<[number, boolean]> = xs.map((x) => [
      x,
      Math.max(...byX.get(x)!) > 0,
    ]);
    const heating: Array<[number, boolean]> = xs.map((x) => [
      x,
      Math.min(...byX.get(x)!) < 0,
    ]);
    return [...flaggedBands(cooling, COOLING_FILL), ...flaggedBands(heating, HEATING_FILL)];
  }
  const realEig: Array<[number, boolean]> = xs.map((x) => [
    x,
    Math.max(...byX.get(x)!) > 0,
  ]);
  return flaggedBands(realEig, EP_FILL);
}

export function renderFigure(figureId: string, csvText: string): RenderResult {
  const spec = FIGURES[figureId];
  if (spec === undefined) {
    throw new SchemaError(
      `unknown figure id '${figureId}'; expected one of ${Object.keys(FIGURES).join(", ")}`,
    );
  }
  const table = parseCsv(csvText);
  requireColumns(table, spec.required);
  const warnings: string[] = [];

  const statusIdx = columnIndex(table, "status");
  const branchIdx = columnIndex(table, "branch");
  const xIdx = columnIndex(table, spec.x);
  const groupIdx = spec.groupBy.map((name) => columnIndex(table, name));

  const okRows = table.rows.filter((row) => row[statusIdx] === "ok");
  const skipped = table.rows.length - okRows.length;
  if (skipped > 0) {
    warnings.push(`skipped ${skipped} row(s) without status=ok`);
  }

  // series keyed by (branch, group columns, y column), insertion-ordered
  const series = new Map<string, { points: SeriesPoint[]; color: string; dashed: boolean }>();
  for (const ySpec of spec.y) {
    const yIdx = columnIndex(table, ySpec.column);
    for (const row of okRows) {
      const x = numericCell(row[xIdx]);
      const y = numericCell(row[yIdx]);
      const branch = row[branchIdx];
      if (!Number.isFinite(x) || !Number.isFinite(y)) {
        continue;
      }
      if (spec.xLog && x <= 0) {
        continue;
      }
      const key = [branch, ...groupIdx.map((g) => row[g]), ySpec.column].join("|");
      let entry = series.get(key);
      if (entry === undefined) {
        const style = seriesStyle(branch, ySpec.dashed ?? false);
        entry = { points: [], color: style.color, dashed: style.dashed };
        series.set(key, entry);
      }
      entry.points.push({ x, y });
    }
  }

  let xLo = Infinity;
  let xHi = -Infinity;
  let yLo = Infinity;
  let yHi = -Infinity;
  for (const entry of series.values()) {
    for (const p of entry.points) {
      xLo = Math.min(xLo, p.x);
      xHi = Math.max(xHi, p.x);
      yLo = Math.min(yLo, p.y);
      yHi = Math.max(yHi, p.y);
    }
  }
  if (!Number.isFinite(xLo) || !Number.isFinite(yLo)) {
    warnings.push("no plottable data: rendering empty axes");
    xLo = spec.xLog ? 0.1 : 0;
    xHi = spec.xLog ? 10 : 1;
    yLo = 0;
    yHi = 1;
  }
  if (xHi <= xLo) {
    xHi = xLo + (spec.xLog ? 9 * xLo : 1);
  }
  if (yHi <= yLo) {
    yHi = yLo + 1;
  }
  const yPad = 0.06 * (yHi - yLo);

  const lines: Polyline[] = [];
  const markers: Scene["markers"] = [];
  for (const entry of series.values()) {
    const pts = [...entry.points].sort((a, b) => a.x - b.x || a.y - b.y);
    if (pts.length === 1) {
      markers.push({ x: pts[0].x, y: pts[0].y, color: entry.color });
      continue;
    }
    lines.push({
      points: pts.map((p) => [p.x, p.y] as [number, number]),
      color: entry.color,
      dashed: entry.dashed,
    });
  }

  const scene: Scene = {
    title: `figure ${figureId}`,
    xLabel: spec.xLabel,
    yLabel: spec.yLabel,
    xRange: [xLo, xHi],
    yRange: [yLo - yPad, yHi + yPad],
    xLog: spec.xLog ?? false,
    bands: computeBands(spec, table, okRows),
    lines,
    markers,
  };
  return { svg: renderScene(scene), warnings };
}
