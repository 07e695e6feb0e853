/** Minimal deterministic SVG scene builder: fixed canvas, 1-2-5 ticks,
 * locale-independent number formatting (identical input -> identical bytes). */

export const WIDTH = 640;
export const HEIGHT = 420;
export const MARGIN = { left: 64, right: 16, top: 28, bottom: 46 };

export interface Polyline {
  points: Array<[number, number]>;
  color: string;
  dashed: boolean;
}

export interface ShadeBand {
  x0: number;
  x1: number;
  fill: string;
}

export interface Scene {
  title: string;
  xLabel: string;
  yLabel: string;
  xRange: [number, number];
  yRange: [number, number];
  xLog: boolean;
  bands: ShadeBand[];
  lines: Polyline[];
  markers: Array<{ x: number; y: number; color: string }>;
}

/** Deterministic short representation of a coordinate or tick value. */
export function fmt(value: number): string {
  if (!Number.isFinite(value)) {
    return "0";
  }
  if (value === 0) {
    return "0";
  }
  let text = value.toPrecision(6);
  if (text.includes(".") && !text.includes("e") && !text.includes("E")) {
    text = text.replace(/0+$/, "").replace(/\.$/, "");
  }
  if (text === "-0") {
    text = "0";
  }
  return text;
}

/** Tick positions with a 1-2-5 step covering [lo, hi]. */
export function niceTicks(lo: number, hi: number, target = 6): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const raw = (hi - lo) / Math.max(target, 2);
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  const first = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = first; v <= hi + 1e-9 * step; v += step) {
    ticks.push(Math.abs(v) < 1e-12 * step ? 0 : v);
  }
  return ticks;
}

/** Decade ticks for a log axis over positive [lo, hi]. */
export function decadeTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  const start = Math.ceil(Math.log10(lo) - 1e-12);
  const stop = Math.floor(Math.log10(hi) + 1e-12);
  for (let e = start; e <= stop; e++) {
    ticks.push(Math.pow(10, e));
  }
  if (ticks.length === 0) {
    ticks.push(lo, hi);
  }
  return ticks;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderScene(scene: Scene): string {
  const [x0, x1] = scene.xRange;
  const [y0, y1] = scene.yRange;
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const tx = (x: number): number => {
    const u = scene.xLog
      ? (Math.log10(x) - Math.log10(x0)) / (Math.log10(x1) - Math.log10(x0))
      : (x - x0) / (x1 - x0);
    return MARGIN.left + u * plotW;
  };
  const ty = (y: number): number => MARGIN.top + (1 - (y - y0) / (y1 - y0)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`);

  for (const band of scene.bands) {
    const bx0 = Math.max(Math.min(band.x0, band.x1), x0);
    const bx1 = Math.min(Math.max(band.x0, band.x1), x1);
    if (!(bx1 > bx0)) {
      continue;
    }
    parts.push(
      `<rect x="${fmt(tx(bx0))}" y="${MARGIN.top}" width="${fmt(tx(bx1) - tx(bx0))}" ` +
        `height="${plotH}" fill="${band.fill}" fill-opacity="0.45"/>`,
    );
  }

  // frame
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#000000" stroke-width="1"/>`,
  );

  const xTicks = scene.xLog ? decadeTicks(x0, x1) : niceTicks(x0, x1);
  for (const t of xTicks) {
    if (t < x0 - 1e-12 || t > x1 + 1e-12) {
      continue;
    }
    const px = tx(t);
    parts.push(
      `<line x1="${fmt(px)}" y1="${HEIGHT - MARGIN.bottom}" x2="${fmt(px)}" ` +
        `y2="${HEIGHT - MARGIN.bottom + 5}" stroke="#000000"/>`,
    );
    parts.push(
      `<text x="${fmt(px)}" y="${HEIGHT - MARGIN.bottom + 18}" font-size="11" ` +
        `text-anchor="middle" font-family="sans-serif">${fmt(t)}</text>`,
    );
  }
  for (const t of niceTicks(y0, y1)) {
    if (t < y0 - 1e-12 || t > y1 + 1e-12) {
      continue;
    }
    const py = ty(t);
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${fmt(py)}" x2="${MARGIN.left}" ` +
        `y2="${fmt(py)}" stroke="#000000"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${fmt(py + 4)}" font-size="11" ` +
        `text-anchor="end" font-family="sans-serif">${fmt(t)}</text>`,
    );
  }

  for (const line of scene.lines) {
    const coords = line.points
      .map(([x, y]) => `${fmt(tx(x))},${fmt(ty(y))}`)
      .join(" ");
    const dash = line.dashed ? ` stroke-dasharray="6,4"` : "";
    parts.push(
      `<polyline points="${coords}" fill="none" stroke="${line.color}" ` +
        `stroke-width="1.6"${dash}/>`,
    );
  }
  for (const mk of scene.markers) {
    parts.push(
      `<circle cx="${fmt(tx(mk.x))}" cy="${fmt(ty(mk.y))}" r="2.2" fill="${mk.color}"/>`,
    );
  }

  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 10}" font-size="13" ` +
      `text-anchor="middle" font-family="sans-serif">${esc(scene.xLabel)}</text>`,
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" font-size="13" text-anchor="middle" ` +
      `font-family="sans-serif" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
      `${esc(scene.yLabel)}</text>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="18" font-size="14" text-anchor="middle" ` +
      `font-family="sans-serif">${esc(scene.title)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
