/** `render --figure 1b --in data.csv --out fig1b.svg`
 *
 * Exit codes: 0 success (including empty-data renders, which warn on
 * stderr), 1 schema/data error, 2 usage error.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { SchemaError } from "./csv.js";
import { FIGURE_IDS } from "./figures.js";
import { renderFigure } from "./render.js";

const USAGE = `usage: render --figure <id> --in <data.csv> --out <figure.svg>
  figure ids: ${FIGURE_IDS.join(", ")}`;

export function run(argv: string[]): number {
  const args = [...argv];
  if (args[0] === "render") {
    args.shift();
  }
  const opts = new Map<string, string>();
  for (let i = 0; i < args.length; i += 2) {
    const key = args[i];
    const value = args[i + 1];
    if (!key.startsWith("--") || value === undefined) {
      process.stderr.write(USAGE + "\n");
      return 2;
    }
    opts.set(key.slice(2), value);
  }
  const figure = opts.get("figure");
  const input = opts.get("in");
  const output = opts.get("out");
  if (figure === undefined || input === undefined || output === undefined) {
    process.stderr.write(USAGE + "\n");
    return 2;
  }
  let text: string;
  try {
    text = readFileSync(input, "utf-8");
  } catch (err) {
    process.stderr.write(`cannot read ${input}: ${String(err)}\n`);
    return 1;
  }
  try {
    const { svg, warnings } = renderFigure(figure, text);
    for (const w of warnings) {
      process.stderr.write(`warning: ${w}\n`);
    }
    writeFileSync(output, svg, "utf-8");
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      process.stderr.write(`schema error: ${err.message}\n`);
      return 1;
    }
    process.stderr.write(`error: ${String(err)}\n`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  new URL(import.meta.url).pathname === process.argv[1];
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
