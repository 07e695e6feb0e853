/** Strict parser for the engine's CSV output (header row, comma-separated,
 * no quoting, Unix newlines, `nan` for undefined numeric cells). */

export interface CsvTable {
  columns: string[];
  rows: string[][];
}

export class SchemaError extends Error {}

export function parseCsv(text: string): CsvTable {
  const lines = text.split("\n");
  while (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop();
  }
  if (lines.length === 0) {
    throw new SchemaError("empty document: expected at least a header row");
  }
  const columns = lines[0].split(",").map((c) => c.trim());
  const rows: string[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new SchemaError(
        `row ${i + 1}: expected ${columns.length} cells, got ${cells.length}`,
      );
    }
    rows.push(cells);
  }
  return { columns, rows };
}

export function requireColumns(table: CsvTable, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) {
      throw new SchemaError(`missing required column '${name}'`);
    }
  }
}

export function columnIndex(table: CsvTable, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new SchemaError(`missing required column '${name}'`);
  }
  return idx;
}

/** Numeric cell value; `nan` and empty cells map to NaN. */
export function numericCell(cell: string): number {
  const trimmed = cell.trim();
  if (trimmed === "" || trimmed === "nan") {
    return NaN;
  }
  const value = Number(trimmed);
  if (!Number.isFinite(value)) {
    return NaN;
  }
  return value;
}
