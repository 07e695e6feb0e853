/** Per-figure schemas: which CSV columns feed the axes, how rows group
 * into series, and which sign column drives region shading. */

export type ShadeRule = "gamma_opt" | "ep_gap" | null;

export interface FigureSpec {
  /** columns that must exist in the input CSV */
  required: string[];
  x: string;
  /** one series per y column per group; `dashed` marks secondary families */
  y: { column: string; dashed?: boolean }[];
  /** rows grouped into polylines by branch plus these columns */
  groupBy: string[];
  xLabel: string;
  yLabel: string;
  xLog?: boolean;
  shade: ShadeRule;
}

/** Branch color convention: monostable black, positive-phase orange,
 * negative-phase blue, unstable gray. */
export const BRANCH_COLORS: Record<string, string> = {
  mono: "#000000",
  plus: "#e66100",
  minus: "#1f77b4",
  unstable: "#9a9a9a",
};

export const COOLING_FILL = "#cfe4f7";
export const HEATING_FILL = "#f7cfdd";
export const EP_FILL = "#f7cfdd";

const FIG_1_COLUMNS = [
  "ej_over_hgamma",
  "delta_over_gamma",
  "branch",
  "A0",
  "theta0",
  "n",
  "status",
];

export const FIGURES: Record<string, FigureSpec> = {
  "1b": {
    required: FIG_1_COLUMNS,
    x: "ej_over_hgamma",
    y: [{ column: "n" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/hbar gamma",
    yLabel: "n",
    shade: null,
  },
  "1c": {
    required: FIG_1_COLUMNS,
    x: "ej_over_hgamma",
    y: [{ column: "theta0" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/hbar gamma",
    yLabel: "theta_0",
    shade: null,
  },
  "1d": {
    required: FIG_1_COLUMNS,
    x: "delta_over_gamma",
    y: [{ column: "n" }],
    groupBy: ["ej_over_hgamma"],
    xLabel: "Delta/gamma",
    yLabel: "n",
    shade: null,
  },
  "1e": {
    required: ["ej_over_hgamma", "delta_over_gamma", "branch", "x0", "y0", "status"],
    x: "x0",
    y: [{ column: "y0" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "Re alpha_0",
    yLabel: "Im alpha_0",
    shade: null,
  },
  "2a": {
    required: ["ej_ratio", "delta_over_gamma", "branch", "r1", "status"],
    x: "ej_ratio",
    y: [{ column: "r1" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/E_J^bif (Delta=0)",
    yLabel: "r_1/gamma",
    shade: null,
  },
  "2b": {
    required: ["ej_ratio", "delta_over_gamma", "branch", "omega_opt", "status"],
    x: "ej_ratio",
    y: [{ column: "omega_opt" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/E_J^bif (Delta=0)",
    yLabel: "omega_m for zero heating (gamma)",
    shade: null,
  },
  "3a": {
    required: ["ej_ratio", "branch", "omega_star", "gamma_opt", "nbar_r", "status"],
    x: "ej_ratio",
    y: [{ column: "gamma_opt" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/E_J^bif (Delta=0)",
    yLabel: "Gamma_opt/gamma",
    shade: "gamma_opt",
  },
  "3b": {
    required: ["ej_ratio", "branch", "omega_star", "gamma_opt", "nbar_r", "status"],
    x: "ej_ratio",
    y: [{ column: "gamma_opt" }],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/E_J^bif (Delta=0)",
    yLabel: "Gamma_opt/gamma",
    shade: "gamma_opt",
  },
  "3c": {
    required: [
      "ej_ratio",
      "branch",
      "lambda_plus_re",
      "lambda_plus_im",
      "lambda_minus_re",
      "lambda_minus_im",
      "ep_gap",
      "status",
    ],
    x: "ej_ratio",
    y: [
      { column: "lambda_plus_re" },
      { column: "lambda_minus_re" },
      { column: "lambda_plus_im", dashed: true },
      { column: "lambda_minus_im", dashed: true },
    ],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/E_J^bif (Delta=0)",
    yLabel: "lambda_pm/gamma (solid Re, dashed Im)",
    shade: "ep_gap",
  },
  "3d": {
    required: [
      "ej_ratio",
      "branch",
      "lambda_plus_re",
      "lambda_plus_im",
      "lambda_minus_re",
      "lambda_minus_im",
      "ep_gap",
      "status",
    ],
    x: "ej_ratio",
    y: [
      { column: "lambda_plus_re" },
      { column: "lambda_minus_re" },
      { column: "lambda_plus_im", dashed: true },
      { column: "lambda_minus_im", dashed: true },
    ],
    groupBy: ["delta_over_gamma"],
    xLabel: "E_J*/E_J^bif (Delta=0)",
    yLabel: "lambda_pm/gamma (solid Re, dashed Im)",
    shade: "ep_gap",
  },
  "4a": {
    required: ["omega_over_gamma", "branch", "snn", "status"],
    x: "omega_over_gamma",
    y: [{ column: "snn" }],
    groupBy: [],
    xLabel: "omega/gamma",
    yLabel: "S_nn gamma",
    shade: null,
  },
  "4b": {
    required: ["omega_over_gamma", "branch", "snn", "status"],
    x: "omega_over_gamma",
    y: [{ column: "snn" }],
    groupBy: [],
    xLabel: "omega/gamma",
    yLabel: "S_nn gamma",
    shade: null,
  },
  "4c": {
    required: [
      "omega_m_over_gamma",
      "dist_over_hgamma",
      "branch",
      "nbar_min",
      "status",
    ],
    x: "omega_m_over_gamma",
    y: [{ column: "nbar_min" }],
    groupBy: ["dist_over_hgamma"],
    xLabel: "omega_m/gamma",
    yLabel: "nbar_m",
    xLog: true,
    shade: null,
  },
  "4d": {
    required: [
      "omega_m_over_gamma",
      "dist_over_hgamma",
      "branch",
      "nbar_min",
      "status",
    ],
    x: "omega_m_over_gamma",
    y: [{ column: "nbar_min" }],
    groupBy: ["dist_over_hgamma"],
    xLabel: "omega_m/gamma",
    yLabel: "nbar_m",
    xLog: true,
    shade: null,
  },
};

export const FIGURE_IDS = Object.keys(FIGURES);
