// Cosmetic rendering of the canonical polynomial grammar: subscripted
// variables, superscripted exponents, and a horizontal fraction for the
// common-denominator display form.  Rendering only; the exact canonical
// string stays attached as a hover title wherever this output is shown.

const SUBSCRIPTS: Record<string, string> = {
  "0": "₀", "1": "₁", "2": "₂", "3": "₃", "4": "₄",
  "5": "₅", "6": "₆", "7": "₇", "8": "₈", "9": "₉",
};

const SUPERSCRIPTS: Record<string, string> = {
  "0": "⁰", "1": "¹", "2": "²", "3": "³", "4": "⁴",
  "5": "⁵", "6": "⁶", "7": "⁷", "8": "⁸", "9": "⁹",
  "-": "⁻",
};

function mapChars(text: string, table: Record<string, string>): string {
  return [...text].map((c) => table[c] ?? c).join("");
}

/** Pretty-print one polynomial in the canonical grammar. */
export function prettyPoly(text: string): string {
  let s = text;
  // x12^-3 -> x₁₂⁻³
  s = s.replace(/([xyu])(\d+)\^(-?\d+)/g, (_, v: string, idx: string, exp: string) =>
    `${v}${mapChars(idx, SUBSCRIPTS)}${mapChars(exp, SUPERSCRIPTS)}`);
  s = s.replace(/([xyu])(\d+)/g, (_, v: string, idx: string) =>
    `${v}${mapChars(idx, SUBSCRIPTS)}`);
  s = s.replace(/\*/g, " ");
  return s;
}

/** Pretty-print the display form, which may be "(num)/(den)". */
export function prettyDisplay(text: string): string {
  return prettyPoly(text);
}

/** Index vector as "(0, -1, 1, 0)". */
export function prettyIndex(index: number[]): string {
  return `(${index.join(", ")})`;
}
