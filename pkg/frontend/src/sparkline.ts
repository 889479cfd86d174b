// SVG sparkline of the win-probability history. Decimal strings are
// parsed to floats here purely to scale pixels; displayed values always
// come from the verbatim strings elsewhere.

export function sparklineSvg(decimals: string[], width = 260, height = 48): string {
  if (decimals.length === 0) {
    return "";
  }
  const values = decimals.map((d) => Number.parseFloat(d));
  const max = Math.max(...values, 1e-9);
  const step = decimals.length > 1 ? width / (decimals.length - 1) : 0;
  const points = values
    .map((v, i) => {
      const x = (i * step).toFixed(1);
      const y = (height - 4 - (v / max) * (height - 8)).toFixed(1);
      return `${x},${y}`;
    })
    .join(" ");
  return (
    `<svg class="sparkline" viewBox="0 0 ${width} ${height}" ` +
    `width="${width}" height="${height}" role="img" aria-label="win probability history">` +
    `<polyline fill="none" stroke="currentColor" stroke-width="2" points="${points}" />` +
    `</svg>`
  );
}
