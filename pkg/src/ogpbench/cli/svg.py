"""Minimal SVG charts: histogram bars and a scatter with a fitted line."""
from __future__ import annotations

from html import escape

W, H, PAD = 480, 300, 40


def _frame(title: str, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
            f'viewBox="0 0 {W} {H}">')
    parts = [head, f'<rect width="{W}" height="{H}" fill="white"/>',
             f'<text x="{W / 2}" y="20" text-anchor="middle" font-size="13">{escape(title)}</text>',
             f'<line x1="{PAD}" y1="{H - PAD}" x2="{W - PAD}" y2="{H - PAD}" stroke="black"/>',
             f'<line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{H - PAD}" stroke="black"/>']
    return "\n".join(parts + body + ["</svg>"]) + "\n"


def histogram_svg(hist, title: str = "overlap histogram") -> str:
    counts = hist.counts.tolist()
    top = max(counts, default=0) or 1
    bw = (W - 2 * PAD) / max(len(counts), 1)
    body = []
    for i, c in enumerate(counts):
        h = (H - 2 * PAD) * c / top
        body.append(f'<rect x="{PAD + i * bw:.2f}" y="{H - PAD - h:.2f}" width="{bw:.2f}" '
                    f'height="{h:.2f}" fill="steelblue"/>')
    if hist.gap is not None:
        x1 = PAD + hist.gap[0] * (W - 2 * PAD)
        x2 = PAD + hist.gap[1] * (W - 2 * PAD)
        body.append(f'<rect x="{x1:.2f}" y="{PAD}" width="{x2 - x1:.2f}" height="{H - 2 * PAD}" '
                    f'fill="orange" fill-opacity="0.2"/>')
    body.append(f'<text x="{PAD}" y="{H - 12}" font-size="11">0</text>')
    body.append(f'<text x="{W - PAD}" y="{H - 12}" font-size="11" text-anchor="end">1</text>')
    body.append(f'<text x="{PAD + 4}" y="{PAD + 10}" font-size="11">max count {top}</text>')
    return _frame(title, body)


def scaling_svg(fit, title: str | None = None) -> str:
    """cut/n - d/(2K) against sqrt(d), per-trial points and the fitted line."""
    xs = [d ** 0.5 for d, _, _ in fit.per_trial]
    ys = [c / n - d / (2 * fit.K) for d, n, c in fit.per_trial]
    lo_x, hi_x = 0.0, max(xs) * 1.05
    line_y = [fit.intercept + fit.gamma * x for x in (lo_x, hi_x)]
    lo_y = min(ys + line_y + [0.0])
    hi_y = max(ys + line_y + [0.0])
    span_y = (hi_y - lo_y) or 1.0

    def px(x):
        return PAD + (x - lo_x) / (hi_x - lo_x) * (W - 2 * PAD)

    def py(y):
        return H - PAD - (y - lo_y) / span_y * (H - 2 * PAD)

    body = [f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="2.5" fill="steelblue"/>'
            for x, y in zip(xs, ys)]
    body.append(f'<line x1="{px(lo_x):.2f}" y1="{py(line_y[0]):.2f}" x2="{px(hi_x):.2f}" '
                f'y2="{py(line_y[1]):.2f}" stroke="crimson"/>')
    body.append(f'<text x="{PAD + 4}" y="{PAD + 10}" font-size="11">'
                f'slope {fit.gamma:.4g} +/- {fit.gamma_se:.2g}</text>')
    return _frame(title or f"K={fit.K}: cut/n - d/(2K) vs sqrt(d)", body)
