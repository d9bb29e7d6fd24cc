"""Tiny SVG writer for line charts and heatmaps.

Output depends only on the input numbers, so identical data gives identical
bytes.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
WIDTH, HEIGHT = 640, 420
MARGIN = dict(left=70, right=150, top=40, bottom=55)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _header(width: int, height: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _text(x, y, s, anchor="middle", extra=""):
    return f'<text x="{_fmt(x)}" y="{_fmt(y)}" text-anchor="{anchor}" {extra}>{escape(s)}</text>'


def _ticks(lo: float, hi: float, n: int = 5) -> np.ndarray:
    return np.linspace(lo, hi, n)


def _axes(x0, y0, x1, y1, xlim, ylim, xlabel, ylabel, title) -> list[str]:
    out = [
        f'<rect x="{_fmt(x0)}" y="{_fmt(y1)}" width="{_fmt(x1 - x0)}" height="{_fmt(y0 - y1)}" '
        'fill="none" stroke="black"/>',
        _text((x0 + x1) / 2, y0 + 40, xlabel),
        _text(x0 - 50, (y0 + y1) / 2, ylabel, extra=f'transform="rotate(-90 {_fmt(x0 - 50)} {_fmt((y0 + y1) / 2)})"'),
        _text((x0 + x1) / 2, y1 - 15, title),
    ]
    for v in _ticks(*xlim):
        px = x0 + (v - xlim[0]) / (xlim[1] - xlim[0]) * (x1 - x0)
        out.append(f'<line x1="{_fmt(px)}" y1="{_fmt(y0)}" x2="{_fmt(px)}" y2="{_fmt(y0 + 5)}" stroke="black"/>')
        out.append(_text(px, y0 + 18, f"{v:.3g}"))
    for v in _ticks(*ylim):
        py = y0 - (v - ylim[0]) / (ylim[1] - ylim[0]) * (y0 - y1)
        out.append(f'<line x1="{_fmt(x0 - 5)}" y1="{_fmt(py)}" x2="{_fmt(x0)}" y2="{_fmt(py)}" stroke="black"/>')
        out.append(_text(x0 - 8, py + 4, f"{v:.3g}", anchor="end"))
    return out


def line_chart(x, series: dict[str, np.ndarray], xlabel: str, ylabel: str = "concurrence", title: str = "") -> str:
    """Polyline per series over a shared x grid."""
    x = np.asarray(x, dtype=float)
    x0, x1 = MARGIN["left"], WIDTH - MARGIN["right"]
    y0, y1 = HEIGHT - MARGIN["bottom"], MARGIN["top"]
    xlim = (float(x[0]), float(x[-1]))
    top = max([1.0] + [float(np.nanmax(y)) for y in series.values()])
    ylim = (0.0, top)
    out = _header(WIDTH, HEIGHT) + _axes(x0, y0, x1, y1, xlim, ylim, xlabel, ylabel, title)
    for i, (label, y) in enumerate(series.items()):
        colour = PALETTE[i % len(PALETTE)]
        px = x0 + (x - xlim[0]) / (xlim[1] - xlim[0]) * (x1 - x0)
        py = y0 - (np.asarray(y, dtype=float) - ylim[0]) / (ylim[1] - ylim[0]) * (y0 - y1)
        pts = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px, py))
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="2" points="{pts}"/>')
        ly = y1 + 20 * (i + 1)
        out.append(f'<line x1="{_fmt(x1 + 15)}" y1="{_fmt(ly - 4)}" x2="{_fmt(x1 + 40)}" y2="{_fmt(ly - 4)}" '
                   f'stroke="{colour}" stroke-width="2"/>')
        out.append(_text(x1 + 45, ly, label, anchor="start"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _shade(v: float) -> str:
    v = min(max(v, 0.0), 1.0)
    r = round(255 - v * (255 - 8))
    g = round(255 - v * (255 - 48))
    b = round(255 - v * (255 - 107))
    return f"#{r:02x}{g:02x}{b:02x}"


def heatmap(x, y, panels: dict[str, np.ndarray], xlabel: str, ylabel: str) -> str:
    """One heatmap panel per entry; ``panels[label][i, j]`` sits at (x[i], y[j])."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    pw, ph = 300, 260
    width = 90 + len(panels) * (pw + 60)
    height = ph + 110
    out = _header(width, height)
    for n, (label, z) in enumerate(panels.items()):
        x0 = 70 + n * (pw + 60)
        x1, y0, y1 = x0 + pw, 50 + ph, 50
        out += _axes(x0, y0, x1, y1, (x[0], x[-1]), (y[0], y[-1]), xlabel, ylabel, label)
        cw, ch = pw / len(x), ph / len(y)
        for i in range(len(x)):
            for j in range(len(y)):
                out.append(
                    f'<rect x="{_fmt(x0 + i * cw)}" y="{_fmt(y0 - (j + 1) * ch)}" width="{_fmt(cw)}" '
                    f'height="{_fmt(ch)}" fill="{_shade(float(z[i, j]))}" stroke="none"/>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
