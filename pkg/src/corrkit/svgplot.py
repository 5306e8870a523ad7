"""Dependency-free SVG scatter rendering.

One plot style only: the data points, a horizontal line at the fitted y
median, a vertical line at the fitted cut, and the four quadrant counts
annotated in the corners. The two separators are the only ``<line>``
elements in the document, so structural checks can count them. Output is
a pure function of the inputs (fixed float formatting, no timestamps).
"""

from __future__ import annotations

from .core import PairedSample
from .gcorr import GCorrFit

__all__ = ["render_scatter"]

_WIDTH = 640
_HEIGHT = 480
_MARGIN = 40


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_scatter(sample: PairedSample, fit: GCorrFit, title: str = "") -> str:
    """Scatter plus separators for a fitted sample, as an SVG document."""
    xs, ys = sample.xs, sample.ys
    x_lo, x_hi = float(xs.min()), float(xs.max())
    y_lo, y_hi = float(ys.min()), float(ys.max())
    # keep the separators inside the frame even when they sit at the hull
    x_lo, x_hi = min(x_lo, fit.c), max(x_hi, fit.c)
    y_lo, y_hi = min(y_lo, fit.y_median), max(y_hi, fit.y_median)
    x_pad = (x_hi - x_lo) * 0.05 or 1.0
    y_pad = (y_hi - y_lo) * 0.05 or 1.0
    x_lo, x_hi = x_lo - x_pad, x_hi + x_pad
    y_lo, y_hi = y_lo - y_pad, y_hi + y_pad

    span_x = _WIDTH - 2 * _MARGIN
    span_y = _HEIGHT - 2 * _MARGIN

    def sx(v: float) -> float:
        return _MARGIN + (v - x_lo) / (x_hi - x_lo) * span_x

    def sy(v: float) -> float:
        return _HEIGHT - _MARGIN - (v - y_lo) / (y_hi - y_lo) * span_y

    cut_x = sx(fit.c)
    med_y = sy(fit.y_median)
    counts = fit.counts

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{span_x}" height="{span_y}" '
        f'fill="none" stroke="#888" stroke-width="1"/>',
    ]
    if title:
        parts.append(
            f'<text x="{_WIDTH // 2}" y="24" text-anchor="middle" '
            f'font-family="monospace" font-size="14">{title}</text>'
        )
    for x, y in zip(xs, ys):
        parts.append(
            f'<circle cx="{_fmt(sx(float(x)))}" cy="{_fmt(sy(float(y)))}" '
            f'r="2.5" fill="#1f77b4" fill-opacity="0.7"/>'
        )
    parts.append(
        f'<line x1="{_MARGIN}" y1="{_fmt(med_y)}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_fmt(med_y)}" stroke="#d62728" stroke-width="1.5" '
        f'stroke-dasharray="6,3"/>'
    )
    parts.append(
        f'<line x1="{_fmt(cut_x)}" y1="{_MARGIN}" x2="{_fmt(cut_x)}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="#2ca02c" stroke-width="1.5" '
        f'stroke-dasharray="6,3"/>'
    )
    labels = [
        (f"C1-: {counts.c1_minus}", _MARGIN + 6, _MARGIN + 16, "start"),
        (f"C1+: {counts.c1_plus}", _WIDTH - _MARGIN - 6, _MARGIN + 16, "end"),
        (f"C2-: {counts.c2_minus}", _MARGIN + 6, _HEIGHT - _MARGIN - 8, "start"),
        (f"C2+: {counts.c2_plus}", _WIDTH - _MARGIN - 6, _HEIGHT - _MARGIN - 8, "end"),
    ]
    for text, x, y, anchor in labels:
        parts.append(
            f'<text x="{x}" y="{y}" text-anchor="{anchor}" '
            f'font-family="monospace" font-size="12">{text}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN}" y="{_HEIGHT - 12}" font-family="monospace" '
        f'font-size="12">omega = {fit.omega:.6f}, c = {fit.c:.6g}, '
        f'y_median = {fit.y_median:.6g}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
