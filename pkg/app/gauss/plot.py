"""SVG scatter plot of the sign scan, rendered from templates/scan.svg.j2."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

from jinja2 import Environment, FileSystemLoader, select_autoescape

from app.gauss.scan import ScanRow

TEMPLATES_DIR = Path(__file__).resolve().parent.parent.parent / "templates"

WIDTH = 640
HEIGHT = 480
MARGIN = 48

# one color per odd residue mod 16
PALETTE = {
    1: "#1f77b4", 3: "#ff7f0e", 5: "#2ca02c", 7: "#d62728",
    9: "#9467bd", 11: "#8c564b", 13: "#e377c2", 15: "#7f7f7f",
}

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    autoescape=select_autoescape(["svg", "j2"]),
    trim_blocks=True,
    lstrip_blocks=True,
)


def _bounds(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        lo, hi = lo - 1, hi + 1
    pad = (hi - lo) * 0.05
    return lo - pad, hi + pad


def render_svg(rows: Sequence[ScanRow], title: str = "(1 - A^4) I_r(M), r odd") -> str:
    xs = [float(row.value.real) for row in rows] or [0.0]
    ys = [float(row.value.imag) for row in rows] or [0.0]
    x_lo, x_hi = _bounds(xs)
    y_lo, y_hi = _bounds(ys)
    plot_w = WIDTH - 2 * MARGIN
    plot_h = HEIGHT - 2 * MARGIN

    def px(x: float) -> float:
        return round(MARGIN + (x - x_lo) / (x_hi - x_lo) * plot_w, 2)

    def py(y: float) -> float:
        return round(HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * plot_h, 2)

    points = [
        {"x": px(x), "y": py(y), "r": row.r, "color": PALETTE[row.r_mod_16]}
        for row, x, y in zip(rows, xs, ys)
    ]
    legend = [{"residue": k, "color": c} for k, c in sorted(PALETTE.items())]
    template = _env.get_template("scan.svg.j2")
    return template.render(
        width=WIDTH,
        height=HEIGHT,
        margin=MARGIN,
        title=title,
        points=points,
        legend=legend,
        x_axis=py(0.0) if y_lo <= 0 <= y_hi else None,
        y_axis=px(0.0) if x_lo <= 0 <= x_hi else None,
        x_range=(round(x_lo, 3), round(x_hi, 3)),
        y_range=(round(y_lo, 3), round(y_hi, 3)),
    )
