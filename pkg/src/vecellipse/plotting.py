"""
Static ellipse figures written as SVG.

Figures are drawn in the plane of the ellipse, with the major axis along x.
Output is byte-stable: no date metadata, fixed hash salt for element ids and
text kept as text rather than glyph paths.
"""

from __future__ import annotations

import math

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .ellipse import EllipseAB, EllipseCS, eval_ab

SVG_RC = {
    "svg.hashsalt": "vecellipse",
    "svg.fonttype": "none",
    "font.size": 10,
}

VECTOR_STYLE = {
    "a": dict(color="tab:red", label="a (major)"),
    "b": dict(color="tab:blue", label="b (minor)"),
    "c": dict(color="tab:green", label="c"),
    "s": dict(color="tab:purple", label="s"),
}


def plane_basis(e: EllipseAB, extra=()) -> np.ndarray:
    """
    Orthonormal ``2 x N`` basis for the ellipse plane, first row along ``a``.

    Degenerate ellipses (a line or a point) borrow the missing directions from
    ``extra`` vectors and then the coordinate axes.
    """
    n = e.dim
    candidates = [e.a, e.b, *extra, *np.eye(n)]
    basis = []
    for v in candidates:
        w = np.array(v, dtype=float)
        for q in basis:
            w = w - (q @ w) * q
        norm = np.linalg.norm(w)
        scale = max(np.linalg.norm(v), 1.0)
        if norm > 1e-9 * scale:
            basis.append(w / norm)
        if len(basis) == 2:
            break
    while len(basis) < 2:
        basis.append(np.zeros(n))
    return np.array(basis)


def _arrow(ax, xy, name):
    style = VECTOR_STYLE[name]
    ax.annotate(
        "",
        xy=(xy[0], xy[1]),
        xytext=(0.0, 0.0),
        arrowprops=dict(arrowstyle="-|>", color=style["color"], lw=1.5),
    )
    ax.plot([], [], color=style["color"], label=style["label"])
    ax.text(xy[0] * 1.06, xy[1] * 1.06, name, color=style["color"], fontweight="bold")


def _setup_axes(fig: Figure, title: str):
    ax = fig.add_subplot(1, 1, 1)
    ax.set_aspect("equal", adjustable="datalim")
    ax.axhline(0.0, color="0.8", lw=0.5)
    ax.axvline(0.0, color="0.8", lw=0.5)
    ax.set_xlabel("along a")
    ax.set_ylabel("along b")
    ax.set_title(title)
    return ax


def ellipse_figure(ab: EllipseAB, cs: EllipseCS | None = None, title: str = "", n_points: int = 361) -> Figure:
    """Ellipse with its a and b axes and, when given, the c and s vectors."""
    extra = () if cs is None else (cs.c, cs.s)
    basis = plane_basis(ab, extra)
    tau = np.linspace(0.0, 2.0 * math.pi, n_points)
    unit = EllipseAB(ab.a, ab.b, 0.0, 1.0)
    path = eval_ab(unit, tau) @ basis.T

    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(6, 6))
        ax = _setup_axes(fig, title)
        ax.plot(path[:, 0], path[:, 1], color="black", lw=1.2, label="path")
        vectors = {"a": ab.a, "b": ab.b}
        if cs is not None:
            vectors.update(c=cs.c, s=cs.s)
        for name, v in vectors.items():
            _arrow(ax, basis @ v, name)
        ax.legend(loc="upper right", fontsize=8)
    return fig


def save_svg(fig: Figure, path) -> None:
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(path, format="svg", metadata={"Date": None})
