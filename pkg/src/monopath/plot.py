"""SVG drawing of a d = 3 arrangement cut by the plane x_1 + x_2 + x_3 = 0.

Points of the plane are written ``a u1 + b u2`` with the orthonormal basis
u1 = (1, -1, 0)/sqrt 2, u2 = (1, 1, -2)/sqrt 6.  This is the one place in
the package that uses floating point.
"""
from __future__ import annotations

from math import sqrt

from .arrangements import build_arrangement
from .errors import UnsupportedDimension
from .words import as_composition

U1 = (1 / sqrt(2), -1 / sqrt(2), 0.0)
U2 = (1 / sqrt(6), 1 / sqrt(6), -2 / sqrt(6))


def slice_line(i, j, s):
    """Coefficients (p, q, s) of the line p a + q b = s for x_i - x_j = s."""
    p = U1[i - 1] - U1[j - 1]
    q = U2[i - 1] - U2[j - 1]
    return p, q, s


def clip_line(p, q, s, window):
    """Endpoints of {p a + q b = s} inside the square [-window, window]^2, or None."""
    pts = []
    for a in (-window, window):
        if abs(q) > 1e-12:
            b = (s - p * a) / q
            if -window - 1e-9 <= b <= window + 1e-9:
                pts.append((a, b))
    for b in (-window, window):
        if abs(p) > 1e-12:
            a = (s - q * b) / p
            if -window - 1e-9 <= a <= window + 1e-9:
                pts.append((a, b))
    uniq = []
    for pt in pts:
        if all(abs(pt[0] - u[0]) > 1e-9 or abs(pt[1] - u[1]) > 1e-9 for u in uniq):
            uniq.append(pt)
    if len(uniq) < 2:
        return None
    # the two extreme points along the line direction
    direction = (-q, p)
    uniq.sort(key=lambda pt: pt[0] * direction[0] + pt[1] * direction[1])
    return uniq[0], uniq[-1]


def plot_slice(lam, window: float = 4.0, size: int = 400) -> str:
    """SVG text with one ``<line>`` per hyperplane meeting the window."""
    lam = as_composition(lam)
    if lam.d != 3:
        raise UnsupportedDimension(f"slices are drawn for d = 3 only, got d = {lam.d}")
    arr = build_arrangement(lam)
    half = size / 2
    scale = half / window

    def to_px(a, b):
        return round(half + a * scale, 6), round(half - b * scale, 6)

    lines = []
    for i, j, s in arr.hyperplanes:
        seg = clip_line(*slice_line(i, j, s), window)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = to_px(*seg[0]), to_px(*seg[1])
        lines.append(
            f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="black" stroke-width="1" data-hyperplane="x{i}-x{j}={s}"/>'
        )
    header = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    )
    title = f"  <title>arrangement for lambda = ({lam})</title>"
    return "\n".join([header, title, *lines, "</svg>"]) + "\n"
