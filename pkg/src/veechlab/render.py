"""SVG rendering of surfaces, covers and cylinder decompositions.

Rendering is the one place exactness is dropped: coordinates are the
20-significant-digit decimal approximations of the exact values.
"""

from __future__ import annotations

import mpmath

from .cylinders import Direction, decompose_retry
from .surface import EdgeRef, TranslationSurface
from .covering import CoveringSurface, build_cover

PALETTES = {
    "default": ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac"],
    "mono": ["#666666"],
}

_DIGITS = 20


def _f(x) -> float:
    return float(x)


def _num(value: float) -> str:
    with mpmath.workdps(_DIGITS + 5):
        return mpmath.nstr(mpmath.mpf(value), _DIGITS)


def _pt(v, dx=0.0, dy=0.0) -> str:
    # exact coordinates at 20 significant digits; SVG y axis points down
    with mpmath.workdps(_DIGITS + 5):
        x = mpmath.mpf(v.x.approx(_DIGITS)) + dx
        y = -(mpmath.mpf(v.y.approx(_DIGITS)) + dy)
        return "%s,%s" % (mpmath.nstr(x, _DIGITS), mpmath.nstr(y, _DIGITS))


class _Svg:
    def __init__(self):
        self.parts = []
        self.min_x = self.min_y = float("inf")
        self.max_x = self.max_y = float("-inf")

    def track(self, x: float, y: float):
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, -y)
        self.max_y = max(self.max_y, -y)

    def polygon(self, pts, fill, stroke="#222222", opacity=1.0, width=0.01):
        for v, dx in pts_iter(pts):
            self.track(_f(v.x) + dx, _f(v.y))
        body = " ".join(_pt(v, dx) for v, dx in pts_iter(pts))
        self.parts.append(
            '<polygon points="%s" fill="%s" fill-opacity="%s" stroke="%s" stroke-width="%s"/>'
            % (body, fill, opacity, stroke, width)
        )

    def text(self, x: float, y: float, s: str, size=0.12, color="#111111"):
        self.track(x, y)
        self.parts.append(
            '<text x="%s" y="%s" font-size="%s" fill="%s" text-anchor="middle">%s</text>'
            % (_num(x), _num(-y), size, color, s)
        )

    def render(self) -> str:
        pad = 0.3
        x0, y0 = self.min_x - pad, self.min_y - pad
        w = (self.max_x - self.min_x) + 2 * pad
        h = (self.max_y - self.min_y) + 2 * pad
        header = (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'viewBox="%s %s %s %s" width="800" height="%d">'
            % (_num(x0), _num(y0), _num(w), _num(h), max(200, int(800 * h / w)))
        )
        return header + "\n" + "\n".join(self.parts) + "\n</svg>\n"


def pts_iter(pts):
    for item in pts:
        if isinstance(item, tuple):
            yield item
        else:
            yield (item, 0.0)


def _surface_extent(surface: TranslationSurface) -> float:
    xs = [
        _f(v.x)
        for poly in surface.polygons
        for v in poly.vertices
    ]
    return max(xs) - min(xs)


def _edge_label_text(surface: TranslationSurface, ref: EdgeRef) -> str:
    label = surface.generator_labels.get(ref)
    if label is None:
        return ""
    g, sgn = label
    return "x%d" % g if sgn > 0 else "x%d'" % g


def render_surface(
    surface: TranslationSurface,
    overlay_direction: int | None = None,
    palette: str = "default",
    copy_offsets=None,
    copy_of=None,
    labels: bool = True,
) -> str:
    colors = PALETTES.get(palette, PALETTES["default"])
    svg = _Svg()
    n_polys = len(surface.polygons)
    if copy_offsets is None:
        copy_offsets = [0.0] * n_polys
    if copy_of is None:
        copy_of = [0] * n_polys

    for p, poly in enumerate(surface.polygons):
        color = colors[copy_of[p] % len(colors)]
        svg.polygon([(v, copy_offsets[p]) for v in poly.vertices], fill=color, opacity=0.25)

    if overlay_direction is not None:
        meta_n = surface.metadata.get("n") or len(surface.polygons[0])
        direction = Direction.from_index(meta_n, overlay_direction)
        cyls = decompose_retry(surface, direction)
        for ci, cyl in enumerate(cyls):
            color = colors[ci % len(colors)]
            for (p, lo, hi) in cyl.bands:
                corners = _band_corners(surface, direction, p, lo, hi)
                if corners:
                    svg.polygon(
                        [(v, copy_offsets[p]) for v in corners],
                        fill=color,
                        opacity=0.55,
                        stroke="none",
                        width=0,
                    )

    if labels:
        for p, poly in enumerate(surface.polygons):
            for e in range(len(poly)):
                text = _edge_label_text(surface, EdgeRef(p, e))
                if not text:
                    continue
                a, b = poly.vertex(e), poly.vertex(e + 1)
                mx = (_f(a.x) + _f(b.x)) / 2 + copy_offsets[p]
                my = (_f(a.y) + _f(b.y)) / 2
                svg.text(mx, my, text)
    return svg.render()


def _band_corners(surface, direction, p, lo, hi):
    """The four corners of a band (trapezoid) of the decomposition."""
    w = direction.vector
    poly = surface.polygons[p]
    m = len(poly)
    hs = [w.cross(v) for v in poly.vertices]
    mid2 = lo + hi
    left = right = None
    for i in range(m):
        sa = (2 * hs[i] - mid2).sign()
        sb = (2 * hs[(i + 1) % m] - mid2).sign()
        if sa < 0 and sb > 0:
            right = i
        elif sa > 0 and sb < 0:
            left = i
    if left is None or right is None:
        return None

    def on_edge(i, level):
        ha, hb = hs[i], hs[(i + 1) % m]
        s = (level - ha) / (hb - ha)
        return poly.vertex(i) + s * poly.side_vector(i)

    return [on_edge(right, lo), on_edge(right, hi), on_edge(left, hi), on_edge(left, lo)]


def render_cover(
    cover: CoveringSurface, overlay_direction: int | None = None, palette: str = "default"
) -> str:
    base_width = _surface_extent(cover.base) + 0.6
    nb = len(cover.base.polygons)
    offsets = []
    copy_of = []
    for idx in range(len(cover.surface.polygons)):
        copy = idx // nb
        offsets.append(copy * base_width)
        copy_of.append(copy)
    return render_surface(
        cover.surface,
        overlay_direction=overlay_direction,
        palette=palette,
        copy_offsets=offsets,
        copy_of=copy_of,
    )


def render_infinite_window(n: int, window: int, palette: str = "default") -> str:
    """A finite window (copies -window..window) of Y_{n,infinity}."""
    if window < 1:
        raise ValueError("window must be at least 1")
    d = 2 * window + 1
    # sheet i of the window is copy i - window of the infinite surface;
    # the parity-affine gluings are truncated at the window boundary
    from .covering import Monodromy, monodromy_indices
    from .zcover import std_infinite_monodromy

    zm = std_infinite_monodromy(n)
    k1, k2 = monodromy_indices(n)
    num = n - 1 if n % 2 else n // 2
    images = {}
    for g in (k1, k2):
        zp = zm.image(g)
        table = list(range(d))
        for i in range(d):
            target = zp(i - window) + window
            table[i] = target if 0 <= target < d else i  # truncate at boundary
        if sorted(table) != list(range(d)):
            # boundary truncation broke bijectivity; keep involution shape
            table = list(range(d))
            for i in range(d):
                t = zp(i - window) + window
                if 0 <= t < d and zp(t - window) + window == i:
                    table[i] = t
        images[g] = tuple(table)
    mono = Monodromy(num, d, images, k1=k1, k2=k2)
    return render_cover(build_cover(n, d, mono), palette=palette)
