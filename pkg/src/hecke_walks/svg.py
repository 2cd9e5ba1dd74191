"""SVG pictures of alcove walks in rank 1 and 2.

Exact coordinates are converted to floats only here, for drawing.  The plane
X_* (x) R is embedded isometrically for the W-invariant form
``(x, y) = sum_{alpha > 0} <alpha, x> <alpha, y>``, scaled so that the
shortest basis vector of X_* is ``scale`` units long.
"""

from __future__ import annotations

import math
from xml.etree import ElementTree as ET

from .alcove import STANDARD, Apartment, Orientation
from .walks import CROSSING, WalkWord
from .weyl import AffineElement

POSITIVE_COLOR = "#1f5fbf"
NEGATIVE_COLOR = "#c0392b"
SVG_NS = "http://www.w3.org/2000/svg"


def _embedding(ap: Apartment) -> list[list[float]]:
    """Rows of a matrix E with E^T E equal to the Gram matrix of the invariant form."""
    d = ap.datum
    n = d.dim
    funcs = [d.functional(a) for a in d.positive_roots]
    gram = [[float(sum(f[i] * f[j] for f in funcs)) for j in range(n)] for i in range(n)]
    # Cholesky, then rescale so the shortest basis vector has length one
    low = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = gram[i][j] - sum(low[i][k] * low[j][k] for k in range(j))
            low[i][j] = math.sqrt(s) if i == j else s / low[j][j]
    shortest = min(math.sqrt(gram[i][i]) for i in range(n))
    # columns of E are the images of the basis vectors
    return [[low[j][i] / shortest for j in range(n)] for i in range(n)]


class _Canvas:
    def __init__(self, ap: Apartment, scale: float):
        self.ap = ap
        self.scale = scale
        self.E = _embedding(ap)
        self.rank = ap.datum.rank

    def xy(self, point) -> tuple[float, float]:
        if self.rank == 1:
            return float(point[0]) * self.E[0][0] * self.scale, 0.0
        x = sum(self.E[0][k] * float(point[k]) for k in range(2))
        y = sum(self.E[1][k] * float(point[k]) for k in range(2))
        return x * self.scale, -y * self.scale

    def vertices(self, x: AffineElement) -> list[tuple]:
        """Vertices of x(a): the image of 0 and of omega_i^v / m_i."""
        d = self.ap.datum
        m = d.highest_root.coords
        base = [tuple(0 for _ in range(d.dim))]
        base += [tuple(c / m[i] for c in w) for i, w in enumerate(d.fundamental_coweights)]
        return [x.act(v) for v in base]


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _centroid(pts):
    return sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts)


def _clip(p, d, box):
    """Segment of the line p + t d inside the box (xmin, ymin, xmax, ymax)."""
    lo, hi = -math.inf, math.inf
    for k in range(2):
        a, b = box[k], box[k + 2]
        if abs(d[k]) < 1e-12:
            if not a <= p[k] <= b:
                return None
            continue
        t1, t2 = (a - p[k]) / d[k], (b - p[k]) / d[k]
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo >= hi:
        return None
    return (p[0] + lo * d[0], p[1] + lo * d[1]), (p[0] + hi * d[0], p[1] + hi * d[1])


def render_walk(
    ap: Apartment,
    word: WalkWord,
    o: Orientation = STANDARD,
    start: AffineElement | None = None,
    scale: float = 80.0,
) -> str:
    """An SVG document showing the walk ``word`` from ``start(a)``."""
    d = ap.datum
    if d.rank > 2:
        raise ValueError("SVG rendering is available for rank <= 2 only")
    G = ap.group
    cv = _Canvas(ap, scale)
    cur = G.identity if start is None else start
    path = [cur]
    for st in word.steps:
        if st.kind == CROSSING:
            cur = G.rmul(cur, st.i)
        path.append(cur)

    polys = {x: [cv.xy(v) for v in cv.vertices(x)] for x in path}
    pts = [p for poly in polys.values() for p in poly]
    pad = scale
    xmin, xmax = min(p[0] for p in pts) - pad, max(p[0] for p in pts) + pad
    if d.rank == 1:
        ymin, ymax = -pad, pad
    else:
        ymin, ymax = min(p[1] for p in pts) - pad, max(p[1] for p in pts) + pad
    box = (xmin, ymin, xmax, ymax)

    svg = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": _fmt(xmax - xmin),
            "height": _fmt(ymax - ymin),
            "viewBox": " ".join(_fmt(v) for v in (xmin, ymin, xmax - xmin, ymax - ymin)),
        },
    )
    ET.SubElement(svg, "title").text = f"alcove walk in {d.label}: {word}"
    defs = ET.SubElement(svg, "defs")
    for name, color in (("pos", POSITIVE_COLOR), ("neg", NEGATIVE_COLOR)):
        marker = ET.SubElement(
            defs,
            "marker",
            {"id": f"arrow-{name}", "viewBox": "0 0 10 10", "refX": "9", "refY": "5",
             "markerWidth": "6", "markerHeight": "6", "orient": "auto"},
        )
        ET.SubElement(marker, "path", {"d": "M0,0 L10,5 L0,10 z", "fill": color})

    # hyperplanes
    lines = ET.SubElement(svg, "g", {"id": "hyperplanes", "stroke": "#999", "stroke-width": "1"})
    for alpha in d.positive_roots:
        f = d.functional(alpha)
        if d.rank == 1:
            for n in range(-50, 51):
                x = cv.xy((n / f[0],))[0]
                if xmin <= x <= xmax:
                    ET.SubElement(lines, "line", {"x1": _fmt(x), "y1": _fmt(ymin), "x2": _fmt(x), "y2": _fmt(ymax)})
            continue
        # two points spanning the line <alpha, .> = n in X_* coordinates
        k = 0 if f[0] else 1
        direction = (-f[1], f[0])
        dxy = cv.xy(direction)
        for n in range(-60, 61):
            p = [0.0, 0.0]
            p[k] = n / f[k]
            seg = _clip(cv.xy(p), dxy, box)
            if seg is not None:
                (x1, y1), (x2, y2) = seg
                ET.SubElement(
                    lines, "line",
                    {"x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2),
                     "data-root": ",".join(map(str, alpha.coords)), "data-level": str(n)},
                )

    # alcoves
    cells = ET.SubElement(svg, "g", {"id": "alcoves", "stroke": "#555", "stroke-width": "1.5"})
    for x, poly in polys.items():
        fill = "#f5e6a8" if x == G.identity else "#e8eef8"
        if d.rank == 1:
            (a, _), (b, _) = poly
            ET.SubElement(cells, "rect", {"x": _fmt(min(a, b)), "y": _fmt(-scale / 4),
                                          "width": _fmt(abs(b - a)), "height": _fmt(scale / 2), "fill": fill})
        else:
            ET.SubElement(cells, "polygon", {"points": " ".join(f"{_fmt(p[0])},{_fmt(p[1])}" for p in poly),
                                             "fill": fill, "fill-opacity": "0.8"})

    # steps: arrows for crossings, cusps for foldings
    signs = ET.SubElement(svg, "g", {"id": "steps", "fill": "none", "stroke-width": "2.5"})
    for k, st in enumerate(word.steps):
        x, y = path[k], path[k + 1]
        color, tag = (POSITIVE_COLOR, "pos") if st.sign > 0 else (NEGATIVE_COLOR, "neg")
        c0 = _centroid(polys[x])
        attrs = {"stroke": color, "data-step": str(st)}
        if st.kind == CROSSING:
            c1 = _centroid(polys[y])
            attrs.update(d=f"M{_fmt(c0[0])},{_fmt(c0[1])} L{_fmt(c1[0])},{_fmt(c1[1])}",
                         **{"marker-end": f"url(#arrow-{tag})"})
        else:
            face = [p for j, p in enumerate(polys[x]) if j != st.i]
            mid = _centroid(face)
            tip = (c0[0] + 0.85 * (mid[0] - c0[0]), c0[1] + 0.85 * (mid[1] - c0[1]))
            side = (-(mid[1] - c0[1]) * 0.15, (mid[0] - c0[0]) * 0.15)
            a = (c0[0] + side[0], c0[1] + side[1])
            b = (c0[0] - side[0], c0[1] - side[1])
            attrs.update(d=f"M{_fmt(a[0])},{_fmt(a[1])} L{_fmt(tip[0])},{_fmt(tip[1])} L{_fmt(b[0])},{_fmt(b[1])}",
                         **{"stroke-dasharray": "5,3"})
        ET.SubElement(signs, "path", attrs)
    return ET.tostring(svg, encoding="unicode")
