"""Static SVG figures: labeled points, optionally dashed hulls, one stroke
class per path. Output is deterministic for identical inputs."""

from __future__ import annotations

from .geom import PointSet, convex_hull

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def render_svg(ps: PointSet, paths=(), show_hull=False) -> str:
    pts = ps.pts
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    span = max(maxx - minx, maxy - miny, 1)
    margin = span // 12 + 1
    # flip y so the figure reads with y growing upward
    flip = maxy + miny

    def fy(y):
        return flip - y

    vb = (minx - margin, fy(maxy) - margin, (maxx - minx) + 2 * margin, (maxy - miny) + 2 * margin)
    stroke = max(span // 300, 1)
    radius = max(span // 150, 1)
    font = max(span // 40, 1)
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{vb[0]} {vb[1]} {vb[2]} {vb[3]}" width="720" height="720">'
    )
    out.append(
        f"<style>line,polyline{{fill:none;stroke-width:{stroke}}}"
        f".hull{{stroke:#999;stroke-dasharray:{4 * stroke} {3 * stroke}}}"
        + "".join(
            f".path{i}{{stroke:{PALETTE[i % len(PALETTE)]}}}" for i in range(max(len(paths), 1))
        )
        + f"text{{font-family:monospace;font-size:{font}px;fill:#333}}</style>"
    )
    if show_hull:
        hull = convex_hull(ps)
        ring = " ".join(f"{pts[i].x},{fy(pts[i].y)}" for i in list(hull) + [hull[0]])
        out.append(f'<polyline class="hull" points="{ring}"/>')
    for k, path in enumerate(paths):
        coords = " ".join(f"{pts[v].x},{fy(pts[v].y)}" for v in path.vertices)
        out.append(f'<polyline class="path{k}" points="{coords}"/>')
    for i, p in enumerate(pts):
        out.append(f'<circle cx="{p.x}" cy="{fy(p.y)}" r="{radius}" fill="#222"/>')
        out.append(f'<text x="{p.x + 2 * radius}" y="{fy(p.y) - radius}">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
