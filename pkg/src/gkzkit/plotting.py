"""SVG figures for umbrellas and Fuchs polygons.

matplotlib is imported lazily so the library works without it.  Output
is made reproducible by dropping the date and fixing the hash salt.
"""

import math
from fractions import Fraction

from .errors import PreconditionViolation


def _figure():
    import matplotlib
    from matplotlib.figure import Figure

    matplotlib.rcParams["svg.hashsalt"] = "gkzkit"
    fig = Figure(figsize=(4.5, 4.5))
    return fig, fig.add_subplot(1, 1, 1)


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})


def _planar(g):
    """Plane coordinates for the columns of a matrix with d <= 3."""
    if g.d == 1:
        return [(float(a[0]), 0.0) for a in g.columns]
    if g.d == 2:
        return [(float(a[0]), float(a[1])) for a in g.columns]
    if g.d == 3 and g.homogeneous:
        # points lie on an affine plane; use the last two coordinates
        return [(float(a[1]), float(a[2])) for a in g.columns]
    raise PreconditionViolation("plots need d <= 2, or d = 3 with a homogeneous matrix")


def plot_umbrella(g, umb, path):
    """Columns of A with the umbrella facets drawn through them."""
    pts = _planar(g)
    fig, ax = _figure()
    for cols in umb.facets:
        xy = [pts[j - 1] for j in cols]
        if len(xy) > 2:
            # order around the centroid so the outline is a simple polygon
            cx = sum(p[0] for p in xy) / len(xy)
            cy = sum(p[1] for p in xy) / len(xy)
            xy.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
            xy.append(xy[0])
        ax.plot([p[0] for p in xy], [p[1] for p in xy], color="tab:blue", lw=2)
    ax.scatter([p[0] for p in pts], [p[1] for p in pts], color="black", zorder=3)
    for j, (x, y) in enumerate(pts, start=1):
        ax.annotate(str(j), (x, y), textcoords="offset points", xytext=(4, 4))
    ax.set_title("L = (" + ", ".join(str(Fraction(w)) for w in umb.weight) + ")")
    ax.set_aspect("equal", adjustable="datalim")
    ax.grid(True, lw=0.3)
    _save(fig, path)


def plot_fuchs(poly, path):
    """Points of the operator, the boundary chain and the shaded polygon."""
    fig, ax = _figure()
    xs = [p[0] for p in poly.points]
    ys = [p[1] for p in poly.points]
    chain = list(poly.hull_vertices)
    low = min(ys) - 2
    left = min(xs) - 1
    # the polygon extends towards -F and -V
    outline = [(left, chain[0][1])] + chain + [(chain[-1][0], low), (left, low)]
    ax.fill([p[0] for p in outline], [p[1] for p in outline], color="tab:orange", alpha=0.25)
    ax.plot([p[0] for p in chain], [p[1] for p in chain], color="tab:orange", lw=2,
            marker="o")
    ax.scatter(xs, ys, color="black", zorder=3)
    ax.set_xlabel("F (order)")
    ax.set_ylabel("V (order minus z-power)")
    kind = "regular" if poly.regular_at_origin else "irregular"
    slopes = ", ".join(str(s) for s in poly.slopes) or "none"
    ax.set_title(f"{kind}; slopes {slopes}")
    ax.grid(True, lw=0.3)
    _save(fig, path)
