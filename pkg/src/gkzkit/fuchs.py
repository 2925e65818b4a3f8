"""Univariate operators in theta = z d/dz and their Fuchs polygons.

A ``ThetaOperator`` is sum_r z^r p_r(theta) with p_r a coefficient list
(constant term first).  ``to_terms`` expands it into c z^r d^s terms via
theta^k = sum_i S(k, i) z^i d^i with Stirling numbers of the second kind.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import EmptyOperator, SingularConversion


# --------------------------------------------------------------------------
# polynomials in theta


def pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def padd(p, q):
    k = max(len(p), len(q))
    out = [Fraction(0)] * k
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return trim(out)


def pscale(p, c):
    return [c * a for a in p]


def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def linear(a, b):
    """The polynomial a*theta + b."""
    return [Fraction(b), Fraction(a)]


def product_of(factors):
    out = [Fraction(1)]
    for f in factors:
        out = pmul(out, f)
    return out


def substitute_neg(p):
    """p(-theta)."""
    return [a if i % 2 == 0 else -a for i, a in enumerate(p)]


def peval(p, x):
    return sum(a * x ** i for i, a in enumerate(p))


@lru_cache(maxsize=None)
def stirling2(k, i):
    if k == i:
        return 1
    if i == 0 or i > k:
        return 0
    return i * stirling2(k - 1, i) + stirling2(k - 1, i - 1)


def format_theta_poly(p, var="theta"):
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append("-" + mono)
        elif mono:
            parts.append(f"{c}*{mono}")
        else:
            parts.append(str(c))
    return " + ".join(parts).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class ThetaOperator:
    """sum over r of z^r * p_r(theta)."""

    parts: tuple  # sorted ((r, coefficient tuple), ...)

    @classmethod
    def of(cls, mapping):
        clean = {}
        for r, p in mapping.items():
            p = trim([Fraction(x) for x in p])
            if any(p):
                clean[r] = tuple(p)
        return cls(tuple(sorted(clean.items())))

    def as_dict(self):
        return {r: list(p) for r, p in self.parts}

    def to_terms(self):
        """List of (coefficient, r, s) meaning c * z^r * d^s, merged and sorted."""
        acc = {}
        for r, p in self.parts:
            for k, c in enumerate(p):
                if c == 0:
                    continue
                for i in range(k + 1):
                    s = stirling2(k, i)
                    if s:
                        key = (r + i, i)
                        acc[key] = acc.get(key, Fraction(0)) + c * s
        return sorted((c, r, s) for (r, s), c in acc.items() if c != 0)

    def at_infinity(self):
        """The operator in w = 1/z, cleared of negative powers."""
        if not self.parts:
            return self
        top = max(r for r, _ in self.parts)
        return ThetaOperator.of({top - r: substitute_neg(list(p)) for r, p in self.parts})

    def apply_to_series(self, coeffs, exponent=0):
        """Apply to sum_i coeffs[i] z^(exponent + i); returns the image coefficients."""
        out = {}
        for r, p in self.parts:
            for i, c in enumerate(coeffs):
                if c == 0:
                    continue
                v = c * peval(list(p), exponent + i)
                out[i + r] = out.get(i + r, Fraction(0)) + v
        return out

    def __str__(self):
        chunks = []
        for r, p in self.parts:
            z = "" if r == 0 else ("z*" if r == 1 else f"z^{r}*")
            chunks.append(f"{z}({format_theta_poly(p)})")
        return " + ".join(chunks) or "0"


# --------------------------------------------------------------------------
# Fuchs polygon


@dataclass(frozen=True)
class FuchsPolygon:
    points: tuple
    hull_vertices: tuple
    slopes: tuple

    @property
    def regular_at_origin(self):
        return len(self.hull_vertices) == 1


def _terms(op):
    if isinstance(op, ThetaOperator):
        return op.to_terms()
    return [(Fraction(c), int(r), int(s)) for c, r, s in op if c != 0]


def fuchs_polygon(op):
    """Fuchs polygon of an operator at z = 0.

    ``op`` is a ThetaOperator or an iterable of (c, r, s) terms meaning
    c z^r d^s.  Each derivative order s contributes the point
    (s, s - r) for its lowest power r of z.  The polygon is the hull of
    these points extended towards -F and -V; its vertices run from the
    highest point to the rightmost one, and the slopes are those of the
    edges in between.
    """
    terms = _terms(op)
    if not terms:
        raise EmptyOperator("operator has no terms")
    lowest = {}
    for c, r, s in terms:
        if s not in lowest or r < lowest[s]:
            lowest[s] = r
    points = sorted((s, s - r) for s, r in lowest.items())
    top_v = max(v for _, v in points)
    start = max(p for p in points if p[1] == top_v)
    top_f = max(f for f, _ in points)
    end = max(p for p in points if p[0] == top_f)
    chain = [start]
    cur = start
    while cur != end:
        best = None
        for p in points:
            if p[0] <= cur[0]:
                continue
            slope = Fraction(p[1] - cur[1], p[0] - cur[0])
            if best is None or slope > best[0] or (slope == best[0] and p[0] > best[1][0]):
                best = (slope, p)
        cur = best[1]
        chain.append(cur)
    slopes = sorted({Fraction(b[1] - a[1], b[0] - a[0]) for a, b in zip(chain, chain[1:])})
    return FuchsPolygon(tuple(points), tuple(chain), tuple(slopes))


def fuchs_slope_from_L_slope(s_L):
    """Convert an L-slope to a Fuchs slope: 1/s_F = (1/s_L) / (1/s_L - 1)."""
    s_L = Fraction(s_L)
    if s_L in (0, 1):
        raise SingularConversion(f"no Fuchs slope corresponds to s_L = {s_L}")
    inv = (1 / s_L) / (1 / s_L - 1)
    return 1 / inv
