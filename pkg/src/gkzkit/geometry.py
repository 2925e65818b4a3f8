"""Exact cone and polytope primitives.

All routines take rational (or integer) vectors and work by brute-force
enumeration of small subsets, which is fine at the scale this package
targets (ambient dimension at most four or five, a handful of points).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import det, dot, integral_multiple, nullspace, rank


def _frac_vec(v):
    return tuple(Fraction(x) for x in v)


def cone_facets(gens):
    """Facets of the full-dimensional cone spanned by ``gens``.

    Returns a list of ``(normal, indices)`` pairs sorted by index set,
    where ``normal`` is the primitive integral inner normal and
    ``indices`` the frozenset of generators on the facet.  A cone with
    lineality has only the facets its lineality space allows; a cone
    equal to the whole space has none.
    """
    gens = [_frac_vec(g) for g in gens]
    k = len(gens[0])
    seen = {}
    for subset in combinations(range(len(gens)), k - 1):
        sub = [gens[i] for i in subset]
        if sub and rank(sub) != k - 1:
            continue
        ns = nullspace(sub, k)
        if len(ns) != 1:
            continue
        n = ns[0]
        values = [dot(n, g) for g in gens]
        if all(x >= 0 for x in values):
            pass
        elif all(x <= 0 for x in values):
            n = [-x for x in n]
            values = [-x for x in values]
        else:
            continue
        if all(x == 0 for x in values):
            continue
        normal = integral_multiple(n)
        if normal not in seen:
            seen[normal] = frozenset(i for i, x in enumerate(values) if x == 0)
    return sorted(((n, s) for n, s in seen.items()), key=lambda p: (sorted(p[1]), p[0]))


def cone_faces(gens):
    """All faces of a pointed full-dimensional cone as index-saturated sets.

    Faces are intersections of facets; the full generator set is included
    and so is the apex (the empty set).  Returns a dict mapping each face
    to the list of facet normals containing it.
    """
    facets = cone_facets(gens)
    everything = frozenset(range(len(gens)))
    faces = {everything: []}
    frontier = [everything]
    while frontier:
        new = []
        for face in frontier:
            for normal, fset in facets:
                sub = face & fset
                if sub not in faces:
                    faces[sub] = []
                    new.append(sub)
        frontier = new
    for face in faces:
        faces[face] = [n for n, fset in facets if face <= fset]
    return faces


def lifted_faces(points, heights):
    """Faces of the lift ``{(p, h)}`` that are not visible from above.

    Builds the cone over ``(p_j, h_j)`` together with the upward vector and
    returns the faces that do not contain the upward vector.  For every
    such face the value ``w`` of a supporting affine-free functional is
    reported: ``w . p_j <= h_j`` for all j with equality exactly on the
    face.  The entire point set is returned when it lies on one such
    hyperplane.  Output: dict ``face -> w`` (rational tuple), with faces as
    frozensets of point indices.
    """
    k = len(points[0])
    gens = [_frac_vec(p) + (Fraction(h),) for p, h in zip(points, heights)]
    up = len(gens)
    gens.append(tuple([Fraction(0)] * k + [Fraction(1)]))
    faces = cone_faces(gens)
    out = {}
    for face, normals in faces.items():
        if up in face:
            continue
        total = [sum(n[i] for n in normals) for i in range(k + 1)]
        if total[k] <= 0:
            # only possible for the apex of a degenerate lift
            continue
        w = tuple(Fraction(-total[i], total[k]) for i in range(k))
        out[face] = w
    return out


def _generic_heights(n, attempt):
    base = attempt + 2
    return [base ** j for j in range(n)]


def triangulate_cone(gens):
    """A triangulation of the pointed cone spanned by ``gens``.

    Uses lower faces of a lift with heights ``b^j`` for increasing ``b``
    until every maximal face is simplicial.  Returns a sorted list of
    index tuples, each a basis of the ambient space.
    """
    k = len(gens[0])
    for attempt in range(64):
        heights = _generic_heights(len(gens), attempt)
        faces = lifted_faces(gens, heights)
        cells = [f for f in faces if rank([gens[i] for i in f]) == k]
        if all(len(c) == k for c in cells):
            return sorted(tuple(sorted(c)) for c in cells)
    raise RuntimeError("no generic heights found")


def simplex_volume(vertices):
    """Normalized volume of the simplex spanned by the origin and ``vertices``."""
    return abs(det([list(v) for v in vertices]))


def polytope_volume(points):
    """Normalized volume of conv(points) in its ambient space.

    The unit simplex has volume one.  Points are homogenized to (p, 1) so
    the polytope becomes a cone section and any triangulation of the cone
    gives the volume as a sum of absolute determinants.  Lower-dimensional
    polytopes have volume zero, except in ambient dimension zero where a
    single point has volume one.
    """
    pts = sorted(set(_frac_vec(p) for p in points))
    if not pts:
        return 0
    k = len(pts[0])
    if k == 0:
        return 1
    homog = [p + (Fraction(1),) for p in pts]
    if rank(homog) < k + 1:
        return 0
    return _cone_volume(tuple(homog))


@lru_cache(maxsize=4096)
def _cone_volume(homog):
    cells = triangulate_cone(homog)
    total = sum(abs(det([list(homog[i]) for i in cell])) for cell in cells)
    if total.denominator == 1:
        return int(total)
    return total
