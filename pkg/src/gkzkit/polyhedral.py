"""Umbrellas, regular triangulations, volumes and semigroup holes.

Everything is driven by one construction: lift column a_j to (a_j, L_j),
add the upward vector (0, ..., 0, 1), and read off the faces of the cone
over these vectors that do not contain the upward vector.  For a face F
of that kind there is a rational w with w.a_j <= L_j for all j and
equality exactly on F, so the same routine yields the face lattice of
the cone (L = 0), the umbrella (any L) and regular subdivisions
(generic L).

Public index sets are 1-based sorted tuples.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import DimensionMismatch, FaceNotInUmbrella, NonGenericWeight
from .geometry import lifted_faces, polytope_volume
from .lattice import Tri, is_saturated, lattice_index, parallelepiped_points, ratvec, require
from .linalg import (
    det,
    hermite_rows,
    integral_multiple,
    inverse,
    lattice_coordinates,
    matvec,
    rank,
    smith_normal_form,
    transpose,
)


@dataclass(frozen=True, order=True)
class Face:
    columns: tuple
    dim: int
    supporting_normal: tuple

    def __contains__(self, j):
        return j in self.columns


class Umbrella:
    """The faces of the lifted cone that are invisible from above.

    Equality compares the combinatorial data only (column sets and
    dimensions), so rescaling the weight gives an equal umbrella.
    """

    def __init__(self, faces, weight, d):
        self.faces = tuple(sorted(faces, key=lambda f: (f.dim, f.columns)))
        self.weight = tuple(weight)
        self.d = d
        self._by_cols = {f.columns: f for f in self.faces}

    def key(self):
        return frozenset((f.columns, f.dim) for f in self.faces)

    def __eq__(self, other):
        return isinstance(other, Umbrella) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __contains__(self, columns):
        return tuple(sorted(columns)) in self._by_cols

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def face(self, columns):
        return self._by_cols.get(tuple(sorted(columns)))

    def skeleton(self, k):
        return [f for f in self.faces if f.dim == k]

    @property
    def facets(self):
        """Column sets of the top-dimensional faces, sorted."""
        return sorted(f.columns for f in self.skeleton(self.d - 1))

    def __repr__(self):
        return f"Umbrella(facets={self.facets}, weight={list(map(str, self.weight))})"


@dataclass(frozen=True)
class Triangulation:
    maximal_cells: tuple
    volumes: tuple

    @property
    def total_volume(self):
        return sum(self.volumes)


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple

    @classmethod
    def from_facets(cls, facets):
        sets = {tuple(sorted(f)) for f in facets}
        maximal = [f for f in sets if not any(set(f) < set(g) for g in sets)]
        return cls(tuple(sorted(maximal)))

    def __contains__(self, face):
        s = set(face)
        return any(s <= set(f) for f in self.facets)

    def faces(self):
        out = set()
        for f in self.facets:
            for mask in product((0, 1), repeat=len(f)):
                out.add(tuple(x for x, keep in zip(f, mask) if keep))
        return sorted(out, key=lambda t: (len(t), t))


@dataclass(frozen=True)
class HolesResult:
    holes: tuple
    complete: bool
    degree_bound: int


# --------------------------------------------------------------------------
# umbrellas


def _check_weight(g, L):
    if len(L) != g.n:
        raise DimensionMismatch(f"weight has length {len(L)}, expected {g.n}")
    return ratvec(L)


def _lifted_rank(g, cols, L):
    return rank([list(g.columns[j]) + [L[j]] for j in cols]) if cols else 0


def umbrella(g, L):
    """The (A, L)-umbrella of a pointed matrix.

    Each face records its column set, its dimension (rank of the lifted
    columns minus one) and a rational w with w.a_j <= L_j, equality
    exactly on the face.
    """
    require(g, pointed=True)
    L = _check_weight(g, L)
    raw = lifted_faces(g.columns, L)
    faces = []
    for fset, w in raw.items():
        cols = tuple(sorted(fset))
        dim = _lifted_rank(g, cols, L) - 1
        faces.append(Face(tuple(j + 1 for j in cols), dim, w))
    return Umbrella(faces, L, g.d)


def face_lattice(g):
    """Faces of the cone over the columns, including the apex and the cone.

    Supporting normals are the primitive integral inner normals (zero for
    the whole cone).
    """
    require(g, pointed=True)
    u = umbrella(g, [0] * g.n)
    faces = []
    for f in u.faces:
        normal = tuple(-x for x in f.supporting_normal)
        if any(normal):
            normal = integral_multiple(normal)
        else:
            normal = tuple(0 for _ in normal)
        faces.append(Face(f.columns, f.dim, normal))
    return Umbrella(faces, u.weight, g.d)


def cone_rays(g):
    """Column sets of the extreme rays of the cone over the columns."""
    return [f.columns for f in face_lattice(g).skeleton(0)]


def _linear_roots(g, base, direction):
    cols = g.columns
    n, d = g.n, g.d
    roots = set()
    for j in range(n):
        if direction[j]:
            roots.add(-base[j] / direction[j])

    def lifted_det(subset, t):
        return det([list(cols[j]) + [base[j] + t * direction[j]] for j in subset])

    for subset in combinations(range(n), d + 1):
        d0 = lifted_det(subset, Fraction(0))
        d1 = lifted_det(subset, Fraction(1))
        if d1 != d0:
            roots.add(-d0 / (d1 - d0))
    return roots


def umbrella_jumps(g, base, direction, window):
    """Parameters t in the open window where umbrella(base + t direction) changes.

    Candidates are the roots of the lifted (d+1)x(d+1) determinants and
    the zeros of the individual weights; a candidate is kept when its
    umbrella differs from the one at the midpoint on either side.
    """
    require(g, pointed=True)
    base = _check_weight(g, base)
    direction = _check_weight(g, direction)
    if not any(direction):
        raise ValueError("direction must be nonzero")
    lo, hi = Fraction(window[0]), Fraction(window[1])
    cands = sorted(t for t in _linear_roots(g, base, direction) if lo < t < hi)

    def at(t):
        return umbrella(g, [b + t * v for b, v in zip(base, direction)])

    jumps = []
    edges = [lo] + cands + [hi]
    for i, t in enumerate(cands):
        left = (edges[i] + t) / 2
        right = (t + edges[i + 2]) / 2
        here = at(t)
        if here != at(left) or here != at(right):
            jumps.append(t)
    return jumps


# --------------------------------------------------------------------------
# triangulations and volumes


def regular_triangulation(g, L):
    """The subdivision of the cone induced by the weight L.

    Cells are the top-dimensional faces of the umbrella.  When one of
    them is not a simplex, L is not generic and NonGenericWeight carries
    the offending face.
    """
    require(g, full=True, pointed=True)
    u = umbrella(g, L)
    cells = []
    vols = []
    for f in u.skeleton(g.d - 1):
        sub = [g.columns[j - 1] for j in f.columns]
        if len(f.columns) != g.d or rank(sub) != g.d:
            raise NonGenericWeight("weight induces a non-simplicial cell",
                                   certificate={"face": list(f.columns)})
        cells.append(f.columns)
        vols.append(abs(det([list(c) for c in sub])))
    order = sorted(range(len(cells)), key=lambda i: cells[i])
    return Triangulation(tuple(cells[i] for i in order), tuple(vols[i] for i in order))


def initial_complex_from_triangulation(t):
    return SimplicialComplex.from_facets(t.maximal_cells)


def simplicial_volume(g):
    """Normalized volume of conv(0, a_1, ..., a_n).

    Computed twice: once from a triangulation of the homogenized point
    set and once as a sum of pyramids over the umbrella facets for the
    all-ones weight.  The two must agree.
    """
    require(g, full=True, pointed=True)
    cols = g.columns
    zero = tuple(0 for _ in range(g.d))
    direct = polytope_volume(list(cols) + [zero])
    u = umbrella(g, [1] * g.n)
    pyramids = sum(polytope_volume([zero] + [cols[j - 1] for j in f]) for f in u.facets)
    assert direct == pyramids, (direct, pyramids)
    return int(direct)


# --------------------------------------------------------------------------
# semigroup holes


def cone_points(g, degree_bound):
    """Integer points x of the cone with degree(x) <= degree_bound, sorted."""
    rays = []
    for cols in cone_rays(g):
        a = g.columns[cols[0] - 1]
        rays.append([Fraction(x) * degree_bound / g.degree(a) for x in a])
    lows = [min([0] + [r[i] for r in rays]) for i in range(g.d)]
    highs = [max([0] + [r[i] for r in rays]) for i in range(g.d)]
    ranges = [range(math.floor(a), math.ceil(b) + 1) for a, b in zip(lows, highs)]
    pts = []
    for x in product(*ranges):
        if g.in_cone(x) and g.degree(x) <= degree_bound:
            pts.append(x)
    return sorted(pts, key=lambda x: (g.degree(x), x))


def _hole_degree_certificate(g, search_limit):
    """Degree below which all holes lie, for simplicial cones; None if unknown.

    Write a cone point as p + sum m_i r_i with p in the half-open
    parallelepiped of the ray generators r_i.  If p + a_i r_i is in NA
    then so is every point with m_i >= a_i, so holes need m_i < a_i for
    all i.
    """
    rays = cone_rays(g)
    if len(rays) != g.d:
        return None
    sg = g.semigroup
    gens = []
    for cols in rays:
        best = min((g.columns[j - 1] for j in cols), key=lambda a: (g.degree(a), a))
        gens.append(best)
    worst = Fraction(-1)
    for p in parallelepiped_points(gens):
        total = g.degree(p)
        for r in gens:
            for a in range(search_limit + 1):
                if tuple(x + a * y for x, y in zip(p, r)) in sg:
                    break
            else:
                return None
            total += max(a - 1, 0) * g.degree(r)
        worst = max(worst, total)
    return worst


def semigroup_holes(g, degree_bound):
    """Cone lattice points up to the degree bound that are not in NA.

    ``complete`` is set when saturation is certified (no holes at all) or
    when a simplicial-cone argument shows every hole has degree within
    the bound.
    """
    require(g, full=True, pointed=True)
    sat = g.saturated if g.saturated is not Tri.UNKNOWN else is_saturated(g).status
    if sat is Tri.YES:
        return HolesResult((), True, degree_bound)
    sg = g.semigroup
    holes = tuple(x for x in cone_points(g, degree_bound) if x not in sg)
    limit = max(1, degree_bound)
    need = _hole_degree_certificate(g, limit)
    complete = need is not None and need <= degree_bound
    return HolesResult(holes, complete, degree_bound)


# --------------------------------------------------------------------------
# characteristic cycle multiplicities


def _quotient_map(tau_coords, k):
    """Integer map Z^k -> Z^(k-r) whose kernel is the saturation of span(tau)."""
    if not tau_coords:
        return lambda x: tuple(x), k
    _, s, v = smith_normal_form([list(c) for c in tau_coords])
    r = sum(1 for i in range(min(len(s), k)) if s[i][i] != 0)

    def proj(x):
        y = matvec(transpose(v), list(x))
        return tuple(y[r:])
    return proj, k - r


def char_cycle_multiplicity(g, L, tau):
    """Multiplicity of the conormal component indexed by ``tau``.

    Sum over top-dimensional umbrella faces tau' containing tau of
    [ZA : Z tau'] * [(Z tau' cap Q tau) : Z tau] * vol(P - Q), with P the
    hull of the projected tau' and the origin, Q the hull of the
    projected columns of tau' outside tau.
    """
    require(g, full=True, pointed=True)
    u = umbrella(g, L)
    cols_tau = tuple(sorted(tau.columns if isinstance(tau, Face) else tau))
    if cols_tau not in u:
        raise FaceNotInUmbrella(f"{list(cols_tau)} is not a face of the umbrella",
                                certificate={"facets": [list(f) for f in u.facets]})
    cols = g.columns
    unit = [tuple(int(i == j) for j in range(g.d)) for i in range(g.d)]
    total = 0
    for f in u.facets:
        if not set(cols_tau) <= set(f):
            continue
        big = [cols[j - 1] for j in f]
        if rank(big) < g.d:
            continue
        index_big = lattice_index(big, unit)
        small = [cols[j - 1] for j in cols_tau]
        # coordinates in a basis of Z tau'
        basis = hermite_rows(big)
        coords = {j: tuple(int(c) for c in lattice_coordinates(basis, [cols[j - 1]])[0])
                  for j in f}
        proj, k = _quotient_map([coords[j] for j in cols_tau], g.d)
        if small:
            sat = _saturation_basis([coords[j] for j in cols_tau], g.d)
            index_small = lattice_index([coords[j] for j in cols_tau], sat)
        else:
            index_small = 1
        zero = tuple(0 for _ in range(k))
        p_pts = [proj(coords[j]) for j in f] + [zero]
        q_pts = [proj(coords[j]) for j in f if j not in cols_tau]
        vol = polytope_volume(p_pts) - (polytope_volume(q_pts) if q_pts else 0)
        total += index_big * index_small * vol
    return int(total)


def _saturation_basis(vectors, k):
    """A Z-basis of Q-span(vectors) intersected with Z^k."""
    _, s, v = smith_normal_form([list(x) for x in vectors])
    r = sum(1 for i in range(min(len(s), k)) if s[i][i] != 0)
    vinv = _unimodular_inverse(v)
    # in coordinates y = x V the saturation is the first r unit vectors
    return [tuple(vinv[i]) for i in range(r)]


def _unimodular_inverse(v):
    inv = inverse(v)
    return [[int(x) for x in row] for row in inv]
