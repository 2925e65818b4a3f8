"""Structural predicates on an integer matrix A and lattice bookkeeping.

``GkzMatrix`` bundles the matrix with the flags every later computation
needs (full, pointed, homogeneous, saturated).  Semigroup membership in
NA is decided by memoized descent along a strictly positive functional.
"""

import enum
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from .errors import NotFull, NotPointed, PreconditionViolation, SpanViolation
from .geometry import cone_facets, triangulate_cone
from .linalg import (
    columns,
    det,
    dot,
    hermite_rows,
    inverse,
    kernel_basis,
    lattice_coordinates,
    matvec,
    nullspace,
    rank,
    smith_normal_form,
    snf_diagonal,
    solve,
    transpose,
)


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


def as_int_matrix(m):
    rows = tuple(tuple(int(x) for x in row) for row in m)
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    for row, orig in zip(rows, m):
        for x, y in zip(row, orig):
            if x != y:
                raise ValueError("matrix entries must be integers")
    return rows


def ratvec(v):
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class GkzMatrix:
    matrix: tuple
    full: bool
    pointed: bool
    homogeneity_row: tuple = None
    saturated: Tri = Tri.UNKNOWN
    positive_functional: tuple = field(default=None, compare=False)

    @property
    def d(self):
        return len(self.matrix)

    @property
    def n(self):
        return len(self.matrix[0])

    @property
    def columns(self):
        return columns(self.matrix)

    @property
    def homogeneous(self):
        return self.homogeneity_row is not None

    @cached_property
    def facets(self):
        """Facets of the cone over the columns: list of (inner normal, column set)."""
        if rank(self.matrix) < self.d:
            return []
        return cone_facets(self.columns)

    @cached_property
    def kernel(self):
        return kernel_basis(self.matrix)

    @cached_property
    def semigroup(self):
        return Semigroup(self)

    def degree(self, v):
        """Value of the positive functional; strictly positive on nonzero cone points."""
        return dot(self.positive_functional, v)

    def in_cone(self, v):
        return all(dot(n, v) >= 0 for n, _ in self.facets)


def _positive_dependency(cols):
    """A nonzero lambda >= 0 with sum lambda_j a_j = 0, or None."""
    n = len(cols)
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            sub = transpose([cols[j] for j in subset])
            ns = nullspace(sub, size)
            if len(ns) != 1:
                continue
            v = ns[0]
            if all(x > 0 for x in v) or all(x < 0 for x in v):
                lam = [Fraction(0)] * n
                for j, x in zip(subset, v):
                    lam[j] = abs(x)
                den = math.lcm(*(x.denominator for x in lam))
                return tuple(int(x * den) for x in lam)
    return None


def inspect_matrix(m):
    """Compute all flags of ``m`` without raising on failure."""
    rows = as_int_matrix(m)
    d = len(rows)
    diag = snf_diagonal(rows)
    full = len(diag) == d and all(x == 1 for x in diag)
    cols = columns(rows)
    functional = None
    pointed = False
    if rank(rows) == d:
        facets = cone_facets(cols)
        h = [sum(nv[i] for nv, _ in facets) for i in range(d)]
        if facets and all(dot(h, a) > 0 for a in cols):
            pointed = True
            functional = tuple(h)
        elif d == 1 and all(a[0] > 0 for a in cols):
            pointed, functional = True, (1,)
    else:
        # a rank-deficient matrix is pointed iff it has no positive dependency
        pointed = _positive_dependency(cols) is None
        if pointed:
            functional = _functional_in_span(rows)
    hom = solve(transpose(rows), [1] * len(cols)) if full or rank(rows) == d else None
    if hom is not None:
        hom = tuple(Fraction(x) for x in hom)
    return GkzMatrix(rows, full, pointed, hom, Tri.UNKNOWN, functional)


def _functional_in_span(rows):
    # work in coordinates on the column span, then pull the functional back
    cols = columns(rows)
    basis = hermite_rows(cols)
    coords = lattice_coordinates(basis, cols)
    facets = cone_facets([tuple(c) for c in coords])
    hc = [sum(nv[i] for nv, _ in facets) for i in range(len(basis))]
    h = solve([list(b) for b in basis], hc)
    return tuple(h)


def validate(m):
    """Validate ``m`` as a GKZ matrix: raise unless full and pointed.

    NotFull carries the Smith normal form diagonal; NotPointed carries a
    positive dependency among the columns (so the cone contains the line
    through its partial sums).
    """
    g = inspect_matrix(m)
    if not g.full:
        raise NotFull("the columns do not generate Z^d",
                      certificate={"snf_diagonal": snf_diagonal(g.matrix)})
    if not g.pointed:
        lam = _positive_dependency(g.columns)
        raise NotPointed("the cone over the columns contains a line",
                         certificate={"positive_dependency": lam})
    return g


def require(g, full=False, pointed=False, homogeneous=False):
    if full and not g.full:
        raise NotFull("matrix is not full", certificate={"snf_diagonal": snf_diagonal(g.matrix)})
    if pointed and not g.pointed:
        raise NotPointed("matrix is not pointed",
                         certificate={"positive_dependency": _positive_dependency(g.columns)})
    if homogeneous and not g.homogeneous:
        raise PreconditionViolation("matrix is not homogeneous")


def lattice_index(sub, sup):
    """Index of the lattice spanned by ``sub`` in the one spanned by ``sup``.

    Returns ``math.inf`` when ``sub`` has smaller rank.
    """
    sub = [tuple(v) for v in sub if any(v)]
    sup = [tuple(v) for v in sup if any(v)]
    rs = rank(sup) if sup else 0
    if sub and rank(sup + sub) != rs:
        raise SpanViolation("sub does not lie in the rational span of sup")
    rb = rank(sub) if sub else 0
    if rb < rs:
        return math.inf
    if rs == 0:
        return 1
    big = hermite_rows(sup)
    small = hermite_rows(sub)
    coords = lattice_coordinates(big, small)
    value = abs(det(coords))
    return int(value) if value.denominator == 1 else value


def parallelepiped_points(gens):
    """Integer points of the half-open parallelepiped spanned by a basis ``gens``.

    These are representatives of Z^d modulo the sublattice generated by
    ``gens``, written as sum of frac(c_i) g_i.
    """
    d = len(gens)
    u, s, v = smith_normal_form(transpose([list(g) for g in gens]))
    uinv = inverse(u)
    diag = [s[i][i] for i in range(d)]
    gt = transpose([list(g) for g in gens])
    ginv = inverse(gt)
    points = set()
    for k in product(*(range(x) for x in diag)):
        r = matvec(uinv, list(k))
        c = matvec(ginv, r)
        frac = [x - math.floor(x) for x in c]
        p = matvec(gt, frac)
        points.add(tuple(int(x) for x in p))
    return sorted(points)


class Semigroup:
    """Membership oracle for NA with a memo table.

    A point is in NA iff it is zero or some ``x - a_j`` is in NA; the
    positive functional strictly decreases along such chains, so the
    recursion terminates.
    """

    def __init__(self, g):
        if not g.pointed:
            raise NotPointed("semigroup membership needs a pointed matrix")
        self.g = g
        self.cols = g.columns
        self.memo = {}

    def __contains__(self, x):
        x = tuple(x)
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in x):
            return False
        x = tuple(int(c) for c in x)
        return self._member(x)

    def _member(self, x):
        if not any(x):
            return True
        hit = self.memo.get(x)
        if hit is not None:
            return hit
        result = False
        if self.g.degree(x) > 0 and self.g.in_cone(x):
            for a in self.cols:
                y = tuple(p - q for p, q in zip(x, a))
                if self._member(y):
                    result = True
                    break
        self.memo[x] = result
        return result

    def representation(self, x):
        """A nonnegative integer vector u with A u = x, or None."""
        x = tuple(int(c) for c in x)
        if x not in self:
            return None
        u = [0] * len(self.cols)
        while any(x):
            for j, a in enumerate(self.cols):
                y = tuple(p - q for p, q in zip(x, a))
                if self._member(y):
                    u[j] += 1
                    x = y
                    break
        return tuple(u)


@dataclass(frozen=True)
class SaturationResult:
    status: Tri
    witness: tuple = None
    certificate: dict = None


def is_saturated(g, bound=None):
    """Decide whether NA = ZA intersected with the cone.

    Triangulate the cone over the columns; a cone point is in NA as soon
    as its representative modulo the lattice of each cell is, because
    adding cell generators stays in NA.  So NA is saturated iff every
    integer point of every half-open cell parallelepiped lies in NA, a
    finite check.  The answer is therefore always Yes or No; ``bound``
    is accepted for interface compatibility and only caps the witness
    search.
    """
    require(g, full=True, pointed=True)
    cols = g.columns
    cells = triangulate_cone(cols)
    sg = g.semigroup
    for cell in cells:
        gens = [cols[j] for j in cell]
        for p in parallelepiped_points(gens):
            if p not in sg:
                return SaturationResult(Tri.NO, witness=p,
                                        certificate={"cell": [j + 1 for j in cell]})
    return SaturationResult(Tri.YES, certificate={
        "cells": [[j + 1 for j in c] for c in cells]})


def with_saturation(g):
    """Return ``g`` with the saturation flag filled in."""
    if g.saturated is not Tri.UNKNOWN:
        return g
    return replace(g, saturated=is_saturated(g).status)
