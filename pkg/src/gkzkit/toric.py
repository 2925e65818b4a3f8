"""Toric ideals, their weight initial ideals, and monomial-ideal combinatorics."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import NonGenericWeight, NotFull
from .groebner import TermOrder, buchberger, initial_form, leading
from .lattice import ratvec, require
from .linalg import matvec
from .polyhedral import SimplicialComplex, _check_weight


def _fmt_monomial(e, var="d"):
    parts = []
    for j, x in enumerate(e):
        if x == 1:
            parts.append(f"{var}{j + 1}")
        elif x > 1:
            parts.append(f"{var}{j + 1}^{x}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class Binomial:
    """d^plus - d^minus with disjoint supports."""

    plus: tuple
    minus: tuple

    def __post_init__(self):
        assert all(p == 0 or m == 0 for p, m in zip(self.plus, self.minus))

    @property
    def u(self):
        return tuple(p - m for p, m in zip(self.plus, self.minus))

    @property
    def degenerate(self):
        return not any(self.plus) and not any(self.minus)

    def to_poly(self):
        if self.degenerate:
            return {}
        return {self.plus: Fraction(1), self.minus: Fraction(-1)}

    def __str__(self):
        return f"{_fmt_monomial(self.plus)} - {_fmt_monomial(self.minus)}"


def box_from_kernel(u):
    """The binomial d^(u+) - d^(u-) of an integer vector u."""
    return Binomial(tuple(max(0, x) for x in u), tuple(max(0, -x) for x in u))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class MonomialIdeal:
    """A monomial ideal given by its minimal generators (exponent tuples)."""

    def __init__(self, generators, n):
        gens = sorted(set(tuple(g) for g in generators))
        minimal = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]
        self.generators = tuple(minimal)
        self.n = n

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.n == other.n
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.generators, self.n))

    def __contains__(self, e):
        return any(_divides(g, e) for g in self.generators)

    @property
    def is_zero(self):
        return not self.generators

    def radical(self):
        return MonomialIdeal([tuple(min(x, 1) for x in g) for g in self.generators], self.n)

    def __repr__(self):
        return "<" + ", ".join(_fmt_monomial(g) for g in self.generators) + ">"


@dataclass(frozen=True, order=True)
class StandardPair:
    base: tuple
    face: tuple

    def __str__(self):
        return f"({_fmt_monomial(self.base)}, {{{','.join(map(str, self.face))}}})"


@dataclass(frozen=True)
class NonGenericInitial:
    """Initial forms of a Groebner basis when some of them are not monomials."""

    binomials: tuple
    monomials: tuple
    generic: bool = False


# --------------------------------------------------------------------------
# toric ideals


def _grading(g):
    return [g.degree(a) for a in g.columns]


def _from_poly(f, order):
    lead, _ = leading(f, order)
    others = [e for e in f if e != lead]
    if not others:
        return None
    return Binomial(lead, others[0])


def _binomials_to_polys(bins):
    return [b.to_poly() for b in bins if not b.degenerate]


def _saturate_var(gens, n, j, grading):
    order = TermOrder(n, weights=[grading], last=j)
    gb = buchberger(gens, order)
    out = []
    for f in gb:
        k = min(e[j] for e in f)
        out.append({tuple(x - k * (i == j) for i, x in enumerate(e)): c for e, c in f.items()})
    return out


def _toric_by_elimination(g):
    # I_A = (J + <t * x_1 ... x_n - 1>) intersected with Q[x]
    n = g.n
    gens = []
    for b in (box_from_kernel(u) for u in g.kernel):
        gens.append({e + (0,): c for e, c in b.to_poly().items()})
    gens.append({(1,) * n + (1,): Fraction(1), (0,) * (n + 1): Fraction(-1)})
    elim = [0] * n + [1]
    order = TermOrder(n + 1, weights=[elim])
    gb = buchberger(gens, order)
    return [{e[:n]: c for e, c in f.items()} for f in gb if all(e[n] == 0 for e in f)]


def toric_ideal_generators(g):
    """Reduced Groebner basis of I_A as a sorted tuple of Binomials.

    Pointed A: start from the lattice basis binomials and saturate by
    each variable in turn (grevlex with that variable last, graded by the
    positive functional).  Non-pointed A falls back to elimination.
    The final basis is for grevlex refined by the same grading.
    """
    require(g, full=True)
    n = g.n
    if not g.kernel:
        return ()
    gens = _binomials_to_polys(box_from_kernel(u) for u in g.kernel)
    if g.pointed:
        grading = _grading(g)
        for j in range(n):
            gens = _saturate_var(gens, n, j, grading)
        order = TermOrder(n, weights=[grading])
        gb = buchberger(gens, order)
    else:
        gens = _toric_by_elimination(g)
        order = TermOrder(n)
        gb = buchberger(gens, order)
    out = []
    for f in gb:
        b = _from_poly(f, order)
        assert b is not None and f[b.plus] == 1 and f[b.minus] == -1
        assert not any(matvec(g.matrix, b.u)), "generator outside the kernel"
        out.append(b)
    return tuple(out)


def _positive_shift(g, L):
    """L plus a multiple of the grading, so that every entry is positive."""
    if not g.pointed:
        if any(x <= 0 for x in L):
            raise NotFull("non-pointed matrix needs a positive weight")
        return L
    grading = _grading(g)
    worst = min(Fraction(x) / d for x, d in zip(L, grading))
    c = max(Fraction(0), -worst) + 1
    return tuple(x + c * d for x, d in zip(L, grading))


def initial_ideal(g, L, tie_break=None):
    """Initial ideal of I_A for the weight L, refined by grevlex.

    Returns a MonomialIdeal when every initial form is a monomial and a
    NonGenericInitial otherwise.  I_A is A-graded, so adding a multiple
    of the positive functional to L does not change initial forms; that
    shift makes the order global.
    """
    require(g, full=True)
    L = _check_weight(g, L)
    n = g.n
    gens = [b.to_poly() for b in toric_ideal_generators(g)]
    if not gens:
        return MonomialIdeal([], n)
    shifted = _positive_shift(g, L)
    weights = [shifted] if tie_break is None else [shifted, tie_break]
    order = TermOrder(n, weights=weights)
    gb = buchberger(gens, order)
    forms = [initial_form(f, L) for f in gb]
    if all(len(f) == 1 for f in forms):
        return MonomialIdeal([next(iter(f)) for f in forms], n)
    bins = []
    mons = []
    for f in forms:
        if len(f) == 1:
            mons.append(next(iter(f)))
        else:
            bins.append(_from_poly(f, order))
    return NonGenericInitial(tuple(bins), tuple(sorted(mons)))


# --------------------------------------------------------------------------
# monomial ideal combinatorics


def standard_pairs(m):
    """All standard pairs (b, sigma) of a monomial ideal, sorted.

    (b, sigma) is standard when supp(b) misses sigma, no generator
    divides d^b times a monomial in the sigma variables, and for every k
    outside sigma some generator divides d^b times a monomial in the
    variables of sigma and k.  Such b satisfy b_j < max generator
    exponent in x_j, which bounds the search.
    """
    n = m.n
    if m.is_zero:
        return (StandardPair((0,) * n, tuple(range(1, n + 1))),)
    top = [max(g[j] for g in m.generators) for j in range(n)]
    out = []
    for size in range(n, -1, -1):
        for sigma in combinations(range(n), size):
            rest = [j for j in range(n) if j not in sigma]
            if any(top[j] == 0 for j in rest):
                continue
            for vals in product(*(range(top[j]) for j in rest)):
                b = [0] * n
                for j, v in zip(rest, vals):
                    b[j] = v

                def hits(g, skip=None):
                    return all(g[i] <= b[i] for i in rest if i != skip)
                if any(hits(g) for g in m.generators):
                    continue
                if all(any(hits(g, k) for g in m.generators) for k in rest):
                    out.append(StandardPair(tuple(b), tuple(j + 1 for j in sigma)))
    return tuple(sorted(out))


def irreducible_decomposition(m):
    """Irreducible components <x_j^(b_j+1) : j not in sigma>, one per standard pair.

    The zero ideal yields the single component zero.
    """
    n = m.n
    comps = set()
    for sp in standard_pairs(m):
        gens = []
        for j in range(n):
            if j + 1 not in sp.face:
                gens.append(tuple((sp.base[j] + 1) * (i == j) for i in range(n)))
        comps.add(MonomialIdeal(gens, n))
    return tuple(sorted(comps, key=lambda c: c.generators))


def intersection_contains(components, e):
    return all(e in c for c in components)


def stanley_reisner_complex(m):
    """Faces tau with no generator supported inside tau."""
    n = m.n
    supports = [frozenset(j for j in range(n) if g[j]) for g in m.generators]
    facets = []
    for size in range(n, -1, -1):
        for tau in combinations(range(n), size):
            s = frozenset(tau)
            if any(sup <= s for sup in supports):
                continue
            if any(s < f for f in facets):
                continue
            facets.append(s)
    return SimplicialComplex.from_facets([tuple(j + 1 for j in sorted(f)) for f in facets])


def initial_complex(g, L):
    """The initial complex of I_A for a generic weight L.

    Facets are cross-checked against the faces of the standard pairs.
    """
    init = initial_ideal(g, L)
    if not isinstance(init, MonomialIdeal):
        raise NonGenericWeight("initial ideal is not monomial",
                               certificate={"binomials": [str(b) for b in init.binomials]})
    cx = stanley_reisner_complex(init)
    sigmas = SimplicialComplex.from_facets(sp.face for sp in standard_pairs(init))
    assert sigmas == cx, (sigmas, cx)
    return cx
