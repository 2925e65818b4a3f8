"""The A-hypergeometric layer.

System assembly, the univariate dictionary, resonance, ranks,
Gamma-series with an independent residual check, slopes, interlacing and
Beukers' generator count.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    CorankNotOne,
    DimensionMismatch,
    ListsIntersect,
    NonGenericWeight,
    NonPrimitiveKernel,
    PreconditionViolation,
    ResonantParameter,
)
from .fuchs import ThetaOperator, format_theta_poly, linear, product_of
from .lattice import Tri, inspect_matrix, is_saturated, ratvec, require
from .linalg import dot, inverse, kernel_basis, matvec, solve, transpose
from .polyhedral import (
    _check_weight,
    cone_points,
    cone_rays,
    face_lattice,
    regular_triangulation,
    simplicial_volume,
    umbrella_jumps,
)
from .toric import MonomialIdeal, initial_ideal, standard_pairs, toric_ideal_generators


def _beta(g, beta):
    if len(beta) != g.d:
        raise DimensionMismatch(f"beta has length {len(beta)}, expected {g.d}")
    return ratvec(beta)


# --------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class GkzSystem:
    matrix: object
    beta: tuple
    euler_operators: tuple
    boxes: tuple

    def render(self):
        lines = []
        for row, b in zip(self.euler_operators, self.beta):
            terms = [f"{a}*theta{j + 1}" for j, a in enumerate(row) if a]
            lhs = " + ".join(terms).replace("+ -", "- ") or "0"
            lines.append(f"{lhs} - ({b})")
        lines.extend(str(box) for box in self.boxes)
        return lines


def assemble(g, beta):
    """Euler operators (rows of A) minus beta, plus generators of I_A."""
    beta = _beta(g, beta)
    require(g, full=True)
    return GkzSystem(g, beta, tuple(g.matrix), toric_ideal_generators(g))


# --------------------------------------------------------------------------
# univariate dictionary


@dataclass(frozen=True)
class GeneralForm:
    v: tuple
    c: tuple


@dataclass(frozen=True)
class PFQForm:
    alpha: tuple
    beta_params: tuple


@dataclass(frozen=True)
class UnivariateOp:
    form: object

    def __post_init__(self):
        if isinstance(self.form, GeneralForm):
            if not any(self.form.v):
                raise ValueError("v must be nonzero")
        elif isinstance(self.form, PFQForm):
            for b in self.form.beta_params:
                if Fraction(b).denominator == 1 and b <= 0:
                    raise ValueError("beta parameters must not be nonpositive integers")

    @property
    def theta_polynomial(self):
        """(lhs, rhs) theta-polynomials; the operator is lhs - z * rhs."""
        f = self.form
        if isinstance(f, GeneralForm):
            lhs, rhs = [], []
            for vj, cj in zip(f.v, f.c):
                for ell in range(abs(vj)):
                    (lhs if vj > 0 else rhs).append(linear(vj, Fraction(cj) - ell))
            return product_of(lhs), product_of(rhs)
        lhs = [linear(1, 0)] + [linear(1, Fraction(b) - 1) for b in f.beta_params]
        rhs = [linear(1, Fraction(a)) for a in f.alpha]
        return product_of(lhs), product_of(rhs)

    def operator(self):
        lhs, rhs = self.theta_polynomial
        return ThetaOperator.of({0: lhs, 1: [-x for x in rhs]})

    def __str__(self):
        lhs, rhs = self.theta_polynomial
        return f"{format_theta_poly(lhs)} = z * ({format_theta_poly(rhs)})"


def univariate_to_gkz(op):
    """A matrix with integer kernel Z v and beta = A c.

    A is the HNF basis of the lattice orthogonal to v, which is full
    because that lattice is saturated.  Pointedness depends only on the
    signs of v and is reported on the returned GkzMatrix, not repaired.
    """
    f = op.form
    if isinstance(f, PFQForm):
        p, q = len(f.alpha), len(f.beta_params)
        v = (1,) * (q + 1) + (-1,) * p
        c = (Fraction(1),) + tuple(Fraction(b) for b in f.beta_params) + tuple(
            Fraction(a) for a in f.alpha)
        f = GeneralForm(v, c)
    v = tuple(int(x) for x in f.v)
    if math.gcd(*v) != 1:
        raise NonPrimitiveKernel(f"gcd of v is {math.gcd(*v)}", certificate={"v": list(v)})
    rows = kernel_basis([list(v)])
    g = inspect_matrix(rows)
    assert kernel_basis(g.matrix) in ([v], [tuple(-x for x in v)])
    beta = tuple(matvec(g.matrix, [Fraction(x) for x in f.c]))
    return g, beta


def gkz_to_univariate(g, beta):
    """The GeneralForm (v, c) of a corank-one system.

    v is the kernel generator with positive leading entry and c the
    rational solution of A c = beta supported on pivot columns.
    """
    beta = _beta(g, beta)
    if g.n - g.d != 1 or len(g.kernel) != 1:
        raise CorankNotOne(f"corank is {g.n - g.d}, expected 1")
    v = g.kernel[0]
    c = solve([list(r) for r in g.matrix], list(beta))
    return UnivariateOp(GeneralForm(tuple(v), tuple(c)))


# --------------------------------------------------------------------------
# resonance


@dataclass(frozen=True)
class ResonanceResult:
    resonant: bool
    facet: tuple = None
    normal: tuple = None

    def __bool__(self):
        return self.resonant


def is_resonant(g, beta):
    """True iff n . beta is an integer for some primitive inner facet normal n."""
    require(g, full=True, pointed=True)
    beta = _beta(g, beta)
    for normal, cols in g.facets:
        if dot(normal, beta).denominator == 1:
            return ResonanceResult(True, tuple(sorted(j + 1 for j in cols)), normal)
    return ResonanceResult(False)


@dataclass(frozen=True)
class StrongResonance:
    status: Tri
    witness: dict = None


def _in_span(vec, gens):
    if not gens:
        return not any(vec)
    return solve(transpose([list(x) for x in gens]), list(vec)) is not None


def is_strongly_resonant(g, beta, bound=32):
    """Semi-decision for strong resonance.

    No when NA is saturated and beta is in NA.  Otherwise look for a
    column j and k <= bound with beta + (k+1) a_j in c + span(tau), where
    c runs over the true degrees NA minus (a_j + NA) up to the degree
    bound and tau over faces whose bounded orbit from c stays among the
    true degrees.  Yes with that witness, else Unknown.
    """
    require(g, full=True, pointed=True)
    beta = _beta(g, beta)
    sg = g.semigroup
    integral = all(x.denominator == 1 for x in beta)
    if integral and tuple(int(x) for x in beta) in sg:
        sat = g.saturated if g.saturated is not Tri.UNKNOWN else is_saturated(g).status
        if sat is Tri.YES:
            return StrongResonance(Tri.NO, {"reason": "saturated and beta in NA"})
    faces = [f.columns for f in face_lattice(g).faces if f.dim < g.d - 1]
    cols = g.columns
    pts = cone_points(g, bound)
    members = {p for p in pts if p in sg}
    for j, a in enumerate(cols):
        true_deg = [p for p in pts if p in members
                    and tuple(x - y for x, y in zip(p, a)) not in members]
        tset = set(true_deg)
        pieces = []
        for c in true_deg:
            for tau in faces:
                gens = [cols[i - 1] for i in tau]
                ok = True
                for i in tau:
                    step = cols[i - 1]
                    for m in range(1, bound + 1):
                        q = tuple(x + m * y for x, y in zip(c, step))
                        if g.degree(q) > bound:
                            break
                        if q not in tset:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    pieces.append((c, tau, gens))
        for k in range(bound + 1):
            shifted = tuple(b + (k + 1) * x for b, x in zip(beta, a))
            for c, tau, gens in pieces:
                diff = tuple(s - x for s, x in zip(shifted, c))
                if _in_span(diff, gens):
                    return StrongResonance(Tri.YES, {"j": j + 1, "k": k, "c": list(c),
                                                     "tau": list(tau)})
    return StrongResonance(Tri.UNKNOWN, {"bound": bound})


# --------------------------------------------------------------------------
# ranks


def generic_rank(g):
    """Holonomic rank at generic parameters, which is the simplicial volume."""
    return simplicial_volume(g)


def monomial_curve_rank(g, beta):
    """Rank for a homogeneous monomial curve: vol(A), plus one at semigroup holes."""
    if g.d != 2 or not g.homogeneous:
        raise PreconditionViolation("needs a homogeneous matrix with two rows")
    require(g, full=True, pointed=True)
    beta = _beta(g, beta)
    vol = simplicial_volume(g)
    if any(x.denominator != 1 for x in beta):
        return vol
    b = tuple(int(x) for x in beta)
    hole = g.in_cone(b) and b not in g.semigroup
    return vol + 1 if hole else vol


# --------------------------------------------------------------------------
# Gamma-series


@dataclass(frozen=True)
class GammaSeries:
    exponent: tuple
    terms: tuple  # ((u, coefficient), ...) sorted by weight then u
    truncation_weight: Fraction
    weight_used: tuple
    cell: tuple
    base: tuple

    def coefficient(self, u):
        return dict(self.terms).get(tuple(u), Fraction(0))

    def weight(self, u):
        return dot(self.weight_used, u)


def exponent_for(g, sigma, b, beta):
    """gamma with gamma_j = b_j off sigma and A gamma = beta.

    Works for any beta entries supporting + - * with Fractions, so it can
    be evaluated on sympy symbols.
    """
    cols = g.columns
    idx = [j - 1 for j in sigma]
    a_sigma = [[cols[j][i] for j in idx] for i in range(g.d)]
    inv = inverse(a_sigma)
    rhs = [beta[i] - sum(cols[j][i] * b[j] for j in range(g.n)) for i in range(g.d)]
    sol = [sum(inv[r][c] * rhs[c] for c in range(g.d)) for r in range(g.d)]
    gamma = [b[j] for j in range(g.n)]
    for r, j in enumerate(idx):
        gamma[j] = sol[r]
    return tuple(gamma)


def _gamma_ratio(gamma, u):
    """Gamma(gamma+1) / Gamma(gamma+u+1) for one coordinate (finite by assumption)."""
    out = Fraction(1)
    if u >= 0:
        for i in range(1, u + 1):
            out /= gamma + i
    else:
        for i in range(0, -u):
            out *= gamma - i
    return out


def _series_cells(g, L):
    init = initial_ideal(g, L)
    if not isinstance(init, MonomialIdeal):
        raise NonGenericWeight("weight is not generic for the toric ideal")
    return [sp for sp in standard_pairs(init) if len(sp.face) == g.d]


def gamma_series(g, beta, L, truncation):
    """Truncated Gamma-series solutions, one per top-dimensional standard pair.

    For a standard pair (b, sigma) of the initial ideal the exponent has
    gamma_j = b_j off sigma; the pairs with a fixed sigma run over the
    cosets of Z^d modulo the lattice of sigma, so there are vol(A) series.
    Coefficients relative to the base term are
    prod_j Gamma(gamma_j + 1) / Gamma(gamma_j + u_j + 1); terms with a pole
    in the denominator vanish and are not stored.
    """
    require(g, full=True, pointed=True, homogeneous=True)
    beta = _beta(g, beta)
    L = _check_weight(g, L)
    truncation = Fraction(truncation)
    regular_triangulation(g, L)
    pairs = _series_cells(g, L)
    exps = []
    for sp in pairs:
        gamma = exponent_for(g, sp.face, sp.base, beta)
        for j in sp.face:
            if gamma[j - 1].denominator == 1:
                raise ResonantParameter(f"integral exponent on the cell {list(sp.face)}",
                                        certificate={"exponent": [str(x) for x in gamma]})
        exps.append((sp, gamma))
    for i in range(len(exps)):
        for k in range(i + 1, len(exps)):
            diff = [x - y for x, y in zip(exps[i][1], exps[k][1])]
            if all(x.denominator == 1 for x in diff):
                raise ResonantParameter("two exponents differ by an integer vector",
                                        certificate={"difference": [str(x) for x in diff]})
    return [_expand(g, sp, gamma, L, truncation) for sp, gamma in exps]


def _expand(g, sp, gamma, L, truncation):
    cols = g.columns
    n = g.n
    sigma = [j - 1 for j in sp.face]
    rest = [j for j in range(n) if j not in sigma]
    a_sigma = [[cols[j][i] for j in sigma] for i in range(g.d)]
    inv = inverse(a_sigma)
    w = [sum(L[sigma[r]] * inv[r][i] for r in range(g.d)) for i in range(g.d)]
    cost = {j: L[j] - dot(w, cols[j]) for j in rest}
    assert all(c > 0 for c in cost.values())
    floor_weight = -sum(cost[j] * sp.base[j] for j in rest)
    ranges = []
    for j in rest:
        hi = math.floor((truncation - floor_weight) / cost[j]) - sp.base[j]
        ranges.append(range(-sp.base[j], hi + 1))
    terms = []
    for vals in product(*ranges):
        u = [0] * n
        for j, x in zip(rest, vals):
            u[j] = x
        weight = sum(cost[j] * u[j] for j in rest)
        if weight > truncation:
            continue
        rhs = [-sum(cols[j][i] * u[j] for j in rest) for i in range(g.d)]
        us = [sum(inv[r][c] * rhs[c] for c in range(g.d)) for r in range(g.d)]
        if any(x.denominator != 1 for x in us):
            continue
        for r, j in enumerate(sigma):
            u[j] = int(us[r])
        coeff = Fraction(1)
        for j in range(n):
            coeff *= _gamma_ratio(gamma[j], u[j])
        if coeff:
            terms.append((tuple(u), coeff))
    terms.sort(key=lambda t: (dot(L, t[0]), t[0]))
    return GammaSeries(tuple(gamma), tuple(terms), truncation, tuple(L), sp.face, sp.base)


def _falling(y, p):
    out = Fraction(1)
    for i in range(p):
        out *= y - i
    return out


def apply_system(sys, s):
    """Residual of every operator of the system on a truncated series.

    Euler operators act diagonally: theta_j multiplies x^(gamma+u) by
    gamma_j + u_j.  A box d^p - d^q sends the terms u = m + p and m + q to
    x^(gamma+m); its residual there is reported with the larger of their
    weights, which must exceed the truncation for a correct series.
    Returns a sorted list of (operator label, m, value, weight).
    """
    g = sys.matrix
    coeffs = dict(s.terms)
    gamma = s.exponent
    out = []
    for i, (row, b) in enumerate(zip(sys.euler_operators, sys.beta)):
        for u, c in s.terms:
            val = c * (sum(a * (x + y) for a, x, y in zip(row, gamma, u)) - b)
            if val:
                out.append((f"E{i + 1}", u, val, s.weight(u)))
    for box in sys.boxes:
        p, q = box.plus, box.minus
        ms = set()
        for u, _ in s.terms:
            ms.add(tuple(x - y for x, y in zip(u, p)))
            ms.add(tuple(x - y for x, y in zip(u, q)))
        for m in sorted(ms):
            up = tuple(x + y for x, y in zip(m, p))
            uq = tuple(x + y for x, y in zip(m, q))
            val = Fraction(0)
            if up in coeffs:
                val += coeffs[up] * math.prod(_falling(gamma[j] + up[j], p[j]) for j in range(g.n))
            if uq in coeffs:
                val -= coeffs[uq] * math.prod(_falling(gamma[j] + uq[j], q[j]) for j in range(g.n))
            if val:
                out.append((str(box), m, val, max(s.weight(up), s.weight(uq))))
    return out


# --------------------------------------------------------------------------
# slopes


def slopes_along_hyperplane(g, j, window=(Fraction(1, 2), Fraction(16))):
    """Jump values t > 1 of the umbrella along the weights (1, ..., t, ..., 1).

    ``j`` is a 1-based column index; t sits in position j.  Only t > 1
    is a slope in this convention, so the window is cut at 1.
    """
    require(g, full=True, pointed=True)
    if not 1 <= j <= g.n:
        raise DimensionMismatch(f"column index {j} out of range")
    base = [1] * g.n
    base[j - 1] = 0
    direction = [0] * g.n
    direction[j - 1] = 1
    lo = max(Fraction(window[0]), Fraction(1))
    hi = Fraction(window[1])
    if lo >= hi:
        return []
    return umbrella_jumps(g, base, direction, (lo, hi))


# --------------------------------------------------------------------------
# interlacing and algebraicity


def _frac(x):
    x = Fraction(x)
    return x - math.floor(x)


def interlacing_test(alpha, beta_params):
    """Whether exp(2 pi i alpha) and exp(2 pi i beta) alternate on the circle.

    A beta list one shorter than alpha gets the entry 1 appended.  Only
    fractional parts matter.  Coinciding values with the same label count
    as adjacent, so they break alternation.
    """
    alpha = [_frac(a) for a in alpha]
    beta = [_frac(b) for b in beta_params]
    if len(beta) == len(alpha) - 1:
        beta.append(Fraction(0))
    if len(alpha) != len(beta):
        raise PreconditionViolation("alpha and beta must have equal length")
    for a in alpha:
        for b in beta:
            if a == b:
                raise ListsIntersect("alpha_i - beta_j is an integer",
                                     certificate={"alpha": str(a), "beta": str(b)})
    labelled = sorted([(a, 0) for a in alpha] + [(b, 1) for b in beta])
    k = len(labelled)
    return all(labelled[i][1] != labelled[(i + 1) % k][1] for i in range(k))


@dataclass(frozen=True)
class SigmaResult:
    sigma: int
    complete: bool
    generators: tuple


def _check_sigma_pre(g):
    require(g, full=True, pointed=True)
    if not g.homogeneous:
        raise PreconditionViolation("needs a homogeneous matrix")
    sat = g.saturated if g.saturated is not Tri.UNKNOWN else is_saturated(g).status
    if sat is not Tri.YES:
        raise PreconditionViolation("needs a saturated matrix")


def _shifted_cone_points(g, beta, bound):
    cols = g.columns
    rays = []
    for rc in cone_rays(g):
        a = cols[rc[0] - 1]
        rays.append([Fraction(x) * bound / g.degree(a) for x in a])
    lows = [min([0] + [r[i] for r in rays]) for i in range(g.d)]
    highs = [max([0] + [r[i] for r in rays]) for i in range(g.d)]
    ranges = [range(math.floor(lo - b), math.ceil(hi - b) + 1)
              for lo, hi, b in zip(lows, highs, beta)]
    out = []
    for z in product(*ranges):
        x = tuple(b + k for b, k in zip(beta, z))
        if g.in_cone(x) and g.degree(x) <= bound:
            out.append(x)
    return out


def beukers_sigma(g, beta, bound=None):
    """Number of NA-module generators of (beta + ZA) intersected with the cone.

    A point c is a generator iff c - a_j leaves the cone for every j.
    Generators satisfy c = sum lambda_j a_j over a simplicial cell with
    all lambda_j < 1, so their degree is below the sum of the column
    degrees; the run is complete when the bound reaches that.
    """
    _check_sigma_pre(g)
    beta = _beta(g, beta)
    need = sum(g.degree(a) for a in g.columns)
    if bound is None:
        bound = need
    cols = g.columns
    gens = []
    for c in _shifted_cone_points(g, beta, bound):
        if all(not g.in_cone(tuple(x - y for x, y in zip(c, a))) for a in cols):
            gens.append(c)
    gens.sort()
    return SigmaResult(len(gens), bound >= need, tuple(gens))


def algebraicity_check(g, beta):
    """sigma(k beta) = vol(A) for every 1 <= k <= D coprime to D."""
    _check_sigma_pre(g)
    beta = _beta(g, beta)
    D = math.lcm(*(x.denominator for x in beta))
    vol = simplicial_volume(g)
    for k in range(1, D + 1):
        if math.gcd(k, D) != 1:
            continue
        if beukers_sigma(g, [k * x for x in beta]).sigma != vol:
            return False
    return True
