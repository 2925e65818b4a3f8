"""A small Buchberger engine over Q.

Polynomials are dicts mapping exponent tuples to nonzero Fractions.
Term orders are a weight vector refined by graded reverse lexicographic
order, optionally with one variable moved to the end of the revlex
comparison (the variable to be saturated).
"""

from fractions import Fraction
from itertools import combinations

from .errors import NonGlobalOrder


class TermOrder:
    """Weight order refined by grevlex.

    ``weights`` is a sequence of weight vectors compared in turn; ``last``
    names a variable (0-based) that grevlex treats as the smallest.
    """

    def __init__(self, n, weights=(), last=None):
        self.n = n
        self.weights = tuple(tuple(Fraction(x) for x in w) for w in weights)
        perm = list(range(n))
        if last is not None:
            perm.remove(last)
            perm.append(last)
        self.perm = tuple(perm)

    def key(self, e):
        wk = tuple(sum(w[i] * e[i] for i in range(self.n)) for w in self.weights)
        return wk + (sum(e),) + tuple(-e[i] for i in reversed(self.perm))

    def check_global(self):
        zero = (0,) * self.n
        for j in range(self.n):
            unit = tuple(int(i == j) for i in range(self.n))
            if self.key(unit) <= self.key(zero):
                raise NonGlobalOrder(f"variable {j + 1} is not greater than 1",
                                     certificate={"variable": j + 1})

    def __repr__(self):
        return f"TermOrder(weights={self.weights}, perm={self.perm})"


def poly(terms):
    """Build a polynomial from (exponent, coefficient) pairs, dropping zeros."""
    out = {}
    for e, c in terms:
        e = tuple(e)
        out[e] = out.get(e, Fraction(0)) + Fraction(c)
        if out[e] == 0:
            del out[e]
    return out


def leading(f, order):
    e = max(f, key=order.key)
    return e, f[e]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(f, g, c, shift):
    # f - c * x^shift * g
    out = dict(f)
    for e, v in g.items():
        e2 = tuple(x + y for x, y in zip(e, shift))
        w = out.get(e2, Fraction(0)) - c * v
        if w:
            out[e2] = w
        else:
            out.pop(e2, None)
    return out


def reduce(f, basis, order):
    """Full normal form of f modulo basis (list of polynomials)."""
    f = dict(f)
    rem = {}
    leads = [leading(g, order) for g in basis]
    while f:
        e, c = leading(f, order)
        for g, (ge, gc) in zip(basis, leads):
            if _divides(ge, e):
                shift = tuple(x - y for x, y in zip(e, ge))
                f = _sub_scaled(f, g, c / gc, shift)
                break
        else:
            rem[e] = c
            del f[e]
    return rem


def _spoly(f, g, order):
    fe, fc = leading(f, order)
    ge, gc = leading(g, order)
    lcm = tuple(max(x, y) for x, y in zip(fe, ge))
    a = _sub_scaled({}, f, Fraction(-1) / fc, tuple(x - y for x, y in zip(lcm, fe)))
    return _sub_scaled(a, g, Fraction(1) / gc, tuple(x - y for x, y in zip(lcm, ge)))


def buchberger(gens, order):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Returns monic polynomials sorted by decreasing leading monomial.
    Binomial input gives binomial output; that is asserted.
    """
    order.check_global()
    gens = [dict(f) for f in gens if f]
    binomial_input = all(len(f) <= 2 for f in gens)
    basis = []
    for f in gens:
        r = reduce(f, basis, order) if basis else f
        if r:
            basis.append(r)
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        fe = leading(basis[i], order)[0]
        ge = leading(basis[j], order)[0]
        if all(x == 0 or y == 0 for x, y in zip(fe, ge)):
            continue
        s = reduce(_spoly(basis[i], basis[j], order), basis, order)
        if s:
            basis.append(s)
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))
    # minimalize
    leads = [leading(f, order)[0] for f in basis]
    keep = []
    for i, e in enumerate(leads):
        dominated = False
        for j, e2 in enumerate(leads):
            if j != i and _divides(e2, e) and (e2 != e or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(basis[i])
    # interreduce and make monic
    out = []
    for i, f in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        e, c = leading(f, order)
        tail = {k: v for k, v in f.items() if k != e}
        r = reduce(tail, others, order) if others else tail
        r[e] = c
        c = r[e]
        out.append({k: v / c for k, v in r.items()})
    out.sort(key=lambda f: order.key(leading(f, order)[0]), reverse=True)
    if binomial_input:
        assert all(len(f) <= 2 for f in out)
    return out


def initial_form(f, weight):
    """Terms of f of maximal weight."""
    w = [Fraction(x) for x in weight]
    vals = {e: sum(a * b for a, b in zip(w, e)) for e in f}
    top = max(vals.values())
    return {e: c for e, c in f.items() if vals[e] == top}
