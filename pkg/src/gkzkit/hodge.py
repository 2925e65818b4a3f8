"""Hodge numbers of the univariate hypergeometric modules H(lambda; mu).

Both formulas assign one level to each index s = 1..m' and count how
many indices land on each level.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotConfluentCase, NotRegularCase, PreconditionViolation
from .fuchs import ThetaOperator, linear, product_of


@dataclass(frozen=True)
class HypergeomParams:
    lambda_: tuple
    mu: tuple

    @classmethod
    def of(cls, lambda_, mu):
        lam = tuple(sorted(Fraction(x) for x in lambda_))
        mu = tuple(sorted(Fraction(x) for x in mu))
        if not lam:
            raise PreconditionViolation("lambda must be nonempty")
        for x in lam + mu:
            if not 0 <= x < 1:
                raise PreconditionViolation(f"parameter {x} is not in [0, 1)")
        for x in lam:
            if x in mu:
                raise PreconditionViolation(f"lambda and mu share the value {x}")
        return cls(lam, mu)

    @property
    def m_prime(self):
        return len(self.lambda_)

    @property
    def m(self):
        return len(self.mu)


@dataclass(frozen=True)
class HodgeNumbers:
    grading: tuple  # sorted ((level, dimension), ...)

    @property
    def total(self):
        return sum(d for _, d in self.grading)

    def as_dict(self):
        return dict(self.grading)


def _numbers(levels):
    return HodgeNumbers(tuple(sorted(Counter(levels).items())))


def fedorov_numbers(p):
    """dim gr_k = #{s : k = #{i : lambda_i < mu_s} - s}, regular case m = m'."""
    if p.m != p.m_prime:
        raise NotRegularCase(f"m = {p.m} differs from m' = {p.m_prime}")
    levels = []
    for s, mu_s in enumerate(p.mu, start=1):
        levels.append(sum(1 for x in p.lambda_ if x < mu_s) - s)
    return _numbers(levels)


def sabbah_yu_numbers(p, reading="lambda", allow_equal=False):
    """Irregular Hodge numbers, confluent case m' > m.

    Level of s is #{i : mu_i < lambda_s} + (m' - m) * alpha_s - s where
    alpha_s is read as lambda_s (``reading="lambda"``) or as zero
    (``reading="zero"``).  ``allow_equal`` permits m' = m for comparisons.
    """
    if p.m_prime < p.m or (p.m_prime == p.m and not allow_equal):
        raise NotConfluentCase(f"needs m' > m, got m' = {p.m_prime}, m = {p.m}")
    if reading not in ("lambda", "zero"):
        raise ValueError(f"unknown reading {reading!r}")
    k = p.m_prime - p.m
    levels = []
    for s, lam_s in enumerate(p.lambda_, start=1):
        alpha = lam_s if reading == "lambda" else Fraction(0)
        levels.append(sum(1 for x in p.mu if x < lam_s) + k * alpha - s)
    return _numbers(Fraction(x) for x in levels)


def operator_from_params(p):
    """prod(theta - lambda_i) - z * prod(theta - mu_j) as a ThetaOperator."""
    lhs = product_of([linear(1, -x) for x in p.lambda_])
    rhs = product_of([linear(1, -x) for x in p.mu])
    return ThetaOperator.of({0: lhs, 1: [-x for x in rhs]})


def singular_points(p):
    return ("0", "1", "infinity") if p.m == p.m_prime else ("0", "infinity")
