"""Coefficient criteria: area sum, the sum (n-1)|b_n| test for U, Roth's bound.

``b_n`` always denotes the coefficients of ``z/f(z) = 1 + sum b_n z**n``.
Sums are accumulated in ascending ``n``.  A "satisfied" verdict from a
partial sum with no tail estimate is not rigorous; ``rigorous`` says so.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParamOutOfRange
from .operators import AnalyticFunction, log_coeffs, shift_down
from .radii import check_b, roth_constant
from .series import reciprocal

SLACK = 1e-12

SATISFIED, VIOLATED, INCONCLUSIVE = "satisfied", "violated", "inconclusive"


@dataclass(frozen=True)
class CoeffCriterionReport:
    criterion: str
    sum_value: float
    threshold: float
    verdict: str
    terms_used: int
    tail_estimate: float = 0.0
    rigorous: bool = False
    necessary: bool = False

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "sum": self.sum_value,
            "threshold": self.threshold,
            "verdict": self.verdict,
            "terms": self.terms_used,
            "tail": self.tail_estimate,
        }


def _verdict(total: float, tail: float, threshold: float) -> str:
    if total > threshold + SLACK:
        return VIOLATED
    if total + tail <= threshold + SLACK:
        return SATISFIED
    return INCONCLUSIVE


def inverse_coeffs(f: AnalyticFunction) -> np.ndarray:
    """Coefficients of z/f(z); index n holds b_n (index 0 holds 1)."""
    return reciprocal(shift_down(f.series)).coeffs


def _terms(f: AnalyticFunction, n_terms: int) -> np.ndarray:
    b = inverse_coeffs(f)
    if n_terms > b.size - 1:
        raise ValueError(f"n_terms={n_terms} exceeds available order {b.size - 1}")
    return b[: n_terms + 1]


def _ordered_sum(x: np.ndarray) -> float:
    total = 0.0
    for v in x:
        total += float(v)
    return total


def area_sum(f: AnalyticFunction, n_terms: int) -> CoeffCriterionReport:
    b = _terms(f, n_terms)
    n = np.arange(2, n_terms + 1)
    s = _ordered_sum((n - 1) * np.abs(b[2:]) ** 2)
    v = _verdict(s, 0.0, 1.0)
    return CoeffCriterionReport("area", s, 1.0, v, n_terms, rigorous=v == VIOLATED)


def u_sufficient_sum(F: AnalyticFunction, n_terms: int) -> CoeffCriterionReport:
    b = _terms(F, n_terms)
    n = np.arange(2, n_terms + 1)
    s = _ordered_sum((n - 1) * np.abs(b[2:]))
    bn = b[1:]
    nonneg = bool(np.all(np.abs(bn.imag) <= SLACK) and np.all(bn.real >= -SLACK))
    v = _verdict(s, 0.0, 1.0)
    return CoeffCriterionReport("u_sufficient", s, 1.0, v, n_terms, rigorous=v == VIOLATED, necessary=nonneg)


def scaled_u_sum(F: AnalyticFunction, r: float, n_terms: int) -> CoeffCriterionReport:
    """The U-criterion for G(z) = F(rz)/r, whose inverse coefficients are b_n r**n."""
    if not 0.0 < r < 1.0:
        raise ParamOutOfRange(f"r out of (0,1): {r}")
    b = _terms(F, n_terms)
    n = np.arange(2, n_terms + 1)
    s = _ordered_sum((n - 1) * np.abs(b[2:]) * r**n)
    bmax = float(np.max(np.abs(b[1:]))) if n_terms >= 1 else 0.0
    N = n_terms
    # sum_{n>N} (n-1) r^n, assuming |b_n| stays below the largest computed one
    tail = bmax * r ** (N + 1) * (N / (1.0 - r) + r / (1.0 - r) ** 2)
    v = _verdict(s, tail, 1.0)
    return CoeffCriterionReport("scaled_u", s, 1.0, v, n_terms, tail, rigorous=v != INCONCLUSIVE)


def roth_sum(f: AnalyticFunction, n_terms: int) -> CoeffCriterionReport:
    c = log_coeffs(f).coeffs
    if n_terms > c.size - 1:
        raise ValueError(f"n_terms={n_terms} exceeds available order {c.size - 1}")
    n = np.arange(1, n_terms + 1)
    s = _ordered_sum((n / (n + 1)) ** 2 * np.abs(c[1 : n_terms + 1]) ** 2)
    a = roth_constant()
    v = _verdict(s, 0.0, a)
    return CoeffCriterionReport("roth", s, a, v, n_terms, rigorous=v == VIOLATED)


def cs_weight(r: float) -> float:
    """Closed form of sum_{n>=2} (n^2 - 1)^2 r^(2n)."""
    x = r * r
    return x * x * (x**3 - 5 * x * x + 19 * x + 9) / (1.0 - x) ** 5


def cs_bound(r: float, b: float) -> float:
    """Cauchy-Schwarz bound on |U_F| at |z| = r for f in S with |a_2| = b."""
    if not 0.0 <= r < 1.0:
        raise ParamOutOfRange(f"r out of [0,1): {r}")
    check_b(b)
    return math.sqrt(roth_constant() - b * b / 4.0) * math.sqrt(cs_weight(r))
