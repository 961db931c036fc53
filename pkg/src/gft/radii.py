"""Radius formulas for P_f = f/f' over the starlike and G(alpha) families.

Closed-form radii are returned together with the polynomial they
annihilate; radii defined only as polynomial roots are found by a sign
scan followed by bisection.  Polynomials are stored in ascending powers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidBracket, MultipleRoots, NoRootInInterval, ParamOutOfRange

ROOT_TOL = 1e-12
SCAN_STEP = 1e-3


def roth_constant() -> float:
    """(2 pi^2 - 12) / 3, the sharp bound on sum (n/(n+1))^2 |c_n|^2 over S."""
    return (2.0 * math.pi**2 - 12.0) / 3.0


@dataclass(frozen=True)
class ClassParam:
    beta: Optional[float] = None
    alpha: Optional[float] = None
    a2_abs: Optional[float] = None

    def __post_init__(self):
        if self.beta is not None:
            check_beta(self.beta)
        if self.alpha is not None:
            check_alpha(self.alpha)
        if self.a2_abs is not None:
            check_b(self.a2_abs)

    @property
    def roth_a(self) -> float:
        return roth_constant()


@dataclass(frozen=True)
class RadiusResult:
    value: float
    formula_id: str
    bracket: tuple[float, float]
    tol: float
    iterations: int = 0
    polynomial: Optional[tuple[float, ...]] = None
    sign_changes: Optional[int] = None

    @property
    def residual(self) -> Optional[float]:
        if self.polynomial is None:
            return None
        return float(polyval(self.polynomial, self.value))

    def as_dict(self) -> dict:
        d = {
            "formula_id": self.formula_id,
            "value": self.value,
            "bracket": list(self.bracket),
            "tol": self.tol,
            "iterations": self.iterations,
        }
        if self.polynomial is not None:
            d["polynomial"] = list(self.polynomial)
            d["residual"] = self.residual
        if self.sign_changes is not None:
            d["sign_changes"] = self.sign_changes
        return d


def check_beta(beta: float) -> None:
    if not 0.0 <= beta < 1.0:
        raise ParamOutOfRange(f"beta out of [0,1): {beta}")


def check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ParamOutOfRange(f"alpha out of (0,1]: {alpha}")


def check_b(b: float) -> None:
    if not 0.0 <= b <= 2.0:
        raise ParamOutOfRange(f"a2 out of [0,2]: {b}")


def polyval(poly: Sequence[float], x):
    acc = 0.0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def solve_root(poly: Sequence[float], lo: float, hi: float, tol: float = ROOT_TOL,
               formula_id: str = "root") -> RadiusResult:
    """Bisection for a root of ``poly`` in [lo, hi]; the endpoint values must differ in sign."""
    flo, fhi = polyval(poly, lo), polyval(poly, hi)
    if flo == 0.0:
        return RadiusResult(lo, formula_id, (lo, lo), tol, 0, tuple(poly))
    if fhi == 0.0:
        return RadiusResult(hi, formula_id, (hi, hi), tol, 0, tuple(poly))
    if flo * fhi > 0:
        raise InvalidBracket(f"no sign change on [{lo}, {hi}]: p(lo)={flo:.3g}, p(hi)={fhi:.3g}")
    a, b, fa = lo, hi, flo
    it = 0
    while b - a >= tol:
        m = 0.5 * (a + b)
        if not a < m < b:
            break
        fm = polyval(poly, m)
        it += 1
        if fm == 0.0:
            a = b = m
            break
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return RadiusResult(0.5 * (a + b), formula_id, (a, b), tol, it, tuple(poly))


def sign_scan(poly: Sequence[float], lo: float, hi: float, step: float = SCAN_STEP) -> list[tuple[float, float]]:
    """Brackets [x_k, x_{k+1}] on a uniform grid where ``poly`` changes sign."""
    n = int(round((hi - lo) / step))
    xs = lo + step * np.arange(n + 1)
    xs[-1] = hi
    vals = np.array([polyval(poly, x) for x in xs])
    out = []
    for k in range(n):
        if vals[k] == 0.0:
            out.append((xs[k], xs[k]))
        elif vals[k] * vals[k + 1] < 0:
            out.append((xs[k], xs[k + 1]))
    return out


def _smallest_root(poly, lo, hi, formula_id, unique_below=None) -> RadiusResult:
    brackets = sign_scan(poly, lo, hi)
    if not brackets:
        raise NoRootInInterval(f"{formula_id}: no sign change in ({lo}, {hi}]")
    if unique_below is not None and sum(1 for a, _ in brackets if a < unique_below) > 1:
        raise MultipleRoots(f"{formula_id}: more than one root below {unique_below}")
    a, b = brackets[0]
    res = solve_root(poly, a, b, formula_id=formula_id)
    return RadiusResult(res.value, formula_id, res.bracket, res.tol, res.iterations,
                        tuple(poly), len(brackets))


# defining polynomials ------------------------------------------------------

def phi2() -> tuple[float, ...]:
    return (-1.0, 1.0, 1.0, 1.0)


def phi3(alpha: float) -> tuple[float, ...]:
    return (1.0 + alpha, -2.0 * (1.0 + alpha), 1.0)


def phi4(alpha: float) -> tuple[float, ...]:
    return (1.0 + alpha, -alpha, -(2.0 + alpha), -alpha, 1.0)


def r5_quartic(alpha: float) -> tuple[float, ...]:
    return (-(1.0 + alpha), 0.0, 2.0 * alpha, 0.0, 2.0)


def phi5(b: float, a: Optional[float] = None) -> tuple[float, ...]:
    a = roth_constant() if a is None else a
    q = b * b / 4.0
    c = [0.0] * 11
    c[10] = a + 1.0 - q
    c[8] = -(5.0 * a + 5.0 - 5.0 * q)
    c[6] = 19.0 * a + 10.0 - 19.0 * q
    c[4] = 9.0 * a - 10.0 - 9.0 * q
    c[2] = 5.0
    c[0] = -1.0
    return tuple(c)


def r1_quadratic(beta: float) -> tuple[float, ...]:
    # 2(1-beta) r^2 = (1-r)^2
    return (1.0, -2.0, 1.0 - 2.0 * (1.0 - beta))


# radii --------------------------------------------------------------------

def r1(beta: float) -> RadiusResult:
    check_beta(beta)
    v = 1.0 / (1.0 + math.sqrt(2.0 * (1.0 - beta)))
    return RadiusResult(v, "r1", (v, v), ROOT_TOL, 0, r1_quadratic(beta))


def r2() -> RadiusResult:
    return solve_root(phi2(), 0.0, 1.0, formula_id="r2")


def r3(alpha: float) -> RadiusResult:
    check_alpha(alpha)
    v = 1.0 + alpha - math.sqrt(alpha * (1.0 + alpha))
    return RadiusResult(v, "r3", (v, v), ROOT_TOL, 0, phi3(alpha))


def r4(alpha: float) -> RadiusResult:
    check_alpha(alpha)
    return _smallest_root(phi4(alpha), 0.0, 1.0, "r4")


def r5(alpha: float) -> RadiusResult:
    check_alpha(alpha)
    v = math.sqrt((-alpha + math.sqrt((1.0 + alpha) ** 2 + 1.0)) / 2.0)
    return RadiusResult(v, "r5", (v, v), ROOT_TOL, 0, r5_quartic(alpha))


def r6(b: float) -> RadiusResult:
    check_b(b)
    return _smallest_root(phi5(b), 0.0, 1.0 - SCAN_STEP, "r6", unique_below=0.5)


def r_inv_sqrt3() -> RadiusResult:
    v = 1.0 / math.sqrt(3.0)
    return RadiusResult(v, "r_inv_sqrt3", (v, v), ROOT_TOL, 0, (1.0, 0.0, -3.0))


TABLE1_B = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0)


def table1() -> list[tuple[float, float]]:
    return [(b, r6(b).value) for b in TABLE1_B]


def table1_csv() -> str:
    lines = ["a2_abs,r6"] + [f"{b:g},{r:.6f}" for b, r in table1()]
    return "\n".join(lines) + "\n"
