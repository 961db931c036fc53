"""The operators P_f = f/f', U_f, T_f, logarithmic coefficients and the w-plane pair Q/S.

Every operator has a series form.  Where an :class:`AnalyticFunction`
carries closed-form evaluators, pointwise quantities use them; the series
path is a fallback restricted to the trust radius.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .errors import BeyondTrustRadius, NearSingularity, NonzeroInnerConstant, NotNormalized
from .series import (
    STRUCTURAL_TOL,
    ZERO_TOL,
    PowerSeries,
    derivative,
    evaluate,
    log_unit,
    mul,
    reciprocal,
)

Evaluator = Callable[[np.ndarray], np.ndarray]

TRUST_FRACTION = 0.8
EXCLUSION_EPS = 1e-3


@dataclass(frozen=True)
class AnalyticFunction:
    """A normalized analytic function ``f(0) = 0, f'(0) = 1``.

    ``evaluator``, ``deriv_evaluator`` and ``deriv2_evaluator`` are optional
    vectorized closed forms for f, f' and f''.  ``singularities`` lists
    poles/branch points to keep away from; ``critical_points`` lists known
    zeros of f' (they become poles of f/f').
    """

    series: PowerSeries
    evaluator: Optional[Evaluator] = None
    deriv_evaluator: Optional[Evaluator] = None
    deriv2_evaluator: Optional[Evaluator] = None
    singularities: tuple[complex, ...] = ()
    critical_points: tuple[complex, ...] = ()
    label: str = ""

    def __post_init__(self):
        c = self.series.coeffs
        if self.series.order < 1:
            raise NotNormalized(f"{self.label or 'function'}: series order must be at least 1")
        if abs(c[0]) >= STRUCTURAL_TOL or abs(c[1] - 1) >= STRUCTURAL_TOL:
            raise NotNormalized(
                f"{self.label or 'function'}: expected f(0)=0, f'(0)=1, got {c[0]!r}, {c[1]!r}"
            )
        object.__setattr__(self, "singularities", tuple(complex(s) for s in self.singularities))
        object.__setattr__(self, "critical_points", tuple(complex(s) for s in self.critical_points))

    @property
    def a2(self) -> complex:
        return complex(self.series.coeffs[2]) if self.series.order >= 2 else 0j

    @property
    def has_closed_form(self) -> bool:
        return self.evaluator is not None and self.deriv_evaluator is not None

    def singularity_distance(self) -> float:
        """Distance from 0 to the nearest recorded singularity, capped at 1."""
        return min([1.0] + [abs(s) for s in self.singularities])

    def trust_radius(self) -> float:
        return TRUST_FRACTION * self.singularity_distance()

    def _series_ok(self, z: np.ndarray) -> None:
        if z.size and np.max(np.abs(z)) > self.trust_radius() + 1e-15:
            raise BeyondTrustRadius(
                f"{self.label or 'function'}: series evaluation beyond |z| = {self.trust_radius():.3g}"
            )

    def value(self, z):
        z = np.asarray(z, np.complex128)
        if self.evaluator is not None:
            return self.evaluator(z)
        self._series_ok(z)
        return evaluate(self.series, z)

    def deriv(self, z):
        z = np.asarray(z, np.complex128)
        if self.deriv_evaluator is not None:
            return self.deriv_evaluator(z)
        self._series_ok(z)
        return evaluate(derivative(self.series), z)

    def deriv2(self, z):
        z = np.asarray(z, np.complex128)
        if self.deriv2_evaluator is not None:
            return self.deriv2_evaluator(z)
        if self.deriv_evaluator is not None:
            # central difference on the closed-form f'
            h = 1e-5
            return (self.deriv_evaluator(z + h) - self.deriv_evaluator(z - h)) / (2 * h)
        self._series_ok(z)
        return evaluate(derivative(derivative(self.series)), z)

    def check_clear(self, z, eps: float = EXCLUSION_EPS) -> None:
        """Raise NearSingularity if any point of ``z`` is within ``eps`` of a singularity."""
        if not self.singularities:
            return
        z = np.atleast_1d(np.asarray(z, np.complex128))
        s = np.asarray(self.singularities)
        d = np.abs(z[:, None] - s[None, :])
        if d.size and d.min() < eps:
            k = int(np.argmin(d.min(axis=1)))
            raise NearSingularity(f"{self.label or 'function'}: z={z[k]:.6g} is within {eps} of a singularity")


def identity_function(order: int = 64) -> AnalyticFunction:
    return AnalyticFunction(
        PowerSeries.z(order),
        evaluator=lambda z: np.asarray(z, np.complex128),
        deriv_evaluator=lambda z: np.ones_like(np.asarray(z, np.complex128)),
        deriv2_evaluator=lambda z: np.zeros_like(np.asarray(z, np.complex128)),
        label="identity",
    )


def shift_down(a: PowerSeries) -> PowerSeries:
    """Series of a(z)/z for a(0) = 0."""
    if abs(a.coeffs[0]) >= ZERO_TOL:
        raise NonzeroInnerConstant("series has a nonzero constant term")
    return PowerSeries(a.coeffs[1:])


def shift_up(a: PowerSeries) -> PowerSeries:
    """Series of z*a(z), keeping the order."""
    c = np.zeros_like(a.coeffs)
    c[1:] = a.coeffs[:-1]
    return PowerSeries(c)


def p_of(f: AnalyticFunction) -> AnalyticFunction:
    """F = f / f' as an AnalyticFunction."""
    s = mul(f.series, reciprocal(derivative(f.series)))
    ev = dev = None
    if f.evaluator is not None and f.deriv_evaluator is not None:
        fe, fd = f.evaluator, f.deriv_evaluator
        ev = lambda z: fe(z) / fd(z)
        if f.deriv2_evaluator is not None:
            f2 = f.deriv2_evaluator
            dev = lambda z: 1.0 - fe(z) * f2(z) / fd(z) ** 2
    return AnalyticFunction(
        s,
        evaluator=ev,
        deriv_evaluator=dev,
        singularities=f.singularities + f.critical_points,
        label=f"P[{f.label}]",
    )


def u_of(F: AnalyticFunction, z, eps: float = EXCLUSION_EPS):
    """U_F(z) = F'(z) (z / F(z))**2 - 1, vectorized over ``z``.

    Closed forms are used when present; otherwise the series of U_F is
    evaluated, which is only allowed inside the trust radius.
    """
    z = np.asarray(z, np.complex128)
    F.check_clear(z, eps)
    if F.has_closed_form:
        Fz = F.value(z)
        dz = F.deriv(z)
        zero = z == 0
        zs = np.where(zero, 1.0, z)
        ratio = np.where(zero, 1.0, zs / np.where(zero, 1.0, Fz))
        near_zero = (~zero) & (np.abs(np.where(zero, 1.0, Fz)) < eps * np.abs(zs))
        if np.any(near_zero):
            raise NearSingularity(f"{F.label or 'function'}: F(z) vanishes near z != 0")
        out = np.where(zero, 0.0, dz * ratio**2 - 1.0)
        return out if out.ndim else complex(out)
    F._series_ok(z)
    return evaluate(u_series(F), z)


def u_series(F: AnalyticFunction) -> PowerSeries:
    """Series of U_F = h - z h' - 1 with h = z/F(z); coefficient n is (1 - n) h_n."""
    h = reciprocal(shift_down(F.series))
    n = np.arange(h.order + 1)
    c = (1 - n) * h.coeffs
    c[0] = 0.0
    return PowerSeries(c)


def log_coeffs(f: AnalyticFunction) -> PowerSeries:
    """Series of log(f(z)/z); coefficient n is c_n(f), coefficient 1 equals a_2."""
    return log_unit(shift_down(f.series))


def u_series_of_p(f: AnalyticFunction) -> PowerSeries:
    """U of P_f as a series in terms of f: -sum n(n-1) c_n(f) z**n."""
    c = log_coeffs(f)
    n = np.arange(c.order + 1)
    return PowerSeries(-n * (n - 1) * c.coeffs)


def t_of(f: AnalyticFunction) -> PowerSeries:
    """Danikas-Ruscheweyh transform: z + sum (n/(n+1)) c_n(f) z**(n+1)."""
    c = log_coeffs(f)
    out = np.zeros(c.order + 2, np.complex128)
    out[1] = 1.0
    n = np.arange(1, c.order + 1)
    out[2:] = n / (n + 1) * c.coeffs[1:]
    return PowerSeries(out)


def wplane_q(g: PowerSeries) -> PowerSeries:
    """Q(g)(w) = w g'(w): coefficient n scaled by n."""
    n = np.arange(g.order + 1)
    if g.is_exact:
        return PowerSeries(np.array([k * c for k, c in zip(range(g.order + 1), g.coeffs)], dtype=object))
    return PowerSeries(n * g.coeffs)


def wplane_s(g: PowerSeries) -> PowerSeries:
    """S(g)(w) = integral_0^w g(u)/u du: coefficient n divided by n."""
    if abs(g.coeffs[0]) >= ZERO_TOL:
        raise NonzeroInnerConstant("S needs g(0) = 0")
    if g.is_exact:
        return PowerSeries(np.array([0] + [c / k for k, c in enumerate(g.coeffs[1:], 1)], dtype=object))
    c = np.zeros_like(g.coeffs)
    c[1:] = g.coeffs[1:] / np.arange(1, g.order + 1)
    return PowerSeries(c)


def starlike_ratio(F: AnalyticFunction, z, eps: float = EXCLUSION_EPS):
    """z F'(z) / F(z), with the removable value 1 at z = 0."""
    z = np.asarray(z, np.complex128)
    F.check_clear(z, eps)
    Fz = F.value(z)
    zero = z == 0
    Fs = np.where(zero, 1.0, Fz)
    if np.any((~zero) & (np.abs(Fs) < eps * np.abs(z))):
        raise NearSingularity(f"{F.label or 'function'}: F(z) vanishes near z != 0")
    out = np.where(zero, 1.0, z * F.deriv(z) / Fs)
    return out if out.ndim else complex(out)


def convexity_expr(f: AnalyticFunction, z, eps: float = EXCLUSION_EPS):
    """1 + z f''(z) / f'(z)."""
    z = np.asarray(z, np.complex128)
    f.check_clear(z, eps)
    if f.critical_points:
        d = np.abs(np.atleast_1d(z)[:, None] - np.asarray(f.critical_points)[None, :])
        if d.min() < eps:
            raise NearSingularity(f"{f.label or 'function'}: f' vanishes near the sample")
    d1 = f.deriv(z)
    if np.any(np.abs(d1) < eps):
        raise NearSingularity(f"{f.label or 'function'}: f' vanishes near the sample")
    return 1.0 + z * f.deriv2(z) / d1


def with_label(f: AnalyticFunction, label: str) -> AnalyticFunction:
    return replace(f, label=label)
