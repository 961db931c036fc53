"""Brute-force radius estimators by sampling disks and circles.

Each oracle tests a predicate ``P(r)`` on the closed disk ``|z| <= r``,
scans ``r`` upward in coarse steps until the first failure, then bisects
between the last pass and the first failure.  No monotonicity in ``r``
is assumed beyond that bracket, so a returned radius is certified only
on the sampled grid.

Circle-only predicates (``u``, ``starlike``, ``g-alpha``) rely on the
extremum of the tested harmonic/subharmonic quantity lying on the
boundary circle.
"""
from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass, replace
from typing import Callable, Optional

import numpy as np
from scipy.spatial import cKDTree

from .errors import GridTooCoarse, NearSingularity, NewtonDiverged
from .operators import AnalyticFunction, convexity_expr, starlike_ratio, u_of
from .series import derivative, evaluate

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
CRIT_FLOOR = 1e-10


@dataclass(frozen=True)
class OracleConfig:
    n_radial: int = 60
    n_angular: int = 720
    refine_tol: float = 1e-4
    boundary_refine: int = 40
    exclusion_eps: float = 1e-3
    coarse_step: float = 0.01

    def __post_init__(self):
        if self.n_angular < 64:
            raise ValueError(f"n_angular must be >= 64, got {self.n_angular}")
        if self.refine_tol < 1e-6:
            raise ValueError(f"refine_tol must be >= 1e-6, got {self.refine_tol}")
        if self.n_radial < 2:
            raise ValueError(f"n_radial must be >= 2, got {self.n_radial}")

    def scaled(self, factor: float) -> "OracleConfig":
        return replace(
            self,
            n_radial=max(2, int(round(self.n_radial * factor))),
            n_angular=max(64, int(round(self.n_angular * factor))),
        )

    @classmethod
    def from_env(cls, **overrides) -> "OracleConfig":
        """Default grid scaled by GFT_ORACLE_SCALE (``quick`` = x0.25, ``full`` = x1)."""
        scale = os.environ.get("GFT_ORACLE_SCALE", "full").strip().lower()
        if scale not in ("quick", "full"):
            raise ValueError(f"GFT_ORACLE_SCALE must be 'quick' or 'full', got {scale!r}")
        base = cls()
        if scale == "quick":
            base = base.scaled(0.25)
        return replace(base, **overrides)


@dataclass(frozen=True)
class OracleReport:
    radius: float
    property_id: str
    witness: Optional[tuple[complex, complex]]
    grid: OracleConfig
    lower_bound: bool = True
    failed_at: Optional[float] = None

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            a, b = self.witness
            w = [a.real, a.imag, b.real, b.imag]
        return {
            "property_id": self.property_id,
            "radius": self.radius,
            "lower_bound": self.lower_bound,
            "witness": w,
            "grid": asdict(self.grid),
        }


Predicate = Callable[[float], tuple[bool, Optional[tuple[complex, complex]]]]


def _cap(F: AnalyticFunction, cfg: OracleConfig, extra=()) -> float:
    cap = 1.0 - cfg.refine_tol
    for s in tuple(F.singularities) + tuple(extra):
        cap = min(cap, abs(s) - 2.0 * cfg.exclusion_eps)
    if not F.has_closed_form:
        cap = min(cap, F.trust_radius())
    return cap


def _search(pred: Predicate, cap: float, cfg: OracleConfig, property_id: str) -> OracleReport:
    """Coarse upward scan to the first failure, then bisection to ``refine_tol``."""
    lo, hi, wit = 0.0, None, None
    k = 1
    while True:
        r = min(k * cfg.coarse_step, cap)
        ok, w = pred(r)
        if not ok:
            hi, wit = r, w
            break
        lo = r
        if r >= cap:
            break
        k += 1
    if hi is None:
        return OracleReport(lo, property_id, None, cfg, True)
    while hi - lo > cfg.refine_tol:
        mid = 0.5 * (lo + hi)
        ok, w = pred(mid)
        if ok:
            lo = mid
        else:
            hi, wit = mid, w
    return OracleReport(lo, property_id, wit, cfg, True, failed_at=hi)


def _circle(r: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    th = 2.0 * np.pi * np.arange(n) / n
    return th, r * np.exp(1j * th)


def _golden_max(g: Callable[[float], float], a: float, b: float, steps: int) -> tuple[float, float]:
    """Golden-section search for a maximum of ``g`` on [a, b]."""
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    gc, gd = g(c), g(d)
    for _ in range(steps):
        if gc >= gd:
            b, d, gd = d, c, gc
            c = b - GOLDEN * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + GOLDEN * (b - a)
            gd = g(d)
    return (c, gc) if gc >= gd else (d, gd)


def _circle_extreme(h: Callable[[np.ndarray], np.ndarray], r: float, cfg: OracleConfig) -> tuple[float, complex]:
    """max over |z| = r of the real quantity h(z), sampled then refined around the best sample."""
    th, z = _circle(r, cfg.n_angular)
    vals = np.asarray(h(z), float)
    k = int(np.argmax(vals))
    best, best_th = float(vals[k]), float(th[k])
    dth = 2.0 * np.pi / cfg.n_angular
    t, v = _golden_max(lambda t: float(h(np.array([r * np.exp(1j * t)]))[0]),
                       best_th - dth, best_th + dth, cfg.boundary_refine)
    if v > best:
        best, best_th = v, t
    return best, complex(r * np.exp(1j * best_th))


# univalence -----------------------------------------------------------------

def _polar_grid(r: float, cfg: OracleConfig) -> np.ndarray:
    rad = r * np.arange(1, cfg.n_radial + 1) / cfg.n_radial
    th = 2.0 * np.pi * np.arange(cfg.n_angular) / cfg.n_angular
    pts = (rad[:, None] * np.exp(1j * th)[None, :]).ravel()
    return np.concatenate([[0j], pts])


def zero_count_on_circle(g: Callable[[np.ndarray], np.ndarray], r: float, n: int,
                         max_points: int = 1 << 20) -> Optional[int]:
    """Winding number of g around 0 along |z| = r, i.e. zeros minus poles inside.

    Samples are refined until consecutive arguments differ by at most pi/4.
    Returns None if g vanishes on the circle or the refinement does not settle.
    """
    th = 2.0 * np.pi * np.arange(n + 1) / n
    vals = g(r * np.exp(1j * th))
    while True:
        if not np.all(np.isfinite(vals)) or np.any(vals == 0):
            return None
        d = np.angle(vals[1:] / vals[:-1])
        bad = np.abs(d) > np.pi / 4
        if not bad.any():
            return int(round(float(np.sum(d)) / (2.0 * np.pi)))
        if th.size > max_points:
            return None
        mids = 0.5 * (th[:-1][bad] + th[1:][bad])
        mvals = g(r * np.exp(1j * mids))
        th = np.concatenate([th, mids])
        vals = np.concatenate([vals, mvals])
        order = np.argsort(th, kind="stable")
        th, vals = th[order], vals[order]


def _univalence_predicate(F: AnalyticFunction, cfg: OracleConfig) -> Predicate:
    def pred(r: float):
        z = _polar_grid(r, cfg)
        dF = np.asarray(F.deriv(z))
        adF = np.abs(dF)
        kmin = int(np.argmin(adF))
        crit_w = (complex(z[kmin]), complex(z[kmin]))
        # F' numerically zero on the closed disk
        if not np.all(np.isfinite(dF)) or adF[kmin] <= CRIT_FLOOR * max(1.0, float(adF.max())):
            return False, crit_w
        count = zero_count_on_circle(lambda w: np.asarray(F.deriv(w)), r, cfg.n_angular)
        if count is None or count != 0:
            return False, crit_w
        Fz = np.asarray(F.value(z))
        h = r / cfg.n_radial
        h_max = max(h, 2.0 * np.pi * r / cfg.n_angular)
        delta = 0.25 * h * adF[kmin]
        scale = max(1.0, float(np.max(np.abs(Fz))))
        if delta <= 1e3 * np.finfo(float).eps * scale:
            raise GridTooCoarse(
                f"distinctness threshold {delta:.3g} is below floating resolution at r={r:.6g}"
            )
        tree = cKDTree(np.column_stack([Fz.real, Fz.imag]))
        pairs = tree.query_pairs(delta, output_type="ndarray")
        if pairs.size:
            far = np.abs(z[pairs[:, 0]] - z[pairs[:, 1]]) > 2.0 * h_max
            pairs = pairs[far]
        if pairs.size:
            pairs = np.sort(pairs, axis=1)
            i, j = pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))[0]]
            return False, (complex(z[i]), complex(z[j]))
        return True, None

    return pred


def univalence_radius(F: AnalyticFunction, cfg: OracleConfig | None = None) -> OracleReport:
    """Largest r such that F' has no zero in |z| <= r and F is injective on the polar grid."""
    cfg = cfg or OracleConfig()
    return _search(_univalence_predicate(F, cfg), _cap(F, cfg), cfg, "univalence")


# circle predicates --------------------------------------------------------------

def u_radius(F: AnalyticFunction, cfg: OracleConfig | None = None) -> OracleReport:
    """Largest r with max |U_F| < 1 on |z| = r."""
    cfg = cfg or OracleConfig()
    h = lambda z: np.abs(u_of(F, z, cfg.exclusion_eps))

    def pred(r):
        m, w = _circle_extreme(h, r, cfg)
        return (m < 1.0), (None if m < 1.0 else (w, w))

    return _search(pred, _cap(F, cfg), cfg, "u")


def starlike_radius(F: AnalyticFunction, beta: float = 0.0, cfg: OracleConfig | None = None) -> OracleReport:
    """Largest r with min Re(z F'/F) > beta on |z| = r."""
    from .radii import check_beta

    check_beta(beta)
    cfg = cfg or OracleConfig()
    h = lambda z: -np.real(starlike_ratio(F, z, cfg.exclusion_eps))

    def pred(r):
        m, w = _circle_extreme(h, r, cfg)
        ok = -m > beta
        return ok, (None if ok else (w, w))

    return _search(pred, _cap(F, cfg), cfg, "starlike")


def g_alpha_radius(f: AnalyticFunction, alpha: float = 1.0, cfg: OracleConfig | None = None) -> OracleReport:
    """Largest r with max Re(1 + z f''/f') < 1 + alpha/2 on |z| = r."""
    from .radii import check_alpha

    check_alpha(alpha)
    cfg = cfg or OracleConfig()
    h = lambda z: np.real(convexity_expr(f, z, cfg.exclusion_eps))
    bound = 1.0 + alpha / 2.0

    def pred(r):
        m, w = _circle_extreme(h, r, cfg)
        return (m < bound), (None if m < bound else (w, w))

    return _search(pred, _cap(f, cfg, f.critical_points), cfg, "g-alpha")


# derivative zeros -----------------------------------------------------------

NEWTON_STEPS = 30
NEWTON_TOL = 1e-12
SEED_RADIAL, SEED_ANGULAR = 12, 36


def _raw_derivs(F: AnalyticFunction):
    if F.deriv_evaluator is not None:
        d1 = F.deriv_evaluator
        return d1, F.deriv2
    s1 = derivative(F.series)
    s2 = derivative(s1)
    return (lambda z: evaluate(s1, z)), (lambda z: evaluate(s2, z))


def derivative_zero_radius(F: AnalyticFunction, cfg: OracleConfig | None = None) -> OracleReport:
    """Smallest |z| < 1 with F'(z) = 0, found by Newton's method on F' from a polar seed grid."""
    cfg = cfg or OracleConfig()
    d1, d2 = _raw_derivs(F)
    limit = 1.0 if F.deriv_evaluator is not None else F.trust_radius()
    rad = limit * (np.arange(SEED_RADIAL) + 0.5) / SEED_RADIAL
    th = 2.0 * np.pi * (np.arange(SEED_ANGULAR) + 0.25) / SEED_ANGULAR
    seeds = (rad[:, None] * np.exp(1j * th)[None, :]).ravel()

    with np.errstate(all="ignore"):
        seed_vals = np.abs(np.asarray(d1(seeds)))
        z = seeds.copy()
        done = np.zeros(z.size, bool)
        for _ in range(NEWTON_STEPS):
            step = np.asarray(d1(z)) / np.asarray(d2(z))
            step = np.where(done, 0.0, step)
            z = z - step
            done |= np.abs(step) < NEWTON_TOL
        ok = done & np.isfinite(z) & (np.abs(z) < limit)
        if F.singularities:
            sing = np.asarray(F.singularities)
            ok &= np.min(np.abs(z[:, None] - sing[None, :]), axis=1) > cfg.exclusion_eps
        ok &= np.abs(np.asarray(d1(np.where(ok, z, 0.0)))) < 1e-8

    if not ok.any():
        if np.nanmin(seed_vals) < 1e-6:
            raise NewtonDiverged("no Newton seed converged although |F'| is tiny on the seed grid")
        return OracleReport(limit, "derivative_zero", None, cfg, True)
    roots = z[ok]
    k = int(np.argmin(np.abs(roots)))
    r0 = complex(roots[k])
    return OracleReport(abs(r0), "derivative_zero", (r0, r0), cfg, False)
