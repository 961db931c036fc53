"""The acceptance suite: one check per criterion, each with its own tolerance and time budget.

Used by ``gft verify`` and by ``tests/test_acceptance.py``.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import criteria, oracles, radii, zoo
from .operators import AnalyticFunction, p_of, u_of, wplane_q, wplane_s
from .series import PowerSeries, evaluate, derivative

SEED = 20240611

TABLE1_PUBLISHED = {0.25: 0.361166, 0.5: 0.362294, 0.75: 0.364226, 1.0: 0.367042,
                1.25: 0.370874, 1.5: 0.375923, 1.75: 0.382504, 2.0: 0.391124}


@dataclass
class CheckResult:
    name: str
    passed: bool
    elapsed: float
    budget: float
    items: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bad = [i for i in self.items if not i[1]]
        extra = f"; failing: {', '.join(i[0] for i in bad)}" if bad else ""
        return f"[{status}] {self.name} ({self.elapsed:.2f}s / budget {self.budget:g}s{extra})"


class _Checker:
    def __init__(self):
        self.items = []

    def check(self, label: str, ok: bool, measured=None):
        self.items.append((label, bool(ok), measured))


def _timed(name: str, budget: float, body: Callable[[_Checker], None]) -> CheckResult:
    ck = _Checker()
    t0 = time.perf_counter()
    body(ck)
    dt = time.perf_counter() - t0
    ck.check("runtime", dt < budget, dt)
    return CheckResult(name, all(ok for _, ok, _ in ck.items), dt, budget, ck.items)


def check_table1() -> CheckResult:
    def body(ck):
        for b, r in radii.table1():
            ck.check(f"r6({b:g})", abs(r - TABLE1_PUBLISHED[b]) <= 5e-6, r)
    return _timed("1 table1 reproduction", 1.0, body)


def check_named_radii() -> CheckResult:
    cases = [
        ("r2", radii.r2(), 0.543689),
        ("r3(1)", radii.r3(1.0), 0.585786),
        ("r4(1)", radii.r4(1.0), 0.64731),
        ("r5(1)", radii.r5(1.0), 0.78615),
        ("r6(0)", radii.r6(0.0), 0.360794),
        ("r1(0)", radii.r1(0.0), 0.414214),
        ("r1(0.5)", radii.r1(0.5), 0.5),
        ("1/sqrt3", radii.r_inv_sqrt3(), 0.577350),
    ]

    def body(ck):
        for label, res, expected in cases:
            ck.check(f"{label} value", abs(res.value - expected) <= 5e-5, res.value)
            ck.check(f"{label} residual", abs(res.residual) < 1e-10, res.residual)
    return _timed("2 named radii", 1.0, body)


def check_sharpness(cfg: oracles.OracleConfig | None = None) -> CheckResult:
    cfg = cfg or oracles.OracleConfig()

    def body(ck):
        for beta in (0.0, 0.25, 0.5, 0.75):
            F = zoo.koebe_beta(beta).p_f_closed
            rep = oracles.u_radius(F, cfg)
            ck.check(f"u_radius(F_{beta:g})", abs(rep.radius - radii.r1(beta).value) < 2e-3, rep.radius)
        for beta in (0.0, 0.5):
            F = zoo.koebe_beta(beta).p_f_closed
            rep = oracles.derivative_zero_radius(F, cfg)
            ck.check(f"derivative_zero(F_{beta:g})", abs(rep.radius - radii.r1(beta).value) < 1e-6, rep.radius)
    return _timed("3 sharpness oracle agreement", 30.0, body)


def check_examples(cfg: oracles.OracleConfig | None = None) -> CheckResult:
    cfg = cfg or oracles.OracleConfig()

    def body(ck):
        F1 = zoo.example_f1().p_f_closed
        F2 = zoo.example_f2().p_f_closed
        d = oracles.derivative_zero_radius(F1, cfg).radius
        ck.check("derivative_zero(F1)", abs(d - 0.4226497) <= 1e-7, d)
        u = oracles.univalence_radius(F1, cfg).radius
        ck.check("univalence(F1)", 0.4226 - 2e-3 <= u <= 0.4227 + 2e-3, u)
        s = criteria.u_sufficient_sum(F2, 60).sum_value
        ck.check("u_sufficient_sum(F2, 60)", abs(s - 1.0) <= 1e-12, s)
        ur = oracles.u_radius(F2, cfg).radius
        ck.check("u_radius(F2)", ur >= 0.99, ur)
    return _timed("4 example functions", 60.0, body)


def check_roth() -> CheckResult:
    def body(ck):
        a = radii.roth_constant()
        s = criteria.roth_sum(zoo.koebe(order=10001).f, 10000).sum_value
        ck.check("koebe roth_sum(10000)", a - 5e-4 <= s <= a, s)
        s0 = criteria.roth_sum(zoo.identity().f, 60).sum_value
        ck.check("identity roth_sum", s0 == 0.0, s0)
    return _timed("5 Roth bound", 1.0, body)


def random_exact_series(rng: np.random.Generator, order: int) -> PowerSeries:
    vals = [Fraction(0)] + [Fraction(int(rng.integers(-10**6, 10**6)), int(rng.integers(1, 10**4)))
                            for _ in range(order)]
    return PowerSeries.exact(vals)


def u_identity_rhs(f: AnalyticFunction, z):
    """z f'/f - z (z f'/f)' - 1 computed from f, f', f'' directly."""
    z = np.asarray(z, np.complex128)
    if f.deriv2_evaluator is not None:
        v, d1, d2 = f.evaluator(z), f.deriv_evaluator(z), f.deriv2_evaluator(z)
    else:
        s = f.series
        v, d1, d2 = evaluate(s, z), evaluate(derivative(s), z), evaluate(derivative(derivative(s)), z)
    h = z * d1 / v
    dh = d1 / v + z * d2 / v - z * d1**2 / v**2
    return h - z * dh - 1.0


def zoo_entries() -> list[zoo.ZooEntry]:
    custom = zoo.from_coefficients([0, 1, 0.3 + 0.1j, -0.1, 0.02j], label="custom:poly")
    return zoo.s_tagged() + [custom]


def check_operator_identities() -> CheckResult:
    rng = np.random.default_rng(SEED)

    def body(ck):
        exact_ok = True
        for _ in range(100):
            g = random_exact_series(rng, int(rng.integers(2, 20)))
            back = wplane_s(wplane_q(g))
            fwd = wplane_q(wplane_s(g))
            exact_ok &= all(x == y for x, y in zip(back.coeffs, g.coeffs))
            exact_ok &= all(x == y for x, y in zip(fwd.coeffs, g.coeffs))
        ck.check("wplane S.Q and Q.S exact", exact_ok)

        worst = 0.0
        for e in zoo_entries():
            rad = 0.3 * np.sqrt(rng.random(50))
            z = rad * np.exp(2j * np.pi * rng.random(50))
            lhs = np.asarray(u_of(p_of(e.f), z))
            rhs = u_identity_rhs(e.f, z)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        ck.check("U identity", worst <= 1e-8, worst)

        entries = [zoo.koebe_beta(b) for b in (0.0, 0.25, 0.5, 0.75)] + [zoo.example_f1(), zoo.example_f2()]
        worst = 0.0
        for e in entries:
            d = np.abs(p_of(e.f).series.coeffs[:33] - e.p_f_closed.series.coeffs[:33])
            worst = max(worst, float(d.max()))
        ck.check("p_of vs closed form (order 32)", worst <= 1e-10, worst)
    return _timed("6 operator identities", 5.0, body)


def check_cs_equivalence() -> CheckResult:
    rng = np.random.default_rng(SEED + 1)

    def body(ck):
        mismatches, used = 0, 0
        for _ in range(200):
            r, b = 0.9 * rng.random(), 2.0 * rng.random()
            p = radii.polyval(radii.phi5(b), r)
            if abs(p) < 1e-9:
                continue
            used += 1
            if np.sign(criteria.cs_bound(r, b) - 1.0) != np.sign(p):
                mismatches += 1
        ck.check("sign agreement", mismatches == 0, (mismatches, used))
    return _timed("7 criterion / phi5 equivalence", 1.0, body)


def conjecture_sweep(cfg: oracles.OracleConfig | None = None) -> dict:
    """Univalence and U radii of P_f over the built-in S members, with the r6 bound and gap to sqrt2 - 1."""
    cfg = cfg or oracles.OracleConfig()
    target = math.sqrt(2.0) - 1.0
    rows = []
    for e in zoo.s_tagged():
        F = p_of(e.f)
        b = min(2.0, abs(e.f.a2))
        uni = oracles.univalence_radius(F, cfg).radius
        ur = oracles.u_radius(F, cfg).radius
        rows.append({
            "id": e.id,
            "a2_abs": b,
            "univalence": uni,
            "u": ur,
            "r6_bound": radii.r6(b).value,
            "gap": uni - target,
        })
    return {
        "rows": rows,
        "min_univalence": min(r["univalence"] for r in rows),
        "min_u": min(r["u"] for r in rows),
        "conjectured_bound": target,
    }


def check_monotone_and_conjecture(cfg: oracles.OracleConfig | None = None) -> CheckResult:
    def body(ck):
        betas = np.round(np.arange(0.0, 1.0, 0.01), 10)
        v1 = [radii.r1(b).value for b in betas]
        ck.check("r1 strictly increasing", all(x < y for x, y in zip(v1, v1[1:])))
        bs = np.round(np.arange(0.0, 2.0 + 1e-9, 0.05), 10)
        v6 = [radii.r6(b).value for b in bs]
        ck.check("r6 strictly increasing", all(x < y for x, y in zip(v6, v6[1:])))
        ck.check("r6 < sqrt2 - 1", max(v6) < math.sqrt(2.0) - 1.0, max(v6))
        sweep = conjecture_sweep(cfg)
        ck.check("sweep min univalence", sweep["min_univalence"] >= 0.36 - 2e-3, sweep["min_univalence"])
    return _timed("8 monotonicity and conjecture gap", 60.0, body)


def run_all(cfg: oracles.OracleConfig | None = None) -> list[CheckResult]:
    return [
        check_table1(),
        check_named_radii(),
        check_sharpness(cfg),
        check_examples(cfg),
        check_roth(),
        check_operator_identities(),
        check_cs_equivalence(),
        check_monotone_and_conjecture(cfg),
    ]
