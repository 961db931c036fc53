"""Named example and extremal functions with exact closed forms.

Each :class:`ZooEntry` holds ``f`` and the explicit closed form of
``P_f = f/f'``.  The P-image series are built from their own coefficient
formulas, not from ``p_of``, so the two can be compared.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import NotNormalized, ParamOutOfRange, UnknownZooId
from .operators import AnalyticFunction, identity_function, p_of
from .series import DEFAULT_ORDER, STRUCTURAL_TOL, PowerSeries, read_coefficients

S, STAR, G, U, C_HALF = "S", "S*", "G", "U", "C(-1/2)"


@dataclass(frozen=True)
class ZooEntry:
    id: str
    f: AnalyticFunction
    p_f_closed: AnalyticFunction
    class_tags: frozenset = frozenset()
    params: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)


def _arr(z):
    return np.asarray(z, np.complex128)


def koebe_beta(beta: float, order: int = DEFAULT_ORDER) -> ZooEntry:
    """k_beta(z) = z / (1 - z)**(2(1 - beta)), extremal for S*(beta)."""
    if not 0.0 <= beta < 1.0:
        raise ParamOutOfRange(f"beta out of [0,1): {beta}")
    g = 2.0 * (1.0 - beta)
    c = 1.0 - 2.0 * beta

    # (1 - z)**(-g) via the principal logarithm; the cut never meets the unit disk
    def pw(z, p):
        return np.exp(-p * np.log(1.0 - _arr(z)))

    f_ev = lambda z: _arr(z) * pw(z, g)
    f_d = lambda z: (1.0 + c * _arr(z)) * pw(z, g + 1.0)
    f_d2 = lambda z: 2.0 * g * pw(z, g + 1.0) + g * (g + 1.0) * _arr(z) * pw(z, g + 2.0)

    binom = np.ones(order, np.complex128)
    for n in range(1, order):
        binom[n] = binom[n - 1] * (n - 1 + g) / n
    fc = np.zeros(order + 1, np.complex128)
    fc[1:] = binom

    # F_beta = z(1 - z)/(1 + c z): coefficient of z**(n+1) is (-c)**n - (-c)**(n-1)
    Fc = np.zeros(order + 1, np.complex128)
    Fc[1] = 1.0
    for n in range(1, order):
        Fc[n + 1] = (-c) ** n - (-c) ** (n - 1)
    F_ev = lambda z: _arr(z) * (1.0 - _arr(z)) / (1.0 + c * _arr(z))
    F_d = lambda z: (1.0 - 2.0 * _arr(z) - c * _arr(z) ** 2) / (1.0 + c * _arr(z)) ** 2
    F_d2 = lambda z: -2.0 * g / (1.0 + c * _arr(z)) ** 3

    if c == 0.0:
        crit, F_sing = (), ()
    else:
        crit = F_sing = (-1.0 / c,)
    ident = "koebe" if beta == 0.0 else ("half-line" if beta == 0.5 else f"koebe-beta({beta:g})")
    f = AnalyticFunction(PowerSeries(fc), f_ev, f_d, f_d2, singularities=(1.0,), critical_points=crit, label=ident)
    F = AnalyticFunction(PowerSeries(Fc), F_ev, F_d, F_d2, singularities=F_sing, label=f"P[{ident}]")
    return ZooEntry(ident, f, F, frozenset({S, STAR}), {"beta": beta}, {"r1": 1.0 / (1.0 + math.sqrt(g))})


def koebe(order: int = DEFAULT_ORDER) -> ZooEntry:
    return koebe_beta(0.0, order)


def half_line(order: int = DEFAULT_ORDER) -> ZooEntry:
    return koebe_beta(0.5, order)


def example_f1(order: int = DEFAULT_ORDER) -> ZooEntry:
    """f1(z) = z(1 - z/2)/(1 - z)**2 in C(-1/2); P-image z - 3z^2/2 + z^3/2."""
    f_ev = lambda z: _arr(z) * (1.0 - _arr(z) / 2.0) / (1.0 - _arr(z)) ** 2
    f_d = lambda z: 1.0 / (1.0 - _arr(z)) ** 3
    f_d2 = lambda z: 3.0 / (1.0 - _arr(z)) ** 4
    n = np.arange(order + 1)
    fc = ((n + 1) / 2.0).astype(np.complex128)
    fc[0] = 0.0
    Fc = np.zeros(order + 1, np.complex128)
    Fc[1:4] = [1.0, -1.5, 0.5][: max(0, min(3, order))]
    F = AnalyticFunction(
        PowerSeries(Fc),
        lambda z: _arr(z) - 1.5 * _arr(z) ** 2 + 0.5 * _arr(z) ** 3,
        lambda z: 1.0 - 3.0 * _arr(z) + 1.5 * _arr(z) ** 2,
        lambda z: -3.0 + 3.0 * _arr(z),
        label="P[f1]",
    )
    f = AnalyticFunction(PowerSeries(fc), f_ev, f_d, f_d2, singularities=(1.0,), label="f1")
    return ZooEntry("f1", f, F, frozenset({S, C_HALF}), {}, {"r_minus": 1.0 - math.sqrt(3.0) / 3.0})


def f1_re_derivative(r, theta):
    """Re F1'(r e^{i theta}) in the expanded trigonometric form."""
    ct = np.cos(theta)
    return 3.0 * r**2 * ct**2 - 3.0 * r * ct + 1.0 - 1.5 * r**2


def example_f2(order: int = DEFAULT_ORDER) -> ZooEntry:
    """f2(z) = z - z^2/2 in G; P-image z(1 - z/2)/(1 - z) lies in U."""
    fc = np.zeros(order + 1, np.complex128)
    fc[1] = 1.0
    if order >= 2:
        fc[2] = -0.5
    f = AnalyticFunction(
        PowerSeries(fc),
        lambda z: _arr(z) - _arr(z) ** 2 / 2.0,
        lambda z: 1.0 - _arr(z),
        lambda z: -np.ones_like(_arr(z)),
        critical_points=(1.0,),
        label="f2",
    )
    Fc = np.full(order + 1, 0.5, np.complex128)
    Fc[0], Fc[1] = 0.0, 1.0
    F = AnalyticFunction(
        PowerSeries(Fc),
        lambda z: _arr(z) * (1.0 - _arr(z) / 2.0) / (1.0 - _arr(z)),
        lambda z: 0.5 + 0.5 / (1.0 - _arr(z)) ** 2,
        lambda z: 1.0 / (1.0 - _arr(z)) ** 3,
        singularities=(1.0,),
        label="P[f2]",
    )
    return ZooEntry("f2", f, F, frozenset({S, G}), {"alpha": 1.0})


def identity(order: int = DEFAULT_ORDER) -> ZooEntry:
    f = identity_function(order)
    return ZooEntry("identity", f, f, frozenset({S, STAR, G, U, C_HALF}))


def from_coefficients(coeffs: Sequence[complex], tags: Iterable[str] = (), label: str = "custom",
                      order: int = DEFAULT_ORDER) -> ZooEntry:
    """Series-only entry; missing coefficients up to ``order`` are taken as zero."""
    c = [complex(x) for x in coeffs]
    if len(c) < 2 or abs(c[0]) >= STRUCTURAL_TOL or abs(c[1] - 1) >= STRUCTURAL_TOL:
        raise NotNormalized(f"{label}: coefficients must start with 0, 1")
    f = AnalyticFunction(PowerSeries.from_list(c, max(order, len(c) - 1)), label=label)
    return ZooEntry(label, f, p_of(f), frozenset(tags))


ZOO_IDS = ("koebe", "koebe-beta", "f1", "f2", "half-line", "identity", "custom:<path>")


def resolve(zoo_id: str, beta: float | None = None, order: int = DEFAULT_ORDER) -> ZooEntry:
    if zoo_id == "koebe":
        return koebe(order)
    if zoo_id == "koebe-beta":
        return koebe_beta(0.0 if beta is None else beta, order)
    if zoo_id == "f1":
        return example_f1(order)
    if zoo_id == "f2":
        return example_f2(order)
    if zoo_id == "half-line":
        return half_line(order)
    if zoo_id == "identity":
        return identity(order)
    if zoo_id.startswith("custom:"):
        path = Path(zoo_id[len("custom:"):])
        if not path.is_file():
            raise UnknownZooId(f"coefficient file not found: {path}")
        return from_coefficients(read_coefficients(path), label=zoo_id)
    raise UnknownZooId(f"unknown zoo id {zoo_id!r}; expected one of {', '.join(ZOO_IDS)}")


def s_tagged(order: int = DEFAULT_ORDER) -> list[ZooEntry]:
    """Built-in members asserted to be univalent, used by the conjecture sweep."""
    entries = [identity(order), koebe(order), koebe_beta(0.25, order), half_line(order),
               koebe_beta(0.75, order), example_f1(order), example_f2(order)]
    return [e for e in entries if S in e.class_tags]
