"""Truncated power series with complex coefficients.

A :class:`PowerSeries` of order ``N`` stores the coefficients of
``z**0 .. z**N``.  Binary operations truncate to the smaller order and
never pad.  Coefficients are ``complex128`` by default; an ``object``
array of exact numbers (e.g. :class:`fractions.Fraction`) is accepted
for the operations that only scale coefficients, so that round trips
can be checked without rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import NonzeroInnerConstant, NotUnitConstant, ZeroConstantTerm

DEFAULT_ORDER = 64
STRUCTURAL_TOL = 1e-12
ZERO_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, np.ndarray) or (c.dtype != object and c.dtype != np.complex128):
            c = np.asarray(c, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if c.dtype != object and not np.all(np.isfinite(c)):
            raise ValueError("non-finite coefficient")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_list(cls, values: Iterable, order: int | None = None) -> "PowerSeries":
        c = np.asarray(list(values), dtype=np.complex128)
        if order is not None:
            c = np.concatenate([c, np.zeros(max(0, order + 1 - c.size), np.complex128)])[: order + 1]
        return cls(c)

    @classmethod
    def exact(cls, values: Sequence) -> "PowerSeries":
        return cls(np.array(list(values), dtype=object))

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "PowerSeries":
        c = np.zeros(order + 1, np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def z(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        c = np.zeros(order + 1, np.complex128)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_exact(self) -> bool:
        return self.coeffs.dtype == object

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" if not self.is_exact else str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"PowerSeries(order={self.order}, [{head}{more}])"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order) + 1
            return PowerSeries(self.coeffs[:n] + other.coeffs[:n])
        c = self.coeffs.copy()
        c[0] = c[0] + other
        return PowerSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return PowerSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, reciprocal(other))
        return PowerSeries(self.coeffs / other)

    def __call__(self, z):
        return evaluate(self, z)

    def allclose(self, other: "PowerSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.max(np.abs(self.coeffs[:n] - other.coeffs[:n]), initial=0.0) <= atol)


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order) + 1
    if a.is_exact or b.is_exact:
        out = np.array([0] * n, dtype=object)
        for k in range(n):
            out[k] = sum((a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)), 0)
        return PowerSeries(out)
    return PowerSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def reciprocal(a: PowerSeries) -> PowerSeries:
    a0 = a.coeffs[0]
    if abs(a0) < ZERO_TOL:
        raise ZeroConstantTerm(f"constant term {a0!r} is too small to invert")
    c = a.coeffs
    r = np.zeros(c.size, np.complex128)
    r[0] = 1.0 / a0
    for n in range(1, c.size):
        r[n] = -np.dot(c[1 : n + 1], r[n - 1 :: -1]) / a0
    return PowerSeries(r)


def derivative(a: PowerSeries) -> PowerSeries:
    if a.order == 0:
        return PowerSeries(np.zeros(1, a.coeffs.dtype) if not a.is_exact else np.array([0], object))
    n = np.arange(1, a.order + 1)
    return PowerSeries(a.coeffs[1:] * n)


def log_unit(a: PowerSeries) -> PowerSeries:
    """Logarithm of a series whose constant term is 1.

    Uses ``a * L' = a'`` solved term by term, i.e.
    ``n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}``.
    """
    if abs(a.coeffs[0] - 1.0) >= STRUCTURAL_TOL:
        raise NotUnitConstant(f"constant term {a.coeffs[0]!r} is not 1")
    c = np.asarray(a.coeffs, np.complex128)
    N = c.size
    kL = np.zeros(N, np.complex128)  # k * L_k
    for n in range(1, N):
        kL[n] = n * c[n] - np.dot(kL[1:n], c[n - 1 : 0 : -1])
    L = np.zeros(N, np.complex128)
    L[1:] = kL[1:] / np.arange(1, N)
    return PowerSeries(L)


def compose(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """``a(b(z))`` by Horner's scheme; requires ``b(0) = 0``."""
    if abs(b.coeffs[0]) >= ZERO_TOL:
        raise NonzeroInnerConstant(f"inner series has constant term {b.coeffs[0]!r}")
    n = min(a.order, b.order) + 1
    bc = np.asarray(b.coeffs[:n], np.complex128)
    acc = np.zeros(n, np.complex128)
    for k in range(n - 1, -1, -1):
        acc = np.convolve(acc, bc)[:n]
        acc[0] += a.coeffs[k]
    return PowerSeries(acc)


def evaluate(a: PowerSeries, z):
    """Horner evaluation of the truncated polynomial; ``z`` may be an array."""
    z = np.asarray(z, dtype=np.complex128)
    acc = np.zeros_like(z)
    for c in a.coeffs[::-1]:
        acc = acc * z + c
    return acc if acc.ndim else complex(acc)


def read_coefficients(path: str | Path) -> list[complex]:
    """Read a coefficient file: one ``re im`` pair per line, line n holding z**n."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 're im', got {line!r}")
        out.append(complex(float(parts[0]), float(parts[1])))
    return out


def write_coefficients(series: PowerSeries | Sequence[complex], path: str | Path) -> None:
    coeffs = series.coeffs if isinstance(series, PowerSeries) else series
    lines = [f"{complex(c).real!r} {complex(c).imag!r}" for c in coeffs]
    Path(path).write_text("\n".join(lines) + "\n")
