import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import brentq

from gft import radii
from gft.errors import InvalidBracket, MultipleRoots, NoRootInInterval, ParamOutOfRange

# published Table 1 values, six decimals
TABLE1 = {0.25: 0.361166, 0.5: 0.362294, 0.75: 0.364226, 1.0: 0.367042,
          1.25: 0.370874, 1.5: 0.375923, 1.75: 0.382504, 2.0: 0.391124}


def smallest_unit_root(ascending):
    """Independent oracle: smallest real root in (0, 1) via companion-matrix eigenvalues."""
    roots = np.roots(list(reversed(ascending)))
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-9 and 0 < r.real < 1)
    return real[0]


def phi5_direct(r, b):
    a = (2 * math.pi**2 - 12) / 3 - b * b / 4
    return a * r**4 * (r**6 - 5 * r**4 + 19 * r**2 + 9) - (1 - r * r) ** 5


def test_roth_constant():
    assert radii.roth_constant() == pytest.approx(2.5797362673929, abs=1e-12)


@pytest.mark.parametrize("b", sorted(TABLE1))
def test_table1_published(b):
    assert radii.r6(b).value == pytest.approx(TABLE1[b], abs=5e-6)


@pytest.mark.parametrize("b", [0.0, 0.25, 1.0, 1.7, 2.0])
def test_r6_matches_brentq(b):
    expected = brentq(phi5_direct, 0.1, 0.5, args=(b,), xtol=1e-15)
    res = radii.r6(b)
    assert res.value == pytest.approx(expected, abs=1e-11)
    assert abs(res.residual) < 1e-10


def test_table1_csv():
    lines = radii.table1_csv().splitlines()
    assert lines[0] == "a2_abs,r6"
    assert len(lines) == 9
    assert lines[1] == "0.25,0.361166"
    assert lines[-1] == "2,0.391124"


def test_named_radii():
    assert radii.r2().value == pytest.approx(0.543689, abs=5e-6)
    assert radii.r3(1.0).value == pytest.approx(2 - math.sqrt(2), abs=1e-15)
    assert radii.r4(1.0).value == pytest.approx(0.64731, abs=5e-5)
    assert radii.r5(1.0).value == pytest.approx(0.78615, abs=5e-5)
    assert radii.r6(0.0).value == pytest.approx(0.360794, abs=5e-6)
    assert radii.r1(0.0).value == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
    assert radii.r1(0.5).value == 0.5
    assert radii.r_inv_sqrt3().value == pytest.approx(0.577350, abs=5e-7)


def test_r5_half_closed_form():
    assert radii.r5(0.5).value == pytest.approx(0.807086, abs=1e-6)


def test_r4_known_values():
    assert radii.r4(0.25).value == pytest.approx(0.75331, abs=1e-5)
    assert radii.r4(0.5).value == pytest.approx(0.69810, abs=1e-5)


@pytest.mark.parametrize("alpha", [0.05, 0.25, 0.5, 0.75, 1.0])
def test_polynomial_radii_against_numpy_roots(alpha):
    assert radii.r3(alpha).value == pytest.approx(smallest_unit_root(radii.phi3(alpha)), abs=1e-12)
    assert radii.r4(alpha).value == pytest.approx(smallest_unit_root(radii.phi4(alpha)), abs=1e-11)
    assert radii.r5(alpha).value == pytest.approx(smallest_unit_root(radii.r5_quartic(alpha)), abs=1e-12)


def test_r2_against_numpy_roots():
    assert radii.r2().value == pytest.approx(smallest_unit_root(radii.phi2()), abs=1e-12)


@pytest.mark.parametrize("beta", [0.0, 0.1, 0.5, 0.9])
def test_r1_residual(beta):
    res = radii.r1(beta)
    assert abs(res.residual) < 1e-12
    assert res.value == pytest.approx(smallest_unit_root(radii.r1_quadratic(beta)), abs=1e-12)


def test_residuals_small():
    for res in [radii.r2(), radii.r3(0.3), radii.r4(0.3), radii.r5(0.3), radii.r6(1.2), radii.r_inv_sqrt3()]:
        assert abs(res.residual) < 1e-10, res.formula_id
        assert 0 < res.value < 1


def test_parameter_validation():
    with pytest.raises(ParamOutOfRange, match=r"beta out of \[0,1\): 2.0"):
        radii.r1(2.0)
    with pytest.raises(ParamOutOfRange):
        radii.r3(0.0)
    with pytest.raises(ParamOutOfRange):
        radii.r4(1.5)
    with pytest.raises(ParamOutOfRange):
        radii.r6(2.5)
    with pytest.raises(ParamOutOfRange):
        radii.ClassParam(beta=1.0)
    with pytest.raises(ValueError):
        radii.r6(-0.1)


def test_solve_root_errors():
    with pytest.raises(InvalidBracket):
        radii.solve_root((1.0, 0.0, 1.0), 0.0, 1.0)
    res = radii.solve_root((-0.25, 0.0, 1.0), 0.0, 1.0)
    assert res.value == pytest.approx(0.5, abs=1e-12)


def test_smallest_root_errors():
    with pytest.raises(NoRootInInterval):
        radii._smallest_root((1.0, 0.0, 1.0), 0.0, 1.0, "none")
    # (x - 0.2)(x - 0.4) has two roots below 0.5
    with pytest.raises(MultipleRoots):
        radii._smallest_root((0.08, -0.6, 1.0), 0.0, 1.0, "two", unique_below=0.5)


def test_sign_changes_recorded():
    assert radii.r6(1.0).sign_changes == 1


def test_as_dict():
    d = radii.r4(1.0).as_dict()
    assert d["formula_id"] == "r4"
    assert set(d) >= {"value", "bracket", "tol", "iterations", "polynomial", "residual"}


# properties -----------------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(st.floats(0, 0.999), st.floats(0, 2))
def test_phi5_matches_direct_form(r, b):
    assert radii.polyval(radii.phi5(b), r) == pytest.approx(phi5_direct(r, b), abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 1.99), st.floats(0.001, 0.01))
def test_r6_increasing_in_a2(b, db):
    assert radii.r6(min(2.0, b + db)).value >= radii.r6(b).value


@settings(max_examples=50, deadline=None)
@given(st.floats(0, 0.98), st.floats(0.001, 0.01))
def test_r1_increasing_in_beta(beta, d):
    assert radii.r1(beta + d).value > radii.r1(beta).value


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 1.0))
def test_g_alpha_radii_ordering(alpha):
    assert 0 < radii.r3(alpha).value <= radii.r4(alpha).value + 1e-12
    assert radii.r4(alpha).value < 1 and radii.r5(alpha).value < 1
