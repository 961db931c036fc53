from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gft import zoo
from gft.acceptance import u_identity_rhs, zoo_entries
from gft.errors import BeyondTrustRadius, NearSingularity, NonzeroInnerConstant, NotNormalized
from gft.operators import (
    AnalyticFunction,
    identity_function,
    log_coeffs,
    p_of,
    t_of,
    u_of,
    u_series,
    u_series_of_p,
    wplane_q,
    wplane_s,
)
from gft.radii import r1
from gft.series import PowerSeries, evaluate


def test_normalization_enforced():
    with pytest.raises(NotNormalized):
        AnalyticFunction(PowerSeries.from_list([0, 2, 1]))
    with pytest.raises(NotNormalized):
        AnalyticFunction(PowerSeries.from_list([0.1, 1, 0]))


def test_p_of_koebe():
    F = p_of(zoo.koebe().f)
    # z(1-z)/(1+z) = z - 2z^2 + 2z^3 - ...
    n = np.arange(2, 20)
    assert F.series.coeffs[1] == pytest.approx(1)
    assert np.allclose(F.series.coeffs[2:20], 2 * (-1.0) ** (n - 1), atol=1e-9)
    z = np.array([0.3, -0.2 + 0.4j])
    assert np.allclose(F.value(z), z * (1 - z) / (1 + z))


def test_p_of_identity_and_f2():
    F = p_of(identity_function())
    assert np.allclose(F.series.coeffs[:3], [0, 1, 0])
    F2 = p_of(zoo.example_f2().f)
    z = np.array([0.5, 0.1 + 0.7j])
    assert np.allclose(F2.value(z), z * (1 - z / 2) / (1 - z))


def test_p_of_records_critical_points_as_singularities():
    F = p_of(zoo.koebe().f)
    assert -1 + 0j in F.singularities


def test_u_of_f2_at_half():
    F2 = zoo.example_f2().p_f_closed
    assert u_of(F2, 0.5) == pytest.approx(1 / 9)
    z = 0.4 * np.exp(1j * np.linspace(0, 6, 13))
    w = (z / 2) / (1 - z / 2)
    assert np.allclose(u_of(F2, z), w**2)


def test_u_of_identity_zero():
    assert np.allclose(u_of(identity_function(), np.array([0.2, 0.9j, -0.5])), 0)


def test_u_of_sharp_point():
    F0 = zoo.koebe().p_f_closed
    assert u_of(F0, r1(0.0).value) == pytest.approx(-1, abs=1e-12)


def test_u_of_at_origin():
    assert u_of(zoo.koebe().p_f_closed, 0.0) == 0


def test_u_of_near_singularity():
    with pytest.raises(NearSingularity):
        u_of(zoo.koebe().p_f_closed, -1 + 1e-4)


def test_u_of_series_path_trust_radius():
    f = zoo.from_coefficients([0, 1, 0.2]).f
    F = p_of(f)
    assert not F.has_closed_form
    u_of(F, 0.5)
    with pytest.raises(BeyondTrustRadius):
        u_of(F, 0.85)


def test_u_series_matches_closed_form():
    F = zoo.koebe().p_f_closed
    z = 0.25 * np.exp(1j * np.linspace(0, 6, 9))
    assert np.allclose(evaluate(u_series(F), z), u_of(F, z), atol=1e-10)


def test_u_series_of_p_identity():
    assert np.allclose(u_series_of_p(identity_function()).coeffs, 0)


def test_u_series_of_p_koebe():
    s = u_series_of_p(zoo.koebe().f)
    n = np.arange(2, 30)
    assert np.allclose(s.coeffs[2:30], -2 * (n - 1), atol=1e-9)
    z = 0.2
    assert evaluate(s, z) == pytest.approx(u_of(p_of(zoo.koebe().f), z), abs=1e-8)


def test_u_series_of_p_pointwise():
    for e in zoo_entries():
        s = u_series_of_p(e.f)
        z = 0.3 * np.exp(1j * np.linspace(0, 6, 11))
        assert np.allclose(evaluate(s, z), u_of(p_of(e.f), z), atol=1e-8), e.id


def test_u_series_of_p_f2():
    # c_2(f2) = -1/8, so -2 c_2 = 1/4
    assert u_series_of_p(zoo.example_f2().f).coeffs[2] == pytest.approx(0.25)


def test_log_coeffs():
    assert np.allclose(log_coeffs(identity_function()).coeffs, 0)
    n = np.arange(1, 40)
    assert np.allclose(log_coeffs(zoo.koebe().f).coeffs[1:40], 2 / n)
    assert np.allclose(log_coeffs(zoo.example_f2().f).coeffs[1:40], -1 / (n * 2.0**n))
    f = zoo.koebe_beta(0.3).f
    assert log_coeffs(f).coeffs[1] == pytest.approx(f.a2)


def test_t_of():
    assert np.allclose(t_of(identity_function()).coeffs[:5], [0, 1, 0, 0, 0])
    T = t_of(zoo.koebe().f)
    n = np.arange(1, 30)
    assert np.allclose(T.coeffs[n + 1], 2 / (n + 1))
    assert t_of(zoo.example_f2().f).coeffs[2] == pytest.approx(-0.25)


def test_t_coefficient_law_exact():
    for e in zoo_entries():
        c = log_coeffs(e.f).coeffs
        T = t_of(e.f).coeffs
        n = np.arange(1, c.size)
        assert np.array_equal(T[n + 1], n / (n + 1) * c[1:])


def test_wplane_examples():
    assert np.allclose(wplane_q(PowerSeries.from_list([0, 1])).coeffs, [0, 1])
    assert np.allclose(wplane_q(PowerSeries.from_list([0, 1, 1])).coeffs, [0, 1, 2])
    g = PowerSeries.from_list([0] + [1 / n for n in range(1, 10)])
    assert np.allclose(wplane_q(g).coeffs[1:], 1)
    assert np.allclose(wplane_s(PowerSeries.from_list([0, 1, 2])).coeffs, [0, 1, 1])
    with pytest.raises(NonzeroInnerConstant):
        wplane_s(PowerSeries.from_list([1, 1]))


fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


@settings(max_examples=100, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=30))
def test_wplane_inverse_pair_exact(vals):
    g = PowerSeries.exact([Fraction(0)] + vals)
    assert list(wplane_s(wplane_q(g)).coeffs) == list(g.coeffs)
    assert list(wplane_q(wplane_s(g)).coeffs) == list(g.coeffs)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=1, max_size=30))
def test_wplane_inverse_pair_float(vals):
    g = PowerSeries(np.array([0] + vals, complex))
    # floating scaling by n and back is within one rounding per component
    assert np.allclose(wplane_s(wplane_q(g)).coeffs, g.coeffs, rtol=4e-16, atol=0)


def test_u_identity_all_zoo():
    rng = np.random.default_rng(1)
    for e in zoo_entries():
        z = 0.3 * np.sqrt(rng.random(50)) * np.exp(2j * np.pi * rng.random(50))
        assert np.allclose(u_of(p_of(e.f), z), u_identity_rhs(e.f, z), atol=1e-8, rtol=0), e.id


def test_p_of_normalized():
    for e in zoo_entries():
        c = p_of(e.f).series.coeffs
        assert abs(c[0]) < 1e-12 and abs(c[1] - 1) < 1e-12
