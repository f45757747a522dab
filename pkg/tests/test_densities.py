import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import integrate

from chebprob.cheb_core import ChebKind
from chebprob.densities import (
    ConjugatePairs,
    DensityParams,
    arcsine_pdf,
    b2_conj,
    b4_conj,
    cdf,
    density_eval,
    density_series_eval,
    f2_coeffs,
    f2_conj,
    f2_conj_series,
    f4_conj,
    fourier_coeffs,
    marginal_fC,
    marginal_fW,
    pdf,
    semicircle_pdf,
)
from chebprob.errors import DomainError, IllConditioned
from chebprob.quadrature import gauss_cheb_rule

RULE = gauss_cheb_rule(ChebKind.FIRST, 512)


def mass(f):
    return np.dot(RULE.weights, f(RULE.nodes) / arcsine_pdf(RULE.nodes))


def test_reference_curve():
    x = np.linspace(-0.9, 0.9, 181)
    ref = 24 / (7 * np.pi * np.sqrt(1 - x * x)) * (4 - 2 * x + x * x) / (13 - 20 * x + 16 * x * x)
    assert_allclose(f2_conj(0.5, 0.5, x), ref, rtol=0, atol=1e-12)


def test_base_densities():
    assert_allclose(arcsine_pdf(0.0), 1 / np.pi)
    assert_allclose(semicircle_pdf(0.0), 2 / np.pi)
    assert semicircle_pdf(1.0) == 0.0
    with pytest.raises(DomainError):
        arcsine_pdf(1.0)


def test_single_pole_is_poisson_density():
    a, x = 0.4, np.linspace(-0.9, 0.9, 7)
    d = DensityParams.of(a)
    assert_allclose(pdf(d, x), arcsine_pdf(x) * (1 - a * x) / (1 + a * a - 2 * a * x))


@pytest.mark.parametrize("a", [(0.3,), (0.5, -0.5), (0.8, -0.1, 0.4), (0.9, 0.5, -0.7, -0.2, 0.1)])
def test_fnT_normalized(a):
    assert_allclose(mass(lambda x: density_eval(DensityParams.of(*a), x)), 1.0, atol=1e-12)


def test_series_converges_to_closed():
    d = DensityParams.of(0.6, -0.3, 0.2)
    x = np.linspace(-0.95, 0.95, 11)
    assert_allclose(density_series_eval(d, x, 80), density_eval(d, x), rtol=1e-13)
    assert_allclose(f2_conj_series(0.7, -0.4, x, 120), f2_conj(0.7, -0.4, x), rtol=1e-13)


def test_f2_coefficients_first_terms():
    rho, y = 0.5, 0.5
    c = f2_coeffs(rho, y, 2)
    # c_1 = ((1 - rho^2) rho U_1(y) + 2 rho T_1(y)) / (2 - rho^2)
    assert_allclose(c[0], (0.75 * 0.5 * 1.0 + 2 * 0.5 * 0.5) / 1.75)


def test_b2_conj_from_complex_parameters():
    rho, y = 0.7, 0.3
    a = rho * np.exp(1j * np.arccos(y))
    poles = [a, np.conj(a)]
    b = [(2 * p - q - p * p * q) / ((p - q) * (1 - p * q)) for p, q in (poles, poles[::-1])]
    assert_allclose(b2_conj(rho), (4 / (1 + b[0] + b[1])).real, rtol=1e-14)


def test_b4_conj_from_complex_parameters():
    r1, y1, r2, y2 = 0.6, -0.4, 0.8, 0.9
    p = [r1 * np.exp(1j * np.arccos(y1)), r2 * np.exp(1j * np.arccos(y2))]
    a = [p[0], np.conj(p[0]), p[1], np.conj(p[1])]
    b = []
    for k in range(4):
        prod = 1.0
        for j in range(4):
            if j != k:
                prod *= (2 * a[k] - a[j] - a[k] ** 2 * a[j]) / ((a[k] - a[j]) * (1 - a[k] * a[j]))
        b.append(prod)
    assert_allclose(b4_conj(r1, y1, r2, y2), (16 / (1 + sum(b))).real, rtol=1e-12)


def test_f4_normalized_and_reduces():
    assert_allclose(mass(lambda x: f4_conj(0.8, -0.9, 0.3, 0.1, x)), 1.0, atol=1e-12)
    x = np.linspace(-0.9, 0.9, 9)
    assert_allclose(f4_conj(0.5, 0.5, 0.0, 0.2, x), f2_conj(0.5, 0.5, x), rtol=1e-13)
    # without the arcsine factor the mass is not 1
    assert abs(mass(lambda x: f4_conj(0.8, -0.9, 0.3, 0.1, x, with_arcsine=False)) - 1) > 0.1


def test_marginals_against_adaptive_quadrature():
    rho, x = 0.8, -0.5
    fC = lambda t: f2_conj(rho, np.cos(t), x) / np.pi
    fW = lambda t: f2_conj(rho, np.cos(t), x) * 2 / np.pi * np.sin(t) ** 2
    assert_allclose(marginal_fC(rho, x), integrate.quad(fC, 0, np.pi, epsabs=1e-14)[0], rtol=1e-11)
    assert_allclose(marginal_fW(rho, x), integrate.quad(fW, 0, np.pi, epsabs=1e-14)[0], rtol=1e-11)


def test_semicircle_marginal_at_zero():
    rho = 0.6
    assert_allclose(marginal_fW(rho, 0.0), 2 / (np.pi * (2 - rho * rho)))


def test_fourier_coeffs_match_projection():
    for d in (DensityParams.of(0.7, -0.2), ConjugatePairs.of(0.6, 0.1),
              ConjugatePairs.of(0.5, 0.3, -0.7, 0.8)):
        c = fourier_coeffs(d)
        th = np.arccos(RULE.nodes)
        g = pdf(d, RULE.nodes) / arcsine_pdf(RULE.nodes)
        for j in range(1, 11):
            assert_allclose(c[j - 1], 2 * np.dot(RULE.weights, np.cos(j * th) * g), atol=1e-13)


def test_cdf_against_adaptive_quadrature():
    d = ConjugatePairs.of(0.9, -0.3)
    for x in (-0.8, 0.0, 0.6):
        ref = integrate.quad(lambda t: pdf(d, np.cos(t)) * np.sin(t), np.arccos(x), np.pi,
                             epsabs=1e-14, limit=200)[0]
        assert_allclose(cdf(d, x), ref, atol=1e-12)
    assert cdf(d, -1.0) == 0.0 and cdf(d, 1.0) == 1.0


def test_arcsine_cdf():
    x = np.linspace(-0.99, 0.99, 9)
    assert_allclose(cdf(DensityParams.of(0.0), x), 0.5 + np.arcsin(x) / np.pi, atol=1e-15)


def test_cdf_derivative_is_pdf():
    d = DensityParams.of(0.85, -0.6, 0.1)
    x, h = np.linspace(-0.95, 0.95, 21), 1e-6
    assert_allclose((cdf(d, x + h) - cdf(d, x - h)) / (2 * h), pdf(d, x), atol=1e-7)


def test_positive():
    x = np.linspace(-0.999, 0.999, 301)
    assert pdf(DensityParams.of(-0.9, 0.9, 0.1), x).min() > 0
    assert f4_conj(0.9, 1.0, 0.9, -1.0, x).min() > 0


def test_validation():
    with pytest.raises(IllConditioned):
        DensityParams.of(0.2, 0.2)
    with pytest.raises(DomainError):
        ConjugatePairs.of(0.5, 1.2)
    with pytest.raises(DomainError):
        ConjugatePairs.of(0.1, 0.1, 0.2, 0.2, 0.3, 0.3)
    with pytest.raises(DomainError):
        f2_conj(0.5, 0.5, 1.0)
