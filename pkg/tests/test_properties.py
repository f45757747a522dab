import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from chebprob.cheb_core import ChebKind, cheb_eval
from chebprob.coeffs import ParamVector, big_B, partial_fractions, phi_product
from chebprob.densities import ConjugatePairs, DensityParams, cdf, pdf
from chebprob.kernels import KernelId, KernelPoint, kernel_closed
from chebprob.sampler import inverse_cdf

unit = st.floats(-1.0, 1.0)
rho = st.floats(-0.9, 0.9)
open_unit = st.floats(-0.99, 0.99)


def separated(values, gap=1e-2):
    s = sorted(values)
    return all(b - a > gap for a, b in zip(s, s[1:]))


params = st.lists(rho, min_size=1, max_size=6).filter(separated)


@given(st.integers(0, 30), unit)
def test_t_bounded_u_bounded(n, x):
    assert abs(cheb_eval(ChebKind.FIRST, n, x)) <= 1 + 1e-12
    assert abs(cheb_eval(ChebKind.SECOND, n, x)) <= n + 1 + 1e-9


@given(st.integers(1, 20), st.integers(1, 20), unit)
def test_product_formula(m, n, x):
    # 2 T_m T_n = T_{m+n} + T_{|m-n|}
    T = ChebKind.FIRST
    lhs = 2 * cheb_eval(T, m, x) * cheb_eval(T, n, x)
    assert_allclose(lhs, cheb_eval(T, m + n, x) + cheb_eval(T, abs(m - n), x), atol=1e-11)


@given(unit, unit, rho)
def test_even_odd_split(x, y, r):
    even = kernel_closed(KernelId.EvenT, KernelPoint(x, y, r))
    odd = kernel_closed(KernelId.OddT, KernelPoint(x, y, r))
    assert_allclose(even + odd, (1 - r * x) / (1 + r * r - 2 * r * x), rtol=1e-12, atol=1e-12)


@given(params)
@settings(max_examples=60)
def test_partial_fractions_reconstruct(a):
    x = np.linspace(-0.99, 0.99, 41)
    pf = partial_fractions(ParamVector(tuple(a)))
    assert_allclose(pf(x), phi_product(a, x), rtol=1e-9, atol=1e-9)


@given(params)
@settings(max_examples=60)
def test_B_positive(a):
    assert big_B(a) > 0


@given(params, open_unit)
@settings(max_examples=60)
def test_density_positive_and_cdf_in_range(a, x):
    d = DensityParams(ParamVector(tuple(a)))
    assert pdf(d, x) > 0
    assert 0.0 <= cdf(d, x) <= 1.0


@given(rho, unit, st.floats(0.001, 0.999))
@settings(max_examples=60)
def test_inverse_cdf_roundtrip(r, y, u):
    d = ConjugatePairs.of(r, y)
    x = float(inverse_cdf(d, np.array([u]))[0])
    assert abs(cdf(d, x) - u) <= 1e-11
