import numpy as np
import pytest
from numpy.testing import assert_allclose

from chebprob.cheb_core import (
    ChebKind,
    ChebSeries,
    cheb_eval,
    cheb_values,
    clenshaw,
    gen_fn,
    gen_fn_series,
    gen_fn_tail_bound,
)
from chebprob.errors import DomainError

T, U = ChebKind.FIRST, ChebKind.SECOND


def test_trig_definitions():
    theta = np.linspace(0.05, np.pi - 0.05, 37)
    for n in range(12):
        for t in theta:
            assert_allclose(cheb_eval(T, n, np.cos(t)), np.cos(n * t), atol=1e-13)
            assert_allclose(cheb_eval(U, n, np.cos(t)), np.sin((n + 1) * t) / np.sin(t),
                            atol=1e-12)


def test_endpoint_values():
    for n in range(20):
        assert cheb_eval(T, n, 1.0) == 1.0
        assert cheb_eval(T, n, -1.0) == (-1.0) ** n
        assert cheb_eval(U, n, 1.0) == n + 1
        assert cheb_eval(U, n, -1.0) == (-1.0) ** n * (n + 1)


def test_values_match_numpy_chebyshev():
    x = 0.3141
    vals = cheb_values(T, 15, x)
    ref = [np.polynomial.chebyshev.chebval(x, np.eye(16)[k]) for k in range(16)]
    assert_allclose(vals, ref, rtol=0, atol=1e-14)


def test_domain_checks():
    with pytest.raises(DomainError):
        cheb_eval(T, 3, 1.5)
    with pytest.raises(ValueError):
        cheb_eval(T, -1, 0.2)
    # strict=False allows extrapolation
    assert_allclose(cheb_eval(T, 2, 2.0, strict=False), 7.0)


def test_clenshaw_matches_direct_sum():
    rng = np.random.default_rng(0)
    c = rng.normal(size=9)
    x = np.linspace(-1, 1, 33)
    for kind in (T, U):
        direct = sum(ck * np.array([cheb_eval(kind, k, xi) for xi in x]) for k, ck in enumerate(c))
        assert_allclose(clenshaw(ChebSeries(kind, tuple(c)), x), direct, atol=1e-13)


def test_series_validation():
    with pytest.raises(ValueError):
        ChebSeries(T, ())
    with pytest.raises(ValueError):
        ChebSeries(T, (1.0, np.nan))


def test_generating_functions():
    for kind in (T, U):
        for a in (-0.9, -0.3, 0.0, 0.5, 0.95):
            for x in (-1.0, -0.2, 0.7, 1.0):
                N = 60
                while gen_fn_tail_bound(kind, a, N) > 1e-12:
                    N *= 2
                exact = gen_fn(kind, a, x)
                err = abs(exact - gen_fn_series(kind, a, x, N))
                assert err <= gen_fn_tail_bound(kind, a, N) + 1e-14 * max(1.0, abs(exact))


def test_generating_function_closed_forms():
    assert_allclose(gen_fn(T, 0.5, 0.5), (1 - 0.25) / (1 + 0.25 - 0.5))
    assert_allclose(gen_fn(U, 0.5, 0.5), 1 / (1 + 0.25 - 0.5))


def test_generating_function_rejects_unit_parameter():
    with pytest.raises(DomainError):
        gen_fn(T, 1.0, 0.0)
