"""Chebyshev kernel identities and the f_nT family of densities on (-1, 1)."""
from ._backend import BACKEND
from .cheb_core import ChebKind, ChebSeries, cheb_eval, clenshaw, gen_fn, gen_fn_series
from .coeffs import (
    ParamVector,
    PartialFractionDecomposition,
    b_coeffs,
    big_B,
    big_B_closed,
    gamma_ab,
    partial_fractions,
    sym_funcs,
    t2_closed,
    t_coeff,
)
from .densities import (
    ConjugatePairs,
    DensityParams,
    b4_conj,
    cdf,
    density_eval,
    density_series_eval,
    f2_conj,
    f2_conj_series,
    f4_conj,
    marginal_fC,
    marginal_fW,
    pdf,
)
from .errors import DomainError, IllConditioned, NonConvergence, Unsupported
from .kernels import KernelId, KernelPoint, kernel_closed, kernel_series, kernel_tail_bound, w_denom
from .quadrature import QuadRule, gauss_cheb_rule, integrate
from .sampler import SampleConfig, sample

__version__ = "0.1.0"
