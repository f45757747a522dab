"""The f_nT density family on (-1, 1) and its conjugate-pair forms.

    f_nT(x | a) = B_n(a) f_C(x) prod_i phi_T(x | a_i),  f_C(x) = 1/(pi sqrt(1-x^2)).

Every density here has the Fourier form f(x) = f_C(x) (1 + sum_j c_j T_j(x)).
Substituting x = cos(theta) turns f_C dx into dtheta/pi and T_j into
cos(j theta), so the distribution function is

    F(x) = 1 - (theta + sum_j (c_j/j) sin(j theta)) / pi,  theta = arccos x.

A complex-conjugate parameter pair rho e^{+-i theta} enters only through
rho and y = cos(theta): (1 - a x)(1 - b x) = 1 - 2 rho x y + rho^2 x^2 and
(1 + a^2 - 2 a x)(1 + b^2 - 2 b x) = w(x, y | rho).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np
import scipy.fft

from ._backend import core
from .cheb_core import ChebKind, check_rho, cheb_values
from .coeffs import ParamVector, b_coeffs, big_B, t_coeffs
from .errors import DomainError
from .kernels import _w

#: truncate Fourier tails once they can no longer move a double
FOURIER_TAIL = 1e-17
MAX_TERMS = 200_000


def _open_unit(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(np.abs(x) >= 1.0):
        raise DomainError("density argument must lie in the open interval (-1, 1)")
    return x


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def arcsine_pdf(x):
    """f_C(x) = 1 / (pi sqrt(1 - x^2))."""
    x = _open_unit(x)
    return _out(1.0 / (np.pi * np.sqrt((1.0 - x) * (1.0 + x))))


def semicircle_pdf(x):
    """f_W(x) = (2/pi) sqrt(1 - x^2) on [-1, 1]."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0):
        raise DomainError("semicircle density is supported on [-1, 1]")
    return _out(2.0 / np.pi * np.sqrt((1.0 - x) * (1.0 + x)))


def _fC(x):
    return 1.0 / (np.pi * np.sqrt((1.0 - x) * (1.0 + x)))


@dataclass(frozen=True)
class DensityParams:
    """Real, pairwise distinct parameters of f_nT."""

    params: ParamVector

    def __post_init__(self):
        if not isinstance(self.params, ParamVector):
            object.__setattr__(self, "params", ParamVector(tuple(self.params)))
        self.params.require_distinct()

    @classmethod
    def of(cls, *a: float) -> "DensityParams":
        return cls(ParamVector(a))

    @property
    def n(self) -> int:
        return self.params.n

    @cached_property
    def B(self) -> float:
        return big_B(self.params)

    @cached_property
    def b(self) -> tuple[float, ...]:
        return tuple(b_coeffs(self.params))


@dataclass(frozen=True)
class ConjugatePairs:
    """m = 1 or 2 pairs (rho_i, y_i), each standing for rho_i e^{+-i arccos y_i}."""

    pairs: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pairs = tuple((float(r), float(y)) for r, y in self.pairs)
        if len(pairs) not in (1, 2):
            raise DomainError(f"only 1 or 2 conjugate pairs are supported, got {len(pairs)}")
        for i, (r, y) in enumerate(pairs):
            check_rho(r, f"rho{i + 1}")
            if not (np.isfinite(y) and abs(y) <= 1.0):
                raise DomainError(f"|y{i + 1}| must be <= 1, got {y!r}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, *flat: float) -> "ConjugatePairs":
        """ConjugatePairs.of(rho1, y1[, rho2, y2])."""
        if len(flat) % 2:
            raise DomainError("expected rho, y values in pairs")
        return cls(tuple(zip(flat[::2], flat[1::2])))

    @property
    def m(self) -> int:
        return len(self.pairs)


Density = Union[DensityParams, ConjugatePairs]


def density_eval(d: DensityParams, x):
    """B_n f_C(x) prod_i phi_T(x | a_i)."""
    x = _open_unit(x)
    out = d.B * _fC(x)
    for a in d.params.a:
        out = out * (1.0 - a * x) / (1.0 + a * a - 2.0 * a * x)
    return _out(out)


def _fnT_coeffs(d: DensityParams, J: int) -> np.ndarray:
    """c_1..c_J with c_j = B_n t_j / 2^(n-1)."""
    return d.B / 2.0 ** (d.n - 1) * t_coeffs(d.params, J)[1:]


def density_series_eval(d: DensityParams, x, N: int):
    """f_C(x) (1 + (B_n / 2^(n-1)) sum_{j=1}^{N} t_j T_j(x))."""
    x = _open_unit(x)
    c = np.concatenate(([1.0], _fnT_coeffs(d, N)))
    return _out(_fC(x) * core.clenshaw(c, 1, x))


def _conj_ratio(rho, y, x):
    # phi_T(x|a) phi_T(x|b) for the pair a, b = rho e^{+-i arccos y}
    return (1.0 - 2.0 * x * y * rho + rho * rho * x * x) / _w(x, y, rho)


def _check_pair(rho, y, i=""):
    rho = check_rho(rho, f"rho{i}")
    y = float(y)
    if not (np.isfinite(y) and abs(y) <= 1.0):
        raise DomainError(f"|y{i}| must be <= 1, got {y!r}")
    return rho, y


def b2_conj(rho: float) -> float:
    """B_2 for a conjugate pair: 2 (1 - rho^2)/(2 - rho^2)."""
    rho = check_rho(rho, "rho")
    return 2.0 * (1.0 - rho * rho) / (2.0 - rho * rho)


def f2_conj(rho: float, y: float, x):
    """f_2(x | rho, y) = f_C(x) B_2 (1 - 2 x y rho + rho^2 x^2) / w(x, y | rho)."""
    rho, y = _check_pair(rho, y)
    x = _open_unit(x)
    return _out(_fC(x) * b2_conj(rho) * _conj_ratio(rho, y, x))


def f2_coeffs(rho: float, y: float, J: int) -> np.ndarray:
    """c_1..c_J = ((1 - rho^2) rho^j U_j(y) + 2 rho^j T_j(y)) / (2 - rho^2)."""
    rho, y = _check_pair(rho, y)
    pw = rho ** np.arange(J + 1)
    u = cheb_values(ChebKind.SECOND, J, y)
    t = cheb_values(ChebKind.FIRST, J, y)
    return ((1.0 - rho * rho) * pw * u + 2.0 * pw * t)[1:] / (2.0 - rho * rho)


def f2_conj_series(rho: float, y: float, x, N: int):
    """Truncation of the T_j expansion of f2_conj through j = N."""
    x = _open_unit(x)
    c = np.concatenate(([1.0], f2_coeffs(rho, y, N)))
    return _out(_fC(x) * core.clenshaw(c, 1, x))


@dataclass(frozen=True)
class B4RealCoeffs:
    alpha: float
    beta1: float
    beta2: float
    gamma4: float


def b4_real_coeffs(rho1: float, rho2: float) -> B4RealCoeffs:
    p1, p2 = rho1 * rho1, rho2 * rho2
    pp = p1 * p2
    alpha = (1.0 - pp) * (4.0 + (4.0 - pp) * (1.0 - p1) * (1.0 - p2))
    beta1 = pp * (1.0 - p2) * (2.0 - p1)
    beta2 = pp * (1.0 - p1) * (2.0 - p2)
    gamma4 = rho1 * rho2 * ((2.0 + pp) * (1.0 - p1) * (1.0 - p2) + 2.0 * (1.0 - pp))
    return B4RealCoeffs(alpha, beta1, beta2, gamma4)


def b4_conj(rho1: float, y1: float, rho2: float, y2: float) -> float:
    """Normalizer of f_4 for two conjugate pairs, as a real rational function.

    8 (1-rho1^2)(1-rho2^2) w(y1, y2 | rho1 rho2) divided by
    alpha + 4 (beta1 y1^2 + beta2 y2^2) - 4 gamma4 y1 y2.
    """
    rho1, y1 = _check_pair(rho1, y1, 1)
    rho2, y2 = _check_pair(rho2, y2, 2)
    c = b4_real_coeffs(rho1, rho2)
    num = 8.0 * (1.0 - rho1 ** 2) * (1.0 - rho2 ** 2) * _w(y1, y2, rho1 * rho2)
    den = c.alpha + 4.0 * (c.beta1 * y1 * y1 + c.beta2 * y2 * y2) - 4.0 * c.gamma4 * y1 * y2
    return float(num / den)


def conj_symmetric_functions(rho1, y1, rho2, y2):
    """Real (S_1, S_2, S_3, S_4, P_4) of the four conjugate parameters."""
    S1 = 2.0 * rho1 * y1 + 2.0 * rho2 * y2
    S2 = rho1 ** 2 + rho2 ** 2 + 4.0 * rho1 * rho2 * y1 * y2
    S3 = 2.0 * rho1 ** 2 * rho2 * y2 + 2.0 * rho2 ** 2 * rho1 * y1
    S4 = rho1 ** 2 * rho2 ** 2
    P4 = (1.0 - rho1 ** 2) * (1.0 - rho2 ** 2) * float(_w(y1, y2, rho1 * rho2))
    return S1, S2, S3, S4, P4


def f4_conj(rho1: float, y1: float, rho2: float, y2: float, x, with_arcsine: bool = True):
    """f_4 = b4_conj f_C(x) prod_i (1 - 2 rho_i x y_i + rho_i^2 x^2)/w(x, y_i | rho_i).

    ``with_arcsine=False`` drops the f_C factor; that variant does not
    integrate to 1 and exists only for diagnostics.
    """
    B = b4_conj(rho1, y1, rho2, y2)
    x = _open_unit(x)
    g = B * _conj_ratio(rho1, y1, x) * _conj_ratio(rho2, y2, x)
    return _out(_fC(x) * g if with_arcsine else g)


def marginal_fC(rho: float, x):
    """Integral over y of f2_conj(rho, y, x) f_C(y).

    f_C(x) 2 (1 + rho^2 - x^2 rho^2 (3 - rho^2)) / ((2 - rho^2)((1 + rho^2)^2 - 4 rho^2 x^2)).
    """
    rho = check_rho(rho, "rho")
    x = _open_unit(x)
    r2 = rho * rho
    num = 2.0 * (1.0 + r2 - x * x * r2 * (3.0 - r2))
    den = (2.0 - r2) * ((1.0 + r2) ** 2 - 4.0 * r2 * x * x)
    return _out(_fC(x) * num / den)


def marginal_fW(rho: float, x):
    """Integral over y of f2_conj(rho, y, x) f_W(y).

    Only the T_2 term of the expansion survives the semicircle average:
    f_C(x) (1 - rho^2 T_2(x) / (2 - rho^2)).
    """
    rho = check_rho(rho, "rho")
    x = _open_unit(x)
    r2 = rho * rho
    return _out(_fC(x) * (1.0 - r2 * (2.0 * x * x - 1.0) / (2.0 - r2)))


def pdf(d: Density, x):
    """Density value for either parametrization."""
    if isinstance(d, DensityParams):
        return density_eval(d, x)
    if d.m == 1:
        (rho, y), = d.pairs
        return f2_conj(rho, y, x)
    (r1, y1), (r2, y2) = d.pairs
    return f4_conj(r1, y1, r2, y2, x)


def _geometric_terms(scale: float, r: float, degree: int = 0) -> int:
    """Smallest J with scale * sum_{j>J} (j+1)^degree r^j below FOURIER_TAIL."""
    if r == 0.0 or scale == 0.0:
        return 0
    J = 1
    while J < MAX_TERMS:
        tail = scale * (J + 2) ** degree * r ** (J + 1) / (1.0 - r) ** (degree + 1)
        if tail <= FOURIER_TAIL:
            return J
        J += max(1, J // 8)
    return MAX_TERMS


def _dct_coeffs(g, r: float) -> np.ndarray:
    """Chebyshev coefficients c_1.. of g (normalised so c_0 = 1 ideally)."""
    if r == 0.0:
        M = 64
    else:
        M = max(64, 2 * math.ceil(80.0 / -math.log(r)))
        M = 1 << (M - 1).bit_length()
    M = min(M, 1 << 21)
    nodes = np.cos(np.pi * (2 * np.arange(M) + 1) / (2 * M))
    c = scipy.fft.dct(g(nodes), type=2) / M
    c = c[1:M // 2]
    big = np.flatnonzero(np.abs(c) > FOURIER_TAIL)
    return c[: big[-1] + 1] if big.size else c[:0]


def fourier_coeffs(d: Density) -> np.ndarray:
    """c_1..c_J of f(x) = f_C(x)(1 + sum c_j T_j(x)), truncated at ~1e-17."""
    if isinstance(d, DensityParams):
        r = max(abs(a) for a in d.params.a)
        scale = d.B / 2.0 ** (d.n - 1) * sum(abs(b) for b in d.b)
        return _fnT_coeffs(d, _geometric_terms(scale, r))
    if d.m == 1:
        (rho, y), = d.pairs
        J = _geometric_terms(3.0, abs(rho), degree=1)
        return f2_coeffs(rho, y, J)
    (r1, y1), (r2, y2) = d.pairs
    B = b4_conj(r1, y1, r2, y2)
    return _dct_coeffs(lambda x: B * _conj_ratio(r1, y1, x) * _conj_ratio(r2, y2, x),
                       max(abs(r1), abs(r2)))


def cdf_from_coeffs(c: np.ndarray, x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0) or not np.all(np.isfinite(x)):
        raise DomainError("cdf argument must lie in [-1, 1]")
    theta = np.arccos(x)
    s = core.sine_series(c / np.arange(1, c.size + 1), theta) if c.size else 0.0
    return _out(np.clip(1.0 - (theta + s) / np.pi, 0.0, 1.0))


def cdf(d: Density, x):
    """P(X <= x) from the sine series of the Fourier form."""
    return cdf_from_coeffs(fourier_coeffs(d), x)
