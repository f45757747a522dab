"""Partial fractions, normalizers and Fourier drivers for products of phi_T.

For pairwise distinct a_1..a_n in (-1, 1),

    prod_i (1 - a_i x)/(1 + a_i^2 - 2 a_i x)
        = 1/2^n + (1/2^n) sum_k b_k (1 - a_k^2)/(1 + a_k^2 - 2 a_k x),

with b_k = prod_{j != k} gamma(a_k, a_j) / ((a_k - a_j)(1 - a_k a_j)) and
gamma(a, b) = 2a - b - a^2 b. Integrating against the arcsine density gives
the normalizer B_n = 2^n / (1 + sum_k b_k), and expanding each pole in T_j
gives the Fourier drivers t_j = sum_k b_k a_k^j.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .cheb_core import check_rho
from .errors import DomainError, IllConditioned, Unsupported

#: minimum allowed |a_k - a_j| before the b_k are considered unusable
SEPARATION_EPSILON = 1e-6


@dataclass(frozen=True)
class ParamVector:
    """Real parameters a_1..a_n with |a_i| < 1."""

    a: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in np.atleast_1d(np.asarray(self.a, dtype=float)))
        if not vals:
            raise DomainError("need at least one parameter")
        for i, v in enumerate(vals):
            check_rho(v, f"a[{i}]")
        object.__setattr__(self, "a", vals)

    @property
    def n(self) -> int:
        return len(self.a)

    def __len__(self):
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def min_separation(self) -> float:
        if self.n < 2:
            return math.inf
        s = sorted(self.a)
        return min(b - a for a, b in zip(s, s[1:]))

    def require_distinct(self, eps: float = SEPARATION_EPSILON) -> None:
        gap = self.min_separation()
        if gap < eps:
            raise IllConditioned(
                f"parameters closer than {eps:g} (min gap {gap:.3g}); "
                "confluent partial fractions are not supported")


def _as_params(params) -> ParamVector:
    return params if isinstance(params, ParamVector) else ParamVector(tuple(params))


def gamma_ab(a: float, b: float) -> float:
    return 2.0 * a - b - a * a * b


def b_coeffs(params) -> list[float]:
    """Partial-fraction weights b_{n,1..n} (empty product = 1 for n = 1)."""
    params = _as_params(params)
    params.require_distinct()
    a = params.a
    # multiply factors largest |a_j| first so rounding is order-independent
    order = sorted(range(len(a)), key=lambda j: -abs(a[j]))
    out = []
    for k, ak in enumerate(a):
        prod = 1.0
        for j in order:
            if j == k:
                continue
            aj = a[j]
            prod *= gamma_ab(ak, aj) / ((ak - aj) * (1.0 - ak * aj))
        out.append(prod)
    return out


def big_B(params) -> float:
    """Normalizer B_n = 1 / (2^-n (1 + sum_k b_k))."""
    params = _as_params(params)
    b = b_coeffs(params)
    return 2.0 ** params.n / math.fsum([1.0, *b])


@dataclass(frozen=True)
class SymmetricFunctionSet:
    """Elementary symmetric S_1..S_n, P_n = prod_{i<j}(1 - a_i a_j), and Delta."""

    S: tuple[float, ...]
    P: float
    delta: Callable[[int], float]

    def S_k(self, k: int) -> float:
        """S_k with the conventions S_0 = 1 and S_k = 0 for k > n."""
        if k == 0:
            return 1.0
        return self.S[k - 1] if k <= len(self.S) else 0.0


def elementary_symmetric(a: Sequence[float]) -> list[float]:
    """[e_0, e_1, ..., e_n] from the coefficients of prod (1 + a_i t)."""
    e = [1.0]
    for ai in a:
        e = [1.0] + [e[k] + ai * e[k - 1] for k in range(1, len(e))] + [ai * e[-1]]
    return e


def complete_homogeneous(a: Sequence[float], m: int) -> list[float]:
    """[h_0, ..., h_m]: h_k is the sum of all degree-k monomials in a."""
    h = [1.0] + [0.0] * m
    for ai in a:
        for k in range(1, m + 1):
            h[k] += ai * h[k - 1]
    return h


def sym_funcs(params) -> SymmetricFunctionSet:
    params = _as_params(params)
    a = params.a
    e = elementary_symmetric(a)
    P = math.prod(1.0 - ai * aj for ai, aj in combinations(a, 2))
    cache = [1.0]

    def delta(m: int) -> float:
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m >= len(cache):
            cache[:] = complete_homogeneous(a, max(m, 2 * len(cache)))
        return cache[m]

    return SymmetricFunctionSet(tuple(e[1:]), P, delta)


def big_B_closed(params, reading: str = "corrected") -> float:
    """Closed-form B_n for n = 2, 3, 4 in terms of S_k and P_n.

    ``reading="printed"`` evaluates two alternative forms kept for comparison:
    an n = 3 denominator using P of the first two parameters only, and an
    n = 4 denominator carrying -S_4 (4 - 2 S_2 + 3 S_4). Both disagree with the
    general normalizer; the default forms use P_3 and -S_4 (4 - 3 S_2 + 3 S_4).
    """
    params = _as_params(params)
    n = params.n
    if n not in (2, 3, 4):
        raise Unsupported(f"closed-form normalizer only for n in (2, 3, 4), got {n}")
    if reading not in ("corrected", "printed"):
        raise ValueError(f"unknown reading {reading!r}")
    sf = sym_funcs(params)
    S, P = sf.S_k, sf.P
    if n == 2:
        return 2.0 * P / (P + 1.0)
    if n == 3:
        p_den = P if reading == "corrected" else sym_funcs(params.a[:2]).P
        return 4.0 * P / (p_den + 3.0 - S(2))
    c2 = 3.0 if reading == "corrected" else 2.0
    den = (P + 7.0 - 3.0 * S(2) + S(3) * (S(1) - S(3))
           - S(4) * (4.0 - c2 * S(2) + 3.0 * S(4)))
    return 8.0 * P / den


def t2_closed(j: int, a1: float, a2: float) -> float:
    """t_j for n = 2 without the (a1 - a2) denominator.

    t_j = sum_{k=0}^{j} a1^(j-k) a2^k + (a1^j + a2^j)/(1 - a1 a2).
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    a1 = check_rho(a1, "a1")
    a2 = check_rho(a2, "a2")
    h = complete_homogeneous((a1, a2), j)[j]
    return h + (a1 ** j + a2 ** j) / (1.0 - a1 * a2)


def t_coeff(j: int, params) -> float:
    """Fourier driver t_j = sum_k b_k a_k^j."""
    params = _as_params(params)
    if j < 0:
        raise ValueError("j must be nonnegative")
    if params.n == 2:
        params.require_distinct()
        return t2_closed(j, *params.a)
    b = b_coeffs(params)
    return math.fsum(bk * ak ** j for bk, ak in zip(b, params.a))


def t_coeffs(params, J: int) -> np.ndarray:
    """Vector [t_0, ..., t_J] by the generic formula."""
    params = _as_params(params)
    b = np.asarray(b_coeffs(params))
    a = np.asarray(params.a)
    powers = a[:, None] ** np.arange(J + 1)[None, :]
    return b @ powers


@dataclass(frozen=True)
class PoleTerm:
    k: int
    coefficient: float
    pole_param: float


@dataclass(frozen=True)
class PartialFractionDecomposition:
    """constant + sum_k coefficient_k / (1 + a_k^2 - 2 a_k x)."""

    constant: float
    terms: tuple[PoleTerm, ...]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.full_like(x, self.constant)
        for t in self.terms:
            a = t.pole_param
            out = out + t.coefficient / (1.0 + a * a - 2.0 * a * x)
        return float(out) if out.ndim == 0 else out


def phi_product(params, x):
    """prod_i (1 - a_i x)/(1 + a_i^2 - 2 a_i x) evaluated directly."""
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    for a in _as_params(params).a:
        out = out * (1.0 - a * x) / (1.0 + a * a - 2.0 * a * x)
    return out


def two_pole_split(a: float, b: float) -> tuple[float, float]:
    """(p, q) with 1/(D_a D_b) = p/D_a + q/D_b, D_c = 1 + c^2 - 2 c x."""
    d = (a - b) * (1.0 - a * b)
    return a / d, -b / d


def partial_fractions(params) -> PartialFractionDecomposition:
    """Decompose prod phi_T(x | a_i) by induction on the number of factors.

    Each factor is split as 1/2 + (1 - a^2)/(2 D_a); multiplying an existing
    decomposition by it halves every coefficient, adds a new pole for the
    constant part, and redistributes the cross terms with ``two_pole_split``.
    The result is independent of the closed-form b_k (see ``b_coeffs``).
    """
    params = _as_params(params)
    params.require_distinct()
    a = params.a
    constant = 0.5
    coef = [0.5 * (1.0 - a[0] ** 2)]
    for m in range(1, len(a)):
        am = a[m]
        half = 0.5 * (1.0 - am * am)
        new_pole = constant * half
        cross = []
        for k, ck in enumerate(coef):
            p, q = two_pole_split(a[k], am)
            cross.append((ck * half * p, ck * half * q))
        coef = [0.5 * ck + cp for ck, (cp, _) in zip(coef, cross)]
        coef.append(math.fsum([new_pole, *(cq for _, cq in cross)]))
        constant *= 0.5
    terms = tuple(PoleTerm(k, c, ak) for k, (c, ak) in enumerate(zip(coef, a)))
    return PartialFractionDecomposition(constant, terms)


def partial_fractions_closed(params) -> PartialFractionDecomposition:
    """Same decomposition from the closed-form weights b_k (1 - a_k^2)/2^n."""
    params = _as_params(params)
    b = b_coeffs(params)
    scale = 0.5 ** params.n
    terms = tuple(PoleTerm(k, scale * bk * (1.0 - ak * ak), ak)
                  for k, (bk, ak) in enumerate(zip(b, params.a)))
    return PartialFractionDecomposition(scale, terms)
