"""Chebyshev polynomials of both kinds, finite series, and generating functions.

Single polynomials are evaluated by the forward three-term recurrence
``P_{n+1} = 2x P_n - P_{n-1}``; series are summed with the backward
(Clenshaw) recurrence.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._backend import core
from .errors import DomainError

#: slack allowed on |x| <= 1 so rounded endpoints are accepted
X_TOL = 1e-14


class ChebKind(enum.Enum):
    FIRST = 1
    SECOND = 2


@dataclass(frozen=True)
class ChebSeries:
    """Finite Chebyshev series sum_j coeffs[j] P_j(x) with P = T or U."""

    kind: ChebKind
    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("series must have at least one coefficient")
        if not all(np.isfinite(coeffs)):
            raise ValueError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, x):
        return clenshaw(self, x)


def check_unit(x, name="x", tol=X_TOL):
    """Raise DomainError unless every entry of ``x`` lies in [-1-tol, 1+tol]."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(np.abs(arr) > 1.0 + tol):
        raise DomainError(f"{name} must lie in [-1, 1], got {x!r}")
    return arr


def check_rho(a, name="a", cap=1.0):
    """Raise DomainError unless |a| < 1 (or |a| <= cap when cap < 1)."""
    a = float(a)
    ok = abs(a) < 1.0 if cap >= 1.0 else abs(a) <= cap
    if not (np.isfinite(a) and ok):
        bound = "< 1" if cap >= 1.0 else f"<= {cap}"
        raise DomainError(f"|{name}| must be {bound}, got {a!r}")
    return a


def cheb_eval(kind: ChebKind, n: int, x: float, strict: bool = True) -> float:
    """T_n(x) or U_n(x) by forward recurrence.

    With ``strict=False`` the |x| <= 1 check is skipped, which is only
    meaningful for internal extrapolation.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if strict:
        check_unit(x)
    return float(core.cheb_table(kind.value, int(n), float(x))[n])


def cheb_values(kind: ChebKind, n: int, x: float) -> np.ndarray:
    """Array [P_0(x), ..., P_n(x)] from a single recurrence sweep."""
    check_unit(x)
    return core.cheb_table(kind.value, int(n), float(x))


def clenshaw(series: ChebSeries, x):
    """Evaluate a Chebyshev series at a point or array of points."""
    xa = check_unit(x)
    out = core.clenshaw(np.asarray(series.coeffs), series.kind.value, xa)
    return float(out) if xa.ndim == 0 else out


def gen_fn(kind: ChebKind, a: float, x):
    """Closed-form generating function sum_j a^j P_j(x).

    First kind: (1 - a x)/(1 + a^2 - 2 a x). Second kind: 1/(1 + a^2 - 2 a x).
    The denominator is at least (1 - |a|)^2 > 0.
    """
    a = check_rho(a)
    x = check_unit(x)
    # (1 - a)^2 + 2a(1 - x), or (1 + a)^2 - 2a(1 + x): both terms >= 0, no cancellation
    if a >= 0:
        denom = (1.0 - a) ** 2 + 2.0 * a * (1.0 - x)
    else:
        denom = (1.0 + a) ** 2 - 2.0 * a * (1.0 + x)
    if kind is ChebKind.FIRST:
        out = (1.0 - a * x) / denom
    else:
        out = 1.0 / denom
    return float(out) if np.ndim(out) == 0 else out


def gen_fn_series(kind: ChebKind, a: float, x: float, N: int) -> float:
    """Partial sum sum_{j=0}^{N} a^j P_j(x) of the generating function."""
    a = check_rho(a)
    check_unit(x)
    if N < 0:
        raise ValueError("N must be nonnegative")
    powers = a ** np.arange(N + 1)
    return float(core.clenshaw(powers, kind.value, float(x)))


def gen_fn_tail_bound(kind: ChebKind, a: float, N: int) -> float:
    """Upper bound on |gen_fn - gen_fn_series(N)| from |T_j| <= 1, |U_j| <= j+1."""
    r = abs(check_rho(a))
    tail = r ** (N + 1) / (1.0 - r)
    if kind is ChebKind.FIRST:
        return tail
    return (N + 2) * tail + r ** (N + 2) / (1.0 - r) ** 2
