"""Closed forms of bivariate and diagonal Chebyshev kernels.

Every kernel is a power series in rho whose terms are products of Chebyshev
polynomials, e.g. the Poisson-Mehler kernel

    GU(x, y | rho) = sum_j rho^j U_j(x) U_j(y) = (1 - rho^2) / w(x, y | rho),

where w(x, y | rho) = (1-rho^2)^2 - 4 x y rho (1+rho^2) + 4 rho^2 (x^2+y^2).
For each kernel we provide the rational closed form, the truncated defining
series, and a rigorous bound on the truncation error.

Three of the rational forms differ from the versions commonly quoted; the
ones here agree with their series (see ``tests/test_kernels.py``):

* UShift1: sum_j rho^j U_{j+1}(x) U_j(y) = 2 (x - rho y) / w
* TUDiag:  numerator 1 + rho - 2 rho x^2
* T4:      the even-part kernel evaluated at (T_2(x), rho^2)
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .cheb_core import ChebKind, check_rho, check_unit, cheb_values
from .errors import DomainError

#: public cap on |rho|; tail bounds grow without limit as |rho| -> 1
RHO_MAX = 0.99


class KernelId(enum.Enum):
    GU = "GU"                    # sum rho^j U_j(x) U_j(y)
    GT = "GT"                    # sum rho^j T_j(x) T_j(y)
    GUT = "GUT"                  # sum rho^j U_j(x) T_j(y)
    UShift1 = "UShift1"          # sum rho^j U_{j+1}(x) U_j(y)
    TShift1 = "TShift1"          # sum rho^j T_j(x) T_{j+1}(y)
    UShift2Diag = "UShift2Diag"  # sum rho^j U_j(x) U_{j+2}(x)
    SymA = "SymA"                # x*UShift1(x,y) + y*UShift1(y,x)
    EvenT = "EvenT"              # sum rho^{2j} T_{2j}(x)
    OddT = "OddT"                # sum rho^{2j+1} T_{2j+1}(x)
    TUDiag = "TUDiag"            # sum rho^j U_j(x) T_j(x)
    T4 = "T4"                    # sum rho^{4j} T_{4j}(x)

    @property
    def diagonal(self) -> bool:
        return self in _DIAGONAL


_DIAGONAL = frozenset({KernelId.UShift2Diag, KernelId.EvenT, KernelId.OddT,
                       KernelId.TUDiag, KernelId.T4})

#: kernels whose closed form is nonnegative on the whole domain
NONNEGATIVE = (KernelId.GT, KernelId.EvenT, KernelId.TUDiag, KernelId.T4,
               KernelId.SymA)


@dataclass(frozen=True)
class KernelPoint:
    x: float
    y: float = 0.0
    rho: float = 0.0

    def __post_init__(self):
        check_unit(self.x, "x")
        check_unit(self.y, "y")
        check_rho(self.rho, "rho", cap=RHO_MAX)
        object.__setattr__(self, "x", min(1.0, max(-1.0, float(self.x))))
        object.__setattr__(self, "y", min(1.0, max(-1.0, float(self.y))))
        object.__setattr__(self, "rho", float(self.rho))


def _factor(rho, s_half_sq, c_half_sq):
    # 1 + rho^2 - 2 rho cos(d) without cancellation for either sign of rho
    return np.where(rho >= 0,
                    (1.0 - rho) ** 2 + 4.0 * rho * s_half_sq,
                    (1.0 + rho) ** 2 - 4.0 * rho * c_half_sq)


def w_denom(x, y, rho):
    """w(x, y | rho), evaluated in factored form.

    With x = cos(t), y = cos(p): w = (1 + rho^2 - 2 rho cos(t-p)) *
    (1 + rho^2 - 2 rho cos(t+p)) >= (1 - |rho|)^4 > 0.
    """
    x = check_unit(x, "x")
    y = check_unit(y, "y")
    rho = np.asarray(rho, dtype=float)
    if np.any(np.abs(rho) >= 1.0):
        raise DomainError("|rho| must be < 1")
    out = _w(np.clip(x, -1, 1), np.clip(y, -1, 1), rho)
    return float(out) if np.ndim(out) == 0 else out


def _w(x, y, rho):
    t = np.arccos(x)
    p = np.arccos(y)
    dm = 0.5 * (t - p)
    dp = 0.5 * (t + p)
    f1 = _factor(rho, np.sin(dm) ** 2, np.cos(dm) ** 2)
    f2 = _factor(rho, np.sin(dp) ** 2, np.cos(dp) ** 2)
    return f1 * f2


def _closed(kid: KernelId, x, y, r):
    """Vectorised closed forms; no validation."""
    if kid is KernelId.GU:
        return (1 - r * r) / _w(x, y, r)
    if kid is KernelId.GT:
        num = 1 - r * r - x * y * r * (3 + r * r) + 2 * r * r * (x * x + y * y)
        return num / _w(x, y, r)
    if kid is KernelId.GUT:
        return ((1 - r * r) - 2 * r * x * y + 2 * r * r * y * y) / _w(x, y, r)
    if kid is KernelId.UShift1:
        return 2 * (x - r * y) / _w(x, y, r)
    if kid is KernelId.TShift1:
        return (y - r * x) * (1 + r * r - 2 * r * x * y) / _w(x, y, r)
    if kid is KernelId.SymA:
        return 2 * (x * x + y * y - 2 * r * x * y) / _w(x, y, r)
    if kid is KernelId.UShift2Diag:
        return (4 * x * x - 1 - r) / ((1 - r) * ((1 + r) ** 2 - 4 * r * x * x))
    if kid is KernelId.EvenT:
        return _even(x, r)
    if kid is KernelId.OddT:
        return x * r * (1 - r * r) / ((1 + r * r - 2 * x * r) * (1 + r * r + 2 * x * r))
    if kid is KernelId.TUDiag:
        return (1 + r - 2 * r * x * x) / ((1 - r) * ((1 + r) ** 2 - 4 * r * x * x))
    if kid is KernelId.T4:
        return _even(2 * x * x - 1, r * r)
    raise ValueError(f"unknown kernel {kid!r}")


def _even(x, r):
    return (1 + r * r - 2 * x * x * r * r) / ((1 + r * r - 2 * x * r) * (1 + r * r + 2 * x * r))


def kernel_closed(kid: KernelId, p: KernelPoint) -> float:
    """Rational closed form of kernel ``kid`` at ``p`` (diagonal kernels ignore y)."""
    y = p.x if kid.diagonal else p.y
    return float(_closed(kid, p.x, y, p.rho))


def kernel_grid(kid: KernelId, x, y, rho):
    """Closed form on broadcast arrays, validated once."""
    x = np.clip(check_unit(x, "x"), -1.0, 1.0)
    y = np.clip(check_unit(y, "y"), -1.0, 1.0)
    rho = np.asarray(rho, dtype=float)
    if np.any(np.abs(rho) > RHO_MAX):
        raise DomainError(f"|rho| must be <= {RHO_MAX}")
    return _closed(kid, x, x if kid.diagonal else y, rho)


def kernel_series(kid: KernelId, p: KernelPoint, N: int) -> float:
    """Partial sum of the defining series, indices j = 0..N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    x, y, r = p.x, p.y, p.rho
    T, U = ChebKind.FIRST, ChebKind.SECOND
    j = np.arange(N + 1)
    pw = r ** j
    if kid is KernelId.GU:
        terms = pw * cheb_values(U, N, x) * cheb_values(U, N, y)
    elif kid is KernelId.GT:
        terms = pw * cheb_values(T, N, x) * cheb_values(T, N, y)
    elif kid is KernelId.GUT:
        terms = pw * cheb_values(U, N, x) * cheb_values(T, N, y)
    elif kid is KernelId.UShift1:
        terms = pw * cheb_values(U, N + 1, x)[1:] * cheb_values(U, N, y)
    elif kid is KernelId.TShift1:
        terms = pw * cheb_values(T, N, x) * cheb_values(T, N + 1, y)[1:]
    elif kid is KernelId.UShift2Diag:
        u = cheb_values(U, N + 2, x)
        terms = pw * u[:-2] * u[2:]
    elif kid is KernelId.SymA:
        ux = cheb_values(U, N + 1, x)
        uy = cheb_values(U, N + 1, y)
        terms = pw * (x * ux[1:] * uy[:-1] + y * uy[1:] * ux[:-1])
    elif kid is KernelId.EvenT:
        terms = r ** (2 * j) * cheb_values(T, 2 * N, x)[::2]
    elif kid is KernelId.OddT:
        terms = r ** (2 * j + 1) * cheb_values(T, 2 * N + 1, x)[1::2]
    elif kid is KernelId.TUDiag:
        terms = pw * cheb_values(U, N, x) * cheb_values(T, N, x)
    elif kid is KernelId.T4:
        terms = r ** (4 * j) * cheb_values(T, 4 * N, x)[::4]
    else:
        raise ValueError(f"unknown kernel {kid!r}")
    return math.fsum(terms)


# (exponent step s, exponent offset o, coefficients of quadratic M(j)) so that
# |term_j| <= |rho|^(s j + o) M(j), from |T_j| <= 1 and |U_j| <= j + 1
_MAJORANTS = {
    KernelId.GU: (1, 0, (1.0, 2.0, 1.0)),
    KernelId.GT: (1, 0, (1.0, 0.0, 0.0)),
    KernelId.GUT: (1, 0, (1.0, 1.0, 0.0)),
    KernelId.UShift1: (1, 0, (2.0, 3.0, 1.0)),
    KernelId.TShift1: (1, 0, (1.0, 0.0, 0.0)),
    KernelId.UShift2Diag: (1, 0, (3.0, 4.0, 1.0)),
    KernelId.SymA: (1, 0, (4.0, 6.0, 2.0)),
    KernelId.EvenT: (2, 0, (1.0, 0.0, 0.0)),
    KernelId.OddT: (2, 1, (1.0, 0.0, 0.0)),
    KernelId.TUDiag: (1, 0, (1.0, 1.0, 0.0)),
    KernelId.T4: (4, 0, (1.0, 0.0, 0.0)),
}


def kernel_tail_bound(kid: KernelId, rho: float, N: int) -> float:
    """Upper bound on |closed - series(N)|: sum_{j>N} |rho|^(s j + o) M(j).

    The majorant is summed exactly: with q = |rho|^s and m = N + 1,
    sum_{i>=0} q^(m+i) M(m+i) = q^m (M(m) A0 + M'(m) A1 + c2 A2) where
    A0 = 1/(1-q), A1 = q/(1-q)^2, A2 = q(1+q)/(1-q)^3.
    """
    r = abs(check_rho(rho, "rho"))
    if r == 0.0:
        return 0.0
    step, offset, (c0, c1, c2) = _MAJORANTS[kid]
    q = r ** step
    m = N + 1
    a0 = 1.0 / (1.0 - q)
    a1 = q * a0 * a0
    a2 = q * (1.0 + q) * a0 ** 3
    poly = c0 + c1 * m + c2 * m * m
    dpoly = c1 + 2.0 * c2 * m
    return r ** offset * q ** m * (poly * a0 + dpoly * a1 + c2 * a2)


def terms_for_tolerance(kid: KernelId, rho: float, tol: float) -> int:
    """Smallest N with kernel_tail_bound(kid, rho, N) <= tol."""
    lo, hi = 0, 1
    while kernel_tail_bound(kid, rho, hi) > tol:
        lo, hi = hi, hi * 2
    while lo < hi:
        mid = (lo + hi) // 2
        if kernel_tail_bound(kid, rho, mid) <= tol:
            hi = mid
        else:
            lo = mid + 1
    return hi
