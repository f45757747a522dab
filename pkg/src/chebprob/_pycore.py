"""Pure numpy implementations of the inner loops.

Used when the compiled ``_ccore`` extension is unavailable, and as the
reference the extension is tested against. Every function here has the same
signature and semantics as its counterpart in ``_ccore.pyx``.
"""
import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def cheb_table(kind, n, x):
    """Values P_0(x), ..., P_n(x) by forward recurrence (kind 1 = T, 2 = U)."""
    out = np.empty(n + 1)
    out[0] = 1.0
    if n == 0:
        return out
    out[1] = x if kind == 1 else 2.0 * x
    two_x = 2.0 * x
    for j in range(1, n):
        out[j + 1] = two_x * out[j] - out[j - 1]
    return out


def clenshaw(coeffs, kind, x):
    """Sum c_j P_j(x) over an array of points by backward recurrence."""
    x = np.asarray(x, dtype=float)
    c = np.asarray(coeffs, dtype=float)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    two_x = 2.0 * x
    for cj in c[:0:-1]:
        b1, b2 = cj + two_x * b1 - b2, b1
    # b1 = b_1, b2 = b_2 after the loop
    if kind == 1:
        return c[0] + x * b1 - b2
    return c[0] + two_x * b1 - b2


def _backward(coeffs, two_cos):
    b1 = np.zeros_like(two_cos)
    b2 = np.zeros_like(two_cos)
    for dj in coeffs[::-1]:
        b1, b2 = dj + two_cos * b1 - b2, b1
    return b1, b2


def sine_series(coeffs, theta):
    """Sum_{j>=1} coeffs[j-1] sin(j theta)."""
    theta = np.asarray(theta, dtype=float)
    b1, _ = _backward(np.asarray(coeffs, dtype=float), 2.0 * np.cos(theta))
    return b1 * np.sin(theta)


def cosine_series(coeffs, theta):
    """Sum_{j>=1} coeffs[j-1] cos(j theta)."""
    theta = np.asarray(theta, dtype=float)
    cos_t = np.cos(theta)
    b1, b2 = _backward(np.asarray(coeffs, dtype=float), 2.0 * cos_t)
    return b1 * cos_t - b2


def invert_theta(coeffs, u, tol, maxiter):
    """Solve G(theta) = u on [0, pi] for each u.

    G(theta) = 1 - theta/pi - (1/pi) sum_j (c_j/j) sin(j theta) is the
    distribution function of x = cos(theta) for the density
    f_C(x) (1 + sum_j c_j T_j(x)). Safeguarded Newton: a step that leaves
    the current bracket is replaced by bisection.

    Returns (theta, iterations); iterations is -1 if any point failed to
    reach ``tol`` within ``maxiter`` steps.
    """
    c = np.asarray(coeffs, dtype=float)
    sin_coeffs = c / np.arange(1, c.size + 1)
    u = np.asarray(u, dtype=float)
    lo = np.zeros_like(u)
    hi = np.full_like(u, np.pi)
    theta = np.pi * (1.0 - u)
    active = np.ones(u.shape, dtype=bool)
    for it in range(maxiter):
        th = theta[active]
        g = 1.0 - (th + sine_series(sin_coeffs, th)) / np.pi
        r = g - u[active]
        done = np.abs(r) <= tol
        idx = np.flatnonzero(active)
        active[idx[done]] = False
        if not active.any():
            return theta, it + 1
        keep = ~done
        idx, th, r = idx[keep], th[keep], r[keep]
        l, h = lo[idx], hi[idx]
        l = np.where(r > 0, th, l)
        h = np.where(r > 0, h, th)
        dg = -(1.0 + cosine_series(c, th)) / np.pi
        with np.errstate(divide="ignore", invalid="ignore"):
            step = th - r / dg
        bad = ~np.isfinite(step) | (step <= l) | (step >= h)
        theta[idx] = np.where(bad, 0.5 * (l + h), step)
        lo[idx], hi[idx] = l, h
    return theta, -1


def splitmix64(seed, count):
    """First ``count`` outputs of the SplitMix64 generator seeded with ``seed``."""
    state = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    k = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = state + k * _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniforms(seed, count):
    """Doubles in the open interval (0, 1) from the top 53 bits of SplitMix64."""
    bits = splitmix64(seed, count) >> np.uint64(11)
    return (bits.astype(np.float64) + 0.5) * 2.0**-53
