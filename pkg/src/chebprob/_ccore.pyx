# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see ``_pycore`` for the reference semantics."""
import numpy as np

from libc.math cimport cos, sin, fabs, isfinite, M_PI
from libc.stdint cimport uint64_t


def cheb_table(int kind, Py_ssize_t n, double x):
    out = np.empty(n + 1)
    cdef double[::1] v = out
    cdef Py_ssize_t j
    cdef double two_x = 2.0 * x
    v[0] = 1.0
    if n == 0:
        return out
    v[1] = x if kind == 1 else two_x
    for j in range(1, n):
        v[j + 1] = two_x * v[j] - v[j - 1]
    return out


cdef enum:
    BLOCK = 8


cdef inline void _backward_block(const double[::1] d, const double* two_x,
                                 double* b1, double* b2, int width) noexcept nogil:
    # backward recurrence b_k = d_k + 2x b_{k+1} - b_{k+2} for ``width``
    # independent points at once, so the dependency chains overlap
    cdef Py_ssize_t k
    cdef int q
    cdef double t
    for q in range(width):
        b1[q] = 0.0
        b2[q] = 0.0
    for k in range(d.shape[0] - 1, -1, -1):
        for q in range(width):
            t = d[k] + two_x[q] * b1[q] - b2[q]
            b2[q] = b1[q]
            b1[q] = t


cdef void _clenshaw_into(const double[::1] c, int kind, const double[::1] xv,
                         double[::1] rv) noexcept nogil:
    cdef Py_ssize_t start = 0, m = xv.shape[0]
    cdef const double[::1] tail = c[1:]
    cdef int q, width
    cdef double two_x[BLOCK]
    cdef double b1[BLOCK]
    cdef double b2[BLOCK]
    while start < m:
        width = BLOCK if m - start >= BLOCK else <int>(m - start)
        for q in range(width):
            two_x[q] = 2.0 * xv[start + q]
        _backward_block(tail, two_x, b1, b2, width)
        for q in range(width):
            # b1, b2 hold b_1, b_2 of the full recurrence
            if kind == 1:
                rv[start + q] = c[0] + xv[start + q] * b1[q] - b2[q]
            else:
                rv[start + q] = c[0] + two_x[q] * b1[q] - b2[q]
        start += width


cdef void _trig_into(const double[::1] d, const double[::1] tv, double[::1] rv,
                     bint sine) noexcept nogil:
    cdef Py_ssize_t start = 0, m = tv.shape[0]
    cdef int q, width
    cdef double two_x[BLOCK]
    cdef double b1[BLOCK]
    cdef double b2[BLOCK]
    while start < m:
        width = BLOCK if m - start >= BLOCK else <int>(m - start)
        for q in range(width):
            two_x[q] = 2.0 * cos(tv[start + q])
        _backward_block(d, two_x, b1, b2, width)
        for q in range(width):
            if sine:
                rv[start + q] = b1[q] * sin(tv[start + q])
            else:
                rv[start + q] = 0.5 * two_x[q] * b1[q] - b2[q]
        start += width


def clenshaw(coeffs, int kind, x):
    c_arr = np.ascontiguousarray(coeffs, dtype=np.float64)
    if c_arr.shape[0] == 0:
        raise ValueError("need at least one coefficient")
    cdef double[::1] c = c_arr
    xa = np.asarray(x, dtype=np.float64)
    flat = np.ascontiguousarray(xa.ravel())
    res = np.empty_like(flat)
    cdef double[::1] xv = flat
    cdef double[::1] rv = res
    with nogil:
        _clenshaw_into(c, kind, xv, rv)
    if xa.ndim == 0:
        return float(res[0])
    return res.reshape(xa.shape)


def _trig(coeffs, theta, bint sine):
    cdef double[::1] d = np.ascontiguousarray(coeffs, dtype=np.float64)
    ta = np.asarray(theta, dtype=np.float64)
    flat = np.ascontiguousarray(ta.ravel())
    res = np.empty_like(flat)
    cdef double[::1] tv = flat
    cdef double[::1] rv = res
    with nogil:
        _trig_into(d, tv, rv, sine)
    return res.reshape(ta.shape)


def sine_series(coeffs, theta):
    return _trig(coeffs, theta, True)


def cosine_series(coeffs, theta):
    return _trig(coeffs, theta, False)




cdef inline void _block_eval(const double[::1] s, const double[::1] c,
                             const double* two_cos, double* bs1, double* bs2,
                             double* bc1, double* bc2, int width) noexcept nogil:
    # sine-coefficient and cosine-coefficient recurrences for ``width``
    # independent angles, interleaved so the dependency chains overlap
    cdef Py_ssize_t k
    cdef int q
    cdef double t
    for q in range(width):
        bs1[q] = 0.0
        bs2[q] = 0.0
        bc1[q] = 0.0
        bc2[q] = 0.0
    for k in range(s.shape[0] - 1, -1, -1):
        for q in range(width):
            t = s[k] + two_cos[q] * bs1[q] - bs2[q]
            bs2[q] = bs1[q]
            bs1[q] = t
            t = c[k] + two_cos[q] * bc1[q] - bc2[q]
            bc2[q] = bc1[q]
            bc1[q] = t


def invert_theta(coeffs, u, double tol, int maxiter):
    c_arr = np.ascontiguousarray(coeffs, dtype=np.float64)
    s_arr = c_arr / np.arange(1, c_arr.shape[0] + 1)
    cdef double[::1] c = c_arr
    cdef double[::1] s = s_arr
    ua = np.ascontiguousarray(np.asarray(u, dtype=np.float64).ravel())
    out = np.empty_like(ua)
    cdef double[::1] uv = ua
    cdef double[::1] th_out = out
    cdef Py_ssize_t m = uv.shape[0], start
    cdef int it, q, width, pending, used = 0
    cdef double lo[BLOCK]
    cdef double hi[BLOCK]
    cdef double th[BLOCK]
    cdef double two_cos[BLOCK]
    cdef double bs1[BLOCK]
    cdef double bs2[BLOCK]
    cdef double bc1[BLOCK]
    cdef double bc2[BLOCK]
    cdef bint done[BLOCK]
    cdef double g, dg, r, step, ct
    with nogil:
        start = 0
        while start < m:
            width = BLOCK if m - start >= BLOCK else <int>(m - start)
            for q in range(width):
                lo[q] = 0.0
                hi[q] = M_PI
                th[q] = M_PI * (1.0 - uv[start + q])
                done[q] = False
            pending = width
            it = 0
            while pending > 0 and it < maxiter:
                for q in range(width):
                    two_cos[q] = 2.0 * cos(th[q])
                _block_eval(s, c, two_cos, bs1, bs2, bc1, bc2, width)
                for q in range(width):
                    if done[q]:
                        continue
                    g = 1.0 - (th[q] + bs1[q] * sin(th[q])) / M_PI
                    r = g - uv[start + q]
                    if fabs(r) <= tol:
                        done[q] = True
                        pending -= 1
                        continue
                    if r > 0:
                        lo[q] = th[q]
                    else:
                        hi[q] = th[q]
                    ct = 0.5 * two_cos[q]
                    dg = -(1.0 + bc1[q] * ct - bc2[q]) / M_PI
                    step = th[q] - r / dg
                    if not isfinite(step) or step <= lo[q] or step >= hi[q]:
                        th[q] = 0.5 * (lo[q] + hi[q])
                    else:
                        th[q] = step
                it += 1
            for q in range(width):
                th_out[start + q] = th[q]
            if pending > 0:
                used = -1
                break
            if it > used:
                used = it
            start += width
    return out, used


def splitmix64(seed, Py_ssize_t count):
    out = np.empty(count, dtype=np.uint64)
    cdef uint64_t[::1] v = out
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t z
    cdef Py_ssize_t i
    for i in range(count):
        state += 0x9E3779B97F4A7C15ULL
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
        v[i] = z ^ (z >> 31)
    return out


def uniforms(seed, Py_ssize_t count):
    out = np.empty(count)
    cdef double[::1] v = out
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t z
    cdef Py_ssize_t i
    for i in range(count):
        state += 0x9E3779B97F4A7C15ULL
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
        z = z ^ (z >> 31)
        v[i] = (<double>(z >> 11) + 0.5) * 1.1102230246251565e-16
    return out
