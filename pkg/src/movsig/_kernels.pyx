# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels; see ``_kernels_py`` for the reference version."""

import numpy as np

from libc.math cimport M_PI, ceil, cos, fabs, floor, log2, rint, sin
from libc.stdint cimport uint64_t

cdef double C = 299792458.0
cdef double EPS = 1e-12
cdef uint64_t GAMMA = 0x9E3779B97F4A7C15ULL
cdef double TWO_M53 = 1.0 / 9007199254740992.0


cdef inline uint64_t _mix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline double _uniform(uint64_t tkey, uint64_t pos) nogil:
    return (_mix64(tkey + pos * GAMMA) >> 11) * TWO_M53


cdef inline double _dirichlet(double x, long n) nogil:
    cdef double r = x - M_PI * rint(x / M_PI)
    cdef double den = fabs(sin(r))
    cdef double v
    if den < EPS:
        return <double>n
    v = fabs(sin(n * r)) / den
    return v if v < n else <double>n


cdef double _select(double theta1, double theta2, long n, double f_a,
                    double f_min, double f_max) nogil:
    cdef double d_a = C / f_a
    cdef double f_ref = C / d_a
    cdef double delta_s = sin(theta1) - sin(theta2)
    cdef double delta = fabs(delta_s)
    cdef double step, f, beta
    cdef long L, lo, hi
    if delta != 0.0 and n >= 2:
        step = f_ref / (n * delta)
        lo = <long>ceil(f_min / step) - 1
        if lo < 1:
            lo = 1
        hi = <long>floor(f_max / step) + 1
        L = lo
        while L <= hi:
            if L % n != 0:
                f = L * f_ref / (n * delta)
                if f_min <= f <= f_max:
                    return f
            L += 1
    beta = M_PI * d_a * delta_s / C
    if _dirichlet(f_min * beta, n) <= _dirichlet(f_max * beta, n):
        return f_min
    return f_max


cdef double _rzf(double theta1, double theta2, long n, double f, double f_a,
                 double p_total, double noise) nogil:
    cdef double d_a = C / f_a
    cdef double k = 2 * M_PI * f / C
    cdef double ds = sin(theta1) - sin(theta2)
    cdef double re = 0.0, im = 0.0, phase
    cdef long i
    for i in range(n):
        phase = k * ((i + 1 - (n + 1) / 2.0) * d_a) * ds
        re += cos(phase)
        im += sin(phase)
    cdef double g2 = re * re + im * im
    cdef double r = 2.0 * noise / p_total
    cdef double p = 0.5 * p_total
    cdef double a = n * (n + r) - g2
    cdef double e = n * (n + r) * (n + r) - (n + 2.0 * r) * g2
    cdef double sinr = p * a * a / (noise * e + p * r * r * g2)
    return 2.0 * log2(1.0 + sinr)


def dirichlet_ratio(double x, long n):
    return _dirichlet(x, n)


def select_frequency(double theta1, double theta2, long n, double f_a,
                     double f_min, double f_max):
    return _select(theta1, theta2, n, f_a, f_min, f_max)


def rzf_sum_rate(double theta1, double theta2, long n, double f, double f_a,
                 double p_total, double noise):
    return _rzf(theta1, theta2, n, f, f_a, p_total, noise)


def sum_rates_batch(theta1, theta2, long n, double f_a, double f_min,
                    double f_max, double f_fixed, double p_total, double noise):
    cdef double[::1] t1 = np.ascontiguousarray(theta1, dtype=np.float64)
    cdef double[::1] t2 = np.ascontiguousarray(theta2, dtype=np.float64)
    cdef Py_ssize_t m = t1.shape[0], t
    movable = np.empty(m)
    fixed = np.empty(m)
    cdef double[::1] mv = movable
    cdef double[::1] fx = fixed
    cdef double f
    with nogil:
        for t in range(m):
            f = _select(t1[t], t2[t], n, f_a, f_min, f_max)
            mv[t] = _rzf(t1[t], t2[t], n, f, f_a, p_total, noise)
            fx[t] = _rzf(t1[t], t2[t], n, f_fixed, f_a, p_total, noise)
    return movable, fixed


def sum_rates_block(uint64_t key, Py_ssize_t start, Py_ssize_t stop, long n,
                    double f_a, double f_min, double f_max, double f_fixed,
                    double p_total, double noise):
    cdef Py_ssize_t m = stop - start, t
    movable = np.empty(m)
    fixed = np.empty(m)
    cdef double[::1] mv = movable
    cdef double[::1] fx = fixed
    cdef double lo = -M_PI / 2, hi = M_PI / 2
    cdef double th1, th2, f
    cdef uint64_t tkey
    with nogil:
        for t in range(m):
            tkey = _mix64(key ^ _mix64((<uint64_t>(start + t) + 1) * GAMMA))
            th1 = lo + (hi - lo) * _uniform(tkey, 1)
            th2 = lo + (hi - lo) * _uniform(tkey, 2)
            f = _select(th1, th2, n, f_a, f_min, f_max)
            mv[t] = _rzf(th1, th2, n, f, f_a, p_total, noise)
            fx[t] = _rzf(th1, th2, n, f_fixed, f_a, p_total, noise)
    return movable, fixed
