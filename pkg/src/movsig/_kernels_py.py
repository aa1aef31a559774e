"""Pure-Python sweep kernels; mirrors ``_kernels.pyx`` operation for operation."""

import math

import numpy as np

from ._rng import uniforms

C = 299792458.0
EPS = 1e-12


def dirichlet_ratio(x, n):
    r = x - math.pi * round(x / math.pi)
    den = abs(math.sin(r))
    if den < EPS:
        return float(n)
    return min(float(n), abs(math.sin(n * r)) / den)


def select_frequency(theta1, theta2, n, f_a, f_min, f_max):
    """Band-constrained orthogonalizing frequency for one angle pair."""
    d_a = C / f_a
    f_ref = C / d_a
    delta_s = math.sin(theta1) - math.sin(theta2)
    delta = abs(delta_s)
    if delta != 0.0 and n >= 2:
        step = f_ref / (n * delta)
        lo = max(1, math.ceil(f_min / step) - 1)
        hi = math.floor(f_max / step) + 1
        for L in range(lo, hi + 1):
            if L % n == 0:
                continue
            f = L * f_ref / (n * delta)
            if f_min <= f <= f_max:
                return f
    beta = math.pi * d_a * delta_s / C
    if dirichlet_ratio(f_min * beta, n) <= dirichlet_ratio(f_max * beta, n):
        return f_min
    return f_max


def rzf_sum_rate(theta1, theta2, n, f, f_a, p_total, noise):
    """Equal-split RZF sum rate at frequency `f`.

    Only |h1 h2^H|^2 enters: with G = H H^H and loading r, the effective
    gains follow from the 2x2 inverse in closed form.
    """
    d_a = C / f_a
    k = 2 * math.pi * f / C
    ds = math.sin(theta1) - math.sin(theta2)
    re = 0.0
    im = 0.0
    for i in range(n):
        phase = k * ((i + 1 - (n + 1) / 2) * d_a) * ds
        re += math.cos(phase)
        im += math.sin(phase)
    g2 = re * re + im * im
    r = 2.0 * noise / p_total
    p = 0.5 * p_total
    a = n * (n + r) - g2
    e = n * (n + r) * (n + r) - (n + 2.0 * r) * g2
    sinr = p * a * a / (noise * e + p * r * r * g2)
    return 2.0 * math.log2(1.0 + sinr)


def sum_rates_batch(theta1, theta2, n, f_a, f_min, f_max, f_fixed, p_total, noise):
    """Movable-frequency and fixed-frequency RZF sum rates for each trial."""
    theta1 = np.ascontiguousarray(theta1, dtype=np.float64)
    theta2 = np.ascontiguousarray(theta2, dtype=np.float64)
    m = theta1.shape[0]
    movable = np.empty(m)
    fixed = np.empty(m)
    for t in range(m):
        a, b = float(theta1[t]), float(theta2[t])
        f = select_frequency(a, b, n, f_a, f_min, f_max)
        movable[t] = rzf_sum_rate(a, b, n, f, f_a, p_total, noise)
        fixed[t] = rzf_sum_rate(a, b, n, f_fixed, f_a, p_total, noise)
    return movable, fixed


def sum_rates_block(key, start, stop, n, f_a, f_min, f_max, f_fixed, p_total, noise):
    """`sum_rates_batch` over trials ``start..stop-1`` of the row keyed by `key`."""
    lo, hi = -math.pi / 2, math.pi / 2
    u = uniforms(key, start, stop, 2)
    theta = lo + (hi - lo) * u
    return sum_rates_batch(theta[:, 0], theta[:, 1], n, f_a, f_min, f_max, f_fixed, p_total, noise)
