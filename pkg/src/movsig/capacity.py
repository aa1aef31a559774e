"""Two-user MAC and BC capacity regions.

All rates are in bits/s/Hz. Powers and noise variances are linear.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channel import inner_product

__all__ = [
    "MacBudget",
    "BcBudget",
    "RatePair",
    "MacRegion",
    "mac_user_bound",
    "mac_sum_bound",
    "mac_region",
    "in_mac_region",
    "mac_sum_capacity_orthogonal",
    "bc_boundary",
    "bc_sum_capacity",
    "bc_region_vertices",
]

REGION_TOL = 1e-9


@dataclass(frozen=True)
class MacBudget:
    p1: float
    p2: float
    noise: float

    def __post_init__(self):
        if self.p1 < 0 or self.p2 < 0:
            raise ValueError("transmit powers must be nonnegative")
        if not self.noise > 0:
            raise ValueError(f"noise power must be positive, got {self.noise!r}")


@dataclass(frozen=True)
class BcBudget:
    p_total: float
    noise1: float
    noise2: float

    def __post_init__(self):
        if self.p_total < 0:
            raise ValueError("total power must be nonnegative")
        if not (self.noise1 > 0 and self.noise2 > 0):
            raise ValueError("noise powers must be positive")


@dataclass(frozen=True)
class RatePair:
    r1: float
    r2: float

    @property
    def total(self):
        return self.r1 + self.r2


@dataclass(frozen=True)
class MacRegion:
    """Pentagon bounded by two per-user limits and a sum-rate limit."""

    r1_max: float
    r2_max: float
    r_sum_max: float

    def vertices(self):
        """Polygon corners, counterclockwise from ``(r1_max, 0)``.

        Coincident corners are merged, so an orthogonal-channel region comes
        out as a rectangle and a zero-power region as the single origin.
        """
        r1, r2 = self.r1_max, self.r2_max
        rs = min(self.r_sum_max, r1 + r2)
        pts = [
            (r1, 0.0),
            (r1, max(0.0, rs - r1)),
            (max(0.0, rs - r2), r2),
            (0.0, r2),
            (0.0, 0.0),
        ]
        out = []
        for p in pts:
            if not out or not _close(p, out[-1]):
                out.append(p)
        if len(out) > 1 and _close(out[0], out[-1]):
            out.pop()
        return [RatePair(*p) for p in out]


def _close(a, b):
    return abs(a[0] - b[0]) <= REGION_TOL and abs(a[1] - b[1]) <= REGION_TOL


def _check_noise(noise):
    if not noise > 0:
        raise ValueError(f"noise power must be positive, got {noise!r}")


def mac_user_bound(p_k, noise, n_antennas):
    """Single-user SIMO limit log2(1 + p_k N / noise)."""
    _check_noise(noise)
    if p_k < 0:
        raise ValueError("transmit power must be nonnegative")
    return math.log2(1 + p_k * n_antennas / noise)


def mac_sum_bound(h1, h2, budget):
    """Cooperative sum-rate limit log2 det(I + Q H^H H / noise).

    The 2x2 determinant is expanded in closed form from the channel Gram
    entries.
    """
    a11 = inner_product(h1, h1).real
    a22 = inner_product(h2, h2).real
    a12 = inner_product(h1, h2)
    s = budget.noise
    det = (1 + budget.p1 * a11 / s) * (1 + budget.p2 * a22 / s) - budget.p1 * budget.p2 * abs(a12) ** 2 / s**2
    # det >= 1 by Cauchy-Schwarz; guard only against rounding below it
    return math.log2(max(det, 1.0))


def mac_region(h1, h2, budget):
    n = len(h1)
    return MacRegion(
        mac_user_bound(budget.p1, budget.noise, n),
        mac_user_bound(budget.p2, budget.noise, n),
        mac_sum_bound(h1, h2, budget),
    )


def in_mac_region(region, pair):
    tol = REGION_TOL
    return (
        pair.r1 <= region.r1_max + tol
        and pair.r2 <= region.r2_max + tol
        and pair.r1 + pair.r2 <= region.r_sum_max + tol
    )


def mac_sum_capacity_orthogonal(budget, n_antennas):
    """Uplink sum-rate capacity when the channels are orthogonal."""
    return mac_user_bound(budget.p1, budget.noise, n_antennas) + mac_user_bound(
        budget.p2, budget.noise, n_antennas
    )


def _bc_rates(budget, n_antennas, p1):
    r1 = math.log2(1 + p1 * n_antennas / budget.noise1)
    r2 = math.log2(1 + (budget.p_total - p1) * n_antennas / budget.noise2)
    return r1, r2


def bc_boundary(budget, n_antennas, grid_points=201):
    """Boundary of the BC capacity region for orthogonalized channels.

    Parameters
    ----------
    budget : BcBudget
    n_antennas : int
    grid_points : int
        Number of user-1 power levels, uniformly spaced over [0, P].

    Returns
    -------
    list of RatePair
        Ordered by increasing user-1 power, from ``(0, r2_max)`` to
        ``(r1_max, 0)``.
    """
    if int(grid_points) != grid_points or grid_points < 2:
        raise ValueError(f"grid_points must be an integer >= 2, got {grid_points!r}")
    p = budget.p_total
    out = []
    for p1 in np.linspace(0.0, p, int(grid_points)):
        out.append(RatePair(*_bc_rates(budget, n_antennas, min(float(p1), p))))
    return out


def bc_region_vertices(budget, n_antennas, grid_points=201):
    """BC region polygon, counterclockwise from ``(r1_max, 0)``."""
    pts = bc_boundary(budget, n_antennas, grid_points)[::-1]
    if budget.p_total > 0:
        pts.append(RatePair(0.0, 0.0))
    return pts


def bc_sum_capacity(budget, n_antennas):
    """Downlink sum-rate capacity and the user-1 power achieving it.

    Returns
    -------
    c_dl : float
    p1_star : float
        ``(P + noise2/N - noise1/N) / 2`` clipped to [0, P]; exactly P/2 for
        equal noises.
    """
    _check_noise(budget.noise1)
    _check_noise(budget.noise2)
    p = budget.p_total
    p1 = 0.5 * p + (budget.noise2 - budget.noise1) / (2 * n_antennas)
    p1 = min(max(p1, 0.0), p)
    return sum(_bc_rates(budget, n_antennas, p1)), p1
