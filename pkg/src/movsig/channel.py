"""Far-field line-of-sight channels for a uniform linear array.

The base station array lies on the x-axis, centred at the origin. Each user
is described by its distance to the array centre and its angle from the
array normal. Channels carry no path loss: every entry has unit modulus, so
the squared norm of a channel vector is always the number of antennas.

Channel vectors are plain 1-D complex numpy arrays. The uplink channel of a
user and its downlink channel share the same entries (reciprocity); only the
orientation differs, and this module never needs to distinguish them.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SPEED_OF_LIGHT",
    "SINGULARITY_EPS",
    "ArrayConfig",
    "UserGeometry",
    "AnglePair",
    "antenna_position",
    "element_distance",
    "los_channel",
    "inner_product",
    "dirichlet_ratio",
    "correlation_magnitude",
]

SPEED_OF_LIGHT = 299792458.0

# |sin(f*beta)| below this is treated as the aligned-phase limit of the
# Dirichlet ratio.
SINGULARITY_EPS = 1e-12


@dataclass(frozen=True)
class ArrayConfig:
    """Uniform linear array at the base station.

    Parameters
    ----------
    n_antennas : int
        Number of antennas N.
    antenna_spacing : float
        Inter-element spacing d_A in meters.
    """

    n_antennas: int
    antenna_spacing: float

    def __post_init__(self):
        if int(self.n_antennas) != self.n_antennas or self.n_antennas < 1:
            raise ValueError(f"n_antennas must be a positive integer, got {self.n_antennas!r}")
        if not self.antenna_spacing > 0 or not math.isfinite(self.antenna_spacing):
            raise ValueError(f"antenna_spacing must be positive, got {self.antenna_spacing!r}")
        object.__setattr__(self, "n_antennas", int(self.n_antennas))

    @classmethod
    def from_reference_frequency(cls, n_antennas, f_a):
        """Build the array whose spacing is one wavelength at `f_a`."""
        if not f_a > 0:
            raise ValueError(f"reference frequency must be positive, got {f_a!r}")
        return cls(n_antennas, SPEED_OF_LIGHT / f_a)

    @property
    def speed_of_light(self):
        return SPEED_OF_LIGHT

    @property
    def reference_frequency(self):
        """f_A = c / d_A, the frequency at which the spacing is one wavelength."""
        return SPEED_OF_LIGHT / self.antenna_spacing


@dataclass(frozen=True)
class UserGeometry:
    """Single-antenna user seen from the array centre (meters, radians)."""

    distance: float
    angle: float

    def __post_init__(self):
        if not self.distance > 0:
            raise ValueError(f"distance must be positive, got {self.distance!r}")
        if not -math.pi / 2 <= self.angle <= math.pi / 2:
            raise ValueError(f"angle must lie in [-pi/2, pi/2], got {self.angle!r}")


@dataclass(frozen=True)
class AnglePair:
    """Angles of the two users and the derived sine difference."""

    theta1: float
    theta2: float

    @property
    def delta_sin(self):
        return math.sin(self.theta1) - math.sin(self.theta2)

    def beta(self, cfg):
        """pi * d_A * (sin(theta1) - sin(theta2)) / c, in seconds."""
        return math.pi * cfg.antenna_spacing * self.delta_sin / SPEED_OF_LIGHT

    @classmethod
    def from_users(cls, u1, u2):
        return cls(u1.angle, u2.angle)


def _check_index(n, cfg):
    if int(n) != n or not 1 <= n <= cfg.n_antennas:
        raise ValueError(f"antenna index must be in 1..{cfg.n_antennas}, got {n!r}")


def antenna_position(n, cfg):
    """x coordinate of the 1-based antenna `n`, in meters."""
    _check_index(n, cfg)
    return (n - (cfg.n_antennas + 1) / 2) * cfg.antenna_spacing


def element_distance(n, user, cfg):
    """Far-field distance between antenna `n` and `user`, in meters."""
    return user.distance - antenna_position(n, cfg) * math.sin(user.angle)


def los_channel(user, cfg, f):
    """Unit-modulus LOS channel of `user` at frequency `f`.

    Entry n is ``exp(-j * 2*pi*f/c * d_{n,k})``. The common distance term and
    the per-antenna offset are exponentiated separately so that the relative
    phases across the array stay accurate at large electrical distances.

    Returns
    -------
    numpy.ndarray
        Complex vector of length N.
    """
    if not f > 0:
        raise ValueError(f"frequency must be positive, got {f!r}")
    k = 2 * math.pi * f / SPEED_OF_LIGHT
    n = np.arange(1, cfg.n_antennas + 1)
    x = (n - (cfg.n_antennas + 1) / 2) * cfg.antenna_spacing
    common = np.exp(-1j * math.fmod(k * user.distance, 2 * math.pi))
    return common * np.exp(1j * k * x * math.sin(user.angle))


def inner_product(h_a, h_b):
    """sum_n conj(h_a[n]) * h_b[n], by direct summation."""
    h_a = np.asarray(h_a)
    h_b = np.asarray(h_b)
    if h_a.shape != h_b.shape or h_a.ndim != 1:
        raise ValueError(f"channel shapes differ: {h_a.shape} vs {h_b.shape}")
    return complex(np.sum(np.conj(h_a) * h_b))


def dirichlet_ratio(x, n):
    """|sin(n*x)| / |sin(x)| with the removable singularities set to n.

    `x` is first reduced modulo pi; both sines change sign together under
    that shift, and the reduction keeps the numerator and denominator
    consistent near the singular points.
    """
    r = x - math.pi * round(x / math.pi)
    den = abs(math.sin(r))
    if den < SINGULARITY_EPS:
        return float(n)
    return min(float(n), abs(math.sin(n * r)) / den)


def correlation_magnitude(pair, cfg, f):
    """Closed-form |h2^H h1| = |sin(N f beta)| / |sin(f beta)|.

    Always in [0, N]; equals N for aligned users or at frequencies where
    every term of the phase sum has the same phase.
    """
    if not f > 0:
        raise ValueError(f"frequency must be positive, got {f!r}")
    return dirichlet_ratio(f * pair.beta(cfg), cfg.n_antennas)
