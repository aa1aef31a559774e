"""Channel-orthogonalizing frequencies and band-constrained frequency choice."""

import math
from dataclasses import dataclass

from .channel import correlation_magnitude

__all__ = ["FrequencyBand", "FrequencyChoice", "orthogonal_frequencies", "optimize_frequency"]


@dataclass(frozen=True)
class FrequencyBand:
    """Closed frequency interval [f_min, f_max] in Hz."""

    f_min: float
    f_max: float

    def __post_init__(self):
        if not (0 < self.f_min <= self.f_max) or not math.isfinite(self.f_max):
            raise ValueError(f"need 0 < f_min <= f_max, got [{self.f_min!r}, {self.f_max!r}]")

    @classmethod
    def from_multiples(cls, f_a, lo, hi):
        return cls(lo * f_a, hi * f_a)

    def __contains__(self, f):
        return self.f_min <= f <= self.f_max


@dataclass(frozen=True)
class FrequencyChoice:
    """Selected operating frequency.

    `residual` is the channel correlation magnitude at `frequency`; `exact`
    is set when the frequency is a zero of the correlation in closed form.
    """

    frequency: float
    residual: float
    exact: bool


def orthogonal_frequencies(pair, cfg, band):
    """All in-band frequencies that make the two channels orthogonal.

    These are ``L * f_A / (N * |delta_sin|)`` for positive integers L that
    are not multiples of N, returned in ascending order. Aligned users (and a
    single antenna) admit none.
    """
    n = cfg.n_antennas
    delta = abs(pair.delta_sin)
    if delta == 0.0 or n < 2:
        return []
    step = cfg.reference_frequency / (n * delta)
    lo = max(1, math.ceil(band.f_min / step) - 1)
    hi = math.floor(band.f_max / step) + 1
    out = []
    for L in range(lo, hi + 1):
        if L % n == 0:
            continue
        f = L * cfg.reference_frequency / (n * delta)
        if f in band:
            out.append(f)
    return out


def optimize_frequency(pair, cfg, band):
    """Minimize the channel correlation magnitude over `band`.

    Every interior local minimum of the Dirichlet ratio is a zero, so either
    the smallest in-band orthogonalizing frequency is returned, or the better
    of the two band edges (``f_min`` on ties).
    """
    exact = orthogonal_frequencies(pair, cfg, band)
    if exact:
        f = exact[0]
        return FrequencyChoice(f, correlation_magnitude(pair, cfg, f), True)
    lo = correlation_magnitude(pair, cfg, band.f_min)
    hi = correlation_magnitude(pair, cfg, band.f_max)
    if lo <= hi:
        return FrequencyChoice(band.f_min, lo, False)
    return FrequencyChoice(band.f_max, hi, False)
