"""Linear receive combining and transmit precoding for the two-user links.

Rates are evaluated analytically from the post-processing SINR; no symbols
or noise samples are drawn.
"""

import math
from dataclasses import dataclass

import numpy as np

from .capacity import RatePair
from .channel import inner_product

__all__ = [
    "Precoder",
    "matched_filter_rates",
    "matched_beamforming_rates",
    "matched_precoder",
    "rzf_precoder",
    "downlink_rates",
]

N_USERS = 2


@dataclass(frozen=True)
class Precoder:
    """Per-user beamforming directions and the power loaded on each symbol.

    Attributes
    ----------
    columns : numpy.ndarray
        N x 2 complex matrix; column k is the direction for user k.
    symbol_powers : tuple of float
    """

    columns: np.ndarray
    symbol_powers: tuple

    @property
    def transmit_power(self):
        norms = np.sum(np.abs(self.columns) ** 2, axis=0)
        return float(self.symbol_powers[0] * norms[0] + self.symbol_powers[1] * norms[1])


def _pair(h1, h2):
    h1 = np.asarray(h1, dtype=complex)
    h2 = np.asarray(h2, dtype=complex)
    if h1.ndim != 1 or h1.shape != h2.shape:
        raise ValueError(f"channel shapes differ: {h1.shape} vs {h2.shape}")
    return h1, h2


def matched_filter_rates(h1, h2, budget):
    """Uplink rates with z = H^H y, treating the other user as noise."""
    h1, h2 = _pair(h1, h2)
    hs = (h1, h2)
    ps = (budget.p1, budget.p2)
    rates = []
    for k in range(N_USERS):
        j = 1 - k
        own = inner_product(hs[k], hs[k]).real
        cross = abs(inner_product(hs[k], hs[j])) ** 2
        sinr = ps[k] * own**2 / (budget.noise * own + ps[j] * cross)
        rates.append(math.log2(1 + sinr))
    return RatePair(*rates)


def matched_beamforming_rates(h1, h2, p1, p2, noise1, noise2):
    """Downlink rates with x = H^H s / sqrt(N)."""
    h1, h2 = _pair(h1, h2)
    n = len(h1)
    hs = (h1, h2)
    ps = (p1, p2)
    noises = (noise1, noise2)
    rates = []
    for k in range(N_USERS):
        j = 1 - k
        own = abs(inner_product(hs[k], hs[k])) ** 2 / n
        cross = abs(inner_product(hs[j], hs[k])) ** 2 / n
        rates.append(math.log2(1 + ps[k] * own / (noises[k] + ps[j] * cross)))
    return RatePair(*rates)


def matched_precoder(h1, h2, p1, p2):
    h1, h2 = _pair(h1, h2)
    cols = np.conj(np.stack([h1, h2], axis=1)) / math.sqrt(len(h1))
    return Precoder(cols, (p1, p2))


def rzf_precoder(h1, h2, p_total, noise, p1=None, p2=None, regularization=None):
    """Regularized zero-forcing directions H^H (H H^H + r I)^-1, unit-norm columns.

    Parameters
    ----------
    h1, h2 : array_like
        Downlink channels (rows of H).
    p_total : float
        Transmit power budget P.
    noise : float
        Receiver noise power.
    p1, p2 : float, optional
        Symbol powers; default to an equal split of `p_total`.
    regularization : float, optional
        Diagonal loading r. Defaults to ``2 * noise / p_total``. With zero
        power the loading is infinite and the directions reduce to matched
        beamforming.
    """
    h1, h2 = _pair(h1, h2)
    if not noise > 0:
        raise ValueError(f"noise power must be positive, got {noise!r}")
    if p1 is None and p2 is None:
        p1 = p2 = p_total / 2
    elif p1 is None or p2 is None:
        raise ValueError("give both symbol powers or neither")
    if not math.isclose(p1 + p2, p_total, rel_tol=1e-9, abs_tol=1e-300):
        raise ValueError(f"symbol powers {p1} + {p2} do not sum to {p_total}")
    if regularization is None:
        regularization = N_USERS * noise / p_total if p_total > 0 else math.inf

    H = np.stack([h1, h2])
    if math.isinf(regularization):
        W = H.conj().T
    else:
        W = H.conj().T @ np.linalg.inv(H @ H.conj().T + regularization * np.eye(N_USERS))
    W = W / np.linalg.norm(W, axis=0)
    return Precoder(W, (p1, p2))


def downlink_rates(precoder, h1, h2, noise1, noise2):
    """Per-user rates for any linear precoder, interference treated as noise."""
    h1, h2 = _pair(h1, h2)
    W = np.asarray(precoder.columns)
    if W.shape != (len(h1), N_USERS):
        raise ValueError(f"precoder shape {W.shape} does not match N={len(h1)}")
    g = np.abs(np.stack([h1, h2]) @ W) ** 2
    ps = precoder.symbol_powers
    noises = (noise1, noise2)
    rates = []
    for k in range(N_USERS):
        j = 1 - k
        rates.append(math.log2(1 + ps[k] * g[k, k] / (noises[k] + ps[j] * g[k, j])))
    return RatePair(*rates)
