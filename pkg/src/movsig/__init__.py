"""Capacity regions and frequency optimization for two-user LOS links with movable signals."""

from ._backend import DEFAULT_BACKEND as KERNEL_BACKEND
from .capacity import (
    BcBudget,
    MacBudget,
    MacRegion,
    RatePair,
    bc_boundary,
    bc_region_vertices,
    bc_sum_capacity,
    in_mac_region,
    mac_region,
    mac_sum_bound,
    mac_sum_capacity_orthogonal,
    mac_user_bound,
)
from .channel import (
    SPEED_OF_LIGHT,
    AnglePair,
    ArrayConfig,
    UserGeometry,
    antenna_position,
    correlation_magnitude,
    element_distance,
    inner_product,
    los_channel,
)
from .experiments import ScenarioConfig, SweepRow, gain_report, sample_angles, sweep, trial_rng, trial_sum_rates
from .spectrum import FrequencyBand, FrequencyChoice, optimize_frequency, orthogonal_frequencies
from .transceiver import (
    Precoder,
    downlink_rates,
    matched_beamforming_rates,
    matched_filter_rates,
    matched_precoder,
    rzf_precoder,
)

__version__ = "0.1.0"
