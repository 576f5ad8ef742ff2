"""Receive beamforming for directional-modulation networks under jamming.

A simulation library and CLI that builds the legitimate, eavesdropping
and jamming links of a three-node network, computes six receive
beamformers at the legitimate receiver, and compares them by secrecy
rate, Monte-Carlo bit error rate and computational cost.
"""

from .beamformers import (
    Beamformer,
    METHOD_LABELS,
    Method,
    RECEIVE_METHODS,
    compute,
    low_complexity_inverse,
    mallory_receiver,
    max_sr,
    mmse_conventional,
    mmse_low_complexity,
    mrc,
    nsp_max_wfrp,
    wfmrc,
    whitening_filter,
)
from .ber import (
    BerRun,
    PerformanceReport,
    point_rng,
    qpsk_awgn_ber,
    simulate_ber,
    sweep,
    wilson_interval,
)
from .channel import (
    ArrayGeometry,
    ChannelSet,
    LosChannel,
    PathLoss,
    SteeringVector,
    alice_an_projector,
    bob_nsp_projector,
    los_channel,
    steering,
)
from .complexity import FlopReport, asymptotic_order, flop_report, formula_flops, measured_flops
from .counting import FlopCounter
from .errors import (
    ConditioningError,
    ConfigError,
    ConfigParseError,
    DegenerateChannelError,
    DegenerateGeometryError,
    DimensionError,
    DmrbfError,
    DomainError,
    NumericalError,
    UnsupportedScenarioError,
    UpdateSingularityError,
)
from .linalg import HermitianEvd, hermitian_evd, inv_hpd, inv_sqrt_hpd, pinv_hpsd
from .metrics import (
    RatePoint,
    rate_bob,
    rate_mallory,
    rate_point,
    secrecy_rate,
    sigma2_for_snr_db,
    sinr_bob,
    sinr_mallory,
)
from .scenario import (
    CovarianceSet,
    Scene,
    ScenarioConfig,
    TransmitSetup,
    build_channels,
    build_covariances,
    build_scene,
    build_transmit_setup,
    load_config,
    parse_config,
    serialize_config,
)

__version__ = "0.1.0"

__all__ = [
    "ArrayGeometry",
    "Beamformer",
    "BerRun",
    "ChannelSet",
    "ConditioningError",
    "ConfigError",
    "ConfigParseError",
    "CovarianceSet",
    "DegenerateChannelError",
    "DegenerateGeometryError",
    "DimensionError",
    "DmrbfError",
    "DomainError",
    "FlopCounter",
    "FlopReport",
    "HermitianEvd",
    "LosChannel",
    "METHOD_LABELS",
    "Method",
    "NumericalError",
    "PathLoss",
    "PerformanceReport",
    "RECEIVE_METHODS",
    "RatePoint",
    "Scene",
    "ScenarioConfig",
    "SteeringVector",
    "TransmitSetup",
    "UnsupportedScenarioError",
    "UpdateSingularityError",
    "alice_an_projector",
    "asymptotic_order",
    "bob_nsp_projector",
    "build_channels",
    "build_covariances",
    "build_scene",
    "build_transmit_setup",
    "compute",
    "flop_report",
    "formula_flops",
    "hermitian_evd",
    "inv_hpd",
    "inv_sqrt_hpd",
    "load_config",
    "low_complexity_inverse",
    "mallory_receiver",
    "max_sr",
    "measured_flops",
    "mmse_conventional",
    "mmse_low_complexity",
    "mrc",
    "nsp_max_wfrp",
    "parse_config",
    "pinv_hpsd",
    "point_rng",
    "qpsk_awgn_ber",
    "rate_bob",
    "rate_mallory",
    "rate_point",
    "secrecy_rate",
    "serialize_config",
    "sigma2_for_snr_db",
    "simulate_ber",
    "sinr_bob",
    "sinr_mallory",
    "steering",
    "sweep",
    "wfmrc",
    "whitening_filter",
    "wilson_interval",
]
