"""Domain value types, records and errors."""

from .errors import (
    ConfigError,
    DomainError,
    InvalidAngleError,
    NoInformationError,
    NoisyGateError,
    NumericalError,
    RegimeMismatchError,
    UnboundedOptimumError,
    UndefinedFisherInformationError,
)
from .noise import NOISELESS, Concentration, ConcentrationLike, NoiseParams, as_concentration
from .records import DecompositionReport, EvolutionTrace, McEstimate, QfiSeries
from .run_config import SWEEPABLE, AngleState, RunConfig, Sweep
from .states import (
    TWO_PI,
    BlochVector,
    GateSpec,
    LinearMap3,
    Vector3,
    as_vector3,
    check_angle,
)

__all__ = [
    "NoisyGateError",
    "DomainError",
    "InvalidAngleError",
    "UnboundedOptimumError",
    "NoInformationError",
    "UndefinedFisherInformationError",
    "RegimeMismatchError",
    "ConfigError",
    "NumericalError",
    "Concentration",
    "ConcentrationLike",
    "NOISELESS",
    "NoiseParams",
    "as_concentration",
    "BlochVector",
    "GateSpec",
    "LinearMap3",
    "Vector3",
    "TWO_PI",
    "as_vector3",
    "check_angle",
    "EvolutionTrace",
    "QfiSeries",
    "McEstimate",
    "DecompositionReport",
    "RunConfig",
    "AngleState",
    "Sweep",
    "SWEEPABLE",
]
