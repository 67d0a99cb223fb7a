from .analysis import is_product, phase_vector
from .measure import bell_measure, measure_distribution
from .models import (
    Branch,
    FaultModel,
    FaultSpec,
    InitBias,
    MeasureBias,
    OutcomeDistribution,
    PauliAxis,
    PauliFault,
    StateVector,
)
from .statevector import apply, apply_faulty, prepare, validate_location

__all__ = [
    "Branch",
    "FaultModel",
    "FaultSpec",
    "InitBias",
    "MeasureBias",
    "OutcomeDistribution",
    "PauliAxis",
    "PauliFault",
    "StateVector",
    "apply",
    "apply_faulty",
    "bell_measure",
    "is_product",
    "measure_distribution",
    "phase_vector",
    "prepare",
    "validate_location",
]
