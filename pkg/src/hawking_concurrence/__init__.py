"""Entanglement of an isotropic two-qubit state seen through black-hole horizons.

Closed-form concurrences for every bipartite sector of the four-mode state,
with and without one-sided Kraus noise, plus an explicit numeric route
(dilation, partial trace, Wootters) that checks them.
"""

from .channels import ChannelKind, KrausChannel, NoisySector, apply_one_sided, make_channel, noisy_reduced_state
from .concurrence import ConcurrenceResult, concurrence_wootters, concurrence_xstate
from .errors import (
    BadKeepSet,
    BadParam,
    BadSpec,
    ConcurrenceError,
    DegenerateQuadratic,
    NoDeadZone,
    NotPositive,
    NotXState,
)
from .hawking import (
    HawkingFrame,
    Sector,
    ThermalSpec,
    acceleration_parameter,
    dilate_two_qubit,
    hawking_temperature,
    isotropic_state,
    reduced_state,
)
from .pipeline import numeric_concurrence
from .quantum_core import (
    BlochXParams,
    QubitLabel,
    bloch_to_density,
    check_density,
    density_to_bloch,
    partial_trace,
    tensor,
    validate_density,
)

# last, so the function ``concurrence`` wins over the submodule of that name
from .analytic import (
    Branch,
    CoefficientTable,
    PiecewiseBranch,
    TradeoffMode,
    bf_coefficients,
    bf_thresholds,
    bf_thresholds_equal,
    bf_thresholds_p1,
    concurrence,
    concurrence_bf,
    concurrence_bf_p1,
    concurrence_pd,
    concurrence_pf,
    concurrence_vacuum,
    tradeoff_sum,
    tradeoff_target,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CoefficientTable",
    "PiecewiseBranch",
    "TradeoffMode",
    "bf_coefficients",
    "bf_thresholds",
    "bf_thresholds_equal",
    "bf_thresholds_p1",
    "concurrence",
    "concurrence_bf",
    "concurrence_bf_p1",
    "concurrence_pd",
    "concurrence_pf",
    "concurrence_vacuum",
    "tradeoff_sum",
    "tradeoff_target",
    "ChannelKind",
    "KrausChannel",
    "NoisySector",
    "apply_one_sided",
    "make_channel",
    "noisy_reduced_state",
    "ConcurrenceResult",
    "concurrence_wootters",
    "concurrence_xstate",
    "BadKeepSet",
    "BadParam",
    "BadSpec",
    "ConcurrenceError",
    "DegenerateQuadratic",
    "NoDeadZone",
    "NotPositive",
    "NotXState",
    "HawkingFrame",
    "Sector",
    "ThermalSpec",
    "acceleration_parameter",
    "dilate_two_qubit",
    "hawking_temperature",
    "isotropic_state",
    "reduced_state",
    "numeric_concurrence",
    "BlochXParams",
    "QubitLabel",
    "bloch_to_density",
    "check_density",
    "density_to_bloch",
    "partial_trace",
    "tensor",
    "validate_density",
]
