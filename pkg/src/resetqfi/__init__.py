"""Steady-state quantum Fisher information of a dephasing two-qubit
system with a particle-reset mechanism.

The package builds the master-equation generator, solves for its steady
state by three independent routes and evaluates the metrological and
entanglement content of the result: directional and axis-optimized QFI,
optimal rotation direction, Wootters concurrence and negativity, plus
sweep, serialization and command-line tooling on top.
"""

from .dynamics import (
    PLUS,
    DensityMatrix,
    ModelParams,
    closed_form_steady_state,
    hamiltonian,
    liouvillian_apply,
    liouvillian_superoperator,
    steady_state,
    unvectorize,
    vectorize,
)
from .entanglement import concurrence, negativity
from .errors import (
    BadDimensionError,
    DegenerateLimitError,
    DegenerateSteadyStateError,
    DimensionMismatchError,
    NoConvergenceError,
    NonPositiveFisherError,
    NoSignChangeError,
    NotHermitianError,
    NotNormalizedError,
    NotSymmetricError,
    OutOfRangeError,
    TooManyParticlesError,
    UnsupportedResetStateError,
)
from .metrology import (
    X_AXIS,
    Y_AXIS,
    Z_AXIS,
    CollectiveSpin,
    Direction,
    PhaseEstimate,
    QfiResult,
    SensitivityClass,
    c_matrix,
    classify,
    collective_spin_ops,
    mean_qfi_max,
    optimal_direction,
    qcrb,
    qfi_direction,
    qfi_pure,
    rotate,
)
from .qlinalg import (
    HermitianEig,
    hermitian_eig,
    hermiticity_defect,
    kron,
    partial_trace,
    partial_transpose,
    sigma_x,
    sigma_y,
    sigma_z,
    trace_norm,
)
from .sweep import (
    CSV_FIELDS,
    CSV_HEADER,
    CriticalPoint,
    SweepRow,
    SweepSpec,
    emit,
    evaluate_point,
    find_critical_point,
    parse_csv,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "PLUS",
    "X_AXIS",
    "Y_AXIS",
    "Z_AXIS",
    "CSV_FIELDS",
    "CSV_HEADER",
    "BadDimensionError",
    "CollectiveSpin",
    "CriticalPoint",
    "DegenerateLimitError",
    "DegenerateSteadyStateError",
    "DensityMatrix",
    "DimensionMismatchError",
    "Direction",
    "HermitianEig",
    "ModelParams",
    "NoConvergenceError",
    "NonPositiveFisherError",
    "NoSignChangeError",
    "NotHermitianError",
    "NotNormalizedError",
    "NotSymmetricError",
    "OutOfRangeError",
    "PhaseEstimate",
    "QfiResult",
    "SensitivityClass",
    "SweepRow",
    "SweepSpec",
    "TooManyParticlesError",
    "UnsupportedResetStateError",
    "c_matrix",
    "classify",
    "closed_form_steady_state",
    "collective_spin_ops",
    "concurrence",
    "emit",
    "evaluate_point",
    "find_critical_point",
    "hamiltonian",
    "hermitian_eig",
    "hermiticity_defect",
    "kron",
    "liouvillian_apply",
    "liouvillian_superoperator",
    "mean_qfi_max",
    "negativity",
    "optimal_direction",
    "parse_csv",
    "partial_trace",
    "partial_transpose",
    "qcrb",
    "qfi_direction",
    "qfi_pure",
    "rotate",
    "run_sweep",
    "sigma_x",
    "sigma_y",
    "sigma_z",
    "steady_state",
    "trace_norm",
    "unvectorize",
    "vectorize",
]
