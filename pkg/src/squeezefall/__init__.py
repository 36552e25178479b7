"""squeezefall: phase-space metrology for squeezed probes in free fall.

Simulates a single-mode Gaussian probe falling in a uniform gravitational
field and quantifies how well the acceleration g can be estimated: quantum
Fisher information, general-dyne classical Fisher information, saturation
and optimal-phase analysis, sensitivity figures, and a Monte-Carlo
Cramer-Rao check.  The `squeezefall` command line emits figure-ready
CSV/JSON datasets for all of it.
"""

from .audit import AuditRow, run_audit
from .dynamics import EvolutionSpec, evolve, evolved_squeezed_state, mean_sensitivity
from .fisher import (
    FisherReport,
    MeasurementSpec,
    cfi_generaldyne,
    fisher_report,
    freefall_family,
    measurement_covariance,
    optimal_phase,
    qfi_closed_form,
    qfi_gaussian_oracle,
    qfi_vacuum,
    ratio_R,
    rqfi,
    rqfi_asymptote,
    saturation_time,
    sensitivity,
)
from .montecarlo import (
    EstimationResult,
    ExperimentPlan,
    cramer_rao_check,
    estimate_g,
    sample_outcomes,
)
from .states import (
    HBAR,
    GaussianState,
    InvalidStateError,
    ProbeParams,
    SqueezeSpec,
    correlation_gamma,
    doubled_covariance,
    make_squeezed_vacuum,
    sigma_of,
    sr_uncertainty,
    wigner,
)
from .sweeps import ConfigError, SweepConfig, build_config, emit, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AuditRow",
    "ConfigError",
    "EstimationResult",
    "EvolutionSpec",
    "ExperimentPlan",
    "FisherReport",
    "GaussianState",
    "HBAR",
    "InvalidStateError",
    "MeasurementSpec",
    "ProbeParams",
    "SqueezeSpec",
    "SweepConfig",
    "build_config",
    "cfi_generaldyne",
    "correlation_gamma",
    "cramer_rao_check",
    "doubled_covariance",
    "emit",
    "estimate_g",
    "evolve",
    "evolved_squeezed_state",
    "fisher_report",
    "freefall_family",
    "make_squeezed_vacuum",
    "mean_sensitivity",
    "measurement_covariance",
    "optimal_phase",
    "qfi_closed_form",
    "qfi_gaussian_oracle",
    "qfi_vacuum",
    "ratio_R",
    "rqfi",
    "rqfi_asymptote",
    "run_audit",
    "run_sweep",
    "sample_outcomes",
    "saturation_time",
    "sensitivity",
    "sigma_of",
    "sr_uncertainty",
    "wigner",
    "__version__",
]
