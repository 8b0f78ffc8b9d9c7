"""1D Dirac step-potential scattering toolkit.

Closed-form Klein-zone scattering for every transmitted-wave convention,
impenetrable-barrier and nonrelativistic limits, wall forces, boundary
condition classification, grid sampling/CSV export, and an independent
adaptive-ODE scattering oracle that cross-checks the closed forms.
"""

__version__ = "0.1.0"

from .boundary import BoundaryCondition, BoundaryReport, classify_boundary
from .core import (
    EdgePointError,
    Kinematics,
    PhysicalSetup,
    Regime,
    classify_regime,
    kinematics,
)
from .forces import (
    ForceReport,
    boundary_force_mean,
    external_force_mean,
    momentum_flux_bracket,
    nr_boundary_force_dirichlet,
    nr_boundary_force_neumann,
)
from .gridio import GridSample, read_csv, sample, write_csv
from .limits import (
    InfiniteStepLimit,
    LimitKind,
    LimitSolution,
    ScanResult,
    ScanRow,
    convergence_scan,
    impenetrable_limit,
    infinite_potential_limit,
    nonrelativistic_limit,
)
from .matching import (
    Convention,
    ScatteringSolution,
    evaluate,
    match,
    physical_convention,
)
from .observables import (
    ObservableSet,
    coefficients,
    density_current_at_origin,
    transmitted_velocity,
)
from .oracle import OracleResult, SmoothStep, integrate_scattering, sharp_limit_study
from .spinor import (
    ALPHA,
    BETA,
    PlaneWaveState,
    Side,
    Spinor,
    apply_hamiltonian,
    charge_conjugate,
    current,
    density,
)

__all__ = [
    "__version__",
    "ALPHA",
    "BETA",
    "BoundaryCondition",
    "BoundaryReport",
    "Convention",
    "EdgePointError",
    "ForceReport",
    "GridSample",
    "InfiniteStepLimit",
    "Kinematics",
    "LimitKind",
    "LimitSolution",
    "ObservableSet",
    "OracleResult",
    "PhysicalSetup",
    "PlaneWaveState",
    "Regime",
    "ScanResult",
    "ScanRow",
    "ScatteringSolution",
    "Side",
    "SmoothStep",
    "Spinor",
    "apply_hamiltonian",
    "boundary_force_mean",
    "charge_conjugate",
    "classify_boundary",
    "classify_regime",
    "coefficients",
    "convergence_scan",
    "current",
    "density",
    "density_current_at_origin",
    "evaluate",
    "external_force_mean",
    "impenetrable_limit",
    "infinite_potential_limit",
    "integrate_scattering",
    "kinematics",
    "match",
    "momentum_flux_bracket",
    "nonrelativistic_limit",
    "nr_boundary_force_dirichlet",
    "nr_boundary_force_neumann",
    "physical_convention",
    "read_csv",
    "sample",
    "sharp_limit_study",
    "transmitted_velocity",
    "write_csv",
]
