"""Scattering matrices of symmetric short-range 1D potentials.

Forward solvers (Numerov transfer matrices, amplitude-quad solves, closed
forms for the square well and the point interaction), a fixed-energy
non-injectivity counterexample, sine-kernel Fredholm determinants with
their large-interval asymptotics and reconstructed comparison potentials,
and arc-symbol Toeplitz determinants.  Units: hbar = 1, 2m = 1, so
psi'' = (V - E) psi and k = sqrt(E).
"""

from .core import (
    PI,
    ZETA_PRIME_MINUS_ONE,
    AllMasked,
    AsymmetricPotential,
    ComplexWavefunction,
    DegenerateTransfer,
    DeltaNotSamplable,
    EigenvalueAtOne,
    NodeCollision,
    NonFiniteSample,
    NonPositiveEnergy,
    NonPositiveK,
    NonUniformGrid,
    NotPositiveDefinite,
    Overflow,
    PreconditionViolated,
    QuadOrderTooSmall,
    ScatterError,
    SingularSystem,
    TauTooSmall,
    TTooLarge,
    wavenumber_from_energy,
)
from .noninjective import (
    BUMP_KINKED,
    BUMP_SMOOTH,
    Branch,
    CounterexamplePair,
    RecoveredPotential,
    SMatrixComparison,
    build_counterexample,
    bump_values,
    recover_potential,
    verify_same_smatrix,
)
from .potential import (
    Delta,
    EvaluatedPotential,
    Sampled,
    SquareWell,
    load_sampled_csv,
    sample_analytic,
    validate,
)
from .propagate import BoundaryData, WaveTrace, fundamental_pair, integrate
from .smatrix import (
    AmplitudeQuad,
    SMatrix,
    TransferMatrix,
    amplitudes_from_boundary,
    analytic_delta,
    analytic_square_well,
    delta_as_well_limit,
    smatrix_from_amplitudes,
    smatrix_from_transfer,
    smatrix_via_transfer,
    transfer_matrix,
)
from .spectral import (
    FredholmReport,
    JostClosedForms,
    KernelSpec,
    PhaseShift,
    SineKernelSpectrum,
    asymptotic_log_det,
    fredholm_log_det,
    fredholm_report,
    gelfand_levitan_potential,
    jost_forms,
    marchenko_residual,
    phase_shift,
    sine_kernel_eigs,
    sine_kernel_spectrum,
)
from .szego import (
    ArcSymbol,
    SzegoCrossCheck,
    ToeplitzResult,
    szego_limit_check,
    toeplitz_logdet,
)

__version__ = "0.1.0"

__all__ = [
    "PI",
    "ZETA_PRIME_MINUS_ONE",
    "AllMasked",
    "AmplitudeQuad",
    "ArcSymbol",
    "AsymmetricPotential",
    "BoundaryData",
    "Branch",
    "BUMP_KINKED",
    "BUMP_SMOOTH",
    "ComplexWavefunction",
    "CounterexamplePair",
    "DegenerateTransfer",
    "Delta",
    "DeltaNotSamplable",
    "EigenvalueAtOne",
    "EvaluatedPotential",
    "FredholmReport",
    "JostClosedForms",
    "KernelSpec",
    "NodeCollision",
    "NonFiniteSample",
    "NonPositiveEnergy",
    "NonPositiveK",
    "NonUniformGrid",
    "NotPositiveDefinite",
    "Overflow",
    "PhaseShift",
    "PreconditionViolated",
    "QuadOrderTooSmall",
    "RecoveredPotential",
    "Sampled",
    "ScatterError",
    "SineKernelSpectrum",
    "SingularSystem",
    "SMatrix",
    "SMatrixComparison",
    "SquareWell",
    "SzegoCrossCheck",
    "TauTooSmall",
    "ToeplitzResult",
    "TransferMatrix",
    "TTooLarge",
    "WaveTrace",
    "amplitudes_from_boundary",
    "analytic_delta",
    "analytic_square_well",
    "asymptotic_log_det",
    "build_counterexample",
    "bump_values",
    "delta_as_well_limit",
    "fredholm_log_det",
    "fredholm_report",
    "fundamental_pair",
    "gelfand_levitan_potential",
    "integrate",
    "jost_forms",
    "load_sampled_csv",
    "marchenko_residual",
    "phase_shift",
    "recover_potential",
    "sample_analytic",
    "sine_kernel_eigs",
    "sine_kernel_spectrum",
    "smatrix_from_amplitudes",
    "smatrix_from_transfer",
    "smatrix_via_transfer",
    "szego_limit_check",
    "toeplitz_logdet",
    "transfer_matrix",
    "validate",
    "verify_same_smatrix",
    "wavenumber_from_energy",
]
