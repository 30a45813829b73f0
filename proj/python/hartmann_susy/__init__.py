"""SUSY factorization solver for the ring-shaped Hartmann potential."""

from ._core import (  # noqa: F401
    DomainError,
    HartmannParams,
    InvalidQuantumNumbersError,
    QuantumNumbers,
    QuasiPoly,
    RadialGrid,
    SpectrumEntry,
    TridiagonalOperator,
    ValidationCheck,
    ValidationReport,
    annihilation_residual,
    apply_radial_hamiltonian,
    build_u,
    degeneracy_at_level,
    derive_quantum_numbers,
    discretize,
    eigenvector,
    energy_internal,
    factorization_residual,
    gamma_real,
    ground_state_u,
    inner_product,
    integrate_ground_state_ode,
    lowest_eigenvalues,
    potential_value,
    radial_R,
    radial_wavefunction,
    run_validation,
    spectrum,
    sturm_count,
    UnitSystem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
