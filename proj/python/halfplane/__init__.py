"""Time-dependent diffraction by a Dirichlet half-plane.

Incident, reflected and edge-diffracted waves of a modulated plane wave
hitting an opaque half-plane screen, their Fourier-Laplace images for
Im(omega) > 0, and the stationary Sommerfeld amplitude the field settles
into, with two independent evaluation routes for cross-checking.
"""

from ._core import (  # noqa: F401
    ConfigError,
    DomainError,
    GeometryError,
    JumpLineError,
    KernelDecomposition,
    PoleProximityError,
    PrecisionError,
    Profile,
    QuadratureSpec,
    Scenario,
    UsageError,
    amplitude_diffracted,
    amplitude_incident,
    amplitude_scattered,
    amplitude_total,
    decompose_calZ,
    diffracted,
    eval_U,
    eval_Z,
    eval_calZ,
    eval_dphi_calZ,
    fourier_laplace,
    fresnel_F,
    hat_diffracted,
    hat_incident,
    hat_reflected,
    hat_scattered,
    incident,
    incident0,
    incident1,
    integrate_K,
    jump,
    lap_study,
    make_scenario,
    reflected,
    run_suite,
    scattered,
    sommerfeld_kernel,
    suite_ids,
    total,
)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
