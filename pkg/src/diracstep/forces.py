"""Mean force on the particle: external step force and boundary quantum force.

The step exerts the singular classical force  f = −dV/dx = −V₀ δ(x); its
mean in a scattering state reduces by delta sifting to −V₀·ρ(0), with no
discretization of the delta anywhere.

For a particle confined to the half line x ≤ 0 the same quantity arises as
a boundary quantum force: the boundary term of d⟨p⟩/dt.  For a stationary
state Ψ = ψ e^{−iEt/ħ} that term is the flux bracket

    g(x) = −E ρ(x) + mc² (|upper(x)|² − |lower(x)|²),

and the mean boundary force is g evaluated at the wall.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matching import ScatteringSolution
from .observables import density_current_at_origin
from .spinor import Spinor

__all__ = [
    "ForceReport",
    "external_force_mean",
    "boundary_force_mean",
    "momentum_flux_bracket",
    "nr_boundary_force_dirichlet",
    "nr_boundary_force_neumann",
]


@dataclass(frozen=True)
class ForceReport:
    """Mean forces at the wall, in energy/length units.

    external_mean     ⟨f⟩ = −V₀ ρ(0) ≤ 0 (the step pushes the particle left)
    boundary_mean     boundary quantum force of the stationary state at x=0
    nr_boundary_mean  its nonrelativistic counterpart
    """

    external_mean: float
    boundary_mean: float
    nr_boundary_mean: float

    def __post_init__(self) -> None:
        if self.external_mean > 0.0:
            raise ValueError("the step force always points left (<= 0)")

    @property
    def consistent(self) -> bool:
        """Whether the external and boundary routes agree (they do not for
        the negative-energy transmitted wave)."""
        scale = max(1.0, abs(self.boundary_mean))
        return abs(self.external_mean - self.boundary_mean) <= 1e-9 * scale


def external_force_mean(sol: ScatteringSolution) -> float:
    """Mean of the external step force, −V₀·ρ(0), in the matched state."""
    rho0, _ = density_current_at_origin(sol)
    return -sol.setup.step_height * rho0


def momentum_flux_bracket(psi: Spinor, energy: float, mass_energy: float) -> float:
    """Stationary-state flux bracket −E ρ + mc² (|upper|² − |lower|²).

    For the impenetrable-wall eigenstates this bracket is constant in x, so
    its boundary value equals its value (or cell average) anywhere on the
    half line; that is what makes d⟨p⟩/dt vanish for a stationary state.
    """
    up2 = abs(psi.upper) ** 2
    lo2 = abs(psi.lower) ** 2
    return -energy * (up2 + lo2) + mass_energy * (up2 - lo2)


def boundary_force_mean(psi0: Spinor, energy: float, mass_energy: float) -> float:
    """Mean boundary quantum force for a stationary state with value psi0 at
    the wall (x = 0)."""
    return momentum_flux_bracket(psi0, energy, mass_energy)


def nr_boundary_force_dirichlet(psi_nr_deriv0: complex, mass_energy: float) -> float:
    """Nonrelativistic boundary force at a hard wall with ψ(0) = 0.

    Takes the spatial derivative of the Schroedinger wavefunction at the
    wall and returns −(ħ²/2m)|ψₓ(0)|², with ħ = c = 1 so m = mc².
    """
    return -abs(psi_nr_deriv0) ** 2 / (2.0 * mass_energy)


def nr_boundary_force_neumann(
    psi_nr0: complex, psi_nr_second_deriv0: complex, mass_energy: float
) -> float:
    """Nonrelativistic boundary force at a wall with ψₓ(0) = 0.

    Takes ψ(0) and ψₓₓ(0) and returns +(ħ²/2m)·Re(ψ*(0) ψₓₓ(0))."""
    cross = (complex(psi_nr0).conjugate() * psi_nr_second_deriv0).real
    return cross / (2.0 * mass_energy)
