"""Two-component spinor algebra for the 1D Dirac equation.

The 1D Dirac Hamiltonian used throughout is

    H = −iħc σₓ d/dx + mc² σ_z + V(x),

i.e. the representation with α = σₓ and β = σ_z.  The upper spinor
component is the large component, the lower the small one.  States are
plane waves  amplitude · e^{iqx}  with a possibly complex wave number q;
an imaginary part of q encodes evanescent decay.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "ALPHA",
    "BETA",
    "Spinor",
    "Side",
    "PlaneWaveState",
    "density",
    "current",
    "apply_hamiltonian",
    "charge_conjugate",
]

# Fixed matrices of the representation: alpha = sigma_x, beta = sigma_z.
ALPHA = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
BETA = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class Spinor:
    """Two complex amplitudes (upper = large component, lower = small)."""

    upper: complex
    lower: complex

    def __post_init__(self) -> None:
        if not (cmath.isfinite(self.upper) and cmath.isfinite(self.lower)):
            raise ValueError("spinor components must be finite")

    def scaled(self, factor: complex) -> "Spinor":
        return Spinor(factor * self.upper, factor * self.lower)


class Side(Enum):
    """Which half line a plane wave lives on."""

    LEFT = "left"    # x <= 0
    RIGHT = "right"  # x >= 0


@dataclass(frozen=True)
class PlaneWaveState:
    """Plane wave  amplitude · e^{iqx}  restricted to one side of the step.

    A right-side wave with Im(q) < 0 would grow as x → +∞ and is rejected
    at construction; the decaying evanescent continuation has Im(q) > 0.
    """

    amplitude: Spinor
    wave_number: complex
    side: Side

    def __post_init__(self) -> None:
        if self.side is Side.RIGHT and self.wave_number.imag < 0.0:
            raise ValueError(
                f"growing right-side wave rejected (Im q = {self.wave_number.imag})"
            )

    def value_at(self, x: float) -> Spinor:
        phase = cmath.exp(1j * self.wave_number * x)
        return self.amplitude.scaled(phase)


def density(s: Spinor) -> float:
    """Probability density |upper|² + |lower|²."""
    return abs(s.upper) ** 2 + abs(s.lower) ** 2


def current(s: Spinor) -> float:
    """Probability current density 2c·Re(upper* · lower), with c = 1."""
    return 2.0 * (s.upper.conjugate() * s.lower).real


def apply_hamiltonian(
    pw: PlaneWaveState,
    potential_value: float,
    mass_energy: float,
    hbar_c: float = 1.0,
) -> Spinor:
    """Amplitude of H ψ for a plane wave under a constant potential.

    On  amplitude · e^{iqx}  the derivative acts analytically (d/dx → iq),
    so H reduces to the matrix  ħc·q·σₓ + mc²·σ_z + V·1  on the amplitude.
    The result shares the plane wave's e^{iqx} factor; comparing it with
    eigenvalue · amplitude certifies stationary solutions exactly.
    """
    q = pw.wave_number
    phi, chi = pw.amplitude.upper, pw.amplitude.lower
    return Spinor(
        hbar_c * q * chi + (mass_energy + potential_value) * phi,
        hbar_c * q * phi + (potential_value - mass_energy) * chi,
    )


def charge_conjugate(pw: PlaneWaveState) -> PlaneWaveState:
    """Charge conjugation  ψ ↦ σₓ ψ*  of a plane wave.

    Maps  amplitude·e^{iqx}  to  (σₓ amplitude*)·e^{−iq*x}.  The overall
    phase is fixed to +1 (the conjugation matrix is exactly σₓ), making the
    operation a strict involution.  A positive-energy state in potential V
    maps to a negative-energy state in −V.
    """
    amp = pw.amplitude
    conjugated = Spinor(amp.lower.conjugate(), amp.upper.conjugate())
    return PlaneWaveState(
        amplitude=conjugated,
        wave_number=-pw.wave_number.conjugate(),
        side=pw.side,
    )
