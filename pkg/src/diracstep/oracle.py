"""Independent numerical scattering oracle for the step problem.

The sharp step is regularized to the smooth profile

    V(x) = V₀ · (1 + tanh(2x / w)) / 2,

which converges to the step pointwise as the transition width w → 0, and
the stationary Dirac equation is integrated as the first-order system

    ψ′(x) = (i/ħc) σₓ (E − V(x) − mc² σ_z) ψ(x)

from the far right to the far left.  Integrating right-to-left from a
*pure transmitted wave* makes the transmitted-wave convention an explicit
boundary condition: imposing the main convention reproduces R ≤ 1, while
imposing the traditional one reproduces R > 1 in the Klein zone, so the
paradox is demonstrably a boundary-condition choice and not a property of
the equation.

The oracle never touches the closed-form amplitudes; agreement between its
(R, T) and the matcher's is a genuine two-route check.  Smoothing biases
the reflection away from the sharp-step value by a relative
(π²/12)·k·k̄·w² + O(w⁴), so comparisons must either keep w·k small or
budget for that term.

The negative-energy convention is excluded by design: it is not a
stationary state at energy E, so no boundary condition of this ODE system
can represent it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .core import Kinematics, PhysicalSetup, Regime, kinematics
from .matching import Convention, match
from .observables import coefficients

__all__ = ["SmoothStep", "OracleResult", "integrate_scattering", "sharp_limit_study"]

_ORACLE_CONVENTIONS = (Convention.MAIN, Convention.TRADITIONAL)


@dataclass(frozen=True)
class SmoothStep:
    """tanh regularization of the sharp step, with transition width w."""

    height: float
    width: float

    def __post_init__(self) -> None:
        if not (self.height > 0.0 and self.width > 0.0):
            raise ValueError("step height and width must be > 0")

    def profile(self, x):
        return self.height * (1.0 + np.tanh(2.0 * x / self.width)) / 2.0


@dataclass(frozen=True)
class OracleResult:
    """Scattering data extracted from one integration.

    ``integration_error_estimate`` is the larger of the current-conservation
    defect along the trajectory and |R + T − 1|; both vanish for the exact
    solution of any real potential profile, so they bound the phase and
    amplitude error actually committed.
    """

    r_num: complex
    t_num: complex
    R_num: float
    T_num: float
    integration_error_estimate: float
    width: float
    n_steps: int


def _transmitted_start(kin: Kinematics, conv: Convention) -> tuple[np.ndarray, complex]:
    """Unit transmitted amplitude and its wave number for the right boundary."""
    if kin.regime is Regime.EVANESCENT:
        if conv is not Convention.MAIN:
            raise ValueError(
                "evanescent regime: only the decaying (main) transmitted wave "
                "is admissible"
            )
        q_t = 1j * kin.kbar_or_kappa
        amp = np.array([1.0, -kin.b], dtype=complex)
    elif conv is Convention.MAIN:
        q_t = complex(-kin.kbar_or_kappa)
        amp = np.array([1.0, -kin.b], dtype=complex)
    else:
        q_t = complex(kin.kbar_or_kappa)
        amp = np.array([1.0, kin.b], dtype=complex)
    return amp, q_t


def integrate_scattering(
    setup: PhysicalSetup,
    step: SmoothStep,
    conv: Convention = Convention.MAIN,
    domain_half_width: float | None = None,
    tol: float = 1e-10,
) -> OracleResult:
    """Integrate the smoothed-step problem and extract r, t, R, T.

    A pure transmitted wave of the chosen convention is imposed at
    x = +L and the system is integrated to x = −L with adaptive error
    control at relative tolerance ``tol``; the arrival value is decomposed
    onto the incident and reflected free waves.  L defaults to
    10·max(1/k, 1/k̄, w) and must be at least that large.
    """
    if conv not in _ORACLE_CONVENTIONS:
        raise ValueError(
            "oracle boundary conditions exist for the main and traditional "
            "conventions only (the negative-energy wave is not a stationary "
            "state at this energy)"
        )
    if not (1e-13 <= tol <= 1e-6):
        raise ValueError(f"tol must lie in [1e-13, 1e-6], got {tol}")
    if abs(step.height - setup.step_height) > 1e-12 * setup.step_height:
        raise ValueError("smooth step height differs from the setup's step height")
    kin = kinematics(setup)
    min_half_width = 10.0 * max(1.0 / kin.k, 1.0 / kin.kbar_or_kappa, step.width)
    if domain_half_width is None:
        half_width = min_half_width
    elif domain_half_width < min_half_width:
        raise ValueError(
            f"domain half width {domain_half_width} below required {min_half_width}"
        )
    else:
        half_width = domain_half_width

    e, m, hc = setup.energy, setup.mass_energy, setup.hbar_c
    amp, q_t = _transmitted_start(kin, conv)

    def rhs(x: float, y: np.ndarray) -> np.ndarray:
        v = step.profile(x)
        return np.array(
            [
                1j * (e - v + m) * y[1] / hc,
                1j * (e - v - m) * y[0] / hc,
            ]
        )

    result = solve_ivp(
        rhs,
        (half_width, -half_width),
        amp,
        method="RK45",
        rtol=tol,
        atol=tol * 1e-2,
    )
    if not result.success:
        raise RuntimeError(f"integration failed: {result.message}")

    phi, chi = result.y[0, -1], result.y[1, -1]
    a = kin.a
    coeff_in = (a * phi + chi) / (2.0 * a)
    coeff_refl = (a * phi - chi) / (2.0 * a)
    norm = math.hypot(abs(phi), abs(chi))
    if abs(coeff_in) < 1e-8 * norm:
        raise RuntimeError("decomposition ill-conditioned: no incident content")

    # Current conservation along the trajectory, normalized by the local
    # density so exponentially growing evanescent solutions stay comparable.
    j_path = 2.0 * np.real(np.conj(result.y[0]) * result.y[1])
    rho_path = np.abs(result.y[0]) ** 2 + np.abs(result.y[1]) ** 2
    j_ref = 2.0 * (amp[0].conjugate() * amp[1]).real
    conservation = float(
        np.max(np.abs(j_path - j_ref) / np.maximum(abs(j_ref), rho_path))
    )

    r_num = (coeff_refl / coeff_in) * cmath.exp(-2j * kin.k * half_width)
    # log-form avoids overflow of exp(kappa*L) for strongly evanescent runs
    t_num = cmath.exp(
        -1j * (q_t + kin.k) * half_width - cmath.log(complex(coeff_in))
    )
    R_num = abs(coeff_refl / coeff_in) ** 2
    j_in = 2.0 * a * abs(coeff_in) ** 2
    if kin.regime is Regime.EVANESCENT:
        T_num = 0.0
        closure = 0.0
    else:
        T_num = float(j_ref / j_in)
        closure = abs(R_num + T_num - 1.0)
    return OracleResult(
        r_num=r_num,
        t_num=t_num,
        R_num=R_num,
        T_num=T_num,
        integration_error_estimate=max(conservation, closure),
        width=step.width,
        n_steps=int(result.t.size),
    )


def sharp_limit_study(
    setup: PhysicalSetup,
    conv: Convention,
    widths: list[float],
    tol: float = 1e-10,
) -> list[tuple[float, float]]:
    """|R_num(w) − R_closed| along a decreasing sequence of widths.

    Demonstrates convergence of the smooth profile to the sharp step; for
    tanh smoothing the error column shrinks like w².
    """
    kin = kinematics(setup)
    k_t = kin.kbar_or_kappa
    if any(w >= 1.0 / k_t for w in widths):
        raise ValueError("all widths must be below the transmitted wavelength 1/kbar")
    if any(w2 >= w1 for w1, w2 in zip(widths, widths[1:])):
        raise ValueError("widths must be strictly decreasing")
    r_closed = coefficients(match(kin, conv)).R
    rows = []
    for w in widths:
        res = integrate_scattering(setup, SmoothStep(setup.step_height, w), conv, tol=tol)
        rows.append((w, abs(res.R_num - r_closed)))
    return rows
