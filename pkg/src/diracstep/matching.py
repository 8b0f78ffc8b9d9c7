"""Continuity matching at the step edge for every transmitted-wave choice.

The scattering state is

    ψ(x) = (ψ_in(x) + ψ_refl(x)) Θ(−x) + ψ_trans(x) Θ(x),

with the incident wave fixed to  [1, a]·e^{ikx}  and the reflected wave
r·[1, −a]·e^{−ikx}.  What is *not* fixed by the equation alone is the
transmitted wave: below a step in the Klein zone there are two independent
plane waves, and the literature disagrees on which one to keep.  Each
choice is a :class:`Convention`; the matcher solves the same 2×2 continuity
system

    ψ_in(0) + ψ_refl(0) = ψ_trans(0)

for (r, t) regardless of the choice, so all conventions share one code
path and the per-convention closed forms become checks, not sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import Kinematics, Regime
from .spinor import PlaneWaveState, Side, Spinor

__all__ = [
    "Convention",
    "ScatteringSolution",
    "match",
    "evaluate",
    "physical_convention",
]


class Convention(Enum):
    """Transmitted-wave choices below the step.

    MAIN             [1, −b]·e^{−ik̄x}: positive-energy wave whose current and
                     velocity field point right in the Klein zone even though
                     its momentum is negative.  Reflection stays ≤ 1.  Also the
                     decaying branch in the evanescent regime.
    LOWER_COMPONENT  [b″, 1]·e^{−ik̄x}: same physical wave as MAIN, but built
                     from the lower component and parameterized so that all
                     amplitudes stay finite at the impenetrable-barrier point.
    TRADITIONAL      [1, b]·e^{+ik̄x}: the historical choice.  In the Klein
                     zone its current points left, which is what produces the
                     paradoxical R > 1 bookkeeping.  It is the physical
                     right-moving wave in the ordinary transmission regime.
    NEGATIVE_ENERGY  [−b, 1]·e^{+ik̄x}: charge conjugate of MAIN; a
                     negative-energy wave that is not a stationary state of
                     the scattering Hamiltonian at energy E.
    """

    MAIN = "main"
    LOWER_COMPONENT = "lower"
    TRADITIONAL = "traditional"
    NEGATIVE_ENERGY = "negative"


@dataclass(frozen=True)
class ScatteringSolution:
    """Matched piecewise solution: incident + reflected on the left, one
    transmitted wave on the right, continuous at x = 0."""

    kinematics: Kinematics
    convention: Convention
    incident: PlaneWaveState
    reflected: PlaneWaveState
    transmitted: PlaneWaveState
    r: complex
    t: complex

    @property
    def setup(self):
        return self.kinematics.setup


def _transmitted_basis(kin: Kinematics, conv: Convention) -> tuple[Spinor, complex]:
    """Unit-coefficient transmitted amplitude and its wave number.

    In the evanescent regime the oscillatory wave number continues to
    k̄ → −iκ; only the two e^{−ik̄x} conventions then decay for x → +∞.
    """
    if kin.regime is Regime.EVANESCENT:
        k_t = -1j * kin.kbar_or_kappa
        if conv in (Convention.TRADITIONAL, Convention.NEGATIVE_ENERGY):
            raise ValueError(
                f"{conv.value!r} transmitted wave grows under the step in the "
                "evanescent regime"
            )
    else:
        k_t = complex(kin.kbar_or_kappa)
    if conv is Convention.MAIN:
        return Spinor(1.0, -kin.b), -k_t
    if conv is Convention.LOWER_COMPONENT:
        return Spinor(kin.b_dprime, 1.0), -k_t
    if conv is Convention.TRADITIONAL:
        return Spinor(1.0, kin.b), k_t
    return Spinor(-kin.b, 1.0), k_t


def physical_convention(regime: Regime) -> Convention:
    """Transmitted-wave choice with outgoing (or decaying) current.

    Below the step in the Klein zone the group velocity is opposite to the
    momentum, so the physical right-moving wave is the MAIN one; in the
    ordinary transmission regime it is the TRADITIONAL one.
    """
    if regime is Regime.TRANSMISSION:
        return Convention.TRADITIONAL
    if regime in (Regime.KLEIN_ZONE, Regime.EVANESCENT):
        return Convention.MAIN
    raise ValueError(f"no open-regime convention at {regime.value}")


def match(kin: Kinematics, conv: Convention) -> ScatteringSolution:
    """Solve the continuity system at x = 0 for the chosen convention.

    The 2×2 system

        [1, a] + r·[1, −a] = t·u_conv

    is solved with the transmitted column normalized to unit max-norm, so
    the matrix stays well conditioned even when |b| diverges near the
    impenetrable-barrier point (the normalization is undone on t).
    """
    u_t, q_t = _transmitted_basis(kin, conv)
    scale = max(abs(u_t.upper), abs(u_t.lower))
    mat = np.array(
        [[u_t.upper / scale, -1.0], [u_t.lower / scale, kin.a]], dtype=complex
    )
    rhs = np.array([1.0, kin.a], dtype=complex)
    try:
        t_scaled, r = (complex(z) for z in np.linalg.solve(mat, rhs))
    except np.linalg.LinAlgError as exc:
        # Possible only at degenerate corners (e.g. the TRADITIONAL wave for
        # a massless particle, where it is parallel to the reflected wave).
        raise ValueError(
            f"continuity system singular for {conv.value!r} at this setup"
        ) from exc
    t = t_scaled / scale
    incident = PlaneWaveState(Spinor(1.0, kin.a), kin.k, Side.LEFT)
    reflected = PlaneWaveState(Spinor(r, -r * kin.a), -kin.k, Side.LEFT)
    transmitted = PlaneWaveState(
        Spinor(t * u_t.upper, t * u_t.lower), q_t, Side.RIGHT
    )
    return ScatteringSolution(
        kinematics=kin,
        convention=conv,
        incident=incident,
        reflected=reflected,
        transmitted=transmitted,
        r=complex(r),
        t=complex(t),
    )


def evaluate(sol: ScatteringSolution, x: float) -> Spinor:
    """Piecewise value of the scattering state at position x.

    Left branch (incident + reflected) for x < 0, transmitted branch for
    x >= 0; the matching makes both branches agree at x = 0.
    """
    if x < 0.0:
        left_in = sol.incident.value_at(x)
        left_re = sol.reflected.value_at(x)
        return Spinor(left_in.upper + left_re.upper, left_in.lower + left_re.lower)
    return sol.transmitted.value_at(x)
