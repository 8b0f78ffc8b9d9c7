"""Spatial sampling of solutions and deterministic CSV export.

Output contract: a CSV with header ``x,phi_re,phi_im,chi_re,chi_im,rho,j``
(17 significant digits, '\\n' line endings, byte-identical for identical
inputs) plus a JSON metadata sidecar named ``<basename>.meta.json`` with
keys {mass_energy, step_height, energy, convention, regime,
generator_version}.  Complex components are stored as separate real and
imaginary columns so any plotting tool can consume the file directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .limits import LimitKind, LimitSolution
from .matching import ScatteringSolution
from .spinor import Spinor, current, density

__all__ = ["GridSample", "sample", "write_csv", "read_csv"]

CSV_HEADER = "x,phi_re,phi_im,chi_re,chi_im,rho,j"

_LIMIT_CONVENTION = {
    LimitKind.IMPENETRABLE_MAIN: "main",
    LimitKind.IMPENETRABLE_NEGATIVE: "negative",
    LimitKind.NONREL_MAIN: "main",
    LimitKind.NONREL_NEGATIVE: "negative",
}


@dataclass(frozen=True)
class GridSample:
    """Sampled solution on an ordered grid.

    At x = 0 two entries are recorded, the left-branch and right-branch
    one-sided values (identical whenever the solution is continuous).
    rho and j are recomputed from the sampled components, never stored
    independently.
    """

    xs: tuple[float, ...]
    phi: tuple[complex, ...]
    chi: tuple[complex, ...]
    rho: tuple[float, ...]
    j: tuple[float, ...]
    metadata: dict


def _branch_values(solution, x: float, side: str) -> Spinor:
    if isinstance(solution, LimitSolution):
        return (
            solution.left_value_at(x) if side == "left" else solution.right_value_at(x)
        )
    if side == "left":
        left_in = solution.incident.value_at(x)
        left_re = solution.reflected.value_at(x)
        return Spinor(left_in.upper + left_re.upper, left_in.lower + left_re.lower)
    return solution.transmitted.value_at(x)


def _metadata(solution) -> dict:
    if isinstance(solution, LimitSolution):
        return {
            "mass_energy": solution.mass_energy,
            "step_height": None,
            "energy": solution.energy,
            "convention": _LIMIT_CONVENTION[solution.kind],
            "regime": solution.kind.value,
            "generator_version": __version__,
        }
    setup = solution.setup
    return {
        "mass_energy": setup.mass_energy,
        "step_height": setup.step_height,
        "energy": setup.energy,
        "convention": solution.convention.value,
        "regime": solution.kinematics.regime.value,
        "generator_version": __version__,
    }


def sample(
    solution: ScatteringSolution | LimitSolution,
    x_min: float,
    x_max: float,
    n_points: int,
) -> GridSample:
    """Sample a solution on n_points positions spanning [x_min, x_max].

    When the range straddles the step the grid is snapped to contain
    x = 0 exactly and both one-sided values are recorded there.
    """
    if n_points < 2:
        raise ValueError("need at least two grid points")
    if not x_min < x_max:
        raise ValueError("x_min must be below x_max")
    step = (x_max - x_min) / (n_points - 1)
    xs = [x_min + i * step for i in range(n_points - 1)] + [x_max]
    if x_min <= 0.0 <= x_max and 0.0 not in xs:
        nearest = min(range(n_points), key=lambda i: abs(xs[i]))
        xs[nearest] = 0.0

    grid_x: list[float] = []
    phi: list[complex] = []
    chi: list[complex] = []
    for x in xs:
        sides = ("left", "right") if x == 0.0 else (("left",) if x < 0.0 else ("right",))
        for side in sides:
            value = _branch_values(solution, x, side)
            grid_x.append(x)
            phi.append(complex(value.upper))
            chi.append(complex(value.lower))
    rho = [density(Spinor(p, c)) for p, c in zip(phi, chi)]
    j = [current(Spinor(p, c)) for p, c in zip(phi, chi)]
    return GridSample(
        xs=tuple(grid_x),
        phi=tuple(phi),
        chi=tuple(chi),
        rho=tuple(rho),
        j=tuple(j),
        metadata=_metadata(solution),
    )


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def write_csv(gs: GridSample, path: str | Path) -> None:
    """Write the sample as CSV plus its JSON metadata sidecar.

    Byte-deterministic: fixed 17-significant-digit formatting, '\\n'
    endings, sorted sidecar keys.
    """
    path = Path(path)
    lines = [CSV_HEADER]
    for x, p, c, r, cur in zip(gs.xs, gs.phi, gs.chi, gs.rho, gs.j):
        lines.append(
            ",".join(
                (_fmt(x), _fmt(p.real), _fmt(p.imag), _fmt(c.real), _fmt(c.imag),
                 _fmt(r), _fmt(cur))
            )
        )
    try:
        path.write_text("\n".join(lines) + "\n", newline="\n")
        sidecar = path.with_name(path.stem + ".meta.json")
        sidecar.write_text(
            json.dumps(gs.metadata, sort_keys=True, indent=2) + "\n", newline="\n"
        )
    except OSError as exc:
        raise OSError(f"cannot write sample to {path}: {exc}") from exc


def read_csv(path: str | Path) -> dict[str, list[float]]:
    """Parse a sample CSV back into per-column float lists."""
    text = Path(path).read_text()
    lines = [line for line in text.split("\n") if line]
    header = lines[0].split(",")
    if header != CSV_HEADER.split(","):
        raise ValueError(f"unexpected header in {path}: {lines[0]!r}")
    columns: dict[str, list[float]] = {name: [] for name in header}
    for line in lines[1:]:
        for name, cell in zip(header, line.split(",")):
            columns[name].append(float(cell))
    return columns
