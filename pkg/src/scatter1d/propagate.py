"""Numerov integration of psi'' = (V - E) psi across [-a, a].

The three-term Numerov recurrence is fourth-order accurate for smooth
potentials and exploits the absence of a first-derivative term.  With
g = V - E and f = 1 - h^2 g / 12 it reads

    f[i+1] psi[i+1] = (2 + 5 h^2 g[i] / 6 + ...) psi[i] - f[i-1] psi[i-1]

which is a banded lower-triangular linear system in the whole trace, so it
is solved in one LAPACK call instead of a Python loop.  The second starting
value comes from a fifth-order Taylor step whose g derivatives are taken
from one-sided differences of the tabulated g, keeping the global order at
four without requiring derivatives of V.

First derivatives along the trace are recovered by fourth-order finite
differences, one-sided at the two points nearest each edge.  Complex initial
data is supported even though the fundamental solutions are real; one code
path serves both.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .core import NonPositiveEnergy, Overflow, PreconditionViolated
from .potential import EvaluatedPotential

#: Solutions beyond this magnitude are deep in a classically forbidden
#: region at the chosen energy and no longer trustworthy.
MAX_MAGNITUDE = 1e150

MIN_STEPS = 64


@dataclass(frozen=True)
class BoundaryData:
    """Wavefunction and derivative at the two edges of the support."""

    psi_left: complex
    dpsi_left: complex
    psi_right: complex
    dpsi_right: complex


@dataclass
class WaveTrace:
    """Solution values on the integration grid.

    grid endpoints are exactly -a and +a; psi and dpsi share the grid shape.
    """

    grid: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray
    energy: float

    def boundary_data(self) -> BoundaryData:
        return BoundaryData(
            psi_left=complex(self.psi[0]),
            dpsi_left=complex(self.dpsi[0]),
            psi_right=complex(self.psi[-1]),
            dpsi_right=complex(self.dpsi[-1]),
        )


def _derivative(values: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order first derivative of a sampled function.

    Centered five-point stencil inside, one-sided five-point stencils at the
    two points nearest each edge.
    """
    n = values.size
    out = np.empty_like(values)
    out[2:-2] = (values[:-4] - 8 * values[1:-3] + 8 * values[3:-1] - values[4:]) / (12 * h)
    out[0] = (
        -25 * values[0] + 48 * values[1] - 36 * values[2] + 16 * values[3] - 3 * values[4]
    ) / (12 * h)
    out[1] = (
        -3 * values[0] - 10 * values[1] + 18 * values[2] - 6 * values[3] + values[4]
    ) / (12 * h)
    out[n - 2] = -(
        -3 * values[-1] - 10 * values[-2] + 18 * values[-3] - 6 * values[-4] + values[-5]
    ) / (12 * h)
    out[n - 1] = -(
        -25 * values[-1] + 48 * values[-2] - 36 * values[-3] + 16 * values[-4] - 3 * values[-5]
    ) / (12 * h)
    return out


def _taylor_second_point(g, h, psi0, dpsi0):
    """Fifth-order Taylor value of psi at the second grid node.

    Uses psi'' = g psi and one-sided difference estimates for g' and g'' so
    only tabulated g values are needed.
    """
    g0 = g[0]
    gp = (-3 * g[0] + 4 * g[1] - g[2]) / (2 * h)
    gpp = (2 * g[0] - 5 * g[1] + 4 * g[2] - g[3]) / (h * h)
    return (
        psi0
        + h * dpsi0
        + 0.5 * h * h * g0 * psi0
        + (h**3 / 6.0) * (gp * psi0 + g0 * dpsi0)
        + (h**4 / 24.0) * ((gpp + g0 * g0) * psi0 + 2 * gp * dpsi0)
    )


def integrate(
    pot: EvaluatedPotential,
    energy: float,
    psi0: complex,
    dpsi0: complex,
    steps: int = 4096,
) -> WaveTrace:
    """Propagate initial data (psi, psi')(-a) to +a on steps+1 grid points.

    The map is linear in (psi0, dpsi0).  Raises Overflow when the solution
    magnitude leaves the trustworthy range.
    """
    if pot.is_delta:
        raise PreconditionViolated("delta potentials have no interior to integrate")
    if steps < MIN_STEPS:
        raise PreconditionViolated(f"steps must be >= {MIN_STEPS}, got {steps}")
    if not energy > 0.0:
        raise NonPositiveEnergy(f"energy must be positive, got {energy}")

    a = pot.a
    n = steps + 1
    grid = np.linspace(-a, a, n)
    g = pot(grid) - energy
    h = (2.0 * a) / steps

    complex_data = isinstance(psi0, complex) or isinstance(dpsi0, complex)
    dtype = np.complex128 if complex_data else np.float64
    psi0 = dtype(psi0)
    dpsi0 = dtype(dpsi0)

    f = 1.0 - (h * h / 12.0) * g
    upper = 2.0 + (5.0 * h * h / 6.0) * g

    # Banded lower-triangular system: rows 0 and 1 pin the starting values,
    # row i+1 encodes the recurrence   f[i+1] psi[i+1] - upper[i] psi[i]
    # + f[i-1] psi[i-1] = 0.
    ab = np.zeros((3, n))
    ab[0, 0] = 1.0
    ab[0, 1] = 1.0
    ab[0, 2:] = f[2:]
    ab[1, 1:-1] = -upper[1:-1]
    ab[2, :-2] = f[:-2]

    b = np.zeros(n, dtype=dtype)
    b[0] = psi0
    b[1] = _taylor_second_point(g, h, psi0, dpsi0)
    if complex_data:
        ab = ab.astype(np.complex128)

    psi = solve_banded((2, 0), ab, b)

    peak = np.max(np.abs(psi))
    if not np.isfinite(peak) or peak > MAX_MAGNITUDE:
        raise Overflow(
            f"wavefunction magnitude {peak:.3e} exceeds {MAX_MAGNITUDE:.0e}; "
            "the energy is too deep in a classically forbidden region"
        )

    dpsi = _derivative(psi, h)
    return WaveTrace(grid=grid, psi=psi, dpsi=dpsi, energy=float(energy))


def fundamental_pair(
    pot: EvaluatedPotential, energy: float, steps: int = 4096
) -> tuple[WaveTrace, WaveTrace]:
    """Two solutions with (psi, psi')(-a) = (1, 0) and (0, 1).

    Their Wronskian u1 u2' - u1' u2 equals 1 along the whole grid up to the
    integrator's accuracy, which is the conservation check used in tests.
    """
    u1 = integrate(pot, energy, 1.0, 0.0, steps=steps)
    u2 = integrate(pot, energy, 0.0, 1.0, steps=steps)
    return u1, u2
