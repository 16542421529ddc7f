"""Scattering matrices of symmetric potentials.

Conventions: plane-wave amplitudes are read off the solution at the support
edges,

    psi(x) = A e^{ikx} + B e^{-ikx}   (x <= -a)
    psi(x) = C e^{ikx} + D e^{-ikx}   (x >= +a)

and the scattering matrix maps incoming to outgoing, (B, C)^T = S (A, D)^T.
For a symmetric potential S is symmetric with equal diagonal entries, and
unitary whenever the potential is real.

Two independent routes produce S.  The production route assembles the
transfer matrix (A, B) -> (C, D) from the fundamental pair of solutions and
reads S off its entries, computing the left-incident and right-incident
columns separately so the raw parity asymmetry can be reported before the
entries are symmetrized.  The second route solves the linear relations
B = s11 A + s12 D, C = s12 A + s11 D directly from amplitude quads of one or
two solutions, with parity imposed by construction; a single quad determines
S only when its incoming amplitudes are not parity-degenerate (|A| != |D|),
which is exactly the condition under which the closed single-solution
formula is usable.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import (
    DegenerateTransfer,
    NonPositiveEnergy,
    PreconditionViolated,
    SingularSystem,
    wavenumber_from_energy,
)
from .potential import EvaluatedPotential
from .propagate import BoundaryData, fundamental_pair

#: Relative threshold below which amplitude quads cannot be inverted.
SINGULAR_RTOL = 1e-12

DEGENERATE_TRANSFER_TOL = 1e-12


@dataclass(frozen=True)
class AmplitudeQuad:
    """Plane-wave amplitudes (A, B, C, D) of one solution.

    in_left/in_right are the incoming amplitudes A and D; out_left/out_right
    are the outgoing B and C.  For a real potential the flux balance
    |A|^2 + |D|^2 = |B|^2 + |C|^2 holds.
    """

    in_left: complex
    out_left: complex
    out_right: complex
    in_right: complex


@dataclass(frozen=True)
class TransferMatrix:
    """Matrix mapping left amplitudes (A, B) to right amplitudes (C, D)."""

    t11: complex
    t12: complex
    t21: complex
    t22: complex
    k: float
    a: float

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.t11, self.t12], [self.t21, self.t22]])

    def determinant(self) -> complex:
        return self.t11 * self.t22 - self.t12 * self.t21


@dataclass(frozen=True)
class SMatrix:
    """Scattering matrix entries plus the raw parity asymmetry diagnostic.

    parity_residual is the larger of |s11 - s22| and |s12 - s21| measured
    before the entries were symmetrized; closed-form constructors set it to
    zero.
    """

    s11: complex
    s12: complex
    s21: complex
    s22: complex
    k: float
    a: float
    parity_residual: float = 0.0

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.s11, self.s12], [self.s21, self.s22]])

    def unitarity_residual(self) -> float:
        s = self.as_matrix()
        return float(np.max(np.abs(s.conj().T @ s - np.eye(2))))


def amplitudes_from_boundary(bd: BoundaryData, k: float, a: float) -> AmplitudeQuad:
    """Read plane-wave amplitudes off boundary values of a solution."""
    if not k > 0.0:
        raise PreconditionViolated(f"wavenumber must be positive, got {k}")
    if not a > 0.0:
        raise PreconditionViolated(f"half-width must be positive, got {a}")
    ik = 1j * k
    phase = np.exp(1j * k * a)
    A = 0.5 * phase * (bd.psi_left + bd.dpsi_left / ik)
    B = 0.5 / phase * (bd.psi_left - bd.dpsi_left / ik)
    C = 0.5 / phase * (bd.psi_right + bd.dpsi_right / ik)
    D = 0.5 * phase * (bd.psi_right - bd.dpsi_right / ik)
    return AmplitudeQuad(in_left=A, out_left=B, out_right=C, in_right=D)


def transfer_matrix(pot: EvaluatedPotential, energy: float, steps: int = 4096) -> TransferMatrix:
    """Assemble the transfer matrix from the fundamental pair of solutions."""
    k = wavenumber_from_energy(energy)
    a = pot.a
    u1, u2 = fundamental_pair(pot, energy, steps=steps)
    # Endpoint map (psi, psi')(-a) -> (psi, psi')(+a) in the fundamental basis.
    m = np.array(
        [
            [u1.psi[-1], u2.psi[-1]],
            [u1.dpsi[-1], u2.dpsi[-1]],
        ],
        dtype=np.complex128,
    )
    ik = 1j * k
    ea = np.exp(1j * k * a)
    # (psi, psi')(-a) from (A, B) and (C, D) from (psi, psi')(+a).
    left = np.array([[1 / ea, ea], [ik / ea, -ik * ea]])
    right = 0.5 * np.array([[1 / ea, 1 / (ik * ea)], [ea, -ea / ik]])
    t = right @ m @ left
    return TransferMatrix(
        t11=complex(t[0, 0]),
        t12=complex(t[0, 1]),
        t21=complex(t[1, 0]),
        t22=complex(t[1, 1]),
        k=k,
        a=a,
    )


def smatrix_from_transfer(t: TransferMatrix) -> SMatrix:
    """Convert a transfer matrix to the scattering matrix.

    The left-incident column gives s11 = -t21/t22 and s21 = det T / t22; the
    right-incident column gives s12 = 1/t22 and s22 = t12/t22.  Both are
    computed, the asymmetry is recorded, and the average is stored.
    """
    scale = max(abs(t.t11), abs(t.t12), abs(t.t21), abs(t.t22), 1.0)
    if abs(t.t22) < DEGENERATE_TRANSFER_TOL * scale:
        raise DegenerateTransfer(f"|t22| = {abs(t.t22):.3e} is too small to invert")
    det = t.determinant()
    s11 = -t.t21 / t.t22
    s21 = det / t.t22
    s12 = 1.0 / t.t22
    s22 = t.t12 / t.t22
    residual = max(abs(s11 - s22), abs(s12 - s21))
    diag = 0.5 * (s11 + s22)
    off = 0.5 * (s12 + s21)
    return SMatrix(
        s11=diag, s12=off, s21=off, s22=diag,
        k=t.k, a=t.a, parity_residual=float(residual),
    )


def smatrix_via_transfer(pot: EvaluatedPotential, energy: float, steps: int = 4096) -> SMatrix:
    """Production route: integrate, assemble the transfer matrix, convert."""
    return smatrix_from_transfer(transfer_matrix(pot, energy, steps=steps))


def smatrix_from_amplitudes(quads, k: float, a: float) -> SMatrix:
    """Solve for S from the amplitude quads of one or two solutions.

    Each quad contributes the two relations

        out_left  = s11 in_left  + s12 in_right
        out_right = s12 in_left  + s11 in_right

    so parity symmetry holds by construction.  The best-conditioned pair of
    relations is solved exactly; with a single quad that system is singular
    precisely when |A^2 - D^2| vanishes against |A|^2 + |D|^2, in which case
    SingularSystem is raised.
    """
    if isinstance(quads, AmplitudeQuad):
        quads = [quads]
    quads = list(quads)
    if not 1 <= len(quads) <= 2:
        raise PreconditionViolated(f"need one or two quads, got {len(quads)}")

    rows = []
    rhs = []
    for q in quads:
        rows.append((complex(q.in_left), complex(q.in_right)))
        rhs.append(complex(q.out_left))
        rows.append((complex(q.in_right), complex(q.in_left)))
        rhs.append(complex(q.out_right))

    best = None
    for i, j in combinations(range(len(rows)), 2):
        det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
        scale = abs(rows[i][0]) ** 2 + abs(rows[i][1]) ** 2
        scale = max(scale, abs(rows[j][0]) ** 2 + abs(rows[j][1]) ** 2)
        if best is None or abs(det) > abs(best[0]):
            best = (det, scale, i, j)

    det, scale, i, j = best
    if abs(det) < SINGULAR_RTOL * scale:
        raise SingularSystem(
            "amplitude quads are parity degenerate and do not determine S "
            f"(|det| = {abs(det):.3e} against scale {scale:.3e})"
        )
    s11 = (rhs[i] * rows[j][1] - rhs[j] * rows[i][1]) / det
    s12 = (rows[i][0] * rhs[j] - rows[j][0] * rhs[i]) / det
    return SMatrix(s11=s11, s12=s12, s21=s12, s22=s11, k=k, a=a)


def analytic_square_well(v0: float, a: float, energy: float) -> SMatrix:
    """Closed-form scattering matrix of the square well.

    With k = sqrt(E) and l = sqrt(E + v0),

        s_off  = e^{-2ika} / (cos 2la - i (k^2 + l^2)/(2kl) sin 2la)
        s_diag = s_off * i (l^2 - k^2)/(2kl) sin 2la.

    The v0 = 0 limit is the free matrix [[0, 1], [1, 0]].
    """
    if v0 < 0.0:
        raise PreconditionViolated(f"well depth v0 must be >= 0, got {v0}")
    if not a > 0.0:
        raise PreconditionViolated(f"half-width a must be positive, got {a}")
    k = wavenumber_from_energy(energy)
    l = np.sqrt(energy + v0)
    two_la = 2.0 * l * a
    common = np.exp(-2j * k * a) / (
        np.cos(two_la) - 1j * ((k * k + l * l) / (2.0 * k * l)) * np.sin(two_la)
    )
    diag = common * 1j * ((l * l - k * k) / (2.0 * k * l)) * np.sin(two_la)
    return SMatrix(
        s11=complex(diag), s12=complex(common), s21=complex(common), s22=complex(diag),
        k=k, a=a,
    )


def analytic_delta(alpha: float, energy: float) -> SMatrix:
    """Closed-form scattering matrix of the attractive point interaction.

    beta = alpha / (2k) in natural units, and

        S = 1/(1 - i beta) [[i beta, 1], [1, i beta]].

    The support is a point, so the matrix carries a = 0.
    """
    if not alpha > 0.0:
        raise PreconditionViolated(f"delta strength must be positive, got {alpha}")
    k = wavenumber_from_energy(energy)
    beta = alpha / (2.0 * k)
    denom = 1.0 - 1j * beta
    diag = 1j * beta / denom
    off = 1.0 / denom
    return SMatrix(s11=diag, s12=off, s21=off, s22=diag, k=k, a=0.0)


def delta_as_well_limit(alpha: float, energy: float, eps: float, steps: int = 4096) -> SMatrix:
    """Numeric delta scattering via a thin deep well of the same weight.

    The well SquareWell(alpha / (2 eps), eps) integrates to weight alpha; its
    scattering matrix converges to the point-interaction one at rate O(eps).
    """
    from .potential import SquareWell, validate

    if not 0.0 < eps <= 0.1:
        raise PreconditionViolated(f"eps must lie in (0, 0.1], got {eps}")
    if not alpha > 0.0:
        raise PreconditionViolated(f"delta strength must be positive, got {alpha}")
    pot = validate(SquareWell(v0=alpha / (2.0 * eps), a=eps))
    return smatrix_via_transfer(pot, energy, steps=steps)
