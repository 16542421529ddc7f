"""Toeplitz determinants for the arc-indicator symbol.

The symbol is the indicator of the arc [alpha, 2 pi - alpha] on the unit
circle.  Its Fourier coefficients have the closed form

    c_0 = 1 - alpha/pi,    c_m = -sin(m alpha) / (pi m)   (m != 0),

and the n x n Toeplitz matrix built from them is a section of an
orthogonal projection: symmetric, eigenvalues strictly inside (0, 1), so
log det < 0 and Cholesky applies.  ``toeplitz_logdet`` compares the exact
log determinant against the large-n closed form

    n^2 log cos(alpha/2) - (1/4) log(n sin(alpha/2)) + (1/12) log 2
        + 3 zeta'(-1),

and ``szego_limit_check`` ties the discrete determinant to the continuum
sine-kernel determinant via the coupling alpha * n = 2 pi t.

Precision: the smallest eigenvalue scales like cos(alpha/2)^(2(2n-1)),
the square of the last Cholesky pivot.  Once that falls below
double-precision resolution the factorization is garbage, so the entries
and the factorization switch to mpmath with a working precision chosen
from that eigenvalue estimate.  alpha = 0 is accepted
as the identity symbol (the matrix is exactly the identity); the
asymptotic formula has no meaning there and both log_det and asymptotic
are reported as 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .core import (
    ZETA_PRIME_MINUS_ONE,
    NotPositiveDefinite,
    PreconditionViolated,
)
from .spectral import PARITY_EVEN, PARITY_ODD, fredholm_log_det

MAX_N = 512

# Digits of working precision needed so the smallest eigenvalue keeps
# meaning; below this, plain doubles are fine.
DOUBLE_SAFE_DIGITS = 12.0
EXTRA_DIGITS = 25
MAX_REQUIRED_DIGITS = 320.0


@dataclass(frozen=True)
class ArcSymbol:
    """Indicator of the arc [alpha, 2 pi - alpha]; alpha = 0 is identity."""

    alpha: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.alpha < math.pi):
            raise PreconditionViolated(
                f"alpha must lie in [0, pi), got {self.alpha}"
            )


def arc_coefficient(alpha: float, m: int) -> float:
    """Fourier coefficient c_m of the arc-indicator symbol."""
    if m == 0:
        return 1.0 - alpha / math.pi
    return -math.sin(m * alpha) / (math.pi * m)


@dataclass(frozen=True)
class ToeplitzResult:
    n: int
    alpha: float
    log_det: float
    asymptotic: float
    residual: float


def _required_digits(alpha: float, n: int) -> float:
    # The smallest eigenvalue tracks the square of the last Cholesky pivot,
    # det(T_n)/det(T_{n-1}) ~ cos(alpha/2)^(2n-1), so the factorization
    # needs about -log10 of that squared.
    return 2.0 * (2 * n - 1) * (-math.log10(math.cos(0.5 * alpha)))


def _logdet_double(alpha: float, n: int) -> float:
    col = np.array([arc_coefficient(alpha, m) for m in range(n)])
    matrix = scipy.linalg.toeplitz(col)
    try:
        lower = np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite(
            f"Cholesky broke down at n = {n}, alpha = {alpha}: {exc}"
        ) from exc
    return float(2.0 * np.sum(np.log(np.diag(lower))))


def _logdet_extended(alpha: float, n: int, digits: int) -> float:
    import mpmath as mp

    with mp.workdps(digits):
        alpha_mp = mp.mpf(alpha)
        coeffs = [1 - alpha_mp / mp.pi]
        for m in range(1, n):
            coeffs.append(-mp.sin(m * alpha_mp) / (mp.pi * m))
        matrix = mp.matrix(n)
        for i in range(n):
            for j in range(n):
                matrix[i, j] = coeffs[abs(i - j)]
        try:
            lower = mp.cholesky(matrix)
        except ValueError as exc:
            raise NotPositiveDefinite(
                f"extended-precision Cholesky broke down at n = {n}, "
                f"alpha = {alpha}: {exc}"
            ) from exc
        acc = mp.mpf(0)
        for i in range(n):
            acc += mp.log(lower[i, i])
        return float(2 * acc)


def toeplitz_logdet(symbol: ArcSymbol, n: int) -> ToeplitzResult:
    """Exact log determinant of the n x n arc-symbol Toeplitz matrix.

    residual = log_det - asymptotic; it shrinks as n grows at fixed alpha.
    """
    if not (1 <= n <= MAX_N):
        raise PreconditionViolated(f"n must lie in [1, {MAX_N}], got {n}")
    alpha = symbol.alpha
    if alpha == 0.0:
        return ToeplitzResult(
            n=n, alpha=alpha, log_det=0.0, asymptotic=0.0, residual=0.0
        )

    needed = _required_digits(alpha, n)
    if needed <= DOUBLE_SAFE_DIGITS:
        log_det = _logdet_double(alpha, n)
    elif needed <= MAX_REQUIRED_DIGITS:
        log_det = _logdet_extended(alpha, n, int(math.ceil(needed)) + EXTRA_DIGITS)
    else:
        raise NotPositiveDefinite(
            f"smallest eigenvalue needs about {needed:.0f} digits at n = {n}, "
            f"alpha = {alpha}; beyond supported precision"
        )

    asymptotic = (
        n * n * math.log(math.cos(0.5 * alpha))
        - 0.25 * math.log(n * math.sin(0.5 * alpha))
        + math.log(2.0) / 12.0
        + 3.0 * ZETA_PRIME_MINUS_ONE
    )
    return ToeplitzResult(
        n=n,
        alpha=alpha,
        log_det=log_det,
        asymptotic=asymptotic,
        residual=log_det - asymptotic,
    )


@dataclass(frozen=True)
class SzegoCrossCheck:
    """Discrete-vs-continuum comparison at the coupling alpha n = 2 pi t."""

    alpha: float
    n: int
    t: float
    quad_order: int
    log_det: float
    fredholm_total: float
    continuum_asymptotic: float
    gap_fredholm: float
    gap_continuum: float


def szego_limit_check(
    alpha: float, n: int, t: float, quad_order: int = 300
) -> SzegoCrossCheck:
    """Compare the Toeplitz log determinant with the sine-kernel route.

    The full-interval determinant factorizes over parity, so the continuum
    reference is fredholm_log_det(even) + fredholm_log_det(odd); the
    closed-form continuum asymptotic is
    -(pi t)^2/2 - (1/4) log(pi t) + (1/12) log 2 + 3 zeta'(-1).
    """
    target = 2.0 * math.pi * t
    if abs(alpha * n - target) > 1e-9 * max(1.0, target):
        raise PreconditionViolated(
            f"alpha * n = {alpha * n} does not match 2 pi t = {target}"
        )
    if not (0.5 <= t <= 3.0):
        raise PreconditionViolated(f"t must lie in [0.5, 3], got {t}")

    result = toeplitz_logdet(ArcSymbol(alpha), n)
    fredholm_total = fredholm_log_det(PARITY_EVEN, t, quad_order) + fredholm_log_det(
        PARITY_ODD, t, quad_order
    )
    tau = math.pi * t
    continuum = (
        -tau * tau / 2.0
        - 0.25 * math.log(tau)
        + math.log(2.0) / 12.0
        + 3.0 * ZETA_PRIME_MINUS_ONE
    )
    return SzegoCrossCheck(
        alpha=alpha,
        n=n,
        t=t,
        quad_order=quad_order,
        log_det=result.log_det,
        fredholm_total=fredholm_total,
        continuum_asymptotic=continuum,
        gap_fredholm=result.log_det - fredholm_total,
        gap_continuum=result.log_det - continuum,
    )
