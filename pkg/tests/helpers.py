"""Shared oracles and fixtures for the test suite.

The sine-kernel oracle here discretizes the kernel on the full interval
[-pi t, pi t] instead of the parity-split half-interval forms used by the
library, so the two spectra are computed along genuinely different routes
before being compared.
"""

import subprocess
import sys

import numpy as np

from scatter1d.potential import Sampled


def full_interval_sine_eigs(t: float, order: int) -> np.ndarray:
    """Nystrom eigenvalues of sin(x - y) / (pi (x - y)) on [-pi t, pi t].

    Gauss-Legendre nodes are mapped onto the symmetric interval and the
    kernel matrix is symmetrized with sqrt-weight scaling.  Returns the
    eigenvalues sorted descending.
    """
    nodes, weights = np.polynomial.legendre.leggauss(order)
    half = np.pi * t
    x = half * nodes
    w = half * weights
    diff = x[:, None] - x[None, :]
    kern = np.sinc(diff / np.pi) / np.pi
    sw = np.sqrt(w)
    sym = sw[:, None] * kern * sw[None, :]
    eigs = np.linalg.eigvalsh(sym)[::-1]
    return eigs


def arc_coefficient_quadrature(alpha: float, m: int) -> float:
    """Fourier coefficient of the arc indicator by adaptive quadrature.

    The symbol is 1 on (alpha, 2 pi - alpha) and 0 on the complementary arc;
    c_m = (1 / 2 pi) integral f(theta) e^{-i m theta} dtheta.  The sine part
    cancels by symmetry about theta = pi, leaving a cosine-weighted integral
    handled by the oscillatory rule.
    """
    from scipy.integrate import quad

    val, _ = quad(
        lambda theta: 1.0,
        alpha,
        2.0 * np.pi - alpha,
        weight="cos",
        wvar=float(m),
        limit=200,
    )
    return val / (2.0 * np.pi)


def random_smooth_sampled(rng: np.random.Generator, n: int = 257) -> Sampled:
    """Random smooth symmetric potential from mirrored Gaussian bumps."""
    a = float(rng.uniform(0.6, 1.4))
    x = np.linspace(-a, a, n)
    v = np.zeros(n)
    for _ in range(3):
        depth = rng.uniform(-2.0, 2.0)
        width = rng.uniform(0.25, 0.8) * a
        center = rng.uniform(0.0, 0.6) * a
        v += depth * (
            np.exp(-(((x - center) / width) ** 2))
            + np.exp(-(((x + center) / width) ** 2))
        )
    v = 0.5 * (v + v[::-1])
    return Sampled(a=a, x=x, v=v)


def run_cli(*args: str, cwd=None) -> subprocess.CompletedProcess:
    """Run the command line interface in a subprocess and capture output."""
    return subprocess.run(
        [sys.executable, "-m", "scatter1d.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
