"""Symmetric potentials compactly supported on [-a, a].

Three variants cover everything downstream:

* ``SquareWell(v0, a)``: constant value -v0 on [-a, a], zero outside.
* ``Delta(alpha)``: attractive point interaction alpha at the origin.  It has
  no pointwise values and is only consumed by closed-form scattering.
* ``Sampled(a, x, v)``: values on a uniform symmetric grid over [-a, a],
  evaluated between nodes by linear interpolation.

``validate`` turns a spec into an ``EvaluatedPotential`` after running the
symmetry, finiteness, and grid checks.  Everything that integrates a
potential consumes the evaluated form, so the checks run exactly once.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    AsymmetricPotential,
    DeltaNotSamplable,
    NonFiniteSample,
    NonUniformGrid,
    PreconditionViolated,
)

#: Relative tolerance for the V(x) = V(-x) check on sampled values.
SYMMETRY_RTOL = 1e-12

#: Relative tolerance on grid spacing uniformity.
GRID_RTOL = 1e-9


@dataclass(frozen=True)
class SquareWell:
    """Constant well of depth v0 > 0 (v0 = 0 is the free limit)."""

    v0: float
    a: float


@dataclass(frozen=True)
class Delta:
    """Point interaction of strength alpha > 0 at the origin."""

    alpha: float


@dataclass
class Sampled:
    """Tabulated potential on a uniform grid spanning [-a, a].

    The grid must hold an odd number of points so the origin is a node.
    """

    a: float
    x: np.ndarray
    v: np.ndarray


PotentialSpec = SquareWell | Delta | Sampled


class EvaluatedPotential:
    """Validated, pointwise-evaluable potential.

    Calling it returns V(x); the interior value applies on the closed
    interval [-a, a] and V = 0 outside.  The delta variant is a marker only
    and refuses pointwise evaluation.
    """

    def __init__(self, kind, a, depth=None, x=None, v=None, alpha=None):
        self.kind = kind
        self.a = float(a)
        self._depth = depth
        self._x = x
        self._v = v
        self.alpha = alpha

    @property
    def is_delta(self) -> bool:
        return self.kind == "delta"

    def __call__(self, x):
        if self.kind == "delta":
            raise DeltaNotSamplable("a delta potential has no pointwise values")
        scalar = np.isscalar(x)
        xa = np.asarray(x, dtype=float)
        inside = np.abs(xa) <= self.a
        if self.kind == "well":
            out = np.where(inside, -self._depth, 0.0)
        else:
            out = np.zeros_like(xa)
            out[inside] = np.interp(xa[inside], self._x, self._v)
        return float(out) if scalar else out


def validate(spec: PotentialSpec) -> EvaluatedPotential:
    """Check a potential spec and return its evaluator.

    Raises AsymmetricPotential, NonFiniteSample, or NonUniformGrid for bad
    sampled data and PreconditionViolated for bad parameters.
    """
    if isinstance(spec, SquareWell):
        if not spec.a > 0.0:
            raise PreconditionViolated(f"half-width a must be positive, got {spec.a}")
        if spec.v0 < 0.0:
            raise PreconditionViolated(f"well depth v0 must be >= 0, got {spec.v0}")
        return EvaluatedPotential("well", spec.a, depth=float(spec.v0))

    if isinstance(spec, Delta):
        if not spec.alpha > 0.0:
            raise PreconditionViolated(f"delta strength must be positive, got {spec.alpha}")
        return EvaluatedPotential("delta", 0.0, alpha=float(spec.alpha))

    if isinstance(spec, Sampled):
        x = np.asarray(spec.x, dtype=float)
        v = np.asarray(spec.v, dtype=float)
        if x.ndim != 1 or x.shape != v.shape:
            raise PreconditionViolated("x and v must be 1d arrays of equal length")
        n = x.size
        if n < 3 or n % 2 == 0:
            raise PreconditionViolated(f"need an odd number of samples >= 3, got {n}")
        if not spec.a > 0.0:
            raise PreconditionViolated(f"half-width a must be positive, got {spec.a}")
        if not np.all(np.isfinite(x)):
            raise NonFiniteSample("grid contains non-finite values")
        if not np.all(np.isfinite(v)):
            raise NonFiniteSample("potential samples contain non-finite values")
        h = (x[-1] - x[0]) / (n - 1)
        if not h > 0.0:
            raise NonUniformGrid("grid must be strictly increasing")
        if np.max(np.abs(np.diff(x) - h)) > GRID_RTOL * h:
            raise NonUniformGrid("grid spacing is not uniform to 1e-9 relative")
        tol_a = GRID_RTOL * max(1.0, spec.a)
        if abs(x[0] + spec.a) > tol_a or abs(x[-1] - spec.a) > tol_a:
            raise NonUniformGrid(
                f"grid must span exactly [-a, a], got [{x[0]}, {x[-1]}] for a={spec.a}"
            )
        scale = max(1.0, float(np.max(np.abs(v))))
        asym = float(np.max(np.abs(v - v[::-1])))
        if asym > SYMMETRY_RTOL * scale:
            raise AsymmetricPotential(
                f"sampled values break V(x) = V(-x): max deviation {asym:.3e}"
            )
        return EvaluatedPotential("sampled", spec.a, x=x, v=v)

    raise PreconditionViolated(f"unknown potential spec {spec!r}")


def sample_analytic(spec: PotentialSpec, n: int) -> Sampled:
    """Tabulate an analytic potential on an odd uniform grid over [-a, a].

    Only the square well is samplable; the delta has no pointwise values.
    """
    if isinstance(spec, Delta):
        raise DeltaNotSamplable("cannot tabulate a delta potential")
    if not isinstance(spec, SquareWell):
        raise PreconditionViolated("only analytic (square well) specs can be sampled")
    if n < 3 or n % 2 == 0:
        raise PreconditionViolated(f"need an odd sample count >= 3, got {n}")
    x = np.linspace(-spec.a, spec.a, n)
    v = np.full(n, -float(spec.v0))
    return Sampled(a=spec.a, x=x, v=v)


def load_sampled_csv(path) -> Sampled:
    """Read a sampled potential from a two-column CSV with header ``x,V``."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "x,V":
            raise PreconditionViolated(f"expected header 'x,V', got {header!r}")
        rows = [line.strip() for line in fh if line.strip()]
    try:
        data = np.array([[float(tok) for tok in row.split(",")] for row in rows])
    except ValueError as exc:
        raise PreconditionViolated(f"malformed CSV row: {exc}") from None
    if data.ndim != 2 or data.shape[1] != 2:
        raise PreconditionViolated("every row must hold exactly two columns")
    x, v = data[:, 0], data[:, 1]
    if abs(x[0] + x[-1]) > GRID_RTOL * max(1.0, abs(x[-1])):
        raise NonUniformGrid("grid endpoints are not symmetric about the origin")
    return Sampled(a=float(x[-1]), x=x, v=v)
