"""Command-line frontend.

Every computation in the package is exposed as a subcommand with
machine-readable output: JSON (one report object, flags echoed under
"config") or CSV (header row plus data rows).  All state lives in the
flags, so identical invocations produce byte-identical output.

Exit codes: 0 success, 2 bad usage, 3 computation failure (message on
standard error).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .core import ScatterError
from .noninjective import (
    BUMP_KINKED,
    BUMP_SMOOTH,
    build_counterexample,
    verify_same_smatrix,
)
from .potential import Delta, Sampled, SquareWell, load_sampled_csv, validate
from .propagate import WaveTrace, _derivative
from .noninjective import recover_potential
from .smatrix import SMatrix, analytic_delta, smatrix_via_transfer
from .spectral import fredholm_report, jost_forms, phase_shift
from .szego import ArcSymbol, szego_limit_check, toeplitz_logdet


def _pair_of_floats(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated values, got {text!r}")
    return float(parts[0]), float(parts[1])


def _energy_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start,stop,count, got {text!r}")
    start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise argparse.ArgumentTypeError("count must be at least 1")
    return start, stop, count


def _range_spec(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0.0 or stop < start:
        raise argparse.ArgumentTypeError("need stop >= start and step > 0")
    return start, stop, step


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _jsonable(value):
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, complex):
        return [_jsonable(value.real), _jsonable(value.imag)]
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        out = float(value)
        return out if math.isfinite(out) else None
    if value is None or isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize {type(value)!r}")


def _json_text(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2, allow_nan=False) + "\n"


def _csv_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path) -> int:
    if out_path:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _config(args: argparse.Namespace, command: str) -> dict:
    skip = {"func"}
    config = {"subcommand": command}
    for key, value in vars(args).items():
        if key in skip or key == "subcommand":
            continue
        config[key] = _jsonable(value) if not isinstance(value, (str, type(None))) else value
    return config


def _smatrix_row(energy: float, s: SMatrix) -> dict:
    return {
        "energy": energy,
        "k": s.k,
        "a": s.a,
        "s11": s.s11,
        "s12": s.s12,
        "s21": s.s21,
        "s22": s.s22,
        "abs_s11_sq": abs(s.s11) ** 2,
        "abs_s21_sq": abs(s.s21) ** 2,
        "unitarity_residual": s.unitarity_residual(),
        "parity_residual": s.parity_residual,
    }


def cmd_smatrix(args: argparse.Namespace) -> int:
    if args.well is not None:
        spec = SquareWell(v0=args.well[0], a=args.well[1])
    elif args.delta is not None:
        spec = Delta(alpha=args.delta)
    else:
        spec = load_sampled_csv(args.sampled)

    if args.energy is not None:
        energies = [args.energy]
    else:
        start, stop, count = args.energy_grid
        energies = [float(e) for e in np.linspace(start, stop, count)]

    if isinstance(spec, Delta):
        matrices = [analytic_delta(spec.alpha, e) for e in energies]
    else:
        pot = validate(spec)
        matrices = [smatrix_via_transfer(pot, e, steps=args.steps) for e in energies]

    results = [_smatrix_row(e, s) for e, s in zip(energies, matrices)]
    if args.format == "json":
        return _emit(_json_text({"config": _config(args, "smatrix"), "results": results}), args.out)
    header = [
        "energy", "k", "a",
        "re_s11", "im_s11", "re_s12", "im_s12",
        "re_s21", "im_s21", "re_s22", "im_s22",
        "abs_s11_sq", "abs_s21_sq", "unitarity_residual", "parity_residual",
    ]
    rows = []
    for r in results:
        rows.append([
            r["energy"], r["k"], r["a"],
            r["s11"].real, r["s11"].imag, r["s12"].real, r["s12"].imag,
            r["s21"].real, r["s21"].imag, r["s22"].real, r["s22"].imag,
            r["abs_s11_sq"], r["abs_s21_sq"],
            r["unitarity_residual"], r["parity_residual"],
        ])
    return _emit(_csv_text(header, rows), args.out)


def cmd_counterexample(args: argparse.Namespace) -> int:
    if args.q * args.a >= math.pi / 2.0:
        print(
            "error: need q * a below pi/2 so cos(q x) stays node free on the support",
            file=sys.stderr,
        )
        return 2
    pair = build_counterexample(
        q=args.q, eps=args.eps, a=args.a, bump=args.bump, steps=args.steps
    )
    comparison = verify_same_smatrix(pair, steps=args.steps)
    perturbed = pair.perturbed.recovered
    report = {
        "config": _config(args, "counterexample"),
        "q": pair.q,
        "eps": pair.eps,
        "a": pair.a,
        "bump": pair.bump,
        "energy": pair.energy,
        "separation": pair.separation,
        "boundary_residual": pair.boundary_residual,
        "has_kink": pair.has_kink,
        "baseline_max_abs_v": float(np.max(np.abs(pair.baseline.recovered.values))),
        "perturbed_v_at_zero": float(perturbed.values[perturbed.x.size // 2]),
        "comparison": {
            "energy": comparison.energy,
            "max_entry_diff": comparison.max_entry_diff,
            "even_channel_diff": comparison.even_channel_diff,
            "odd_channel_diff": comparison.odd_channel_diff,
        },
    }
    return _emit(_json_text(report), args.out)


def cmd_fredholm(args: argparse.Namespace) -> int:
    start, stop, step = args.t
    count = int(round((stop - start) / step)) + 1
    grid = start + step * np.arange(count)
    report = fredholm_report(grid, args.quad)
    columns = [
        ("t", report.t_grid),
        ("logf_plus", report.logf_plus),
        ("logf_minus", report.logf_minus),
        ("asym_residual_plus", report.asym_residual_plus),
        ("asym_residual_minus", report.asym_residual_minus),
        ("w_plus", report.w_plus),
        ("w_minus", report.w_minus),
        ("marchenko_plus", report.marchenko_plus),
        ("marchenko_minus", report.marchenko_minus),
    ]
    if args.format == "json":
        payload = {"config": _config(args, "fredholm")}
        payload.update({name: values for name, values in columns})
        return _emit(_json_text(payload), args.out)
    header = [name for name, _ in columns]
    rows = [[values[i] for _, values in columns] for i in range(report.t_grid.size)]
    return _emit(_csv_text(header, rows), args.out)


def cmd_szego(args: argparse.Namespace) -> int:
    if args.alpha is not None:
        results = [toeplitz_logdet(ArcSymbol(args.alpha), n) for n in args.n]
        fmt = args.format or "csv"
        if fmt == "json":
            payload = {
                "config": _config(args, "szego"),
                "results": [
                    {
                        "n": r.n,
                        "alpha": r.alpha,
                        "log_det": r.log_det,
                        "asymptotic": r.asymptotic,
                        "residual": r.residual,
                    }
                    for r in results
                ],
            }
            return _emit(_json_text(payload), args.out)
        header = ["n", "alpha", "log_det", "asymptotic", "residual"]
        rows = [[r.n, r.alpha, r.log_det, r.asymptotic, r.residual] for r in results]
        return _emit(_csv_text(header, rows), args.out)

    checks = []
    for n in args.n:
        alpha = 2.0 * math.pi * args.t / n
        checks.append(szego_limit_check(alpha, n, args.t, quad_order=args.quad))
    fmt = args.format or "json"
    row_fields = [
        "alpha", "n", "t", "quad_order", "log_det",
        "fredholm_total", "continuum_asymptotic", "gap_fredholm", "gap_continuum",
    ]
    if fmt == "json":
        payload = {
            "config": _config(args, "szego"),
            "results": [{f: getattr(c, f) for f in row_fields} for c in checks],
        }
        return _emit(_json_text(payload), args.out)
    rows = [[getattr(c, f) for f in row_fields] for c in checks]
    return _emit(_csv_text(row_fields, rows), args.out)


def cmd_phaseshift(args: argparse.Namespace) -> int:
    results = []
    for k in args.k:
        shift = phase_shift(k)
        forms = jost_forms(k)
        results.append({
            "k": k,
            "eta_even": shift.eta_even,
            "eta_odd": shift.eta_odd,
            "a_odd": forms.a_odd,
            "exp_ieta_even": forms.exp_ieta_even,
            "identity_even_residual": k * math.tan(2.0 * shift.eta_even) + 1.0,
            "identity_odd_residual": k * math.tan(2.0 * shift.eta_odd) - 1.0,
            "branch_residual": float(np.angle(forms.exp_ieta_even)) - shift.eta_even,
        })
    if args.format == "json":
        return _emit(_json_text({"config": _config(args, "phaseshift"), "results": results}), args.out)
    header = [
        "k", "eta_even", "eta_odd",
        "re_a_odd", "im_a_odd", "re_exp_ieta_even", "im_exp_ieta_even",
        "identity_even_residual", "identity_odd_residual", "branch_residual",
    ]
    rows = []
    for r in results:
        rows.append([
            r["k"], r["eta_even"], r["eta_odd"],
            r["a_odd"].real, r["a_odd"].imag,
            r["exp_ieta_even"].real, r["exp_ieta_even"].imag,
            r["identity_even_residual"], r["identity_odd_residual"], r["branch_residual"],
        ])
    return _emit(_csv_text(header, rows), args.out)


def _load_trace_csv(path: str) -> WaveTrace:
    with open(path, "r") as handle:
        header = handle.readline().strip()
        if header != "x,psi":
            raise ScatterError(f"trace CSV must start with header 'x,psi', got {header!r}")
        rows = [line.strip() for line in handle if line.strip()]
    try:
        data = np.array([[float(tok) for tok in row.split(",")] for row in rows])
    except ValueError as exc:
        raise ScatterError(f"malformed trace row: {exc}") from None
    if data.ndim != 2 or data.shape[1] != 2 or data.shape[0] < 5:
        raise ScatterError("trace CSV needs columns x,psi and at least 5 rows")
    x = data[:, 0]
    psi = data[:, 1]
    steps = np.diff(x)
    if not np.all(steps > 0.0):
        raise ScatterError("trace grid must be strictly increasing")
    h = float(steps[0])
    if np.max(np.abs(steps - h)) > 1e-9 * max(1.0, h):
        raise ScatterError("trace grid spacing varies beyond 1e-9")
    return WaveTrace(grid=x, psi=psi, dpsi=_derivative(psi, h), energy=math.nan)


def cmd_recover(args: argparse.Namespace) -> int:
    trace = _load_trace_csv(args.trace)
    recovered = recover_potential(trace, args.energy, node_tol=args.node_tol)
    if args.format == "json":
        report = {
            "config": _config(args, "recover"),
            "energy": args.energy,
            "node_tol": recovered.node_tol,
            "x": recovered.x,
            "v": recovered.values,
            "masked_indices": np.nonzero(recovered.mask)[0],
            "mask_fraction": float(recovered.mask.mean()),
        }
        return _emit(_json_text(report), args.out)
    rows = [[recovered.x[i], recovered.values[i]] for i in range(recovered.x.size)]
    return _emit(_csv_text(["x", "V"], rows), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scatter1d",
        description=(
            "Scattering matrices of symmetric short-range potentials, a fixed-energy "
            "non-injectivity counterexample, sine-kernel Fredholm determinants, and "
            "arc-symbol Toeplitz determinants."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sm = sub.add_parser("smatrix", help="scattering matrix of one potential")
    pot = sm.add_mutually_exclusive_group(required=True)
    pot.add_argument("--well", type=_pair_of_floats, metavar="V0,A", help="square well depth and half width")
    pot.add_argument("--delta", type=float, metavar="ALPHA", help="point interaction strength (closed form)")
    pot.add_argument("--sampled", metavar="FILE", help="CSV file with header x,V")
    en = sm.add_mutually_exclusive_group(required=True)
    en.add_argument("--energy", type=float, help="single energy, must be positive")
    en.add_argument("--energy-grid", type=_energy_grid, metavar="START,STOP,COUNT", help="uniform energy grid")
    sm.add_argument("--steps", type=int, default=4096, help="integration steps (default 4096)")
    sm.add_argument("--format", choices=("json", "csv"), default="json")
    sm.add_argument("--out", default=None, help="output path (default standard output)")
    sm.set_defaults(func=cmd_smatrix)

    ce = sub.add_parser("counterexample", help="two potentials sharing boundary data at one energy")
    ce.add_argument("--q", type=float, default=1.0, help="construction wavenumber (default 1)")
    ce.add_argument("--eps", type=float, default=0.01, help="bump amplitude (default 0.01)")
    ce.add_argument("--a", type=float, default=1.0, help="support half width (default 1)")
    ce.add_argument("--bump", choices=(BUMP_SMOOTH, BUMP_KINKED), default=BUMP_SMOOTH)
    ce.add_argument("--steps", type=int, default=4096, help="integration steps (default 4096)")
    ce.add_argument("--out", default=None, help="output path (default standard output)")
    ce.set_defaults(func=cmd_counterexample)

    fr = sub.add_parser("fredholm", help="sine-kernel determinant sweep over t")
    fr.add_argument("--t", type=_range_spec, required=True, metavar="START:STOP:STEP", help="uniform t grid")
    fr.add_argument("--quad", type=int, default=300, help="quadrature order (default 300)")
    fr.add_argument("--format", choices=("json", "csv"), default="csv")
    fr.add_argument("--out", default=None, help="output path (default standard output)")
    fr.set_defaults(func=cmd_fredholm)

    szg = sub.add_parser("szego", help="arc-symbol Toeplitz determinants")
    mode = szg.add_mutually_exclusive_group(required=True)
    mode.add_argument("--alpha", type=float, help="arc parameter in [0, pi): determinant table over --n")
    mode.add_argument("--t", type=float, help="continuum cross-check at alpha = 2 pi t / n for each n")
    szg.add_argument("--n", type=_int_list, required=True, metavar="N1,N2,...", help="matrix sizes")
    szg.add_argument("--quad", type=int, default=300, help="quadrature order for the cross-check")
    szg.add_argument("--format", choices=("json", "csv"), default=None,
                     help="default: csv for the table, json for the cross-check")
    szg.add_argument("--out", default=None, help="output path (default standard output)")
    szg.set_defaults(func=cmd_szego)

    ph = sub.add_parser("phaseshift", help="closed-form phase shifts and Jost data")
    ph.add_argument("--k", type=_float_list, required=True, metavar="K1,K2,...", help="wavenumbers, all positive")
    ph.add_argument("--format", choices=("json", "csv"), default="csv")
    ph.add_argument("--out", default=None, help="output path (default standard output)")
    ph.set_defaults(func=cmd_phaseshift)

    rc = sub.add_parser("recover", help="pointwise potential recovery from a wavefunction trace")
    rc.add_argument("--trace", required=True, metavar="FILE", help="CSV file with header x,psi")
    rc.add_argument("--energy", type=float, required=True, help="energy of the trace")
    rc.add_argument("--node-tol", type=float, default=1e-6, help="relative node mask threshold (default 1e-6)")
    rc.add_argument("--format", choices=("json", "csv"), default="csv")
    rc.add_argument("--out", default=None, help="output path (default standard output)")
    rc.set_defaults(func=cmd_recover)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except ScatterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
