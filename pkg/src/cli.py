"""
Command Line Interface for HexHarmonic

Provides commands for kernel scans, Fourier expansions, summability error
sweeps, approximation experiment reports and triangle cosine expansions.
"""

import argparse
import logging
import math
import shlex
import sys
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from src import __version__
from src.config import FORMATS, RunConfig
from src.errors import NumericalError, UsageError
from src.experiments import ExperimentSuite
from src.export import ExportPayload, Exporter
from src.hexcoords import t_to_s
from src.kernels import KernelKind, KernelSpec, evaluate_kernel
from src.operators import SummabilityMethod, coefficients
from src.quadrature import GridFunction, delta_nodes, grid_points, sample_points
from src.registry import parse_function
from src.triangle import check_compatibility, cosine_cesaro1, cosine_coeffs
from src.validator import EXPERIMENTS, KERNEL_TYPES, RunConfigValidator

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

IMAGINARY_TOL = 1e-10

COMMAND_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "kernel": {"n": 0, "grid": 64},
    "expand": {"prune": 1e-13},
    "summab": {"p": "inf"},
    "report": {},
    "triangle": {"M": 64, "cesaro": False},
}

REPORT_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "lebesgue": {"ns": [8, 16, 32, 64, 128]},
    "l1growth": {"ns": [8, 16, 32, 64], "grid": 1025},
    "moments": {"ns": [4, 8, 16, 32], "r": 2, "nu": 2.0},
    "bernstein": {"ns": [8, 16, 32], "alpha": "1,0,0;1,1,0", "trials": 200, "p": math.inf},
    "jackson": {"ns": [8, 16, 32], "f": "cone", "r": 1, "p": math.inf},
    "inverse": {"f": "cone", "r": 1, "p": 2.0, "hs": [1 / 8, 1 / 16, 1 / 32]},
    "cutoff": {"ns": [4, 8, 16, 32], "f": "const;gauss:0.3;cone;poly:8"},
}


def configure_logging(verbose: bool = False, quiet: bool = False):
    """Log to standard error; data may go to standard output."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=[
            logging.StreamHandler(sys.stderr)
        ]
    )
    logging.getLogger().setLevel(level)


def _parse_alphas(text: str) -> List[List[int]]:
    alphas = []
    for part in text.split(";"):
        values = [int(v) for v in part.split(",")]
        if len(values) != 3 or min(values) < 0:
            raise UsageError(f"Derivative order must be three non-negative integers, got '{part}'")
        alphas.append(values)
    return alphas


def kernel_scan(config: RunConfig) -> ExportPayload:
    """Evaluate a kernel on the N x N cell grid."""
    kind = KernelKind(config.get("type"))
    spec = KernelSpec(kind, config.get("n"), config.get("r"), config.get("delta"))
    N = config.get("grid")
    logger.info(f"Scanning {spec.label} on a {N}x{N} grid...")

    points = grid_points(N)
    values = np.broadcast_to(np.asarray(evaluate_kernel(spec, points)), points.shape)
    if np.iscomplexobj(values):
        residue = float(np.max(np.abs(values.imag)))
        if residue > IMAGINARY_TOL * max(1.0, float(np.max(np.abs(values)))):
            raise NumericalError(f"{spec.label} has imaginary residue {residue:.3e}")
        values = values.real
    if config.get("as_grid"):
        return ExportPayload.from_grid("kernel", GridFunction(N, values))
    s1, s2 = t_to_s(points)
    frame = pd.DataFrame({
        "s1": np.ravel(s1),
        "s2": np.ravel(s2),
        "t1": np.ravel(points.t1),
        "t2": np.ravel(points.t2),
        "t3": np.ravel(points.t3),
        "value": np.ravel(values),
    })
    summary = {"min": float(frame["value"].min()), "max": float(frame["value"].max()),
               "mean": float(frame["value"].mean())}
    document = {"kernel": spec.label, "grid_N": N, "summary": summary,
                "rows": frame.to_dict(orient="records")}
    return ExportPayload("kernel", frame, document, summary)


def expand_function(config: RunConfig) -> ExportPayload:
    """Fourier coefficients of a registry function, small entries pruned."""
    f = parse_function(config.get("f"), config.seed)
    n = config.get("n")
    logger.info(f"Expanding {f.name} up to degree {n}...")
    table = coefficients(f, n, config.get("grid"))
    prune = config.get("prune")
    if prune:
        table = table.select(np.abs(table.values) > prune)
    logger.info(f"Successfully expanded {f.name}: {len(table)} entries on grid N={table.grid_N}")
    payload = ExportPayload.from_table("expand", table)
    payload.document = {"function": f.name, **payload.document}
    return payload


def summability_sweep(config: RunConfig) -> ExportPayload:
    """Approximation error of a summability method over an n-sweep."""
    f = parse_function(config.get("f"), config.seed)
    method = SummabilityMethod.parse(config.get("method"))
    ns = config.get("ns")
    p = config.get("p")
    logger.info(f"Running {method.label} on {f.name} over n={ns}...")
    suite = ExperimentSuite(config.workers)
    frame = suite.run_summability(f, method, ns, p, config.get("grid"))
    document = {"function": f.name, "method": method.label, "p": "inf" if math.isinf(p) else p,
                "rows": frame.to_dict(orient="records")}
    return ExportPayload("summab", frame, document)


def run_report(config: RunConfig) -> ExportPayload:
    """Run one approximation experiment."""
    experiment = config.get("experiment")
    params = dict(REPORT_DEFAULTS[experiment])
    params.update({k: v for k, v in config.params.items() if v is not None})
    suite = ExperimentSuite(config.workers)
    logger.info(f"Running {experiment} experiment...")

    if experiment == "lebesgue":
        report = suite.run_lebesgue(params["ns"])
    elif experiment == "l1growth":
        report = suite.run_l1growth(params["ns"], params["grid"])
    elif experiment == "moments":
        report = suite.run_moments(params["r"], params["nu"], params["ns"])
    elif experiment == "bernstein":
        report = suite.run_bernstein(params["ns"], _parse_alphas(params["alpha"]), params["trials"],
                                     config.seed, params["p"])
    elif experiment == "jackson":
        f = parse_function(params["f"], config.seed)
        report = suite.run_jackson(f, params["r"], params["ns"], params["p"])
    elif experiment == "inverse":
        f = parse_function(params["f"], config.seed)
        report = suite.run_inverse(f, params["r"], params["p"], params["hs"])
    else:
        functions = [parse_function(name, config.seed) for name in params["f"].split(";")]
        report = suite.run_cutoff(functions, params["ns"])

    logger.info(f"Experiment {experiment} complete: {len(report.rows)} rows")
    for note in report.notes:
        logger.warning(note)
    return ExportPayload.from_report(report)


def triangle_expand(config: RunConfig) -> ExportPayload:
    """Generalized cosine coefficients on the triangle, with optional (C,1) error."""
    f = parse_function(config.get("f"), config.seed)
    n = config.get("n")
    M = config.get("M")
    logger.info(f"Expanding {f.name} in generalized cosines up to degree {n} (M={M})...")
    table = cosine_coeffs(f, n, M)
    summary: Dict[str, Any] = {"entries": len(table),
                               "compatibility": check_compatibility(f, 65)["max_violation"]}
    if config.get("cesaro"):
        nodes = delta_nodes(max(M // 4, 8))
        error = np.abs(sample_points(cosine_cesaro1(f, n, M), nodes) - sample_points(f, nodes))
        summary["cesaro_sup_error"] = float(np.max(error))
    payload = ExportPayload.from_table("triangle", table)
    payload.summary = summary
    payload.document = {"function": f.name, "summary": summary, **payload.document}
    return payload


COMMANDS: Dict[str, Callable[[RunConfig], ExportPayload]] = {
    "kernel": kernel_scan,
    "expand": expand_function,
    "summab": summability_sweep,
    "report": run_report,
    "triangle": triangle_expand,
}


def execute(args, invocation: str) -> int:
    """Validate, run and export one command; map failures to exit codes."""
    try:
        config = RunConfig.from_args(args, COMMAND_DEFAULTS[args.command], invocation)
        config = RunConfigValidator().validate(config)
        payload = COMMANDS[args.command](config)
        Exporter(config.output_format, invocation).write(payload, config.out)
        return EXIT_OK
    except UsageError as e:
        logger.error(f"Error: {e}")
        return EXIT_USAGE
    except NumericalError as e:
        logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERICAL
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_FAILURE
    except Exception as e:
        logger.error(f"Unexpected error during {args.command}: {e}")
        return EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true', help='Log debug details')
    common.add_argument('--quiet', action='store_true', help='Log warnings and errors only')
    common.add_argument('--config', type=str, default=None,
                        help='Run-config file (JSON5); explicit flags override its values')
    common.add_argument('--seed', type=int, default=None, help='Random seed (default: 0)')
    common.add_argument('--format', type=str, choices=FORMATS, default=None,
                        help='Output format: csv, json, parquet or md (default: csv)')
    common.add_argument('--out', type=str, default=None,
                        help='Output file (default: standard output; required for parquet)')

    parser = argparse.ArgumentParser(
        description="HexHarmonic - Fourier analysis on the hexagon and the equilateral triangle"
    )
    parser.add_argument('--version', action='version', version=f'hexharmonic {__version__}')
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    # Kernel command
    kernel_parser = subparsers.add_parser('kernel', parents=[common], help='Evaluate a kernel on the cell grid')
    kernel_parser.add_argument('--type', type=str, choices=KERNEL_TYPES, default=None,
                               help='Kernel: ' + ', '.join(KERNEL_TYPES))
    kernel_parser.add_argument('--n', type=int, default=None, help='Kernel degree (default: 0)')
    kernel_parser.add_argument('--r', type=float, default=None,
                               help='Poisson radius in [0,1), or Jackson power')
    kernel_parser.add_argument('--delta', type=float, default=None, help='Cesaro order')
    kernel_parser.add_argument('--grid', type=int, default=None, help='Grid size N (default: 64)')
    kernel_parser.add_argument('--as-grid', action='store_const', const=True, default=None,
                               help='Write the grid-function layout: an N=<N> line, then rows a,b,re,im')

    # Expand command
    expand_parser = subparsers.add_parser('expand', parents=[common], help='Fourier coefficients of a function')
    expand_parser.add_argument('--f', type=str, default=None,
                               help='Registry function: const, phi:j1,j2,j3, gauss:sigma, cone, poly:n')
    expand_parser.add_argument('--n', type=int, default=None, help='Degree of the index set')
    expand_parser.add_argument('--grid', type=int, default=None, help='Sampling grid (default: 2n+1)')
    expand_parser.add_argument('--prune', type=float, default=None,
                               help='Drop entries with magnitude at or below this (default: 1e-13)')

    # Summability command
    summab_parser = subparsers.add_parser('summab', parents=[common], help='Summability error sweep')
    summab_parser.add_argument('--f', type=str, default=None, help='Registry function')
    summab_parser.add_argument('--method', type=str, default=None,
                               help='dirichlet, cesaro:delta, abel:r, abel, jackson:r[,rho] or eta')
    summab_parser.add_argument('--ns', type=str, default=None, help='Comma-separated degrees')
    summab_parser.add_argument('--p', type=str, default=None, help='L^p exponent or inf (default: inf)')
    summab_parser.add_argument('--grid', type=int, default=None, help='Coefficient grid (default: 4n+1, >= 65)')

    # Report command
    report_parser = subparsers.add_parser('report', parents=[common], help='Run an approximation experiment')
    report_parser.add_argument('experiment', nargs='?', default=None, help='One of: ' + ', '.join(EXPERIMENTS))
    report_parser.add_argument('--ns', type=str, default=None, help='Comma-separated degrees')
    report_parser.add_argument('--r', type=int, default=None, help='Difference order or kernel power')
    report_parser.add_argument('--nu', type=float, default=None, help='Moment order')
    report_parser.add_argument('--alpha', type=str, default=None,
                               help="Derivative orders, e.g. '1,0,0' or '1,0,0;1,1,0'")
    report_parser.add_argument('--trials', type=int, default=None, help='Random polynomials per degree')
    report_parser.add_argument('--f', type=str, default=None, help="Registry function(s), ';'-separated for cutoff")
    report_parser.add_argument('--p', type=str, default=None, help='L^p exponent or inf')
    report_parser.add_argument('--hs', type=str, default=None, help='Comma-separated step sizes')
    report_parser.add_argument('--grid', type=int, default=None, help='Quadrature grid size')

    # Triangle command
    triangle_parser = subparsers.add_parser('triangle', parents=[common],
                                            help='Generalized cosine expansion on the triangle')
    triangle_parser.add_argument('--f', type=str, default=None, help='Registry function')
    triangle_parser.add_argument('--n', type=int, default=None, help='Degree bound on -k3')
    triangle_parser.add_argument('--M', type=int, default=None, help='Triangle quadrature level (default: 64)')
    triangle_parser.add_argument('--cesaro', action='store_const', const=True, default=None,
                                 help='Also report the (C,1) sup-error on the triangle')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    configure_logging(args.verbose, args.quiet)
    invocation = "hexharmonic " + shlex.join(argv)
    return execute(args, invocation)


if __name__ == '__main__':
    sys.exit(main())
