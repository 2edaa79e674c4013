"""Command-line entry point: channel statistics, SOP sweeps and validation runs."""

import argparse
import logging
import sys
from typing import Optional

import numpy as np
from dotenv import load_dotenv
from pydantic import ValidationError

from analysis.sweeps import parse_sweep_spec, run_sweep
from analysis.validation import all_passed, run_validation
from config.presets import list_presets
from config.settings import LOG_LEVEL, STATS_GRID_POINTS, get_monte_carlo_defaults
from core.errors import ConfigError, InsufficientSamplesError, SecrecyError
from core.models import McRun, SystemConfig
from secrecy.params import avg_snr
from stats.eve import compute_eve_stats, mean_h_e_sq, pdf_h_e_sq
from stats.legit import cdf_h_ell_sq, compute_legit_stats
from utils.config_file import load_system_config
from utils.csv_output import write_csv

load_dotenv()

logger = logging.getLogger(__name__)

_MC = get_monte_carlo_defaults()

SWEEP_COLUMNS = ["sweep_value", "sop_analytic", "ip_analytic", "sop_asymptotic"]
MC_COLUMNS = ["sop_mc", "sop_mc_stderr"]


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the stats, sop-sweep and validate sub-commands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Scenario file (key = value lines)")
    common.add_argument("--preset", choices=list_presets(), help="Named scenario to start from")
    common.add_argument("--n-elements", type=int, help="Number of RIS elements")
    common.add_argument("--rs", type=float, help="Secrecy rate in bits/s/Hz")
    common.add_argument("--kmax", help="Series truncation order, or 'auto'")
    common.add_argument("--simpson", type=int, help="Simpson subintervals S (>= 8)")
    common.add_argument("--laguerre", type=int, help="Gauss-Laguerre nodes")
    common.add_argument("--out", help="Output path (default: standard output)")
    common.add_argument("--workers", type=int, default=_MC["workers"], help="Worker threads")
    common.add_argument("--log-level", default=LOG_LEVEL, help="Logging level")

    mc = argparse.ArgumentParser(add_help=False)
    mc.add_argument("--trials", type=int, default=_MC["n_trials"], help="Monte-Carlo trials")
    mc.add_argument("--seed", type=int, default=_MC["seed"], help="Monte-Carlo seed (unsigned 64-bit)")

    parser = argparse.ArgumentParser(description="Secrecy of RIS-aided THz links under alpha-mu fading and pointing errors")
    commands = parser.add_subparsers(dest="command", required=True)

    stats = commands.add_parser("stats", parents=[common], help="CDF of h_ell^2 and PDF of |h_e|^2 on a log grid")
    stats.add_argument("--grid-points", type=int, default=STATS_GRID_POINTS, help="Grid size (>= 2)")

    sweep = commands.add_parser("sop-sweep", parents=[common, mc], help="SOP, IP and asymptotic SOP across a sweep")
    sweep.add_argument("--sweep", required=True, help="VAR:START:STOP:STEPS (d_r_eve, n_elements, snr_db, rs)")
    sweep.add_argument("--mc", action=argparse.BooleanOptionalAction, default=False, help="Add Monte-Carlo columns")

    validate = commands.add_parser("validate", parents=[common, mc], help="Analytic-versus-simulation checks")
    validate.add_argument("--tol", type=float, help="Replace every check threshold")

    return parser


def _overrides(args: argparse.Namespace) -> dict:
    return {
        "n_elements": args.n_elements,
        "rs": args.rs,
        "k_max": args.kmax,
        "simpson_order": args.simpson,
        "laguerre_order": args.laguerre,
    }


def _load(args: argparse.Namespace) -> SystemConfig:
    return load_system_config(path=args.config, preset=args.preset, overrides=_overrides(args))


def _mc_run(args: argparse.Namespace) -> McRun:
    try:
        return McRun(n_trials=args.trials, seed=args.seed)
    except ValidationError as e:
        raise ConfigError(f"Invalid Monte-Carlo settings: {e}") from e


def cmd_stats(args: argparse.Namespace) -> int:
    """Write z, cdf_h_ell_sq, pdf_h_e_sq on a log-spaced grid with a parameter header block."""
    if args.grid_points < 2:
        raise ConfigError(f"Grid needs at least 2 points, got {args.grid_points}")

    cfg = _load(args)
    ls = compute_legit_stats(cfg.n_elements, cfg.fading, cfg.pe)
    es = compute_eve_stats(cfg.n_elements, cfg.fading, cfg.pe)
    snr = avg_snr(cfg)

    low = 1e-3 * min(ls.knee, es.scale)
    high = 4.0 * max(ls.knee, 10.0 * es.scale)
    z = np.geomspace(low, high, args.grid_points)
    rows = np.column_stack([z, cdf_h_ell_sq(z, ls, cfg.series), pdf_h_e_sq(z, es)])

    metadata = {
        "psi_n": ls.psi_n,
        "g_n": ls.g_n,
        "b_n": ls.b_n,
        "h1": ls.h1,
        "h2": ls.h2,
        "mean_h_ell_sq": ls.mean_h_ell_sq,
        "mean_h_e_sq": mean_h_e_sq(es),
        "snr_ell": snr.snr_ell,
        "snr_eve": snr.snr_eve,
    }
    write_csv(["z", "cdf_h_ell_sq", "pdf_h_e_sq"], rows, args.out, metadata)
    return 0


def cmd_sop_sweep(args: argparse.Namespace) -> int:
    """Write SOP, IP and asymptotic SOP (plus Monte-Carlo columns with --mc) across a sweep."""
    spec = parse_sweep_spec(args.sweep)
    cfg = _load(args)

    run = None
    if args.mc:
        run = _mc_run(args)
        if run.n_trials < _MC["min_trials"]:
            raise InsufficientSamplesError(f"--mc needs at least {_MC['min_trials']} trials, got {run.n_trials}")

    rows = run_sweep(cfg, spec, run=run, workers=args.workers)
    columns = SWEEP_COLUMNS + (MC_COLUMNS if args.mc else [])
    table = np.array([[value for value in row[: len(columns)]] for row in rows], dtype=float)
    write_csv(columns, table, args.out)
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    """Print the pass/fail table of the validation checks; 0 only if every check passes."""
    cfg = _load(args)
    run = _mc_run(args)
    results = run_validation(cfg, run, tol=args.tol, workers=args.workers)

    print("=" * 80)
    print(f"{'CHECK':<28}{'STATISTIC':>16}{'THRESHOLD':>16}{'RESULT':>10}")
    print("=" * 80)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name:<28}{result.statistic:>16.6e}{result.threshold:>16.6e}{status:>10}")
    print("=" * 80)

    if all_passed(results):
        print("✓ All checks passed")
        return 0

    failed = [result.name for result in results if not result.passed]
    print(f"✗ Failed: {', '.join(failed)}")
    return 1


COMMANDS = {
    "stats": cmd_stats,
    "sop-sweep": cmd_sop_sweep,
    "validate": cmd_validate,
}


def main(argv: Optional[list[str]] = None) -> int:
    """Parse arguments, run the sub-command and map errors to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr)

    try:
        return COMMANDS[args.command](args)
    except SecrecyError as e:
        logger.error(f"{type(e).__name__}: {e}", exc_info=logger.isEnabledFor(logging.DEBUG))
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
