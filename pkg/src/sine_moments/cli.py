"""Command-line interface: deterministic CSV/JSON emission for every
capability of the package.

Output contract: CSV (RFC 4180, header row, 17 significant digits, complex
values as re/im column pairs) to --out or stdout; an optional JSON manifest
(sorted keys, FNV-1a checksum of the CSV bytes) to --manifest.  Exit codes:
0 success, 2 usage error, 3 numeric/domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__
from .arithmetic import (DivisorTable, _fnv1a64, a_m, divisor_sieve,
                         sieve_cache_load, sieve_cache_save, sum_d2,
                         sum_d2_over_n)
from .cfkrs import wm_leading, wm_pole
from .cue import cue_exact_det, cue_exact_perm, cue_mc, scaling_check
from .errors import SineMomentsError
from .moment_integrator import (QuadraturePolicy, moment_scan, ratio_curve,
                                shifted_moment)
from .predictions import ShiftConfig, conjecture_rhs, perm_sum, verify_cue6

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _fmt(x) -> str:
    """17 significant digits: enough to round-trip binary64."""
    return f"{float(x):.17g}"


def _csv_field(s: str) -> str:
    if any(c in s for c in ',"\r\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def _emit_csv(header, rows) -> str:
    lines = [",".join(_csv_field(h) for h in header)]
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, complex):
                raise TypeError("complex values must be split into re/im")
            if isinstance(v, float):
                cells.append(_fmt(v))
            else:
                cells.append(_csv_field(str(v)))
        lines.append(",".join(cells))
    return "\r\n".join(lines) + "\r\n"


def _reim(header_base):
    return [header_base + "_re", header_base + "_im"]


def _parse_reals(text: str):
    try:
        return [float(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated real list: {text!r}")


def _parse_ints(text: str):
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _shift_config(args) -> ShiftConfig:
    return ShiftConfig(args.M, np.array(args.mu), np.array(args.nu))


def _policy(args) -> QuadraturePolicy:
    kw = {}
    if getattr(args, "nodes_per_gap", None) is not None:
        kw["nodes_per_gap"] = args.nodes_per_gap
    return QuadraturePolicy(**kw)


def _threads(args) -> int:
    env = os.environ.get("SINE_MOMENTS_THREADS")
    if env is not None:
        return int(env)
    return getattr(args, "threads", None) or 1


# ---------------------------------------------------------------- handlers

def _handle_moment(args):
    cfg = _shift_config(args)
    est = shifted_moment(cfg, args.T0, args.T, args.window, _policy(args))
    header = (["M", "T0", "T", "window", "nodes_used"]
              + _reim("raw") + _reim("normalized") + _reim("prediction")
              + ["est_quadrature_error"])
    row = [cfg.M, float(args.T0), float(args.T), args.window, est.nodes_used,
           est.raw_integral.real, est.raw_integral.imag,
           est.normalized.real, est.normalized.imag,
           est.prediction.real, est.prediction.imag,
           est.est_quadrature_error]
    return header, [row]


def _handle_scan(args):
    cfg = _shift_config(args)
    ests = moment_scan(cfg, args.T_list, args.T0, _policy(args))
    header = (["M", "T0", "T", "nodes_used"] + _reim("normalized")
              + _reim("prediction") + ["est_quadrature_error"])
    rows = [[cfg.M, float(args.T0), est.T, est.nodes_used,
             est.normalized.real, est.normalized.imag,
             est.prediction.real, est.prediction.imag,
             est.est_quadrature_error] for est in ests]
    return header, rows


def _handle_ratio(args):
    table = ratio_curve(args.M, args.delta_list, args.T)
    header = ["M", "T", "delta"] + _reim("empirical") + _reim("predicted") + ["deviation"]
    rows = [[args.M, float(args.T), r["delta"],
             r["empirical"].real, r["empirical"].imag,
             r["predicted"].real, r["predicted"].imag, r["deviation"]]
            for r in table]
    return header, rows


def _handle_cue_exact(args):
    cfg = _shift_config(args)
    which = ([("det", cue_exact_det)] if args.formula == "det" else
             [("perm", cue_exact_perm)] if args.formula == "perm" else
             [("det", cue_exact_det), ("perm", cue_exact_perm)])
    header = ["N", "M", "formula"] + _reim("value")
    rows = []
    for name, fn in which:
        est = fn(args.N, cfg)
        rows.append([args.N, cfg.M, name, est.value.real, est.value.imag])
    return header, rows


def _handle_cue_mc(args):
    cfg = _shift_config(args)
    est = cue_mc(args.N, cfg, args.samples, args.seed, threads=_threads(args))
    exact = cue_exact_det(args.N, cfg)
    header = (["N", "M", "samples", "seed"] + _reim("estimate")
              + ["stderr"] + _reim("exact"))
    row = [args.N, cfg.M, args.samples, args.seed,
           est.value.real, est.value.imag, est.stderr,
           exact.value.real, exact.value.imag]
    return header, [row]


def _handle_cue_scale(args):
    cfg = _shift_config(args)
    rows_in = scaling_check(args.N_list, cfg)
    header = ["N", "M"] + _reim("scaled_value") + _reim("limit") + ["deviation"]
    rows = [[r["N"], cfg.M, r["scaled_value"].real, r["scaled_value"].imag,
             r["limit"].real, r["limit"].imag, r["deviation"]]
            for r in rows_in]
    return header, rows


def _handle_predict(args):
    cfg = _shift_config(args)
    if args.aM == "auto":
        aM = 1.0 if cfg.M == 1 else a_m(cfg.M).value
    else:
        aM = float(args.aM)
    res = conjecture_rhs(cfg, aM)
    header = ["M", "aM", "method", "coalescence_detected"] + _reim("value")
    row = [cfg.M, aM, res.method, int(res.coalescence_detected),
           res.value.real, res.value.imag]
    return header, [row]


def _handle_arith_am(args):
    res = a_m(args.M, args.prime_limit, args.j_terms)
    header = ["M", "prime_limit", "j_terms", "value", "tail_bound"]
    return header, [[res.M, res.prime_limit, res.j_terms, res.value,
                     res.tail_bound]]


def _handle_arith_d2(args):
    T = args.T
    if args.cache and os.path.exists(args.cache):
        table = sieve_cache_load(args.cache)
        if table.limit < T:
            table = divisor_sieve(T)
            sieve_cache_save(table, args.cache)
    else:
        table = divisor_sieve(T)
        if args.cache:
            sieve_cache_save(table, args.cache)
    s2 = sum_d2(T, table)
    s2n = sum_d2_over_n(T, table)
    log_t = math.log(T)
    header = ["T", "sum_d2", "sum_d2_over_T_log3", "sum_d2_over_n",
              "sum_d2_over_n_normalized"]
    row = [T, s2, s2 / (T * log_t ** 3),
           s2n, s2n / (log_t ** 4 / (4.0 * math.pi ** 2))]
    return header, [row]


def _handle_cfkrs(args):
    cfg = _shift_config(args)
    aM = 1.0 if cfg.M == 1 else a_m(cfg.M).value
    modes = (["zeta"] if args.mode == "zeta" else
             ["pole"] if args.mode == "pole" else ["zeta", "pole"])
    header = ["t", "M", "mode", "aM"] + _reim("value") + _reim("value_over_logt_M2")
    rows = []
    scale = math.log(args.t) ** (cfg.M ** 2)
    for mode in modes:
        res = (wm_leading if mode == "zeta" else wm_pole)(args.t, cfg, aM)
        rows.append([float(args.t), cfg.M, mode, aM,
                     res.value.real, res.value.imag,
                     res.value.real / scale, res.value.imag / scale])
    return header, rows


def _handle_verify_cue6(args):
    rng = np.random.default_rng(args.seed)
    header = ["trial", "M", "residual"]
    rows = []
    worst = 0.0
    for trial in range(args.trials):
        shifts = _separated_shifts(rng, 2 * args.M, min_gap=0.05)
        cfg = ShiftConfig(args.M, shifts[:args.M], shifts[args.M:])
        resid = verify_cue6(cfg)
        worst = max(worst, resid)
        rows.append([trial, args.M, resid])
    rows.append(["max", args.M, worst])
    return header, rows


def _separated_shifts(rng, count: int, min_gap: float,
                      lo: float = -1.0, hi: float = 1.0) -> np.ndarray:
    """Uniform draws rejected until all pairwise gaps exceed min_gap (keeps
    pole-bearing denominators well conditioned)."""
    while True:
        x = rng.uniform(lo, hi, count)
        if np.min(np.diff(np.sort(x))) > min_gap:
            return x


# ---------------------------------------------------------------- plumbing

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sine-moments",
                                description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file of default flag values")
    sub = p.add_subparsers(dest="command", required=True)

    def common_out(sp):
        sp.add_argument("--out", help="CSV output path (default stdout)")
        sp.add_argument("--manifest", help="JSON manifest path")
        sp.add_argument("--threads", type=int, default=None)

    def shift_flags(sp):
        sp.add_argument("--M", type=int, required=True)
        sp.add_argument("--mu", type=_parse_reals, required=True)
        sp.add_argument("--nu", type=_parse_reals, required=True)

    sp = sub.add_parser("moment")
    shift_flags(sp)
    sp.add_argument("--T", type=float, required=True)
    sp.add_argument("--T0", type=float, default=10.0)
    sp.add_argument("--window", choices=["from_T0", "dyadic"], default="from_T0")
    sp.add_argument("--nodes-per-gap", type=float, dest="nodes_per_gap")
    common_out(sp)
    sp.set_defaults(handler=_handle_moment)

    sp = sub.add_parser("scan")
    shift_flags(sp)
    sp.add_argument("--T-list", type=_parse_reals, dest="T_list", required=True)
    sp.add_argument("--T0", type=float, default=10.0)
    sp.add_argument("--nodes-per-gap", type=float, dest="nodes_per_gap")
    common_out(sp)
    sp.set_defaults(handler=_handle_scan)

    sp = sub.add_parser("ratio")
    sp.add_argument("--M", type=int, choices=[1, 2], required=True)
    sp.add_argument("--delta-list", type=_parse_reals, dest="delta_list", required=True)
    sp.add_argument("--T", type=float, required=True)
    common_out(sp)
    sp.set_defaults(handler=_handle_ratio)

    cue_p = sub.add_parser("cue")
    cue_sub = cue_p.add_subparsers(dest="cue_command", required=True)

    sp = cue_sub.add_parser("exact")
    sp.add_argument("--N", type=int, required=True)
    shift_flags(sp)
    sp.add_argument("--formula", choices=["det", "perm", "both"], default="both")
    common_out(sp)
    sp.set_defaults(handler=_handle_cue_exact)

    sp = cue_sub.add_parser("mc")
    sp.add_argument("--N", type=int, required=True)
    shift_flags(sp)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    common_out(sp)
    sp.set_defaults(handler=_handle_cue_mc)

    sp = cue_sub.add_parser("scale")
    sp.add_argument("--N-list", type=_parse_ints, dest="N_list", required=True)
    shift_flags(sp)
    common_out(sp)
    sp.set_defaults(handler=_handle_cue_scale)

    sp = sub.add_parser("predict")
    shift_flags(sp)
    sp.add_argument("--aM", default="auto")
    common_out(sp)
    sp.set_defaults(handler=_handle_predict)

    arith_p = sub.add_parser("arith")
    arith_sub = arith_p.add_subparsers(dest="arith_command", required=True)

    sp = arith_sub.add_parser("aM")
    sp.add_argument("--M", type=int, required=True)
    sp.add_argument("--prime-limit", type=lambda s: int(float(s)),
                    dest="prime_limit", default=10 ** 6)
    sp.add_argument("--j-terms", type=int, dest="j_terms", default=200)
    common_out(sp)
    sp.set_defaults(handler=_handle_arith_am)

    sp = arith_sub.add_parser("d2")
    sp.add_argument("--T", type=lambda s: int(float(s)), required=True)
    sp.add_argument("--cache")
    common_out(sp)
    sp.set_defaults(handler=_handle_arith_d2)

    sp = sub.add_parser("cfkrs")
    sp.add_argument("--t", type=float, required=True)
    shift_flags(sp)
    sp.add_argument("--mode", choices=["zeta", "pole", "both"], default="both")
    common_out(sp)
    sp.set_defaults(handler=_handle_cfkrs)

    verify_p = sub.add_parser("verify")
    verify_sub = verify_p.add_subparsers(dest="verify_command", required=True)
    sp = verify_sub.add_parser("cue6")
    sp.add_argument("--M", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    common_out(sp)
    sp.set_defaults(handler=_handle_verify_cue6)

    return p


def _apply_config_file(parser, args, argv):
    """Fill flags from the --config JSON; explicit command-line flags win."""
    if not args.config:
        return args
    with open(args.config) as fh:
        conf = json.load(fh)
    given = {a.split("=")[0].lstrip("-").replace("-", "_")
             for a in argv if a.startswith("--")}
    for key, value in conf.items():
        dest = key.replace("-", "_")
        if dest not in given and hasattr(args, dest):
            setattr(args, dest, value)
    return args


def _num_json(x: float):
    """Decimal string when 17 digits are needed to round-trip, else the number."""
    if isinstance(x, float) and float(f"{x:.15g}") != x:
        return _fmt(x)
    return x


def _write_manifest(path, argv, args, csv_text: str, phase_times: dict):
    manifest = {
        "argv": argv,
        "artifact_version": __version__,
        "checksum_fnv1a64": f"{_fnv1a64(csv_text.encode()):016x}",
        "config": {k: _num_json(v) for k, v in sorted(vars(args).items())
                   if k not in ("handler",) and _is_json_safe(v)},
        "seed": getattr(args, "seed", None),
        "tolerances": {"csv_significant_digits": 17},
        "wall_time_seconds": {k: _num_json(v) for k, v in phase_times.items()},
    }
    with open(path, "w") as fh:
        json.dump(manifest, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _is_json_safe(v) -> bool:
    return isinstance(v, (int, float, str, bool, list, type(None)))


def cli_dispatch(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        args = _apply_config_file(parser, args, argv)
        t0 = time.perf_counter()
        header, rows = args.handler(args)
        t1 = time.perf_counter()
        csv_text = _emit_csv(header, rows)
        if args.out:
            with open(args.out, "w", newline="") as fh:
                fh.write(csv_text)
        else:
            sys.stdout.write(csv_text)
        if args.manifest:
            _write_manifest(args.manifest, argv, args, csv_text,
                            {"compute": t1 - t0,
                             "emit": time.perf_counter() - t1})
        return EXIT_OK
    except SineMomentsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_dispatch())
