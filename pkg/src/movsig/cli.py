"""Command-line interface: ``movsig freq-opt | region | sweep``.

Angles are in degrees and powers in dB here; everything below this module
works in radians and linear units. Exit codes: 0 success, 1 I/O failure,
2 usage error.
"""

import argparse
import csv
import io
import json
import math
import sys

from .capacity import (
    BcBudget,
    MacBudget,
    MacRegion,
    bc_region_vertices,
    mac_region,
    mac_user_bound,
)
from .channel import AnglePair, ArrayConfig, UserGeometry, inner_product, los_channel
from .experiments import ScenarioConfig, db_to_linear, sweep
from .spectrum import FrequencyBand, optimize_frequency, orthogonal_frequencies

SWEEP_HEADER = ["snr_db", "n_antennas", "sum_rate_ub", "sum_rate_movable", "sum_rate_fixed", "trials"]
CONFIG_KEYS = {"d1", "d2", "f_a", "band", "snr_db", "n_antennas", "trials", "seed"}
ORTHOGONAL_TOL = 1e-6


class UsageError(Exception):
    pass


class IOFailure(Exception):
    pass


def deg2rad(x):
    return math.radians(x)


def rad2deg(x):
    return math.degrees(x)


def _fmt(x):
    return repr(float(x))


def _band(text):
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"band must look like LO:HI, got {text!r}") from None
    if not 0 < lo <= hi or not math.isfinite(hi):
        raise argparse.ArgumentTypeError(f"band needs 0 < LO <= HI, got {text!r}")
    return lo, hi


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _seed(text):
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _array_config(args):
    if args.spacing is not None:
        return ArrayConfig(args.n, args.spacing)
    return ArrayConfig.from_reference_frequency(args.n, args.fa)


def _add_array_args(p):
    p.add_argument("--n", type=_positive_int, required=True, help="number of base-station antennas")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fa", type=float, default=1e10, help="reference frequency c/d_A in Hz (default 1e10)")
    g.add_argument("--spacing", type=float, help="antenna spacing d_A in meters")


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IOFailure(f"cannot write {out}: {exc}") from exc


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def cmd_freq_opt(args):
    cfg = _array_config(args)
    pair = AnglePair(deg2rad(args.theta1), deg2rad(args.theta2))
    for th in (pair.theta1, pair.theta2):
        UserGeometry(1.0, th)
    f_a = cfg.reference_frequency
    band = FrequencyBand.from_multiples(f_a, *args.band)
    choice = optimize_frequency(pair, cfg, band)
    freqs = orthogonal_frequencies(pair, cfg, band)

    if args.format == "json":
        report = {
            "frequency_hz": choice.frequency,
            "frequency_over_fa": choice.frequency / f_a,
            "residual": choice.residual,
            "exact": choice.exact,
            "reference_frequency_hz": f_a,
            "orthogonal_frequencies_hz": freqs,
            "orthogonal_frequencies_over_fa": [f / f_a for f in freqs],
        }
        _write(json.dumps(report) + "\n", args.out)
        return 0

    lines = [
        f"chosen frequency: {choice.frequency:.6e} Hz ({choice.frequency / f_a:.6f} f_A)",
        f"residual |h2^H h1|: {choice.residual:.3e} (N = {cfg.n_antennas})",
        f"exact: {'yes' if choice.exact else 'no'}",
    ]
    if freqs:
        lines.append("orthogonalizing frequencies in band (x f_A): " + ", ".join(f"{f / f_a:.6f}" for f in freqs))
    elif pair.delta_sin == 0.0:
        lines.append("no orthogonalizing frequency: users are aligned (degenerate case)")
    else:
        lines.append("no orthogonalizing frequency in band; best band edge selected")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_region(args):
    if args.grid < 2:
        raise UsageError(f"--grid must be >= 2, got {args.grid}")
    snr1 = db_to_linear(args.snr_db)
    snr2 = db_to_linear(args.snr2_db if args.snr2_db is not None else args.snr_db)
    n = args.n

    h1 = h2 = None
    if not args.orthogonal:
        if args.theta1 is None or args.theta2 is None or args.freq is None:
            raise UsageError("give --orthogonal or all of --theta1, --theta2, --freq")
        cfg = _array_config(args)
        f = args.freq * cfg.reference_frequency
        h1 = los_channel(UserGeometry(args.d1, deg2rad(args.theta1)), cfg, f)
        h2 = los_channel(UserGeometry(args.d2, deg2rad(args.theta2)), cfg, f)

    if args.channel == "mac":
        budget = MacBudget(snr1, snr2, 1.0)
        if h1 is None:
            r1 = mac_user_bound(snr1, 1.0, n)
            r2 = mac_user_bound(snr2, 1.0, n)
            region = MacRegion(r1, r2, r1 + r2)
        else:
            region = mac_region(h1, h2, budget)
        pts = region.vertices()
    else:
        if h1 is not None and abs(inner_product(h1, h2)) > ORTHOGONAL_TOL * n:
            raise UsageError("the BC region is only characterized for orthogonal channels at the given frequency")
        # P/noise_k = snr_k with P = 1
        pts = bc_region_vertices(BcBudget(1.0, 1.0 / snr1, 1.0 / snr2), n, args.grid)

    _write(_csv(["r1", "r2"], [(_fmt(p.r1), _fmt(p.r2)) for p in pts]), args.out)
    return 0


def _load_config(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise IOFailure(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return data


def scenario_from_args(args):
    data = _load_config(args.config) if args.config else {}
    overrides = {
        "snr_db": args.snr_db,
        "n_antennas": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "band": list(args.band) if args.band else None,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    kw = {}
    mapping = {"d1": "d1", "d2": "d2", "f_a": "f_a", "band": "band", "snr_db": "snr_db_list",
               "n_antennas": "n_list", "trials": "trials", "seed": "master_seed"}
    for key, field in mapping.items():
        if key in data:
            kw[field] = data[key]
    try:
        if "band" in kw and len(kw["band"]) != 2:
            raise ValueError("band must have two entries")
        for key in ("trials", "master_seed"):
            if key in kw and (isinstance(kw[key], bool) or int(kw[key]) != kw[key]):
                raise ValueError(f"{key} must be an integer")
        return ScenarioConfig(**kw)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid sweep configuration: {exc}") from exc


def cmd_sweep(args):
    scenario = scenario_from_args(args)
    rows = sweep(scenario, backend=args.backend, workers=args.workers)
    body = _csv(SWEEP_HEADER, [
        (_fmt(r.snr_db), r.n_antennas, _fmt(r.sum_rate_ub), _fmt(r.sum_rate_movable), _fmt(r.sum_rate_fixed), r.trials)
        for r in rows
    ])
    _write(body, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="movsig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("freq-opt", help="pick the in-band frequency that best decorrelates two users")
    _add_array_args(p)
    p.add_argument("--theta1", type=float, required=True, help="user 1 angle in degrees")
    p.add_argument("--theta2", type=float, required=True, help="user 2 angle in degrees")
    p.add_argument("--band", type=_band, default=(1.0, 1.8), help="band as multiples of f_A, LO:HI (default 1.0:1.8)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_freq_opt)

    p = sub.add_parser("region", help="capacity-region polygon as r1,r2 CSV")
    _add_array_args(p)
    p.add_argument("--channel", choices=["mac", "bc"], required=True)
    p.add_argument("--snr-db", type=float, required=True, help="P_k/noise (MAC) or P/noise_1 (BC), in dB")
    p.add_argument("--snr2-db", type=float, help="user-2 SNR in dB (default: same as --snr-db)")
    p.add_argument("--orthogonal", action="store_true", help="assume the frequency orthogonalizes the channels")
    p.add_argument("--theta1", type=float, help="user 1 angle in degrees")
    p.add_argument("--theta2", type=float, help="user 2 angle in degrees")
    p.add_argument("--freq", type=float, help="operating frequency as a multiple of f_A")
    p.add_argument("--d1", type=float, default=10.0)
    p.add_argument("--d2", type=float, default=10.0)
    p.add_argument("--grid", type=int, default=201, help="BC boundary grid points (>= 2)")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("sweep", help="Monte Carlo sum rate vs SNR, CSV")
    p.add_argument("--config", help="JSON scenario file")
    p.add_argument("--snr-db", type=_float_list, help="comma-separated SNRs in dB")
    p.add_argument("--n", type=_int_list, help="comma-separated antenna counts")
    p.add_argument("--trials", type=_positive_int)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--band", type=_band, help="band as multiples of f_A, LO:HI")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--backend", choices=["cython", "python"])
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IOFailure as exc:
        print(f"movsig: error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"movsig {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
