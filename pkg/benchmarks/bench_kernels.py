"""Compare the compiled and pure-Python sweep kernels.

    python benchmarks/bench_kernels.py [--trials 20000] [--repeat 3]

Times ``sum_rates_block`` (angle draws + frequency selection + two RZF
evaluations per trial) for several array sizes, plus one full ``sweep`` row,
and reports the speedup of each backend over the pure-Python one.
"""

import argparse
import time

import numpy as np

from movsig import _backend, _rng
from movsig.experiments import ScenarioConfig, sweep

F_A = 1e10


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    names = sorted(_backend.BACKENDS)
    print(f"backends: {', '.join(names)} (default: {_backend.DEFAULT_BACKEND})")
    print(f"{'N':>4} " + " ".join(f"{n + ' [s]':>14}" for n in names) + f" {'speedup':>9}")
    key = _rng.row_key(42, 0, 0)
    for n in (2, 4, 8, 16, 64):
        t = {}
        out = {}
        for name in names:
            k = _backend.get_kernels(name)
            call = lambda: k.sum_rates_block(key, 0, args.trials, n, F_A, F_A, 1.8 * F_A, F_A, 10.0, 1.0)
            out[name] = call()
            t[name] = best_of(call, args.repeat)
        if len(names) > 1:
            diff = max(np.max(np.abs(out[names[0]][i] - out[names[1]][i])) for i in range(2))
            assert diff <= 1e-12, diff
        speed = t["python"] / t[names[0]] if "cython" in t else 1.0
        print(f"{n:>4} " + " ".join(f"{t[name]:>14.4f}" for name in names) + f" {speed:>8.1f}x")

    scenario = ScenarioConfig(snr_db_list=(10.0,), n_list=(2,), trials=args.trials)
    print(f"\nfull sweep row (N=2, 10 dB, {args.trials} trials):")
    for name in names:
        print(f"  {name:>7}: {best_of(lambda: sweep(scenario, backend=name), args.repeat):.4f} s")


if __name__ == "__main__":
    main()
