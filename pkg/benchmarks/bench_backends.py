#!/usr/bin/env python3
"""Compare the gmpy2 and fractions coefficient backends on the hot kernels.

Run directly: the script re-executes itself under each backend (selected
via CONGRUENCE_WORKBENCH_BACKEND) and prints one timing table.  Results
are bit-identical across backends; only the speed differs.
"""

import json
import os
import subprocess
import sys
import time

CASES = [
    ("frac_partition_series(-1/8, 600)", "fps_small"),
    ("frac_partition_series(1/13, 1100)", "fps_large"),
    ("euler_product(1, 4000)", "euler"),
    ("eta_power(26, 600)", "eta26"),
    ("verify p(5n+4) mod 5, n <= 200", "verify"),
]


def run_cases():
    from congruence_workbench.backend import rational
    from congruence_workbench.congruence import build_cw_claim, verify_claim
    from congruence_workbench.forms import eta_power
    from congruence_workbench.qseries import euler_product, frac_partition_series

    timings = {}

    def timed(key, fn):
        start = time.perf_counter()
        fn()
        timings[key] = time.perf_counter() - start

    timed("fps_small", lambda: frac_partition_series(rational(-1, 8), 600))
    timed("fps_large", lambda: frac_partition_series(rational(1, 13), 1100))
    timed("euler", lambda: euler_product(1, 4000))
    timed("eta26", lambda: eta_power(26, 600))
    timed("verify", lambda: verify_claim(build_cw_claim(-1, 4, 5, 4), 200))
    return timings


def main():
    if os.environ.get("_BENCH_CHILD"):
        from congruence_workbench.backend import BACKEND_NAME

        print(json.dumps({"backend": BACKEND_NAME, "timings": run_cases()}))
        return

    results = {}
    for backend in ("gmpy2", "fractions"):
        env = dict(os.environ)
        env["CONGRUENCE_WORKBENCH_BACKEND"] = backend
        env["_BENCH_CHILD"] = "1"
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__)],
            capture_output=True,
            text=True,
            env=env,
        )
        if proc.returncode != 0:
            print(f"{backend}: failed\n{proc.stderr}", file=sys.stderr)
            continue
        payload = json.loads(proc.stdout)
        results[payload["backend"]] = payload["timings"]

    if not results:
        sys.exit(1)

    width = max(len(label) for label, _ in CASES)
    header = f"{'case':<{width}}  " + "  ".join(f"{b:>10}" for b in results)
    print(header)
    print("-" * len(header))
    for label, key in CASES:
        row = f"{label:<{width}}  "
        row += "  ".join(f"{results[b][key]:>9.3f}s" for b in results)
        print(row)
    if {"gmpy2", "fractions"} <= set(results):
        total_g = sum(results["gmpy2"].values())
        total_f = sum(results["fractions"].values())
        print(f"\ntotals: gmpy2 {total_g:.3f}s, fractions {total_f:.3f}s "
              f"(speedup x{total_f / total_g:.1f})")


if __name__ == "__main__":
    main()
