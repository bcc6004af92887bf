"""Time the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter because the choice is made at import
time from FREENECK_NO_NUMBA. Both must report identical work counters.

    python benchmarks/compare_backends.py            # default cases
    python benchmarks/compare_backends.py --quick
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = """
import json, sys, time
from dataclasses import asdict
import freeneck
from freeneck.generate import generate
cases = json.loads(sys.argv[1])
generate("necklace", 2, 3); generate("bracelet", 2, 3)  # JIT warm-up
rows = []
for kind, g, n in cases:
    t0 = time.perf_counter()
    c = generate(kind, g, n)
    rows.append({"case": [kind, g, n], "seconds": time.perf_counter() - t0, "counters": asdict(c)})
print(json.dumps({"backend": freeneck.BACKEND, "rows": rows}))
"""

DEFAULT_CASES = [("necklace", 2, 10), ("necklace", 2, 12), ("bracelet", 2, 12),
                 ("necklace", 3, 8), ("bracelet", 4, 6)]
QUICK_CASES = [("necklace", 2, 8), ("bracelet", 2, 8)]


def run_backend(cases, disable_numba):
    env = dict(os.environ)
    if disable_numba:
        env["FREENECK_NO_NUMBA"] = "1"
    else:
        env.pop("FREENECK_NO_NUMBA", None)
    proc = subprocess.run([sys.executable, "-c", WORKER, json.dumps(cases)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args(argv)
    cases = QUICK_CASES if args.quick else DEFAULT_CASES

    fast = run_backend(cases, disable_numba=False)
    slow = run_backend(cases, disable_numba=True)
    print(f"{'case':22s} {'outputs':>10s} {fast['backend'] + ' s':>10s} {slow['backend'] + ' s':>10s} {'speedup':>8s}")
    for a, b in zip(fast["rows"], slow["rows"]):
        if a["counters"] != b["counters"]:
            raise SystemExit(f"counter mismatch on {a['case']}: {a['counters']} vs {b['counters']}")
        kind, g, n = a["case"]
        label = f"{kind} g={g} l={n}"
        speedup = b["seconds"] / a["seconds"] if a["seconds"] else float("inf")
        print(f"{label:22s} {a['counters']['outputs']:10d} {a['seconds']:10.4f} {b['seconds']:10.4f} {speedup:8.1f}x")


if __name__ == "__main__":
    main()
