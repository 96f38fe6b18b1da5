"""Compare the compiled kernels with the pure-Python ones.

Two levels are timed: the raw kernels on random integer permutations, and an
end-to-end workload (canonical forms plus a bounded search) run in a fresh
interpreter per backend, with KAUER_PURE_PYTHON selecting the fallback.

    python3 benchmarks/bench_kernels.py [--size 400] [--repeat 5]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from kauer import _kernels_py

try:
    from kauer import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None

WORKLOAD = """
import random, time
from kauer.graph import canonical_form
from kauer.invariants import reach
from kauer.moves import kauer_move
from kauer.graph import BrauerGraph
import sys
sys.path.insert(0, {tests!r})
from strategies import random_graph, random_subset

rng = random.Random(1)
graphs = [random_graph(rng, 10, 6) for _ in range(300)]
t = time.perf_counter()
for g in graphs:
    canonical_form(kauer_move(g, random_subset(rng, g)))
g1 = BrauerGraph.from_cycles("(1+ 2+ 3+ 4+)(1- 2- 4- 3-)(5+ 6+ 5- 6-)")
g2 = BrauerGraph.from_cycles("(1+ 1-)(2+ 2-)(3+ 3-)(4+ 4-)(5+ 5-)(6+ 6-)")
reach(g1, g2, 3)
print(time.perf_counter() - t)
"""


def random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def random_pairing(rng, n):
    idx = list(range(n))
    rng.shuffle(idx)
    out = [0] * n
    for a, b in zip(idx[::2], idx[1::2]):
        out[a], out[b] = b, a
    return tuple(out)


def bench_kernels(size, repeat):
    rng = random.Random(0)
    a, b = random_perm(rng, size), random_perm(rng, size)
    iota = random_pairing(rng, size)
    seeds = list(range(0, size, max(1, size // 20)))
    cases = {
        "compose": lambda k: k.compose(a, b),
        "inverse": lambda k: k.inverse(a),
        "orbit_labels": lambda k: k.orbit_labels(a),
        "min_code": lambda k: k.min_code(a, iota, seeds),
    }
    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    print(f"kernels on {size} points (best of {repeat}, 200 calls each)")
    for name, fn in cases.items():
        row = {}
        for label, mod in backends:
            row[label] = min(timeit.repeat(lambda: fn(mod), number=200, repeat=repeat))
        line = "  ".join(f"{k}={v * 1e3:8.2f} ms" for k, v in row.items())
        speed = f"  x{row['python'] / row['cython']:.1f}" if "cython" in row else ""
        print(f"  {name:<13}{line}{speed}")


def bench_end_to_end():
    tests = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests")
    code = WORKLOAD.format(tests=os.path.abspath(tests))
    print("end to end (300 moves + canonical forms, depth-3 search)")
    times = {}
    for label, env in (("python", {"KAUER_PURE_PYTHON": "1"}), ("default", {})):
        res = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env},
                             capture_output=True, text=True, check=True)
        times[label] = float(res.stdout.strip())
        print(f"  {label:<8}{times[label]:8.3f} s")
    print(f"  speedup x{times['python'] / times['default']:.2f}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if _kernels_cy is None:
        print("compiled kernels not built; timing the pure-Python backend only")
    bench_kernels(args.size, args.repeat)
    if not args.skip_end_to_end:
        bench_end_to_end()


if __name__ == "__main__":
    main()
