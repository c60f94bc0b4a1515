"""Compare the compiled and pure-Python kernel backends.

Run with ``python benchmarks/bench_kernels.py``. Reports per-kernel timings
on synthetic inputs plus one end-to-end workload (regularity over a slice of
the d=3, alpha=3 enumeration), each backend in a fresh subprocess.
"""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time

WORKER = r"""
import json, random, sys, time
from affsemi import kernels
from affsemi import _pykernels

rng = random.Random(7)
leads = [tuple(rng.randint(0, 4) for _ in range(8)) for _ in range(60)]
probes = [tuple(rng.randint(0, 5) for _ in range(8)) for _ in range(3000)]
mats = [[[rng.randint(-1, 1) for _ in range(40)] for _ in range(40)] for _ in range(20)]
E = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1)]
supp = {(x, y, z) for x in range(7) for y in range(7) for z in range(7) if (x + y + z) % 3 != 1}
tops = sorted(supp)

def clock(f, reps):
    t = time.perf_counter()
    for _ in range(reps):
        f()
    return (time.perf_counter() - t) / reps

out = {"backend": kernels.BACKEND}
out["find_divisor"] = clock(lambda: [kernels.find_divisor(leads, e) for e in probes], 20)
out["rank_mod_p"] = clock(lambda: [kernels.rank_mod_p(m, 40, 101) for m in mats], 10)
out["rank_q"] = clock(lambda: [kernels.rank_q(m, 40) for m in mats], 3)
out["koszul_faces"] = clock(lambda: [kernels.koszul_faces(a, E, supp) for a in tops], 5)
same = all(kernels.find_divisor(leads, e) == _pykernels.find_divisor(leads, e) for e in probes)
same &= all(kernels.rank_mod_p(m, 40, 2) == _pykernels.rank_mod_p(m, 40, 2) for m in mats)
same &= all(kernels.rank_q(m, 40) == _pykernels.rank_q(m, 40) for m in mats)
same &= all(kernels.koszul_faces(a, E, supp) == _pykernels.koszul_faces(a, E, supp) for a in tops)
out["agrees_with_reference"] = same

from affsemi.egharness import enumerate_semigroups, run_records
sgs = list(enumerate_semigroups(3, 3))[::10]
t = time.perf_counter()
recs = run_records(sgs)
out["eg_slice_d3_a3"] = time.perf_counter() - t
out["eg_slice_records"] = len(recs)
print(json.dumps(out))
"""


def run(pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["AFFSEMI_PURE_PYTHON"] = "1"
    else:
        env.pop("AFFSEMI_PURE_PYTHON", None)
    res = subprocess.run([sys.executable, "-c", WORKER], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main() -> None:
    fast = run(pure=False)
    slow = run(pure=True)
    if fast["backend"] != "cython":
        print("compiled kernels are not built; both runs use pure Python")
    print(f"{'kernel':<18}{'python (s)':>12}{fast['backend'] + ' (s)':>14}{'speedup':>10}")
    for k in ("find_divisor", "rank_mod_p", "rank_q", "koszul_faces", "eg_slice_d3_a3"):
        print(f"{k:<18}{slow[k]:>12.4f}{fast[k]:>14.4f}{slow[k] / fast[k]:>9.2f}x")
    print(f"results agree with the reference kernels: {fast['agrees_with_reference']}")


if __name__ == "__main__":
    main()
