"""Time the numba kernels against the pure-numpy fallback.

Both backends are imported directly, side-stepping the POSETSPLIT_BACKEND
selection, so one run compares them on identical inputs. The workload is the
hot path of the library: transitive closure, the 2^n maximal-antichain scan,
the first-split search, and the all-pairs interval density scan.

Run:  python3 benchmarks/bench_backends.py [n]
"""

import sys
import time

import numpy as np

from posetsplit._accel import numba_kernels, numpy_kernels
from posetsplit.finite import FinitePoset
from posetsplit.sampler import SampleConfig, random_poset


def _workload(n):
    poset = random_poset(SampleConfig(n, 1, 12345, 0.18), 0)
    leq = poset.leq_matrix
    eye = np.eye(n, dtype=bool)
    comp = (leq | leq.T) & ~eye
    adj = leq & ~eye
    return leq, comp, adj


def _time(fn, repeats=3):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 18
    leq, comp, adj = _workload(n)
    masks = numpy_kernels.maximal_antichain_masks(comp)
    widest = max(range(len(masks)), key=lambda i: bin(int(masks[i])).count("1"))
    a_mask = int(masks[widest])
    members = [i for i in range(n) if (a_mask >> i) & 1]
    down = leq[:, members].T.copy()
    up = leq[members, :].copy()

    cases = [
        ("transitive_closure", lambda k: k.transitive_closure(adj)),
        ("maximal_antichain_masks", lambda k: k.maximal_antichain_masks(comp)),
        ("first_split_mask", lambda k: k.first_split_mask(down, up)),
        ("density_gap", lambda k: k.density_gap(leq)),
    ]

    # first call per kernel pays numba's compile cost; warm up before timing
    for _, fn in cases:
        fn(numba_kernels)

    print("n=%d elements, antichain of %d under test" % (n, len(members)))
    print("%-26s %12s %12s %9s" % ("kernel", "numpy (s)", "numba (s)", "speedup"))
    for name, fn in cases:
        t_np, v_np = _time(lambda: fn(numpy_kernels))
        t_nb, v_nb = _time(lambda: fn(numba_kernels))
        agree = (np.array_equal(np.asarray(v_np), np.asarray(v_nb))
                 if not isinstance(v_np, tuple) else v_np == v_nb)
        flag = "" if agree else "  RESULTS DISAGREE"
        print("%-26s %12.6f %12.6f %8.1fx%s"
              % (name, t_np, t_nb, t_np / t_nb if t_nb else float("inf"), flag))


if __name__ == "__main__":
    main()
