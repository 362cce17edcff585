"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import contextlib
import time

from brauercfg import _kernels, groups
from brauercfg._kernels import _pykernels


@contextlib.contextmanager
def backend(mod):
    saved = {k: getattr(_kernels, k) for k in ("prepare_table", "closure", "associativity_violation")}
    for k in saved:
        setattr(_kernels, k, getattr(mod, k))
    groups._zn.cache_clear()
    groups.zn_occurrence_sum.cache_clear()
    try:
        yield
    finally:
        for k, v in saved.items():
            setattr(_kernels, k, v)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sweep", type=int, default=200, help="largest n for the Z_n sweep")
    args = ap.parse_args()

    s5 = groups.symmetric(5).table
    z200 = groups.cyclic(200).table
    cases = {
        "associativity scan, Z200": lambda: _kernels.associativity_violation(_kernels.prepare_table(z200)),
        "S5 table check + lattice (156 subgroups)": lambda: groups.subgroup_lattice(groups.FiniteGroup(s5), 120),
        f"Z_n identity sweep, n <= {args.sweep}": lambda: groups.zn_sweep(args.sweep),
    }
    backends = [("python", _pykernels)]
    if _kernels.compiled_backend is not None:
        backends.insert(0, ("cython", _kernels.compiled_backend))
    else:
        print("compiled kernels not built; timing the fallback only")

    print(f"{'case':40s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in cases.items():
        row = []
        for _, mod in backends:
            with backend(mod):
                # the sweep caches lattices, so each repeat restarts cold
                row.append(best_of(lambda: (groups._zn.cache_clear(), groups.zn_occurrence_sum.cache_clear(), fn()), args.repeat))
        speed = f"{row[-1] / row[0]:10.1f}x" if len(row) == 2 else ""
        print(f"{label:40s}" + "".join(f"{t:11.3f}s" for t in row) + speed)


if __name__ == "__main__":
    main()
