"""Time the brute-force scan with the compiled and pure-Python kernels.

Usage: python benchmarks/bench_oracle.py [--qs 5 7 11 13 16] [--repeat 3] [--workers 1]
"""

import argparse
import statistics
import time

from ybme import oracle
from ybme.field import parse_field
from ybme.matrix import Mat2


def bench(backend, A, repeat, workers):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        found = oracle.solution_indices(A, backend=backend, workers=workers, chunks=workers * 4)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), found


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qs", type=int, nargs="+", default=[5, 7, 11, 13, 16, 23, 32])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    backends = ["python"] + (["cython"] if oracle.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'q':>4} {'q^4':>9} {'|D_A|':>6} " + " ".join(f"{b + ' (s)':>12}" for b in backends)
          + (f" {'speedup':>8}" if len(backends) == 2 else ""))
    for q in args.qs:
        F = parse_field(str(q))
        A = Mat2.companion(F, 1, 2) if F.q > 2 else Mat2.jordan(F, 1)
        row, found = [], None
        for b in backends:
            t, pts = bench(b, A, args.repeat, args.workers)
            if found is not None and pts != found:
                raise SystemExit(f"backends disagree at q = {q}")
            found = pts
            row.append(t)
        line = f"{q:>4} {q ** 4:>9} {len(found):>6} " + " ".join(f"{t:>12.4f}" for t in row)
        if len(row) == 2:
            line += f" {row[0] / row[1]:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
