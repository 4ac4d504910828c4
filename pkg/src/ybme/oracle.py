"""Brute-force enumeration of ``D_A = {X : XAX = AXA}`` over GF(q).

The scan kernel is the compiled ``_kernels._scan`` when it has been built,
otherwise the pure-Python ``_kernels._scan_py``.  Set ``YBME_PURE_PYTHON=1``
to force the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from ._kernels import _scan_py
from .matrix import Mat2

if os.environ.get("YBME_PURE_PYTHON"):
    _scan = None
else:
    try:
        from ._kernels import _scan
    except ImportError:  # extension not built
        _scan = None

BACKEND = "cython" if _scan is not None else "python"
DEFAULT_MAX_Q = 32


class OracleBoundError(ValueError):
    pass


def kernel(backend: str | None = None):
    """Return the ``scan_range`` callable for ``backend`` ('cython' or 'python')."""
    backend = backend or BACKEND
    if backend == "python":
        return _scan_py.scan_range
    if backend == "cython":
        if _scan is None:
            raise RuntimeError("compiled kernel is not available")
        return _scan.scan_range
    raise ValueError(f"unknown backend {backend!r}")


def partition(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into ``parts`` contiguous near-equal ranges."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def solution_indices(A: Mat2, *, max_q: int = DEFAULT_MAX_Q, workers: int = 1,
                     chunks: int | None = None, backend: str | None = None) -> list[int]:
    """Sorted indices of all solutions of ``XAX = AXA``."""
    ctx = A.ctx
    q = ctx.q
    if q > max_q:
        raise OracleBoundError(f"q = {q} exceeds the oracle bound {max_q}")
    scan = kernel(backend)
    if scan is _scan_py.scan_range:
        add, mul = ctx.add_table.ravel().tolist(), ctx.mul_table.ravel().tolist()
    else:
        add, mul = ctx.add_table, ctx.mul_table
    ranges = partition(q ** 4, chunks or workers)

    def run(r):
        return scan(add, mul, q, *A.entries, r[0], r[1])

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, ranges))
    else:
        results = [run(r) for r in ranges]
    # ranges are ascending and disjoint, so concatenation preserves order
    return [i for part in results for i in part]


def solutions(A: Mat2, **kwargs) -> list[Mat2]:
    return [Mat2.from_index(A.ctx, i) for i in solution_indices(A, **kwargs)]
