"""Hot integer kernels with a compiled core and a pure-Python fallback.

The Cython extension ``_ckernels`` is used when it imports and the Ryser
accumulators provably fit in 128 bits; otherwise the pure-Python kernels
run.  Setting
``ZEONPERM_PURE=1`` forces the fallback.  ``ZEONPERM_THREADS`` caps the
worker threads used for zeon powers (the compiled kernel releases the GIL).
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from . import _pykernels as pure

compiled = None
if not os.environ.get("ZEONPERM_PURE"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

BACKEND = "cython" if compiled is not None else "python"

_ENTRY_LIMIT = 1 << 62
_ACC_LIMIT = 1 << 126


def threads() -> int:
    try:
        return max(1, int(os.environ.get("ZEONPERM_THREADS", "1")))
    except ValueError:
        return 1


def fits_compiled(rows, k: int | None = None) -> bool:
    """Conservative test that the compiled kernel is exact on every k x k
    submatrix: row sums fit in int64 and 2^k R^k fits in 128 bits, R being
    the largest absolute row sum."""
    n = len(rows)
    k = n if k is None else k
    if k == 0:
        return True
    big = max((sum(abs(v) for v in r) for r in rows), default=0)
    if big >= _ENTRY_LIMIT:
        return False
    return (1 << k) * max(big, 1) ** k < _ACC_LIMIT


def permanent_int(rows, backend=None) -> int:
    mod = _pick(backend, rows, len(rows))
    return mod.permanent(rows)


def zeon_power_int(rows, subsets, backend=None) -> list:
    ell = len(subsets[0]) if subsets else 0
    mod = _pick(backend, rows, ell)
    nthreads = min(threads(), len(subsets))
    if mod is pure or nthreads <= 1:
        return mod.zeon_power(rows, subsets)
    step = -(-len(subsets) // nthreads)
    bounds = [(r, min(r + step, len(subsets))) for r in range(0, len(subsets), step)]
    with ThreadPoolExecutor(max_workers=nthreads) as ex:
        parts = list(ex.map(lambda b: mod.zeon_power(rows, subsets, b[0], b[1]), bounds))
    return [row for part in parts for row in part]


def fixed_subset_counts(images, backend=None) -> list:
    mod = compiled if (backend != "python" and compiled is not None) else pure
    if backend == "cython" and compiled is None:
        raise RuntimeError("compiled kernels are not built")
    return mod.fixed_subset_counts(list(images))


def _pick(backend, rows, k):
    if backend == "python":
        return pure
    if backend == "cython":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        if not fits_compiled(rows, k):
            raise OverflowError("input may overflow the 128-bit accumulator")
        return compiled
    if compiled is not None and fits_compiled(rows, k):
        return compiled
    return pure
