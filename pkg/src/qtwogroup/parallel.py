"""Process-parallel scans that reduce to the canonical first failure.

Workers are forked so structure maps built from closures need no pickling;
the shared object is parked in a module global before the pool starts.
"""

from __future__ import annotations

import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor

_SHARED = None


def _interchange_chunk(rows):
    from .two_group import interchange_pairs

    return interchange_pairs(_SHARED, rows)


def _chunks(n: int, jobs: int) -> list[list[int]]:
    return [list(range(k, n, jobs)) for k in range(jobs)]


def first_failure_parallel(qg, n: int, jobs: int):
    global _SHARED
    if "fork" not in mp.get_all_start_methods():
        from .two_group import interchange_pairs

        return interchange_pairs(qg)
    _ = qg.cotensor  # compute once in the parent
    _SHARED = qg
    try:
        with ProcessPoolExecutor(max_workers=jobs, mp_context=mp.get_context("fork")) as pool:
            hits = [h for h in pool.map(_interchange_chunk, _chunks(n, jobs)) if h is not None]
    finally:
        _SHARED = None
    if not hits:
        return None
    return min(hits, key=lambda h: (h[0], h[1]))
