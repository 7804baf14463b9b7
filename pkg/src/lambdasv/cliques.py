"""Maximal-clique size histograms, with a compiled kernel and a pure-Python fallback.

The backend is picked at import: the Cython extension ``_cliques`` when it was
built, otherwise ``_cliques_py``.  ``$LAMBDASV_BACKEND`` (``compiled`` or
``python``) overrides the default, and every public function accepts an
explicit ``backend=`` argument.

Parallel runs split the top two levels of the pivoted search tree into
independent subproblems.  Each worker fills its own histogram and the results
are summed, so the output does not depend on the thread count or scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import Sequence

from . import _cliques_py

try:
    from . import _cliques as _compiled
except ImportError:  # extension not built
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None
MAX_COMPILED_VERTICES = 128


def default_backend() -> str:
    env = os.environ.get("LAMBDASV_BACKEND", "").strip().lower()
    if env in ("python", "compiled"):
        if env == "compiled" and not COMPILED_AVAILABLE:
            raise RuntimeError("LAMBDASV_BACKEND=compiled but the extension is not built")
        return env
    return "compiled" if COMPILED_AVAILABLE else "python"


BACKEND = default_backend()


def _kernel(rows: Sequence[int], n: int, backend: str):
    if backend == "compiled":
        if not COMPILED_AVAILABLE:
            raise RuntimeError("compiled clique kernel is not available")
        if n > MAX_COMPILED_VERTICES:
            return _cliques_py.CliqueKernel(rows, n)
        return _compiled.CliqueKernel(rows, n)
    if backend == "python":
        return _cliques_py.CliqueKernel(rows, n)
    raise ValueError(f"unknown backend {backend!r}")


def split_tasks(rows: Sequence[int], n: int, depth: int = 2) -> list[tuple[int, int, int]]:
    """Subproblems ``(size, P, X)`` whose histograms sum to the full one."""
    out: list[tuple[int, int, int]] = []

    def rec(size: int, p: int, x: int, level: int) -> None:
        if level == 0 or not p:
            out.append((size, p, x))
            return
        ux = p | x
        best_u, best = -1, -1
        for u in range(n):
            if ux >> u & 1:
                c = (p & rows[u]).bit_count()
                if c > best:
                    best, best_u = c, u
        cand = p & ~rows[best_u]
        for v in range(n):
            if cand >> v & 1:
                rec(size + 1, p & rows[v], x & rows[v], level - 1)
                p &= ~(1 << v)
                x |= 1 << v

    rec(0, (1 << n) - 1, 0, depth)
    return out


def _merge(hists, n: int) -> dict[int, int]:
    total = [0] * (n + 1)
    for h in hists:
        for i, c in enumerate(h):
            total[i] += c
    return {size: c for size, c in enumerate(total) if c}


def _python_worker(args):
    rows, n, tasks = args
    k = _cliques_py.CliqueKernel(rows, n)
    total = [0] * (n + 1)
    for size, p, x in tasks:
        for i, c in enumerate(k.count(size, p, x)):
            total[i] += c
    return total


def maximal_clique_histogram(rows: Sequence[int], n: int, threads: int = 1,
                             backend: str | None = None) -> dict[int, int]:
    """Map clique size -> number of maximal cliques in the graph with bitmask ``rows``.

    ``rows[i]`` has bit ``j`` set iff ``i`` and ``j`` are adjacent; no self loops.
    """
    backend = backend or BACKEND
    rows = [int(r) & ~(1 << i) for i, r in enumerate(rows)]
    if n == 0:
        return {0: 1}
    threads = max(1, int(threads))
    if threads == 1:
        k = _kernel(rows, n, backend)
        return _merge([k.count(0, (1 << n) - 1, 0)], n)
    tasks = split_tasks(rows, n)
    if backend == "compiled" and n <= MAX_COMPILED_VERTICES:
        k = _kernel(rows, n, backend)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hists = list(pool.map(lambda t: k.count(*t), tasks))
        return _merge(hists, n)
    # the pure-Python kernel holds the GIL, so fan out to processes instead
    chunks = [tasks[i::threads] for i in range(threads)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        hists = list(pool.map(_python_worker, [(rows, n, c) for c in chunks if c]))
    return _merge(hists, n)
