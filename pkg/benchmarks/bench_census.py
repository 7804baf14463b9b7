"""Compare the compiled and pure-Python clique kernels.

Both backends run the Witting census in full and the same slice of Lambda_Sv
subproblems (``--tasks`` of the depth-2 split; ``--full`` runs everything).
"""

import argparse
import time

from lambdasv._cliques_py import CliqueKernel as PyKernel
from lambdasv.cliques import COMPILED_AVAILABLE, maximal_clique_histogram, split_tasks
from lambdasv.pipeline import Workspace


def timed(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run_slice(kernel, tasks, n):
    total = [0] * (n + 1)
    for t in tasks:
        for i, c in enumerate(kernel.count(*t)):
            total[i] += c
    return total


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tasks", type=int, default=40, help="Lambda_Sv subproblems to time")
    ap.add_argument("--full", action="store_true", help="time the whole Lambda_Sv census")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not COMPILED_AVAILABLE:
        raise SystemExit("compiled extension not built; nothing to compare")
    from lambdasv._cliques import CliqueKernel as CKernel

    ws = Workspace()
    print(f"{'workload':<34}{'compiled s':>12}{'python s':>12}{'speedup':>10}")

    g = ws.witting_graph
    rows = g.complement_rows()
    tc, hc = timed(lambda: maximal_clique_histogram(rows, g.n, backend="compiled"), args.repeat)
    tp, hp = timed(lambda: maximal_clique_histogram(rows, g.n, backend="python"), args.repeat)
    assert hc == hp
    print(f"{'Witting, full (40 rays)':<34}{tc:>12.4f}{tp:>12.4f}{tp / tc:>10.1f}")

    g = ws.sv_graph
    rows = g.complement_rows()
    tasks = split_tasks(rows, g.n)
    chosen = tasks if args.full else tasks[:: max(1, len(tasks) // args.tasks)][: args.tasks]
    ck, pk = CKernel(rows, g.n), PyKernel(rows, g.n)
    tc, hc = timed(lambda: run_slice(ck, chosen, g.n), args.repeat if not args.full else 1)
    tp, hp = timed(lambda: run_slice(pk, chosen, g.n), 1)
    assert hc == hp
    label = f"Lambda_Sv, {len(chosen)}/{len(tasks)} subproblems"
    print(f"{label:<34}{tc:>12.4f}{tp:>12.4f}{tp / tc:>10.1f}")
    print(f"maximal cliques counted in the slice: {sum(hc)}")


if __name__ == "__main__":
    main()
