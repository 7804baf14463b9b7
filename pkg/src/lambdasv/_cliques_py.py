"""Pure-Python maximal-clique counter; same contract as the compiled kernel."""

from __future__ import annotations


def _expand(adj: list[int], size: int, p: int, x: int, hist: list[int]) -> None:
    if not p:
        if not x:
            hist[size] += 1
        return
    best_u, best = -1, -1
    ux = p | x
    while ux:
        low = ux & -ux
        u = low.bit_length() - 1
        ux ^= low
        c = (p & adj[u]).bit_count()
        if c > best:
            best, best_u = c, u
    cand = p & ~adj[best_u]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nv = adj[v]
        _expand(adj, size + 1, p & nv, x & nv, hist)
        p &= ~low
        x |= low


class CliqueKernel:
    def __init__(self, rows, n: int):
        self.adj = [int(r) for r in rows]
        self.n = n

    def count(self, size: int, p: int, x: int) -> list[int]:
        hist = [0] * (self.n + 1)
        _expand(self.adj, size, p, x, hist)
        return hist
