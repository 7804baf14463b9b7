# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled maximal-clique counter over 128-bit adjacency rows.

Bron-Kerbosch with Tomita pivoting; only the size histogram is kept.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memset

cdef enum:
    MAXN = 128
    MAXDEPTH = 130

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil


cdef struct Graph:
    int n
    uint64_t lo[MAXN]
    uint64_t hi[MAXN]


cdef void expand(const Graph* g, int size, uint64_t plo, uint64_t phi,
                 uint64_t xlo, uint64_t xhi, unsigned long long* hist) noexcept nogil:
    cdef uint64_t ulo, uhi, clo, chi, bit
    cdef int u, best, cnt, v
    if plo == 0 and phi == 0:
        if xlo == 0 and xhi == 0:
            hist[size] += 1
        return
    # pivot: vertex of P u X with the most neighbours in P
    best = -1
    cnt = -1
    ulo = plo | xlo
    uhi = phi | xhi
    while ulo:
        u = ctz(ulo)
        ulo &= ulo - 1
        v = popcount(plo & g.lo[u]) + popcount(phi & g.hi[u])
        if v > cnt:
            cnt = v
            best = u
    while uhi:
        u = ctz(uhi) + 64
        uhi &= uhi - 1
        v = popcount(plo & g.lo[u]) + popcount(phi & g.hi[u])
        if v > cnt:
            cnt = v
            best = u
    clo = plo & ~g.lo[best]
    chi = phi & ~g.hi[best]
    while clo:
        v = ctz(clo)
        clo &= clo - 1
        expand(g, size + 1, plo & g.lo[v], phi & g.hi[v], xlo & g.lo[v], xhi & g.hi[v], hist)
        bit = (<uint64_t>1) << v
        plo &= ~bit
        xlo |= bit
    while chi:
        v = ctz(chi)
        chi &= chi - 1
        u = v + 64
        expand(g, size + 1, plo & g.lo[u], phi & g.hi[u], xlo & g.lo[u], xhi & g.hi[u], hist)
        bit = (<uint64_t>1) << v
        phi &= ~bit
        xhi |= bit


cdef class CliqueKernel:
    """Holds one graph; :meth:`count` runs a subproblem without the GIL."""

    cdef Graph g

    def __init__(self, rows, int n):
        if n > MAXN:
            raise ValueError("compiled kernel supports at most 128 vertices")
        memset(&self.g, 0, sizeof(Graph))
        self.g.n = n
        mask = (1 << 64) - 1
        for i in range(n):
            r = int(rows[i])
            self.g.lo[i] = r & mask
            self.g.hi[i] = (r >> 64) & mask

    def count(self, int size, p, x):
        """Histogram (list indexed by clique size) of maximal cliques R + C, where
        |R| = ``size``, C ranges over cliques in candidate set ``p`` and ``x`` is the
        exclusion set."""
        cdef unsigned long long hist[MAXDEPTH]
        cdef uint64_t mask = 0xFFFFFFFFFFFFFFFF
        cdef uint64_t plo = p & mask, phi = (p >> 64) & mask
        cdef uint64_t xlo = x & mask, xhi = (x >> 64) & mask
        memset(hist, 0, sizeof(hist))
        with nogil:
            expand(&self.g, size, plo, phi, xlo, xhi, hist)
        return [hist[i] for i in range(self.g.n + 1)]
