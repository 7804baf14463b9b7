"""Orthogonality graphs, orthonormal bases, the nonorthogonal-clique census and the
Kochen-Specker colouring search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cliques import maximal_clique_histogram
from .exactnum import CVec4, inner_product
from .matgroup import Group
from .rayconfig import Configuration


class DimensionViolationError(RuntimeError):
    """More than four mutually orthogonal rays in dimension four."""


class CrossOracleError(RuntimeError):
    """Two independent constructions of the bases disagree."""


@dataclass(frozen=True)
class OrthGraph:
    n: int
    rows: tuple[int, ...]  # bit j of rows[i] set iff rays i and j are orthogonal
    config: Configuration

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> Iterable[tuple[int, int]]:
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    yield i, j
                r >>= 1
                j += 1

    def complement_rows(self) -> list[int]:
        full = (1 << self.n) - 1
        return [full & ~r & ~(1 << i) for i, r in enumerate(self.rows)]


@dataclass(frozen=True, order=True)
class Basis:
    """Four ray ids, sorted by table index (by internal id when unaligned)."""

    labels: tuple[int, int, int, int]  # sort key: table indices
    members: tuple[int, int, int, int]  # internal ray ids, in label order

    @classmethod
    def of(cls, config: Configuration, ray_ids: Iterable[int]) -> "Basis":
        ids = sorted(ray_ids, key=config.label)
        return cls(tuple(config.label(i) for i in ids), tuple(ids))


@dataclass(frozen=True)
class CliqueCensus:
    histogram: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    @property
    def max_size(self) -> int:
        return max(self.histogram)

    @property
    def min_size(self) -> int:
        return min(self.histogram)


@dataclass(frozen=True)
class KSResult:
    satisfiable: bool
    witness: dict[int, int] | None
    nodes_explored: int


def build(config: Configuration) -> OrthGraph:
    vs = config.vectors()
    n = len(vs)
    rows = [0] * n
    for i, j in combinations(range(n), 2):
        if inner_product(vs[i], vs[j]).is_zero():
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return OrthGraph(n, tuple(rows), config)


def enumerate_bases(graph: OrthGraph) -> list[Basis]:
    """All maximal cliques of the orthogonality graph; each must have exactly four rays."""
    found = []
    rows = graph.rows
    for a in range(graph.n):
        pa = rows[a] & ~((1 << (a + 1)) - 1)
        for b in _bits(pa):
            pb = pa & rows[b] & ~((1 << (b + 1)) - 1)
            for c in _bits(pb):
                pc = pb & rows[c] & ~((1 << (c + 1)) - 1)
                for d in _bits(pc):
                    if pc & rows[d]:
                        raise DimensionViolationError("found five mutually orthogonal rays")
                    found.append(Basis.of(graph.config, (a, b, c, d)))
    # every orthogonal pair / triple must extend to a tetrad for these to be all maximal cliques
    hist = maximal_clique_histogram(graph.rows, graph.n, backend="python")
    if set(hist) - {4}:
        raise DimensionViolationError(f"maximal orthogonal cliques of sizes {sorted(hist)}")
    return sorted(found)


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bases_via_group(group: Group, config: Configuration,
                    expected: Sequence[Basis] | None = None) -> tuple[list[Basis], dict[Basis, int]]:
    """Images of the standard basis under every group element, with fibre sizes."""
    d = config.d
    std = [CVec4.basis(d, k) for k in range(4)]
    fibres: dict[Basis, int] = {}
    for m in group.matrices():
        ids = []
        for e in std:
            rid = config.ray_id(m.apply(e))
            if rid is None:
                raise CrossOracleError("group image leaves the configuration")
            ids.append(rid)
        b = Basis.of(config, ids)
        fibres[b] = fibres.get(b, 0) + 1
    bases = sorted(fibres)
    if expected is not None and bases != sorted(expected):
        raise CrossOracleError("group-image bases differ from clique enumeration")
    return bases, fibres


def nonorth_clique_census(graph: OrthGraph, threads: int = 1,
                          backend: str | None = None) -> CliqueCensus:
    """Histogram of maximal cliques of mutually nonorthogonal rays."""
    hist = maximal_clique_histogram(graph.complement_rows(), graph.n, threads=threads,
                                    backend=backend)
    return CliqueCensus(dict(sorted(hist.items())))


def ks_colorability(graph: OrthGraph, bases: Sequence[Basis]) -> KSResult:
    """Exhaustive search for a {0,1} assignment with exactly one 1 in every basis.

    Choosing a ray forces every orthogonal ray to 0; a basis with a single
    remaining candidate forces that ray.  Branching is on the basis with the
    fewest live candidates.
    """
    n = graph.n
    rows = graph.rows
    bmasks = [sum(1 << i for i in b.members) for b in bases]
    covered = 0
    for m in bmasks:
        covered |= m
    nodes = 0

    def propagate(ones: int, zeros: int) -> tuple[int, int] | None:
        changed = True
        while changed:
            changed = False
            for m in bmasks:
                if ones & m:
                    if (ones & m).bit_count() > 1:
                        return None
                    continue
                live = m & ~zeros
                if not live:
                    return None
                if live & (live - 1) == 0:
                    v = live.bit_length() - 1
                    if rows[v] & ones:
                        return None
                    ones |= live
                    zeros |= rows[v]
                    changed = True
            if ones & zeros:
                return None
        return ones, zeros

    def search(ones: int, zeros: int) -> int | None:
        nonlocal nodes
        nodes += 1
        state = propagate(ones, zeros)
        if state is None:
            return None
        ones, zeros = state
        best, best_live = None, None
        for m in bmasks:
            if ones & m:
                continue
            live = m & ~zeros
            if best is None or live.bit_count() < best_live.bit_count():
                best, best_live = m, live
        if best is None:
            return ones
        for v in _bits(best_live):
            bit = 1 << v
            got = search(ones | bit, zeros | rows[v])
            if got is not None:
                return got
            zeros |= bit
        return None

    ones = search(0, 0)
    if ones is None:
        return KSResult(False, None, nodes)
    witness = {i: (ones >> i) & 1 for i in range(n) if covered >> i & 1}
    return KSResult(True, witness, nodes)


def partition_check(bases: Sequence[Basis], selection: Sequence[int]) -> bool:
    """True iff the 1-based basis ids in ``selection`` are disjoint and cover every ray."""
    if not selection:
        return False
    seen: set[int] = set()
    for k in selection:
        members = set(bases[k - 1].members)
        if seen & members:
            return False
        seen |= members
    n = len({i for b in bases for i in b.members})
    return len(seen) == n
