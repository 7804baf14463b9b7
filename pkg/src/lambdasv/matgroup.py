"""Finite matrix groups: breadth-first closure, a permutation homomorphism, cosets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Mapping, Sequence

from .exactnum import CMat4, H, J, P1, P2, S

Perm = tuple[int, ...]  # 0-based images: perm[i] is the image of point i


class ClosureOverflowError(RuntimeError):
    """Closure exceeded the element bound; the generators are probably wrong."""


class HomomorphismError(ValueError):
    """Generator images do not extend to a homomorphism."""


class ContainmentError(ValueError):
    """A claimed subgroup has an element outside the group."""


# --------------------------------------------------------------------------
# permutations
# --------------------------------------------------------------------------


def perm_from_cycles(cycles: Sequence[Sequence[int]], n: int = 7) -> Perm:
    """Build a permutation of ``{1..n}`` from 1-based cycle notation."""
    img = list(range(n))
    for cyc in cycles:
        for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[x - 1] = y - 1
    return tuple(img)


def perm_cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles of ``p`` in 1-based notation, each starting at its least point."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        if len(cyc) > 1:
            out.append(tuple(c + 1 for c in cyc))
    return out


def perm_str(p: Perm) -> str:
    cyc = perm_cycles(p)
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Functional composition ``p o q``: apply ``q`` first, then ``p``.

    With this order the generator images extend to a homomorphism of matrix
    products, ``perm(A @ B) == perm_mul(perm(A), perm(B))``; the opposite order
    fails the Cayley-graph check in :func:`attach_homomorphism`.
    """
    return tuple(p[x] for x in q)


def perm_is_even(p: Perm) -> bool:
    return sum(len(c) - 1 for c in perm_cycles(p)) % 2 == 0


# --------------------------------------------------------------------------
# groups
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    matrix: CMat4
    word: tuple[int, ...]
    perm: Perm | None = None

    @property
    def key(self) -> tuple:
        return self.matrix.key()


@dataclass
class Group:
    """A closed finite set of unitary matrices, in shortlex order of their words."""

    elements: list[GroupElement]
    generators: list[CMat4]
    names: list[str] = field(default_factory=list)
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {e.key: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: CMat4) -> bool:
        return m.key() in self._index

    def index_of(self, m: CMat4) -> int:
        return self._index[m.key()]

    def element(self, m: CMat4) -> GroupElement:
        return self.elements[self._index[m.key()]]

    @property
    def d(self) -> int:
        return self.generators[0].d

    @property
    def identity(self) -> GroupElement:
        return self.elements[0]

    def matrices(self) -> list[CMat4]:
        return [e.matrix for e in self.elements]

    def perm_of(self, m: CMat4) -> Perm:
        p = self.element(m).perm
        if p is None:
            raise ValueError("group carries no permutation labels")
        return p

    def word_str(self, word: Iterable[int]) -> str:
        names = self.names or [f"g{i}" for i in range(len(self.generators))]
        return "*".join(names[i] for i in word) or "1"

    def to_json(self) -> str:
        """Element list (matrix, word, permutation) as JSON."""
        out = []
        for e in self.elements:
            out.append({
                "matrix": [z.to_tuple() for z in e.matrix.entries],
                "word": self.word_str(e.word),
                "perm": perm_str(e.perm) if e.perm is not None else None,
            })
        return json.dumps({"d": self.d, "generators": self.names, "order": len(self),
                           "elements": out}, separators=(",", ":"))


def close(generators: Sequence[CMat4], bound: int = 100_000,
          names: Sequence[str] | None = None) -> Group:
    """Breadth-first closure of ``generators`` under right multiplication.

    Elements come out in shortlex order of their (first found, hence shortlex
    minimal) generator words; the identity is element 0.
    """
    if not generators:
        raise ValueError("need at least one generator")
    d = generators[0].d
    for g in generators:
        if g.d != d:
            raise ValueError("generators from different fields")
        if not g.is_unitary():
            raise ValueError("generator is not unitary")
    ident = CMat4.identity(d)
    elements = [GroupElement(ident, ())]
    index = {ident.key(): 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            g = elements[i]
            for s, gen in enumerate(generators):
                h = g.matrix @ gen
                k = h.key()
                if k not in index:
                    if len(elements) >= bound:
                        raise ClosureOverflowError(f"closure exceeded bound {bound}")
                    index[k] = len(elements)
                    elements.append(GroupElement(h, g.word + (s,)))
                    nxt.append(index[k])
        frontier = nxt
    return Group(elements, list(generators), list(names or []), index)


def attach_homomorphism(group: Group, images: Sequence[Perm]) -> Group:
    """Label every element with the product of generator images along its word.

    The labelling is checked on every edge of the Cayley graph
    (``perm(g*s) == perm(g)*perm(s)``) and on sign pairs (``perm(-g) == perm(g)``),
    which together prove that it is a well-defined homomorphism that factors
    through ``{+1, -1}``.
    """
    if len(images) != len(group.generators):
        raise ValueError("one image per generator required")
    n = len(images[0])
    ident = tuple(range(n))
    perms: list[Perm] = []
    for e in group.elements:
        p = ident
        for s in e.word:
            p = perm_mul(p, images[s])
        perms.append(p)
    idx = group._index
    for i, e in enumerate(group.elements):
        for s, gen in enumerate(group.generators):
            j = idx[(e.matrix @ gen).key()]
            if perms[j] != perm_mul(perms[i], images[s]):
                raise HomomorphismError(
                    f"perm({group.word_str(e.word)}*{s}) disagrees with the product of images")
        neg = idx.get((-e.matrix).key())
        if neg is not None and perms[neg] != perms[i]:
            raise HomomorphismError("sign pair with different permutations")
    elements = [GroupElement(e.matrix, e.word, p) for e, p in zip(group.elements, perms)]
    return Group(elements, group.generators, group.names, dict(group._index))


def image_group(group: Group) -> set[Perm]:
    return {e.perm for e in group.elements}


def projective_order(group: Group) -> int:
    minus = -CMat4.identity(group.d)
    return len(group) // 2 if minus in group else len(group)


@dataclass(frozen=True)
class Coset:
    representative: GroupElement
    members: frozenset

    def __len__(self):
        return len(self.members)


def cosets(group: Group, subgroup: Group) -> list[Coset]:
    """Left cosets ``C * subgroup``; representatives are least by element key."""
    for e in subgroup:
        if e.matrix not in group:
            raise ContainmentError("subgroup element not in group")
    sub = subgroup.matrices()
    covered: set = set()
    out = []
    for e in sorted(group.elements, key=lambda x: x.key):
        if e.key in covered:
            continue
        members = frozenset((e.matrix @ h).key() for h in sub)
        covered |= members
        out.append(Coset(e, members))
    return out


# --------------------------------------------------------------------------
# the named groups
# --------------------------------------------------------------------------

H7_IMAGES = {
    "P1": perm_from_cycles([(1, 2, 4), (3, 6, 5)]),
    "P2": perm_from_cycles([(1, 6), (3, 4)]),
    "S": perm_from_cycles([(1, 2, 3, 4, 5, 6, 7)]),
}


@cache
def two_a4() -> Group:
    return close([P1, P2], bound=24, names=["P1", "P2"])


@cache
def sigma_tilde() -> Group:
    """The 5040-element group generated by P1, P2, S, labelled by its map onto A7."""
    g = close([P1, P2, S], bound=5040, names=["P1", "P2", "S"])
    return attach_homomorphism(g, [H7_IMAGES["P1"], H7_IMAGES["P2"], H7_IMAGES["S"]])


@cache
def two_a5() -> Group:
    return close([J, H], bound=120, names=["J", "H"])


@cache
def two_s5() -> Group:
    return close([J, H, P2], bound=240, names=["J", "H", "P2"])
