"""Entangled states given by antisymmetric unitaries J, and the structures they induce
on rays and bases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactnum import CMat4, CVec4, QImag
from .matgroup import Group, cosets
from .orthograph import Basis
from .rayconfig import Configuration


class ClosureError(RuntimeError):
    """An opposite ray falls outside the configuration."""


class StructureError(RuntimeError):
    """The opposites of a basis do not form a basis."""


@dataclass(frozen=True)
class EntangledState:
    J: CMat4

    def __post_init__(self):
        if not self.J.is_unitary() or not self.J.is_antisymmetric():
            raise ValueError("J must be unitary and antisymmetric")

    @property
    def normalization(self) -> Fraction:
        """``1 / Tr(J J^*)``: squared amplitude scale of the two-system state."""
        tr = (self.J @ self.J.adjoint()).trace()
        return 1 / tr.a

    def terms(self) -> list[tuple[int, int, QImag]]:
        """Nonzero coefficients ``(j, k, J_jk)`` of ``sum J_jk |j>|k>``."""
        return [(j, k, self.J[j, k]) for j in range(4) for k in range(4)
                if not self.J[j, k].is_zero()]


def invariance_sign(A: CMat4, J: CMat4) -> int | None:
    """+1 if conj(A) J == J A, -1 if conj(A) J == -J A, else None."""
    lhs = A.conjugate() @ J
    rhs = J @ A
    if lhs == rhs:
        return 1
    if lhs == -rhs:
        return -1
    return None


def opposite(J: CMat4, v: CVec4) -> CVec4:
    return J.apply(v.conjugate())


@dataclass(frozen=True)
class OppositeMap:
    pairs: dict[int, int]  # ray id -> ray id

    def is_involution(self) -> bool:
        return all(self.pairs[self.pairs[i]] == i for i in self.pairs)

    def fixed_points(self) -> list[int]:
        return sorted(i for i, j in self.pairs.items() if i == j)

    def labelled(self, config: Configuration) -> dict[int, int]:
        return {config.label(i): config.label(j) for i, j in self.pairs.items()}


def opposite_map(J: CMat4, config: Configuration) -> OppositeMap:
    pairs = {}
    for r in config.rays:
        j = config.ray_id(opposite(J, r.vector))
        if j is None:
            raise ClosureError(f"J-opposite of ray {config.label(r.id)} is not in the configuration")
        pairs[r.id] = j
    return OppositeMap(pairs)


@dataclass(frozen=True)
class BasisPairing:
    pairs: dict[int, int]  # 1-based basis id -> 1-based basis id

    @property
    def fixed_set(self) -> list[int]:
        return sorted(b for b, c in self.pairs.items() if b == c)

    def is_involution(self) -> bool:
        return all(self.pairs[self.pairs[b]] == b for b in self.pairs)


def basis_lookup(bases: Sequence[Basis]) -> dict[frozenset, int]:
    return {frozenset(b.members): k for k, b in enumerate(bases, start=1)}


def partner_basis_map(J: CMat4, bases: Sequence[Basis], config: Configuration) -> BasisPairing:
    opp = opposite_map(J, config).pairs
    lookup = basis_lookup(bases)
    pairs = {}
    for k, b in enumerate(bases, start=1):
        img = frozenset(opp[i] for i in b.members)
        if img not in lookup:
            raise StructureError(f"opposites of basis {k} do not form a basis")
        pairs[k] = lookup[img]
    return BasisPairing(pairs)


def equal_bases(subgroup: Group, config: Configuration, bases: Sequence[Basis],
                start: int | None = None) -> set[int]:
    """Orbit of the standard basis under the subgroup acting on basis ids."""
    lookup = basis_lookup(bases)
    if start is None:
        std = frozenset(config.ray_id(CVec4.basis(config.d, k)) for k in range(4))
        start = lookup[std]
    ray_images = []
    for g in subgroup.generators:
        ray_images.append([config.ray_id(g.apply(r.vector)) for r in config.rays])
    orbit = [start]
    seen = {start}
    for k in orbit:
        members = bases[k - 1].members
        for img in ray_images:
            nk = lookup[frozenset(img[i] for i in members)]
            if nk not in seen:
                seen.add(nk)
                orbit.append(nk)
    return seen


def sign_canonical(M: CMat4) -> CMat4:
    """``M`` or ``-M``, whichever has its first nonzero entry positive in the (a, b) order."""
    for z in M.entries:
        if not z.is_zero():
            return M if (z.a, z.b) > (0, 0) else -M
    return M


def coset_j_matrices(group: Group, subgroup: Group, J: CMat4) -> list[tuple[CMat4, CMat4]]:
    """``(C, C J C^T)`` for one representative C of each left coset, sign-canonical.

    The coset containing the identity is listed first and represented by it.
    """
    ident = group.identity.matrix
    out = []
    for cs in cosets(group, subgroup):
        C = ident if ident.key() in cs.members else cs.representative.matrix
        out.append((C, sign_canonical(C @ J @ C.transpose())))
    out.sort(key=lambda t: t[0] != ident)
    return out


def is_plain_integer(M: CMat4) -> bool:
    """All entries in {0, 1, -1}."""
    return all(z.q == 0 and z.n == 1 and abs(z.p) <= 1 for z in M.entries)


def joint_distribution(J: CMat4, basis_a: Basis, basis_b: Basis,
                       config: Configuration) -> list[list[Fraction]]:
    """Outcome probabilities ``|<a_r (x) b_s | Omega_J>|^2`` for the two measurements."""
    state = EntangledState(J)
    scale = state.normalization
    A = [config.rays[i].vector for i in basis_a.members]
    B = [config.rays[i].vector for i in basis_b.members]
    d = config.d
    out = []
    for a in A:
        ac = a.conjugate()
        row = []
        for b in B:
            bc = b.conjugate()
            amp = QImag(d, 0)
            for j in range(4):
                if ac[j].is_zero():
                    continue
                s = QImag(d, 0)
                for k in range(4):
                    s = s + J[j, k] * bc[k]
                amp = amp + ac[j] * s
            row.append(amp.norm() * scale)
        out.append(row)
    return out


def _match(computed: Mapping[int, int], printed: Mapping[int, int]) -> int:
    return sum(1 for k, v in computed.items() if printed.get(k) == v)


def compare_opposite_tables(computed: Mapping[str, Mapping[int, int]],
                            printed: Mapping[str, Mapping[int, int]]) -> dict:
    """Compare computed J1/J2 involutions with both printed tables.

    Returns the per-pair match counts and which printed table each computed
    involution reproduces; ``swapped`` is True when J1 matches the J2 table and
    vice versa.
    """
    names = sorted(computed)
    scores = {c: {p: _match(computed[c], printed[p]) for p in sorted(printed)} for c in names}
    assignment = {}
    for c in names:
        full = [p for p, s in scores[c].items() if s == len(computed[c])]
        assignment[c] = full[0] if len(full) == 1 else None
    matched = set(assignment.values())
    covers = None not in matched and matched == set(printed)
    swapped = covers and any(assignment[c] != c for c in names)
    return {"scores": scores, "assignment": assignment, "covers_both": covers,
            "swapped": swapped}
