"""Ray configurations: the 120-state orbit configuration and the 40-state Witting set."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cache
from itertools import combinations, product
from typing import Sequence

from .exactnum import (D_SV, D_WITTING, I_SQRT3, IOTA, OMEGA, ROOT7, ROOT7_BAR, CVec4,
                       QImag, inner_product)
from .matgroup import Group, sigma_tilde, two_a4


class NormalizationError(ValueError):
    pass


class NonInvarianceError(ValueError):
    pass


class ClassificationError(ValueError):
    pass


class AlignmentError(ValueError):
    pass


@cache
def field_units(d: int) -> tuple[QImag, ...]:
    """Roots of unity in Q(sqrt(-d)): {+-1} for d=7, {+-w^k} for d=3."""
    one = QImag(d, 1)
    if d == D_WITTING:
        w = OMEGA
        return (one, -one, w, -w, w * w, -(w * w))
    return (one, -one)


def canonical(v: CVec4) -> CVec4:
    """Least unit multiple of ``v`` under the componentwise (a, b) order."""
    return min((v.scale(u) for u in field_units(v.d)), key=CVec4.sort_key)


@dataclass(frozen=True)
class Ray:
    vector: CVec4
    id: int


@dataclass
class Configuration:
    rays: list[Ray]
    vector_count: int
    d: int
    table_index: dict[int, int] | None = None  # ray id -> table index
    _lookup: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._lookup:
            self._lookup = {r.vector: r.id for r in self.rays}

    def __len__(self):
        return len(self.rays)

    def vectors(self) -> list[CVec4]:
        return [r.vector for r in self.rays]

    def ray_id(self, v: CVec4) -> int | None:
        """Id of the ray through ``v`` (any unit multiple), or None."""
        return self._lookup.get(canonical(v))

    def all_vectors(self) -> list[CVec4]:
        """Every unit multiple of every ray (the full vector set)."""
        return [r.vector.scale(u) for r in self.rays for u in field_units(self.d)]

    # table indexing
    def _require_index(self):
        if self.table_index is None:
            raise ValueError("configuration is not aligned with the table indices")

    def pid(self, ray_id: int) -> int:
        self._require_index()
        return self.table_index[ray_id]

    def by_pid(self, table_index: int) -> Ray:
        self._require_index()
        if not hasattr(self, "_inverse"):
            self._inverse = {p: r for r, p in self.table_index.items()}
        return self.rays[self._inverse[table_index]]

    def label(self, ray_id: int) -> int:
        """Table index when aligned, otherwise 1-based internal id."""
        return self.table_index[ray_id] if self.table_index else ray_id + 1


def _from_vectors(vectors, d: int) -> Configuration:
    reps = sorted({canonical(v) for v in vectors}, key=CVec4.sort_key)
    return Configuration([Ray(v, i) for i, v in enumerate(reps)], len(set(vectors)), d)


def orbit_configuration(group: Group, seed: CVec4) -> Configuration:
    if seed.norm() != 1:
        raise NormalizationError("seed vector must have unit norm")
    vecs = {m.apply(seed) for m in group.matrices()}
    return _from_vectors(vecs, seed.d)


def check_non_proportional(config: Configuration) -> bool:
    """Pairwise test via all 2x2 minors ``w_i v_j - w_j v_i``."""
    for r, s in combinations(config.rays, 2):
        v, w = r.vector, s.vector
        if all((w[i] * v[j] - w[j] * v[i]).is_zero() for i, j in combinations(range(4), 2)):
            return False
    return True


def ray_orbits(subgroup: Group, config: Configuration) -> list[list[int]]:
    """Orbits of the projective action on ray ids, each sorted, ordered by least id."""
    images = []
    for g in subgroup.generators:
        img = []
        for r in config.rays:
            j = config.ray_id(g.apply(r.vector))
            if j is None:
                raise NonInvarianceError("subgroup moves a ray out of the configuration")
            img.append(j)
        images.append(img)
    seen = [False] * len(config)
    orbits = []
    for start in range(len(config)):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        for x in orbit:
            for img in images:
                y = img[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
        orbits.append(sorted(orbit))
    return orbits


# --------------------------------------------------------------------------
# type classification
# --------------------------------------------------------------------------


@cache
def _type_templates() -> dict[CVec4, int]:
    d = D_SV
    roots = (ROOT7, ROOT7_BAR)
    one, zero = QImag(d, 1), QImag(d, 0)
    families: dict[int, list[CVec4]] = {1: [CVec4([one, zero, zero, zero], d)], 2: [], 3: [], 4: []}
    for a, b in product(roots, repeat=2):
        families[2].append(CVec4([a * b, one, one, one], d).scale(IOTA))
    for a, b, c in product(roots, repeat=3):
        families[3].append(CVec4([one, -a, -b, -c], d).scale(IOTA))
        # sign pattern (0, 1, ab, -c); the variant (0, 1, -ab, c) lies outside the orbit
        families[4].append(CVec4([zero, one, a * b, -c], d).scale(IOTA))
    signed_perms = two_a4().matrices()
    table: dict[CVec4, int] = {}
    for t, seeds in families.items():
        for v in seeds:
            for m in signed_perms:
                key = canonical(m.apply(v))
                if table.setdefault(key, t) != t:
                    raise ClassificationError("type templates overlap")
    return table


def classify_type(ray: Ray | CVec4) -> int:
    v = ray.vector if isinstance(ray, Ray) else ray
    if v.d != D_SV:
        raise ClassificationError("type classification applies to the d=7 configuration")
    t = _type_templates().get(canonical(v))
    if t is None:
        raise ClassificationError(f"no template matches {v!r}")
    return t


def type_counts(config: Configuration) -> dict[int, int]:
    counts = {1: 0, 2: 0, 3: 0, 4: 0}
    for r in config.rays:
        counts[classify_type(r)] += 1
    return counts


# --------------------------------------------------------------------------
# Witting configuration
# --------------------------------------------------------------------------


def witting_vectors() -> list[CVec4]:
    """The 40 generating vectors: the basis plus four families of nine."""
    d = D_WITTING
    one, zero = QImag(d, 1), QImag(d, 0)
    vecs = [CVec4.basis(d, k) for k in range(4)]
    w = [one, OMEGA, OMEGA * OMEGA]
    for pattern in range(4):
        for mu, nu in product(range(3), repeat=2):
            wm, wn = w[mu], w[nu]
            comps = [
                [zero, one, -wm, wn],
                [one, zero, -wm, -wn],
                [one, -wm, zero, wn],
                [one, wm, wn, zero],
            ][pattern]
            vecs.append(CVec4(comps, d).scale(I_SQRT3))
    return vecs


def witting_pure_imaginary() -> list[CVec4]:
    """The four generating vectors with mu = nu = 0; all coordinates pure imaginary."""
    return witting_vectors()[4::9]


def sv_pure_imaginary() -> list[CVec4]:
    """(i/sqrt 7)(2,1,1,1) and its three companions in the 120-state configuration."""
    rows = [(2, 1, 1, 1), (1, -2, -1, 1), (1, 1, -2, -1), (1, -1, 1, -2)]
    return [CVec4(r, D_SV).scale(IOTA) for r in rows]


def witting_configuration() -> Configuration:
    w = witting_vectors()
    cfg = _from_vectors(w, D_WITTING)
    units = field_units(D_WITTING)
    cfg.vector_count = len({v.scale(u) for v in w for u in units})
    return cfg


# --------------------------------------------------------------------------
# configuration facts
# --------------------------------------------------------------------------


def gram_spectrum(config: Configuration) -> set[Fraction]:
    vs = config.vectors()
    return {inner_product(u, v).norm() for u, v in combinations(vs, 2)}


def align_with_table(config: Configuration, fixture: Sequence[CVec4]) -> Configuration:
    """Match the table vectors (index = position + 1) to rays, up to sign."""
    mapping: dict[int, int] = {}
    for pos, v in enumerate(fixture, start=1):
        if v.norm() != 1:
            raise AlignmentError(f"table row {pos} is not a unit vector")
        rid = config.ray_id(v)
        if rid is None:
            raise AlignmentError(f"table row {pos} matches no ray")
        if rid in mapping:
            raise AlignmentError(f"table rows {mapping[rid]} and {pos} match the same ray")
        mapping[rid] = pos
    if len(mapping) != len(config):
        raise AlignmentError("some rays are not matched by the table")
    return replace(config, table_index=mapping)


@cache
def sv_configuration() -> Configuration:
    """The 120-ray orbit of (1,0,0,0), aligned with the packaged table indices."""
    from .fixtures import load_states

    cfg = orbit_configuration(sigma_tilde(), CVec4.basis(D_SV, 0))
    return align_with_table(cfg, load_states())
