"""Realification to 8 dimensions, the E8 root-system check, and the base change
taking the Witting vectors onto the 120-state configuration.

Imaginary parts are carried as coefficients of sqrt(d); the quadratic form on
``(re, im)`` is ``diag(1, 1, 1, 1, d, d, d, d)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import D_SV, D_WITTING, CVec4, QImag
from .rayconfig import Configuration


class NotE8Error(RuntimeError):
    pass


@dataclass(frozen=True)
class RealVec8:
    re: tuple[Fraction, Fraction, Fraction, Fraction]
    im: tuple[Fraction, Fraction, Fraction, Fraction]
    d: int

    def __neg__(self):
        return RealVec8(tuple(-x for x in self.re), tuple(-x for x in self.im), self.d)

    def dot(self, other: "RealVec8") -> Fraction:
        return (sum(a * b for a, b in zip(self.re, other.re))
                + self.d * sum(a * b for a, b in zip(self.im, other.im)))

    def length2(self) -> Fraction:
        return self.dot(self)

    def coords(self) -> tuple[Fraction, ...]:
        return self.re + self.im

    def to_complex(self) -> CVec4:
        return CVec4([QImag(self.d, a, b) for a, b in zip(self.re, self.im)], self.d)


def realify_vector(v: CVec4) -> RealVec8:
    return RealVec8(tuple(c.a for c in v), tuple(c.b for c in v), v.d)


def realify(config: Configuration) -> list[RealVec8]:
    """All unit multiples of the rays, realified; closed under negation."""
    out = [realify_vector(v) for v in config.all_vectors()]
    return sorted(set(out), key=RealVec8.coords)


def rank(vectors: Sequence[RealVec8]) -> tuple[int, list[int]]:
    """Exact rank by Gaussian elimination over Q, and the indices of a basis found."""
    basis_rows: list[list[Fraction]] = []
    pivots: list[int] = []
    chosen: list[int] = []
    for idx, v in enumerate(vectors):
        row = list(v.coords())
        for prow, pc in zip(basis_rows, pivots):
            if row[pc]:
                f = row[pc] / prow[pc]
                row = [a - f * b for a, b in zip(row, prow)]
        pc = next((i for i, a in enumerate(row) if a), None)
        if pc is not None:
            basis_rows.append(row)
            pivots.append(pc)
            chosen.append(idx)
            if len(chosen) == 8:
                break
    return len(chosen), chosen


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@dataclass
class RootSystemReport:
    vector_count: int
    products: list[int]
    neighbour_counts: dict[int, int]
    uniform_counts: bool
    negation_closed: bool
    reflection_closed: bool
    rank: int
    gram_determinant: Fraction
    passed: bool
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "vector_count": self.vector_count,
            "products": self.products,
            "neighbour_counts": {str(k): v for k, v in sorted(self.neighbour_counts.items())},
            "uniform_counts": self.uniform_counts,
            "negation_closed": self.negation_closed,
            "reflection_closed": self.reflection_closed,
            "rank": self.rank,
            "gram_determinant": str(self.gram_determinant),
            "passed": self.passed,
            "failures": self.failures,
        }


E8_COUNTS = {2: 1, 1: 56, 0: 126, -1: 56, -2: 1}


def e8_verify(vectors: Sequence[RealVec8], strict: bool = True) -> RootSystemReport:
    """Check that unit vectors, rescaled to squared length 2, form an E8 root system.

    Checks: 240 vectors, the products ``2<u,v>`` take values in {0, +-1, +-2}
    with 56/126/56 neighbours and one antipode per root, negation and
    reflection closure, and rank 8.
    """
    vs = list(vectors)
    failures = []
    if len(vs) != 240:
        failures.append(f"expected 240 vectors, got {len(vs)}")
    if any(v.length2() != 1 for v in vs):
        failures.append("vectors are not all of unit length")
    index = {v: i for i, v in enumerate(vs)}
    negation_closed = all(-v in index for v in vs)
    if not negation_closed:
        failures.append("not closed under negation")

    # integer products 2<u,v>; any non-integer or out-of-range value fails
    prods = [[0] * len(vs) for _ in vs]
    spectrum = set()
    per_root = []
    for i, u in enumerate(vs):
        c = Counter()
        for j, v in enumerate(vs):
            p = 2 * u.dot(v)
            if p.denominator != 1 or abs(p) > 2:
                failures.append(f"product 2<u,v> = {p} outside {{0, +-1, +-2}}")
                p = Fraction(99)
            prods[i][j] = int(p)
            spectrum.add(int(p))
            c[int(p)] += 1
        per_root.append(c)
    uniform = all(c == Counter(E8_COUNTS) for c in per_root)
    if not uniform:
        failures.append("neighbour counts differ from 56/126/56 with one antipode")
    neighbour_counts = dict(per_root[0]) if per_root else {}

    # reflection s_a(b) = b - 2<b,a>/<a,a> a = b - (2<b,a>) a for unit-length a
    reflection_closed = True
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            k = prods[j][i]
            if k == 0:
                continue
            img = RealVec8(tuple(x - k * y for x, y in zip(b.re, a.re)),
                           tuple(x - k * y for x, y in zip(b.im, a.im)), b.d)
            if img not in index:
                reflection_closed = False
                break
        if not reflection_closed:
            failures.append("reflection leaves the vector set")
            break

    r, chosen = rank(vs)
    if r != 8:
        failures.append(f"rank {r} != 8")
    gram = [[2 * vs[i].dot(vs[j]) for j in chosen] for i in chosen]
    gdet = _det(gram) if chosen else Fraction(0)
    report = RootSystemReport(len(vs), sorted(spectrum), neighbour_counts, uniform,
                              negation_closed, reflection_closed, r, gdet, not failures,
                              failures)
    if strict and failures:
        raise NotE8Error("; ".join(failures))
    return report


# --------------------------------------------------------------------------
# Witting -> 120-state configuration
# --------------------------------------------------------------------------

# numerator of the orthogonal base change; the full matrix is this divided by sqrt(21)
T_NUMERATOR = ((1, 4, -2, 0),
               (-4, 1, 0, 2),
               (2, 0, 1, 4),
               (0, -2, -4, 1))


def t_gram() -> list[list[int]]:
    """``M^T M`` for the integer numerator M."""
    M = T_NUMERATOR
    return [[sum(M[k][i] * M[k][j] for k in range(4)) for j in range(4)] for i in range(4)]


def witting_to_sv_vector(v: RealVec8) -> RealVec8:
    """Keep real parts; map sqrt(3)-unit imaginary coefficients ``b`` to ``M b / 7`` in
    sqrt(7) units (sqrt(3)/sqrt(21) = 1/sqrt(7))."""
    if v.d != D_WITTING:
        raise ValueError("input must come from the d=3 configuration")
    M = T_NUMERATOR
    im = tuple(sum(M[i][k] * v.im[k] for k in range(4)) / 7 for i in range(4))
    return RealVec8(v.re, im, D_SV)


def witting_to_sv(vectors: Sequence[RealVec8]) -> list[tuple[RealVec8, RealVec8]]:
    """Pairs ``(source, image)`` in source order."""
    return [(v, witting_to_sv_vector(v)) for v in vectors]
